#include <orbitope/spectral.hpp>
#include <orbitope/rng.hpp>

#include <nlohmann/json.hpp>

#include <cmath>

namespace orbitope {

using nlohmann::json;

double lambda1_bound(const TopologicalData& td) {
    if (td.denominator <= 0) throw std::invalid_argument("lambda1_bound: denominator <= 0");
    if (td.n < 1 || td.d < 1) throw std::invalid_argument("lambda1_bound: dimensions must be >= 1");
    const double num = (4.0 * M_PI) * td.numerator * static_cast<double>(td.d);
    const double den = td.denominator * static_cast<double>(td.n);
    return num / den;
}

TopologicalData preset_pn(int k) {
    if (k < 1) throw std::invalid_argument("preset_pn: k must be >= 1");
    TopologicalData td;
    td.n = k;
    td.d = k;
    // int c_1^k over P^k is (k+1)^k; with a = 2 pi c_1 the numerator carries
    // (2 pi)^{k-1}. The denominator is built as 2 pi times the numerator so
    // the quotient cancels exactly in floating point.
    double num = std::pow(static_cast<double>(k + 1), k);
    for (int i = 0; i + 1 < k; ++i) num *= 2.0 * M_PI;
    td.numerator = num;
    td.denominator = (2.0 * M_PI) * num;
    return td;
}

TopologicalData preset_grassmannian(int k, int n) {
    if (k < 1 || k >= n) throw std::invalid_argument("preset_grassmannian: need 1 <= k < n");
    const int d = k * (n - k);
    // Pluecker degree of Gr(k,n): d! * prod_{i=0}^{k-1} i! / (n-k+i)!.
    double deg = 1;
    for (int i = 2; i <= d; ++i) deg *= i;
    for (int i = 0; i < k; ++i) {
        for (int j = 2; j <= i; ++j) deg *= j;
        for (int j = 2; j <= n - k + i; ++j) deg /= j;
    }
    TopologicalData td;
    td.n = d;
    td.d = d;
    double num = deg * std::pow(static_cast<double>(n), d);
    for (int i = 0; i + 1 < d; ++i) num *= 2.0 * M_PI;
    td.numerator = num;
    td.denominator = (2.0 * M_PI) * num;
    return td;
}

TopologicalData parse_preset(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad preset '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    if (kind == "pn") return preset_pn(std::stoi(spec.substr(colon + 1)));
    if (kind == "gr") {
        const auto colon2 = spec.find(':', colon + 1);
        if (colon2 == std::string::npos) throw std::invalid_argument("bad preset '" + spec + "'");
        return preset_grassmannian(std::stoi(spec.substr(colon + 1, colon2 - colon - 1)),
                                   std::stoi(spec.substr(colon2 + 1)));
    }
    throw std::invalid_argument("unknown preset kind '" + kind + "'");
}

std::string preset_table_json() {
    json j = json::array();
    auto add = [&](const std::string& name, const TopologicalData& td) {
        j.push_back({{"preset", name},
                     {"n", td.n},
                     {"d", td.d},
                     {"numerator", td.numerator},
                     {"denominator", td.denominator},
                     {"bound", lambda1_bound(td)}});
    };
    for (int k = 1; k <= 5; ++k) add("pn:" + std::to_string(k), preset_pn(k));
    add("gr:2:4", preset_grassmannian(2, 4));
    add("gr:2:5", preset_grassmannian(2, 5));
    return j.dump(2);
}

ChartGrid make_chart_grid(int m, int count, uint64_t seed, double radius, double h) {
    if (h < 1e-4 || h > 1e-2) throw std::invalid_argument("make_chart_grid: h outside [1e-4, 1e-2]");
    ChartGrid grid;
    grid.h = h;
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        VectorXcd z(m);
        for (int j = 0; j < m; ++j) {
            // uniform in a disc of the given radius, away from chart infinity
            const double r = radius * std::sqrt(rng.uniform());
            const double phase = 2.0 * M_PI * rng.uniform();
            z(j) = Complex(r * std::cos(phase), r * std::sin(phase));
        }
        grid.points.push_back(std::move(z));
    }
    return grid;
}

namespace {

// Second-order central stencils on the 2m real coordinates.
double second_derivative(const ChartFunction& f, VectorXcd z, int coord, double h) {
    const int m = static_cast<int>(z.size());
    const int idx = coord % m;
    const Complex step = (coord < m) ? Complex(h, 0) : Complex(0, h);
    const double f0 = f(z);
    z(idx) += step;
    const double fp = f(z);
    z(idx) -= 2.0 * step;
    const double fm = f(z);
    return (fp - 2.0 * f0 + fm) / (h * h);
}

double mixed_derivative(const ChartFunction& f, VectorXcd z, int ca, int cb, double h) {
    const int m = static_cast<int>(z.size());
    const Complex sa = (ca < m) ? Complex(h, 0) : Complex(0, h);
    const Complex sb = (cb < m) ? Complex(h, 0) : Complex(0, h);
    const int ia = ca % m, ib = cb % m;
    auto val = [&](double da, double db) {
        VectorXcd w = z;
        w(ia) += da * sa;
        w(ib) += db * sb;
        return f(w);
    };
    return (val(1, 1) - val(1, -1) - val(-1, 1) + val(-1, -1)) / (4.0 * h * h);
}

}  // namespace

double laplacian_fs(const ChartFunction& f, const VectorXcd& z, double h) {
    const int m = static_cast<int>(z.size());
    const double zz = 1.0 + z.squaredNorm();
    Complex acc(0, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            Complex ginv = zz * ((i == j ? 1.0 : 0.0) + z(i) * std::conj(z(j)));
            if (ginv == Complex(0, 0)) continue;
            // d^2/dz_i dzbar_j = 1/4 [ (dx_i dx_j + dy_i dy_j) + i (dx_i dy_j - dy_i dx_j) ]
            double sym, asym = 0.0;
            if (i == j) {
                sym = second_derivative(f, z, i, h) + second_derivative(f, z, m + i, h);
            } else {
                sym = mixed_derivative(f, z, i, j, h) + mixed_derivative(f, z, m + i, m + j, h);
                asym = mixed_derivative(f, z, i, m + j, h) - mixed_derivative(f, z, m + i, j, h);
            }
            acc += ginv * (Complex(sym, asym) * 0.25);
        }
    }
    return 2.0 * acc.real();
}

double laplacian_residual(const ChartFunction& f, const ChartFunction& target,
                          const ChartGrid& grid, double kahler_scale) {
    double worst = 0;
    for (const auto& z : grid.points)
        worst = std::max(worst,
                         std::abs(laplacian_fs(f, z, grid.h) / kahler_scale - target(z)));
    return worst;
}

ChartFunction moment_component_chart(const RepModel& model, const LieBasis& basis, int j) {
    if (model.kind != RepKind::Defining)
        throw std::invalid_argument("moment_component_chart: defining model only");
    const MatrixXcd op = model.dtau(basis.elems[j]);
    const int n = model.n;
    return [op, n](const VectorXcd& z) {
        VectorXcd x(n);
        x(0) = Complex(1, 0);
        x.tail(n - 1) = z;
        return (x.adjoint() * (op * x))(0).imag() / x.squaredNorm();
    };
}

double moment_norm_identity(const RepModel& model, const LieBasis& basis,
                            const std::vector<VectorXcd>& sample) {
    const RepAction action = make_rep_action(model, basis);
    const double kappa = model.fano_scale;
    const double dim = model.complex_dim_M();
    double worst = 0;
    for (const auto& x : sample) {
        const VectorXd phi = moment_map_point(action, x);
        worst = std::max(worst, std::abs(kappa * kappa * phi.squaredNorm() - dim));
    }
    return worst;
}

double kahler_form_identity(const RepModel& model, const LieBasis& basis, const VectorXcd& x0,
                            const VectorXcd& w1raw, const VectorXcd& w2raw) {
    const VectorXcd x = x0 / x0.norm();
    auto horiz = [&](const VectorXcd& w) -> VectorXcd { return w - (x.adjoint() * w)(0) * x; };
    const VectorXcd w1 = horiz(w1raw);
    const VectorXcd w2 = horiz(w2raw);
    const double kappa = model.fano_scale;
    const RepAction action = make_rep_action(model, basis);

    auto df = [&](int j, const VectorXcd& w) {
        const auto& op = action.ops[j];
        return kappa * ((w.adjoint() * (op * x))(0) + (x.adjoint() * (op * w))(0)).imag();
    };

    Complex alpha(0, 0);
    for (int j = 0; j < action.dim(); ++j) {
        const double d1 = df(j, w1), d1i = df(j, Complex(0, 1) * w1);
        const double d2 = df(j, w2), d2i = df(j, Complex(0, 1) * w2);
        const Complex del1 = 0.5 * Complex(d1, -d1i), delb1 = 0.5 * Complex(d1, d1i);
        const Complex del2 = 0.5 * Complex(d2, -d2i), delb2 = 0.5 * Complex(d2, d2i);
        alpha += Complex(0, 1) * (del1 * delb2 - del2 * delb1);
    }
    const double omega_emb = -2.0 * (w2.adjoint() * w1)(0).imag();
    return std::abs(alpha - Complex(kappa * omega_emb, 0));
}

RayleighReport rayleigh_certificate(const RepModel& model, const LieBasis& basis,
                                    const DiscreteMeasure& gamma, const MatrixXcd& u,
                                    const std::optional<MatrixXd>& grad_sq_samples) {
    const RepAction action = make_rep_action(model, basis);
    const double kappa = model.fano_scale;
    const int l = basis.dim();

    Eigen::SelfAdjointEigenSolver<MatrixXcd> ue(0.5 * (u + u.adjoint()));
    const MatrixXcd b = ue.eigenvectors() *
                        ue.eigenvalues().array().exp().matrix().asDiagonal() *
                        ue.eigenvectors().adjoint();
    const MatrixXcd tb = model.tau(b);

    VectorXd mean = VectorXd::Zero(l);
    double denom = 0, numer = 0;
    for (int i = 0; i < gamma.size(); ++i) {
        const double w = gamma.weights(i);
        VectorXcd y = tb * gamma.points[i];
        const double ynorm = y.norm();
        y /= ynorm;
        const VectorXd phi = moment_map_point(action, y);
        mean += w * kappa * phi;
        denom += w * kappa * kappa * phi.squaredNorm();

        if (grad_sq_samples) {
            numer += w * grad_sq_samples->row(i).sum();
            continue;
        }
        // Analytic Kaehler-Einstein gradients of h_j = kappa Phi_j after b.
        // Differential of the projective action at x: w -> P_y(tau(b) w)/|tau(b) x|.
        const VectorXcd x = gamma.points[i];
        Eigen::HouseholderQR<MatrixXcd> qr(x);
        const MatrixXcd frame = qr.householderQ();  // column 0 ~ x up to phase
        for (int c = 1; c < model.dimV; ++c) {
            const VectorXcd v = frame.col(c);
            for (const VectorXcd& w_tan : {v, (Complex(0, 1) * v).eval()}) {
                VectorXcd push = tb * w_tan;
                push -= (y.adjoint() * push)(0) * y;
                push /= ynorm;
                for (int j = 0; j < l; ++j) {
                    const auto& op = action.ops[j];
                    const double dh =
                        kappa *
                        ((push.adjoint() * (op * y))(0) + (y.adjoint() * (op * push))(0)).imag();
                    numer += w * dh * dh / (2.0 * kappa);
                }
            }
        }
    }
    if (denom < 1e-12) throw NumericError("rayleigh_certificate: vanishing denominator");
    RayleighReport report;
    report.quotient = numer / denom;
    report.zero_mean_residual = mean.cwiseAbs().maxCoeff();
    return report;
}

}  // namespace orbitope
