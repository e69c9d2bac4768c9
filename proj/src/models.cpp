#include <orbitope/models.hpp>
#include <orbitope/rng.hpp>
#include <orbitope/satake.hpp>

#include <Eigen/SVD>

#include <algorithm>
#include <map>
#include <numeric>

namespace orbitope {

namespace {

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<std::vector<int>> degree_tuples(int n, int d) {
    // Exponent vectors of total degree d, first coordinate greedy so the pure
    // power (d,0,...,0) comes first.
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == n - 1) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (int e = rest; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rest - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

double factorial(int m) {
    double f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

double tuple_factorial(const std::vector<int>& m) {
    double f = 1;
    for (int e : m) f *= factorial(e);
    return f;
}

std::map<std::vector<int>, int> index_map(const std::vector<std::vector<int>>& tuples) {
    std::map<std::vector<int>, int> idx;
    for (size_t i = 0; i < tuples.size(); ++i) idx.emplace(tuples[i], static_cast<int>(i));
    return idx;
}

int sort_with_sign(std::vector<int>& v) {
    int sign = 1;
    for (size_t i = 1; i < v.size(); ++i)
        for (size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return sign;
}

}  // namespace

int RepModel::complex_dim_M() const {
    switch (kind) {
        case RepKind::Defining: return n - 1;
        case RepKind::ExteriorPower: return deg * (n - deg);
        case RepKind::SymPower: return n - 1;
    }
    return 0;
}

MatrixXcd RepModel::dtau(const MatrixXcd& X) const {
    if (X.rows() != n || X.cols() != n) throw std::invalid_argument("dtau: wrong matrix size");
    const auto idx = index_map(eps);

    MatrixXcd out = MatrixXcd::Zero(dimV, dimV);
    switch (kind) {
        case RepKind::Defining:
            return X;
        case RepKind::ExteriorPower: {
            for (int b = 0; b < dimV; ++b) {
                std::vector<int> S;
                for (int i = 0; i < n; ++i)
                    if (eps[b][i]) S.push_back(i);
                for (size_t t = 0; t < S.size(); ++t) {
                    const int i = S[t];
                    for (int j = 0; j < n; ++j) {
                        if (X(j, i) == Complex(0, 0)) continue;
                        if (j != i && eps[b][j]) continue;  // repeated factor
                        std::vector<int> T = S;
                        T[t] = j;
                        const int sign = sort_with_sign(T);
                        std::vector<int> ind(n, 0);
                        for (int q : T) ind[q] = 1;
                        out(idx.at(ind), b) += static_cast<double>(sign) * X(j, i);
                    }
                }
            }
            return out;
        }
        case RepKind::SymPower: {
            for (int b = 0; b < dimV; ++b) {
                const auto& m = eps[b];
                for (int i = 0; i < n; ++i) {
                    if (m[i] == 0) continue;
                    for (int j = 0; j < n; ++j) {
                        if (X(j, i) == Complex(0, 0)) continue;
                        if (j == i) {
                            out(b, b) += static_cast<double>(m[i]) * X(i, i);
                        } else {
                            std::vector<int> mp = m;
                            mp[i] -= 1;
                            mp[j] += 1;
                            const double f = std::sqrt(static_cast<double>(m[i]) * (m[j] + 1));
                            out(idx.at(mp), b) += f * X(j, i);
                        }
                    }
                }
            }
            return out;
        }
    }
    return out;
}

MatrixXcd RepModel::tau(const MatrixXcd& g) const {
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("tau: wrong matrix size");
    switch (kind) {
        case RepKind::Defining:
            return g;
        case RepKind::ExteriorPower: {
            MatrixXcd out(dimV, dimV);
            const auto subsets = k_subsets(n, deg);
            for (int col = 0; col < dimV; ++col) {
                for (int row = 0; row < dimV; ++row) {
                    MatrixXcd minor(deg, deg);
                    for (int a = 0; a < deg; ++a)
                        for (int c = 0; c < deg; ++c)
                            minor(a, c) = g(subsets[row][a], subsets[col][c]);
                    out(row, col) = minor.determinant();
                }
            }
            return out;
        }
        case RepKind::SymPower: {
            const auto idx = index_map(eps);
            MatrixXcd out = MatrixXcd::Zero(dimV, dimV);
            const double dfac = factorial(deg);
            for (int col = 0; col < dimV; ++col) {
                // Expand prod_i (sum_j g_{ji} z_j)^{m_i} as a polynomial in z.
                std::map<std::vector<int>, Complex> poly;
                poly[std::vector<int>(n, 0)] = Complex(1, 0);
                for (int i = 0; i < n; ++i) {
                    for (int rep = 0; rep < eps[col][i]; ++rep) {
                        std::map<std::vector<int>, Complex> next;
                        for (const auto& [e, c] : poly) {
                            for (int j = 0; j < n; ++j) {
                                if (g(j, i) == Complex(0, 0)) continue;
                                auto e2 = e;
                                e2[j] += 1;
                                next[e2] += c * g(j, i);
                            }
                        }
                        poly = std::move(next);
                    }
                }
                const double fm = tuple_factorial(eps[col]);
                for (const auto& [e, c] : poly)
                    out(idx.at(e), col) = c * std::sqrt(tuple_factorial(e) / dfac) *
                                          std::sqrt(dfac / fm);
            }
            return out;
        }
    }
    return MatrixXcd();
}

double RepModel::weight_value(int basis_index, const VectorXd& H) const {
    double v = 0;
    for (int i = 0; i < n; ++i) v += eps[basis_index][i] * H(i);
    return v;
}

double RepModel::orbit_residual(const VectorXcd& v) const {
    switch (kind) {
        case RepKind::Defining:
            return 0.0;
        case RepKind::ExteriorPower: {
            const int k = deg;
            if (k == 1 || k == n - 1) return 0.0;
            const auto idx = index_map(eps);
            auto coord = [&](std::vector<int> tuple) -> Complex {
                const int sign = sort_with_sign(tuple);
                for (size_t i = 1; i < tuple.size(); ++i)
                    if (tuple[i] == tuple[i - 1]) return Complex(0, 0);
                std::vector<int> ind(n, 0);
                for (int q : tuple) ind[q] = 1;
                return static_cast<double>(sign) * v(idx.at(ind));
            };
            double worst = 0;
            for (const auto& S : k_subsets(n, k - 1)) {
                for (const auto& T : k_subsets(n, k + 1)) {
                    Complex sum(0, 0);
                    for (size_t a = 0; a < T.size(); ++a) {
                        std::vector<int> left = S;
                        left.push_back(T[a]);
                        std::vector<int> right;
                        for (size_t b = 0; b < T.size(); ++b)
                            if (b != a) right.push_back(T[b]);
                        const double sgn = (a % 2 == 0) ? 1.0 : -1.0;
                        sum += sgn * coord(left) * coord(right);
                    }
                    worst = std::max(worst, std::abs(sum));
                }
            }
            return worst;
        }
        case RepKind::SymPower: {
            // Rank-one test on the coefficient array of the underlying
            // polynomial: K[i][m'] = a_{m' + delta_i} has rank one exactly on
            // the cone of d-th powers.
            const auto idx = index_map(eps);
            const double dfac = factorial(deg);
            const auto cols = degree_tuples(n, deg - 1);
            MatrixXcd K(n, static_cast<int>(cols.size()));
            for (size_t c = 0; c < cols.size(); ++c)
                for (int i = 0; i < n; ++i) {
                    auto m = cols[c];
                    m[i] += 1;
                    const int b = idx.at(m);
                    K(i, static_cast<int>(c)) = v(b) * std::sqrt(tuple_factorial(m) / dfac);
                }
            Eigen::JacobiSVD<MatrixXcd> svd(K);
            const auto& s = svd.singularValues();
            if (s.size() < 2) return 0.0;
            return s(1) / std::max(s(0), 1e-300);
        }
    }
    return 0.0;
}

RepModel build_model(RepKind kind, int n, int deg) {
    if (n < 2 || n > 6) throw std::invalid_argument("build_model: n out of range [2,6]");
    RepModel m;
    m.kind = kind;
    m.n = n;
    m.rs = RootSystem::build(CartanType('A', n - 1));

    switch (kind) {
        case RepKind::Defining: {
            m.deg = 1;
            m.dimV = n;
            for (int i = 0; i < n; ++i) {
                std::vector<int> e(n, 0);
                e[i] = 1;
                m.eps.push_back(std::move(e));
            }
            m.fano_scale = n;
            break;
        }
        case RepKind::ExteriorPower: {
            if (deg < 1 || deg >= n)
                throw std::invalid_argument("build_model: exterior degree out of range [1,n)");
            m.deg = deg;
            for (const auto& S : k_subsets(n, deg)) {
                std::vector<int> e(n, 0);
                for (int q : S) e[q] = 1;
                m.eps.push_back(std::move(e));
            }
            m.dimV = static_cast<int>(m.eps.size());
            m.fano_scale = n;
            break;
        }
        case RepKind::SymPower: {
            if (deg < 1 || deg > 4)
                throw std::invalid_argument("build_model: symmetric degree out of range [1,4]");
            m.deg = deg;
            m.eps = degree_tuples(n, deg);
            m.dimV = static_cast<int>(m.eps.size());
            m.fano_scale = static_cast<double>(n) / deg;
            break;
        }
    }

    m.highest_index = 0;
    for (int b = 0; b < m.dimV; ++b) {
        WeightVec w(n - 1);
        for (int i = 0; i + 1 < n; ++i) w[i] = m.eps[b][i] - m.eps[b][i + 1];
        m.weight_labels.push_back(std::move(w));
    }
    const WeightVec mu = m.weight_labels[m.highest_index];
    for (int b = 0; b < m.dimV; ++b) {
        const auto coords = m.rs.nonneg_root_coords(mu - m.weight_labels[b]);
        if (!coords) throw std::logic_error("build_model: weight outside the cone below mu");
        uint32_t mask = 0;
        for (int j = 0; j + 1 < n; ++j)
            if ((*coords)[j] > 0) mask |= 1u << j;
        m.supports.push_back(mask);
    }
    return m;
}

RepModel parse_model(const std::string& spec) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos <= spec.size()) {
        const size_t next = spec.find(':', pos);
        parts.push_back(spec.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    auto arg = [&](size_t i) {
        if (i >= parts.size()) throw std::invalid_argument("model spec '" + spec + "': missing argument");
        return std::stoi(parts[i]);
    };
    if (parts.empty()) throw std::invalid_argument("empty model spec");
    if (parts[0] == "defining") return build_model(RepKind::Defining, arg(1));
    if (parts[0] == "ext") return build_model(RepKind::ExteriorPower, arg(1), arg(2));
    if (parts[0] == "sym") return build_model(RepKind::SymPower, arg(1), arg(2));
    throw std::invalid_argument("unknown model kind '" + parts[0] + "'");
}

std::string model_name(const RepModel& m) {
    switch (m.kind) {
        case RepKind::Defining: return "defining:" + std::to_string(m.n);
        case RepKind::ExteriorPower:
            return "ext:" + std::to_string(m.n) + ":" + std::to_string(m.deg);
        case RepKind::SymPower:
            return "sym:" + std::to_string(m.n) + ":" + std::to_string(m.deg);
    }
    return "";
}

LieBasis lie_basis(int n) {
    LieBasis basis;
    basis.n = n;
    const double c = std::sqrt(2.0 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            MatrixXcd A = MatrixXcd::Zero(n, n);
            A(i, j) = Complex(1, 0) / c;
            A(j, i) = Complex(-1, 0) / c;
            basis.elems.push_back(A);
            MatrixXcd B = MatrixXcd::Zero(n, n);
            B(i, j) = Complex(0, 1) / c;
            B(j, i) = Complex(0, 1) / c;
            basis.elems.push_back(B);
        }
    }
    for (int k = 1; k < n; ++k) {
        VectorXd t = VectorXd::Zero(n);
        for (int i = 0; i < k; ++i) t(i) = 1.0;
        t(k) = -static_cast<double>(k);
        t /= t.norm() * std::sqrt(static_cast<double>(n));
        MatrixXcd D = MatrixXcd::Zero(n, n);
        for (int i = 0; i < n; ++i) D(i, i) = Complex(0, t(i));
        basis.elems.push_back(D);
        basis.diag_t.push_back(t);
    }
    return basis;
}

double killing_form(int n, const MatrixXcd& X, const MatrixXcd& Y) {
    return 2.0 * n * (X * Y).trace().real();
}

double killing_form_via_ad(const LieBasis& basis, const MatrixXcd& X, const MatrixXcd& Y) {
    const int l = basis.dim();
    const int n = basis.n;
    auto inner = [&](const MatrixXcd& A, const MatrixXcd& B) {
        return -static_cast<double>(n) * (A * B).trace().real();  // -B/2
    };
    // tr(ad X ad Y) = sum_k < [X, [Y, e_k]], e_k > in the orthonormal basis.
    double tr = 0;
    for (int k = 0; k < l; ++k) {
        const MatrixXcd inner_bracket = Y * basis.elems[k] - basis.elems[k] * Y;
        const MatrixXcd outer = X * inner_bracket - inner_bracket * X;
        tr += inner(outer, basis.elems[k]);
    }
    return tr;
}

RepAction make_rep_action(const RepModel& model, const LieBasis& basis) {
    RepAction action;
    action.ops.reserve(basis.dim());
    for (const auto& e : basis.elems) action.ops.push_back(model.dtau(e));
    return action;
}

VectorXd moment_map_point(const RepAction& action, const VectorXcd& x) {
    const double n2 = x.squaredNorm();
    if (n2 <= 0) throw std::invalid_argument("moment_map_point: zero vector");
    VectorXd phi(action.dim());
    for (int j = 0; j < action.dim(); ++j)
        phi(j) = (x.adjoint() * (action.ops[j] * x))(0).imag() / n2;
    return phi;
}

VectorXd moment_map_point(const RepModel& model, const LieBasis& basis, const VectorXcd& x) {
    return moment_map_point(make_rep_action(model, basis), x);
}

MatrixXcd moment_matrix(const LieBasis& basis, const VectorXd& phi) {
    MatrixXcd m = MatrixXcd::Zero(basis.n, basis.n);
    for (int j = 0; j < basis.dim(); ++j) m += phi(j) * basis.elems[j];
    return m;
}

MatrixXcd hermitian_sqrt(const MatrixXcd& A, double tol) {
    const MatrixXcd H = 0.5 * (A + A.adjoint());
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H);
    const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    VectorXd w = es.eigenvalues();
    for (int i = 0; i < w.size(); ++i) {
        if (w(i) < -tol * scale)
            throw std::domain_error("hermitian_sqrt: matrix has a significantly negative eigenvalue");
        w(i) = std::sqrt(std::max(w(i), 0.0));
    }
    return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

PolarDecomposition polar_rho(const MatrixXcd& g) {
    Eigen::JacobiSVD<MatrixXcd> svd(g);
    const auto& s = svd.singularValues();
    if (!(s(s.size() - 1) > 1e-250 * std::max(1.0, s(0))))
        throw NumericError("polar_rho: matrix is singular");
    PolarDecomposition pd;
    pd.p = hermitian_sqrt(g * g.adjoint());
    pd.a = pd.p.fullPivLu().solve(g);
    return pd;
}

RayLimit satake_ray_limit(const RepModel& model, const VectorXd& H) {
    if (H.size() != model.n) throw std::invalid_argument("satake_ray_limit: wrong size");
    const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
    if (std::abs(H.sum()) > 1e-10 * scale)
        throw std::invalid_argument("satake_ray_limit: H is not traceless");
    const int rank = model.n - 1;
    uint32_t zero_mask = 0;
    for (int i = 0; i < rank; ++i) {
        const double gap = H(i) - H(i + 1);
        if (gap < -1e-10 * scale)
            throw std::invalid_argument("satake_ray_limit: H is not dominant");
        if (std::abs(gap) <= 1e-10 * scale) zero_mask |= 1u << i;
    }
    const WeightVec mu = model.highest_weight();
    RayLimit rl;
    rl.I = largest_mu_connected_subset(model.rs, SimpleSubset(zero_mask, rank), mu);
    rl.projector = MatrixXcd::Zero(model.dimV, model.dimV);
    for (int b = 0; b < model.dimV; ++b)
        if ((model.supports[b] & ~rl.I.bits) == 0) {
            rl.projector(b, b) = 1.0;
            ++rl.rank;
        }
    return rl;
}

MatrixXcd ray_point(const RepModel& model, const VectorXd& H, double t) {
    VectorXd w(model.dimV);
    for (int b = 0; b < model.dimV; ++b) w(b) = model.weight_value(b, H);
    const double top = w.maxCoeff();
    VectorXd e(model.dimV);
    for (int b = 0; b < model.dimV; ++b) e(b) = std::exp(2.0 * t * (w(b) - top));
    e /= e.sum();
    MatrixXcd out = MatrixXcd::Zero(model.dimV, model.dimV);
    for (int b = 0; b < model.dimV; ++b) out(b, b) = e(b);
    return out;
}

VectorXcd project_to_subspace(const RepModel& model, const SimpleSubset& I, const VectorXcd& x,
                              double eps) {
    VectorXcd y = x;
    for (int b = 0; b < model.dimV; ++b)
        if ((model.supports[b] & ~I.bits) != 0) y(b) = Complex(0, 0);
    const double norm = y.norm();
    if (norm < eps * x.norm())
        throw IndeterminacyError("project_to_subspace: point lies in the indeterminacy locus");
    return y / norm;
}

MatrixXcd haar_unitary(int n, uint64_t seed, uint64_t index) {
    Rng rng = Rng::for_index(seed, index);
    MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            a(i, j) = Complex(re, im) / std::sqrt(2.0);
        }
    Eigen::HouseholderQR<MatrixXcd> qr(a);
    MatrixXcd q = qr.householderQ();
    const MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        q.col(j) *= (std::abs(d) > 0 ? d / std::abs(d) : Complex(1, 0));
    }
    return q;
}

namespace {

VectorXcd tau_highest_column(const RepModel& model, const MatrixXcd& g) {
    switch (model.kind) {
        case RepKind::Defining:
            return g.col(0);
        case RepKind::ExteriorPower: {
            VectorXcd v(model.dimV);
            const auto subsets = k_subsets(model.n, model.deg);
            for (int row = 0; row < model.dimV; ++row) {
                MatrixXcd minor(model.deg, model.deg);
                for (int a = 0; a < model.deg; ++a)
                    for (int c = 0; c < model.deg; ++c) minor(a, c) = g(subsets[row][a], c);
                v(row) = minor.determinant();
            }
            return v;
        }
        case RepKind::SymPower: {
            const double dfac = factorial(model.deg);
            VectorXcd v(model.dimV);
            for (int b = 0; b < model.dimV; ++b) {
                Complex prod(1, 0);
                for (int j = 0; j < model.n; ++j)
                    for (int rep = 0; rep < model.eps[b][j]; ++rep) prod *= g(j, 0);
                v(b) = prod * std::sqrt(dfac / tuple_factorial(model.eps[b]));
            }
            return v;
        }
    }
    return VectorXcd();
}

}  // namespace

std::vector<VectorXcd> sample_orbit(const RepModel& model, int count, uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample_orbit: count must be positive");
    std::vector<VectorXcd> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const MatrixXcd q = haar_unitary(model.n, seed, static_cast<uint64_t>(i));
        VectorXcd v = tau_highest_column(model, q);
        out.push_back(v / v.norm());
    }
    return out;
}

VectorXcd xi_field(const RepAction& action, int j, const VectorXcd& x) {
    const VectorXcd ax = action.ops[j] * x;
    return ax - (x.adjoint() * ax)(0) * x;
}

VectorXcd xi_field(const RepModel& model, const MatrixXcd& u, const VectorXcd& x) {
    const VectorXcd ax = model.dtau(u) * x;
    return ax - (x.adjoint() * ax)(0) * x;
}

double fs_pairing(const RepModel& model, const VectorXcd& x, const MatrixXcd& u,
                  const MatrixXcd& v) {
    const VectorXcd xu = xi_field(model, u, x);
    const VectorXcd xv = xi_field(model, v, x);
    return 2.0 * (xv.adjoint() * xu)(0).real();
}

MatrixXd fs_gram(const RepAction& action, const VectorXcd& x) {
    const int l = action.dim();
    MatrixXcd xi(x.size(), l);
    for (int j = 0; j < l; ++j) xi.col(j) = xi_field(action, j, x);
    return 2.0 * (xi.adjoint() * xi).real();
}

VectorXd torus_moment(const RepAction& action, const LieBasis& basis, const VectorXcd& x) {
    const VectorXd phi = moment_map_point(action, x);
    return phi.segment(basis.diag_offset(), basis.n - 1);
}

VectorXd weight_torus_coords(const RepModel& model, const LieBasis& basis, const WeightVec& w) {
    const int rank = model.n - 1;
    VectorXd out(rank);
    for (int k = 0; k < rank; ++k) {
        const VectorXd& t = basis.diag_t[k];
        double prefix = 0, val = 0;
        for (int i = 0; i < rank; ++i) {
            prefix += t(i);
            val += static_cast<double>(w[i]) * prefix;
        }
        out(k) = val;
    }
    return out;
}

}  // namespace orbitope
