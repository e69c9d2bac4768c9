#include <orbitope/bly.hpp>

#include <nlohmann/json.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>

namespace orbitope {

using nlohmann::json;

DiscreteMeasure weight_basis_measure(const RepModel& model) {
    DiscreteMeasure gamma;
    gamma.weights = VectorXd::Constant(model.dimV, 1.0 / model.dimV);
    for (int b = 0; b < model.dimV; ++b) {
        VectorXcd v = VectorXcd::Zero(model.dimV);
        v(b) = Complex(1, 0);
        gamma.points.push_back(std::move(v));
    }
    return gamma;
}

DiscreteMeasure haar_measure(const RepModel& model, int count, uint64_t seed) {
    DiscreteMeasure gamma;
    gamma.points = sample_orbit(model, count, seed);
    gamma.weights = VectorXd::Constant(count, 1.0 / count);
    return gamma;
}

DiscreteMeasure push_measure(const RepModel& model, const DiscreteMeasure& gamma,
                             const MatrixXcd& g) {
    const MatrixXcd t = model.tau(g);
    DiscreteMeasure out;
    out.weights = gamma.weights;
    out.points.reserve(gamma.points.size());
    for (const auto& x : gamma.points) {
        VectorXcd y = t * x;
        out.points.push_back(y / y.norm());
    }
    return out;
}

void validate_measure(const RepModel& model, const DiscreteMeasure& gamma, double orbit_tol) {
    if (gamma.size() == 0) throw std::invalid_argument("measure has no points");
    if (gamma.weights.size() != gamma.size())
        throw std::invalid_argument("measure weights/points size mismatch");
    if (gamma.weights.minCoeff() < 0) throw std::invalid_argument("measure has negative weight");
    if (std::abs(gamma.weights.sum() - 1.0) > 1e-12)
        throw std::invalid_argument("measure weights do not sum to one");
    for (const auto& x : gamma.points) {
        if (x.size() != model.dimV) throw std::invalid_argument("measure point has wrong dimension");
        if (std::abs(x.norm() - 1.0) > 1e-12)
            throw std::invalid_argument("measure point is not normalized");
        if (model.orbit_residual(x) > orbit_tol)
            throw std::invalid_argument("measure point is not on the orbit");
    }
}

namespace {

VectorXd eval_at_points(const RepAction& action, const DiscreteMeasure& gamma,
                        const MatrixXcd& rep_matrix) {
    return pairwise_sum<VectorXd>(0, gamma.size(), [&](int i) -> VectorXd {
        VectorXcd y = rep_matrix * gamma.points[i];
        const double n2 = y.squaredNorm();
        if (n2 <= 0) throw NumericError("bly_eval: transported point vanished");
        VectorXd phi(action.dim());
        for (int j = 0; j < action.dim(); ++j)
            phi(j) = (y.adjoint() * (action.ops[j] * y))(0).imag() / n2;
        return (gamma.weights(i) * phi).eval();
    });
}

MatrixXd gram_at_points(const RepAction& action, const DiscreteMeasure& gamma,
                        const MatrixXcd& rep_matrix) {
    const int l = action.dim();
    return pairwise_sum<MatrixXd>(0, gamma.size(), [&](int i) -> MatrixXd {
        VectorXcd y = rep_matrix * gamma.points[i];
        y /= y.norm();
        MatrixXcd xi(y.size(), l);
        for (int j = 0; j < l; ++j) xi.col(j) = xi_field(action, j, y);
        return (gamma.weights(i) * 2.0 * (xi.adjoint() * xi).real()).eval();
    });
}

}  // namespace

VectorXd bly_eval(const RepModel& model, const LieBasis& basis, const DiscreteMeasure& gamma,
                  const MatrixXcd& g) {
    const RepAction action = make_rep_action(model, basis);
    // rho(g) = sqrt(g g*); the unitary polar factor is never needed, and
    // skipping it keeps extreme ray arguments (huge condition numbers) valid.
    return eval_at_points(action, gamma, model.tau(hermitian_sqrt(g * g.adjoint())));
}

MatrixXd bly_gram(const RepModel& model, const LieBasis& basis, const DiscreteMeasure& gamma,
                  const MatrixXcd& g) {
    const RepAction action = make_rep_action(model, basis);
    return gram_at_points(action, gamma, model.tau(hermitian_sqrt(g * g.adjoint())));
}

BalancedResult solve_balanced(const RepModel& model, const LieBasis& basis,
                              const DiscreteMeasure& gamma, const SolverConfig& config) {
    const RepAction action = make_rep_action(model, basis);
    const int l = basis.dim();
    const int n = model.n;

    BalancedResult result;
    MatrixXcd m = MatrixXcd::Identity(n, n);  // group element; positive part is the iterate
    MatrixXcd rep = model.tau(m);

    VectorXd psi = eval_at_points(action, gamma, rep);
    double res = psi.norm();

    for (int iter = 0; iter <= config.max_iter; ++iter) {
        result.trace.push_back(res);
        result.iterations = iter;
        if (res <= config.tol) {
            result.status = SolveStatus::Converged;
            break;
        }
        if (iter == config.max_iter) {
            result.status = SolveStatus::NoConvergence;
            break;
        }

        const MatrixXd gram = gram_at_points(action, gamma, rep);
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(gram);
        const VectorXd& ev = es.eigenvalues();
        const double top = std::max(ev(l - 1), 0.0);
        if (top <= config.gram_ridge) {
            result.status = SolveStatus::SingularGram;
            break;
        }
        // Newton direction through the Gram pseudo-inverse; eigendirections
        // below the cutoff are isotropy of the configuration and are skipped.
        VectorXd delta = VectorXd::Zero(l);
        const VectorXd proj = es.eigenvectors().transpose() * psi;
        double dropped2 = 0.0;
        for (int j = 0; j < l; ++j) {
            if (ev(j) > config.gram_cutoff * top)
                delta += (proj(j) / (ev(j) + config.gram_ridge)) * es.eigenvectors().col(j);
            else
                dropped2 += proj(j) * proj(j);
        }
        if (std::sqrt(dropped2) > 0.5 * res) {
            // The residual lives mostly in degenerate directions: the measure
            // concentrates near a hyperplane section.
            result.status = SolveStatus::SingularGram;
            break;
        }

        MatrixXcd dir = MatrixXcd::Zero(n, n);
        for (int j = 0; j < l; ++j) dir += delta(j) * (Complex(0, 1) * basis.elems[j]);
        dir = 0.5 * (dir + dir.adjoint());
        dir -= (dir.trace() / static_cast<double>(n)) * MatrixXcd::Identity(n, n);

        double step = 1.0;
        bool accepted = false;
        for (int bt = 0; bt < config.max_backtrack; ++bt) {
            Eigen::SelfAdjointEigenSolver<MatrixXcd> de(step * dir);
            MatrixXcd stepmat = de.eigenvectors() *
                                de.eigenvalues().array().exp().matrix().asDiagonal() *
                                de.eigenvectors().adjoint();
            MatrixXcd m_next = stepmat * m;
            MatrixXcd rep_next = model.tau(m_next);
            VectorXd psi_next = eval_at_points(action, gamma, rep_next);
            if (psi_next.norm() < res) {
                m = std::move(m_next);
                rep = std::move(rep_next);
                psi = std::move(psi_next);
                res = psi.norm();
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            result.status = SolveStatus::NoConvergence;
            break;
        }
    }

    // Positive balanced representative: sqrt(m^* m). Left unitary factors do
    // not change whether a configuration is balanced.
    MatrixXcd p = hermitian_sqrt(m.adjoint() * m);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(p);
    VectorXd logw = es.eigenvalues();
    for (int i = 0; i < logw.size(); ++i) logw(i) = std::log(std::max(logw(i), 1e-300));
    logw.array() -= logw.mean();  // exact det 1
    result.u = es.eigenvectors() * logw.asDiagonal() * es.eigenvectors().adjoint();
    result.u = 0.5 * (result.u + result.u.adjoint());

    Eigen::SelfAdjointEigenSolver<MatrixXcd> ue(result.u);
    const MatrixXcd expu = ue.eigenvectors() *
                           ue.eigenvalues().array().exp().matrix().asDiagonal() *
                           ue.eigenvectors().adjoint();
    result.residual = eval_at_points(action, gamma, model.tau(expu)).norm();
    return result;
}

AdmissibilityReport admissibility_check(const RepModel& model, const DiscreteMeasure& gamma) {
    MatrixXcd pts(model.dimV, gamma.size());
    for (int i = 0; i < gamma.size(); ++i)
        pts.col(i) = std::sqrt(gamma.weights(i)) * gamma.points[i];
    Eigen::JacobiSVD<MatrixXcd> svd(pts);
    const auto& s = svd.singularValues();
    AdmissibilityReport report;
    report.sigma_min = s(std::min<int>(model.dimV, gamma.size()) - 1);
    const double smax = s(0);
    report.rank = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s(i) > 1e-12 * smax) ++report.rank;
    report.pass = (gamma.size() >= model.dimV) && (report.rank == model.dimV);
    report.condition = report.pass ? smax / report.sigma_min : 0.0;
    return report;
}

std::string measure_to_json(const RepModel& model, const DiscreteMeasure& gamma) {
    json j;
    j["model"] = model_name(model);
    j["weights"] = std::vector<double>(gamma.weights.data(),
                                       gamma.weights.data() + gamma.weights.size());
    json pts = json::array();
    for (const auto& x : gamma.points) {
        json p = json::array();
        for (int i = 0; i < x.size(); ++i) p.push_back({x(i).real(), x(i).imag()});
        pts.push_back(std::move(p));
    }
    j["points"] = std::move(pts);
    return j.dump(2);
}

DiscreteMeasure measure_from_json(const RepModel& model, const std::string& text) {
    const json j = json::parse(text);
    if (j.contains("model") && j["model"].get<std::string>() != model_name(model))
        throw std::invalid_argument("measure file is for model " +
                                    j["model"].get<std::string>());
    DiscreteMeasure gamma;
    const auto& w = j.at("weights");
    gamma.weights = VectorXd(w.size());
    for (size_t i = 0; i < w.size(); ++i) gamma.weights(i) = w[i].get<double>();
    for (const auto& p : j.at("points")) {
        VectorXcd x(p.size());
        for (size_t i = 0; i < p.size(); ++i)
            x(i) = Complex(p[i][0].get<double>(), p[i][1].get<double>());
        gamma.points.push_back(std::move(x));
    }
    validate_measure(model, gamma);
    return gamma;
}

std::string result_to_json(const BalancedResult& result) {
    json j;
    switch (result.status) {
        case SolveStatus::Converged: j["status"] = "converged"; break;
        case SolveStatus::NoConvergence: j["status"] = "no_convergence"; break;
        case SolveStatus::SingularGram: j["status"] = "singular_gram"; break;
    }
    j["residual"] = result.residual;
    j["iterations"] = result.iterations;
    j["trace"] = result.trace;
    json u = json::array();
    for (int r = 0; r < result.u.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < result.u.cols(); ++c)
            row.push_back({result.u(r, c).real(), result.u(r, c).imag()});
        u.push_back(std::move(row));
    }
    j["u"] = std::move(u);
    return j.dump(2);
}

}  // namespace orbitope
