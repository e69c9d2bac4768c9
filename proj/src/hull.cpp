#include <orbitope/hull.hpp>

#include <limits>
#include <stdexcept>

namespace orbitope {

namespace {

// Minimum-norm point in the affine hull of the columns indexed by corral:
// minimize |P lambda|^2 subject to sum lambda = 1.
Eigen::VectorXd affine_minimizer(const Eigen::MatrixXd& pts, const std::vector<int>& corral) {
    const int m = static_cast<int>(corral.size());
    Eigen::MatrixXd sys(m + 1, m + 1);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            sys(i, j) = pts.col(corral[i]).dot(pts.col(corral[j]));
    for (int i = 0; i < m; ++i) {
        sys(i, m) = 1.0;
        sys(m, i) = 1.0;
    }
    sys(m, m) = 0.0;
    rhs(m) = 1.0;
    Eigen::VectorXd sol = sys.fullPivLu().solve(rhs);
    return sol.head(m);
}

}  // namespace

double hull_distance(const std::vector<Eigen::VectorXd>& points, const Eigen::VectorXd& query) {
    if (points.empty()) throw std::invalid_argument("hull_distance: empty point set");
    const int dim = static_cast<int>(query.size());
    const int n = static_cast<int>(points.size());
    Eigen::MatrixXd pts(dim, n);
    for (int i = 0; i < n; ++i) {
        if (points[i].size() != dim)
            throw std::invalid_argument("hull_distance: dimension mismatch");
        pts.col(i) = points[i] - query;  // shift so the target is the origin
    }

    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, pts.col(i).squaredNorm());
    const double eps = 1e-14 * scale;

    // Start from the point of smallest norm.
    int best = 0;
    for (int i = 1; i < n; ++i)
        if (pts.col(i).squaredNorm() < pts.col(best).squaredNorm()) best = i;

    std::vector<int> corral = {best};
    Eigen::VectorXd lambda = Eigen::VectorXd::Ones(1);
    Eigen::VectorXd x = pts.col(best);

    for (int iter = 0; iter < 16 * (n + dim) + 64; ++iter) {
        // Most violating vertex for the current x.
        int j = 0;
        double bestdot = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            const double d = x.dot(pts.col(i));
            if (d < bestdot) { bestdot = d; j = i; }
        }
        if (x.squaredNorm() - bestdot <= eps) break;  // optimality
        bool dup = false;
        for (int c : corral)
            if (c == j) { dup = true; break; }
        if (dup) break;
        corral.push_back(j);
        Eigen::VectorXd lam_ext(corral.size());
        lam_ext.head(corral.size() - 1) = lambda;
        lam_ext(corral.size() - 1) = 0.0;
        lambda = lam_ext;

        // Inner loop: pull the affine minimizer back into the simplex.
        while (true) {
            Eigen::VectorXd mu = affine_minimizer(pts, corral);
            if (mu.minCoeff() > 1e-12) {
                lambda = mu;
                break;
            }
            double theta = 1.0;
            for (int i = 0; i < mu.size(); ++i)
                if (mu(i) <= 1e-12)
                    theta = std::min(theta, lambda(i) / (lambda(i) - mu(i)));
            lambda = (1.0 - theta) * lambda + theta * mu;
            std::vector<int> kept;
            Eigen::VectorXd lam_new(lambda.size());
            int k = 0;
            for (int i = 0; i < lambda.size(); ++i) {
                if (lambda(i) > 1e-12) {
                    kept.push_back(corral[i]);
                    lam_new(k++) = lambda(i);
                }
            }
            if (kept.empty()) {  // numerical corner: keep the best single point
                kept.push_back(corral[0]);
                lam_new(0) = 1.0;
                k = 1;
            }
            corral = std::move(kept);
            lambda = lam_new.head(k).eval();
            lambda /= lambda.sum();
        }
        x.setZero();
        for (size_t i = 0; i < corral.size(); ++i) x += lambda(i) * pts.col(corral[i]);
    }
    return x.norm();
}

bool hull_contains(const std::vector<Eigen::VectorXd>& points, const Eigen::VectorXd& query,
                   double tol) {
    return hull_distance(points, query) <= tol;
}

}  // namespace orbitope
