#pragma once

#include <Eigen/Dense>

#include <vector>

namespace orbitope {

/// Euclidean distance from query to the convex hull of points.
/// Wolfe's minimum-norm-point algorithm: finite termination, exact up to
/// floating point, comfortable at the dimensions used here (<= ~40).
double hull_distance(const std::vector<Eigen::VectorXd>& points, const Eigen::VectorXd& query);

/// True iff the query lies within distance tol of conv(points).
bool hull_contains(const std::vector<Eigen::VectorXd>& points, const Eigen::VectorXd& query,
                   double tol);

}  // namespace orbitope
