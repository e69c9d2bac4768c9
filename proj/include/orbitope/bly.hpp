#pragma once

#include <orbitope/models.hpp>

#include <string>
#include <vector>

namespace orbitope {

/// Weighted point cloud on the flag orbit; the discrete stand-in for a
/// probability measure.
struct DiscreteMeasure {
    std::vector<VectorXcd> points;  ///< unit vectors
    VectorXd weights;               ///< nonnegative, summing to one

    int size() const { return static_cast<int>(points.size()); }
};

/// Uniform measure on the weight-basis lines (exactly balanced).
DiscreteMeasure weight_basis_measure(const RepModel& model);

/// Uniform measure on a deterministic Haar sample of the orbit.
DiscreteMeasure haar_measure(const RepModel& model, int count, uint64_t seed);

/// Moves every point by tau(g) (projectively), keeping the weights.
DiscreteMeasure push_measure(const RepModel& model, const DiscreteMeasure& gamma,
                             const MatrixXcd& g);

void validate_measure(const RepModel& model, const DiscreteMeasure& gamma,
                      double orbit_tol = 1e-6);

/// Psi(gK) = sum_i w_i Phi(rho(g) x_i), coordinates in the given basis.
/// Invariant under right multiplication of g by unitaries.
VectorXd bly_eval(const RepModel& model, const LieBasis& basis, const DiscreteMeasure& gamma,
                  const MatrixXcd& g);

/// Gram matrix G_jk = sum_i w_i fs_pairing(rho(g) x_i, e_j, e_k); symmetric
/// PSD, positive definite when the transported points span enough tangent
/// directions. Minus G is the derivative of Psi along left translation by
/// exp of Lie-algebra directions once the measure is carried to rho(g)
/// (the pushed-measure picture; see the Jacobian test).
MatrixXd bly_gram(const RepModel& model, const LieBasis& basis, const DiscreteMeasure& gamma,
                  const MatrixXcd& g);

struct SolverConfig {
    double tol = 1e-8;
    int max_iter = 50;
    double gram_ridge = 1e-10;
    /// Relative eigenvalue cutoff below which Gram directions are treated as
    /// degenerate (isotropy of the configuration) and excluded from the step.
    double gram_cutoff = 1e-9;
    int max_backtrack = 40;
};

enum class SolveStatus { Converged, NoConvergence, SingularGram };

struct BalancedResult {
    MatrixXcd u;                ///< Hermitian traceless; exp(u) is the balanced point
    double residual = 0.0;      ///< norm of bly_eval at exp(u)
    int iterations = 0;
    std::vector<double> trace;  ///< per-iteration residual norms
    SolveStatus status = SolveStatus::Converged;
};

/// Damped Newton for Psi = 0 on the positive slice. Iterates carry a group
/// element by left multiplication with exp of Hermitian steps (Jacobian -G in
/// that chart, so convergence is quadratic near a nondegenerate zero); the
/// returned point is the positive factor of the final element, which balances
/// the same measure. If the measure admits a positive-dimensional family of
/// balanced points the solver reports the member it reaches.
BalancedResult solve_balanced(const RepModel& model, const LieBasis& basis,
                              const DiscreteMeasure& gamma, const SolverConfig& config = {});

struct AdmissibilityReport {
    bool pass = false;
    int rank = 0;
    double sigma_min = 0.0;
    double condition = 0.0;  ///< sigma_max / sigma_min of the weighted point matrix
};

/// Discrete surrogate of admissibility: the points, as vectors, span V.
AdmissibilityReport admissibility_check(const RepModel& model, const DiscreteMeasure& gamma);

/// JSON round trip: {"model": ..., "weights": [...], "points": [[[re,im],...],...]}.
std::string measure_to_json(const RepModel& model, const DiscreteMeasure& gamma);
DiscreteMeasure measure_from_json(const RepModel& model, const std::string& text);
std::string result_to_json(const BalancedResult& result);

}  // namespace orbitope
