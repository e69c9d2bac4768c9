#pragma once

#include <orbitope/bly.hpp>
#include <orbitope/models.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace orbitope {

/// Intersection-number inputs for the first-eigenvalue bound
/// lambda_1 <= (4 pi d / n) * numerator / denominator.
struct TopologicalData {
    int n = 1;  ///< complex dimension of the target symmetric space
    int d = 1;  ///< complex dimension of the source
    double numerator = 0.0;    ///< integral of F^* c_1 against a^{d-1}
    double denominator = 0.0;  ///< integral of a^d
};

double lambda1_bound(const TopologicalData& td);

/// Preset for P^k with the identity map and a = 2 pi c_1: the bound is
/// exactly 2 (the denominator is built as 2 pi times the numerator so the
/// cancellation is exact in floating point).
TopologicalData preset_pn(int k);

/// Preset for Gr(k,n) with the identity map and a = 2 pi c_1.
TopologicalData preset_grassmannian(int k, int n);

/// Parses "pn:3" or "gr:2:4"; throws on anything else.
TopologicalData parse_preset(const std::string& spec);
std::string preset_table_json();

using ChartFunction = std::function<double(const VectorXcd&)>;

/// Sample points in an affine chart of P^m, kept away from the chart
/// boundary.
struct ChartGrid {
    std::vector<VectorXcd> points;  ///< z in C^m
    double h = 1e-3;                ///< finite-difference step
};

ChartGrid make_chart_grid(int m, int count, uint64_t seed, double radius = 1.2, double h = 1e-3);

/// Laplacian of f at z for the Fubini-Study metric of the O(1) embedding,
/// evaluated with second-order central differences:
/// Delta f = 2 g^{i jbar} d^2 f / dz^i dzbar^j, g^{i jbar} = (1+|z|^2)(delta_ij + z_i zbar_j).
double laplacian_fs(const ChartFunction& f, const VectorXcd& z, double h);

/// max over the grid of |Delta f / kahler_scale - target| (the scaled
/// Laplacian is the Kaehler-Einstein one when kahler_scale is the model's
/// anticanonical scale).
double laplacian_residual(const ChartFunction& f, const ChartFunction& target,
                          const ChartGrid& grid, double kahler_scale);

/// Moment map component j of the model pulled back to the affine chart
/// z -> [1, z_1, ..., z_m] of the defining model's P^{n-1}.
ChartFunction moment_component_chart(const RepModel& model, const LieBasis& basis, int j);

/// max over the sample of | |kappa Phi(x)|^2 - dim_C M |.
double moment_norm_identity(const RepModel& model, const LieBasis& basis,
                            const std::vector<VectorXcd>& sample);

/// | sum_j i del f_j wedge delbar f_j (w1, w2) - kappa * omega(w1, w2) | at x,
/// with f_j = kappa Phi_j and analytic first derivatives.
double kahler_form_identity(const RepModel& model, const LieBasis& basis, const VectorXcd& x,
                            const VectorXcd& w1, const VectorXcd& w2);

struct RayleighReport {
    double quotient = 0.0;
    double zero_mean_residual = 0.0;
};

/// Rayleigh quotient sum_j int |grad h_j|^2 / sum_j int h_j^2 with
/// h_j = kappa Phi_j composed with exp(u), integrated against the measure.
/// Gradients are the analytic Kaehler-Einstein ones unless per-point,
/// per-component squared-gradient samples are supplied (rows = points,
/// cols = basis index).
RayleighReport rayleigh_certificate(const RepModel& model, const LieBasis& basis,
                                    const DiscreteMeasure& gamma, const MatrixXcd& u,
                                    const std::optional<MatrixXd>& grad_sq_samples = {});

}  // namespace orbitope
