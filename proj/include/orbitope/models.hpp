#pragma once

#include <orbitope/root_system.hpp>
#include <orbitope/simple_subset.hpp>

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitope {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Projection onto a subspace the point is (numerically) orthogonal to.
struct IndeterminacyError : NumericError {
    using NumericError::NumericError;
};

enum class RepKind { Defining, ExteriorPower, SymPower };

/// An explicit unitary matrix model of an irreducible SL(n,C) representation
/// with weight-labeled orthonormal basis: the defining representation C^n,
/// an exterior power Lambda^k C^n, or a symmetric power Sym^d C^n.
class RepModel {
public:
    RepKind kind;
    int n = 0;     ///< SL(n,C)
    int deg = 1;   ///< k for ExteriorPower, d for SymPower, 1 for Defining
    int dimV = 0;
    int highest_index = 0;
    /// Anticanonical scale: the Kaehler-Einstein form is fano_scale times the
    /// embedding Fubini-Study form. n for Defining and ExteriorPower (the
    /// flag orbit is P^{n-1} resp. Gr(k,n)); n/d for SymPower.
    double fano_scale = 0.0;

    RootSystem rs;                          ///< A_{n-1}
    std::vector<WeightVec> weight_labels;   ///< fundamental-weight coordinates
    std::vector<std::vector<int>> eps;      ///< epsilon-basis exponents per basis vector
    std::vector<uint32_t> supports;         ///< support mask of highest - weight

    WeightVec highest_weight() const { return weight_labels[highest_index]; }
    int complex_dim_M() const;

    /// Infinitesimal action dtau(X) for traceless X (anti-Hermitian in,
    /// anti-Hermitian out).
    MatrixXcd dtau(const MatrixXcd& X) const;

    /// Group action tau(g).
    MatrixXcd tau(const MatrixXcd& g) const;

    /// Weight value lambda_b(diag(H)) for real diagonal H.
    double weight_value(int basis_index, const VectorXd& H) const;

    /// Residual of the orbit equations at a unit vector: Pluecker quadrics for
    /// exterior powers, second singular value of the catalecticant for
    /// symmetric powers, zero for the defining representation.
    double orbit_residual(const VectorXcd& v) const;

    /// Basis index sets for the exterior model / exponents for sym (exposed
    /// for tests).
    const std::vector<std::vector<int>>& basis_tuples() const { return eps; }
};

RepModel build_model(RepKind kind, int n, int deg = 1);
RepModel parse_model(const std::string& spec);  ///< "defining:3", "ext:4:2", "sym:2:2"
std::string model_name(const RepModel& m);

/// Orthonormal basis of su(n) with respect to -B/2, B(X,Y) = 2n tr(XY).
/// Off-diagonal pairs come first; the n-1 torus elements i*diag(t_k) sit at
/// the end, with their t-vectors recorded.
struct LieBasis {
    int n = 0;
    std::vector<MatrixXcd> elems;
    std::vector<VectorXd> diag_t;
    int dim() const { return static_cast<int>(elems.size()); }
    int diag_offset() const { return dim() - (n - 1); }
};

LieBasis lie_basis(int n);

/// Killing form of sl(n,C) restricted to su(n): B(X,Y) = 2n tr(XY).
double killing_form(int n, const MatrixXcd& X, const MatrixXcd& Y);

/// tr(ad X ad Y) computed from structure constants in the given basis;
/// independent oracle for the closed form above.
double killing_form_via_ad(const LieBasis& basis, const MatrixXcd& X, const MatrixXcd& Y);

/// dtau of every basis element, cached for the hot paths.
struct RepAction {
    std::vector<MatrixXcd> ops;
    int dim() const { return static_cast<int>(ops.size()); }
};

RepAction make_rep_action(const RepModel& model, const LieBasis& basis);

/// Moment map coordinates <Phi(x), e_j> = Im <dtau(e_j) v, v> at a unit vector.
VectorXd moment_map_point(const RepAction& action, const VectorXcd& x);
VectorXd moment_map_point(const RepModel& model, const LieBasis& basis, const VectorXcd& x);

/// Moment map as an element of su(n) via the -B/2 duality (for equivariance
/// checks: the matrix transforms by conjugation).
MatrixXcd moment_matrix(const LieBasis& basis, const VectorXd& phi);

/// Unique PSD square root. Eigenvalues are clamped at zero; significantly
/// negative ones are rejected.
MatrixXcd hermitian_sqrt(const MatrixXcd& A, double tol = 1e-10);

struct PolarDecomposition {
    MatrixXcd p;  ///< positive Hermitian factor sqrt(g g*)
    MatrixXcd a;  ///< unitary factor p^{-1} g
};

PolarDecomposition polar_rho(const MatrixXcd& g);

/// Limit of [tau(exp tH) tau(exp tH)*] as t grows, for dominant diagonal H:
/// the projector onto the subspace spanned by the basis vectors of maximal
/// H-weight, together with the combinatorial subset it realizes.
struct RayLimit {
    MatrixXcd projector;
    SimpleSubset I;
    long long rank = 0;
};

RayLimit satake_ray_limit(const RepModel& model, const VectorXd& H);

/// Trace-one chart point [tau(exp tH) tau(exp tH)*] at finite t.
MatrixXcd ray_point(const RepModel& model, const VectorXd& H, double t);

/// Orthogonal projection of x to the subspace attached to I, renormalized.
/// Throws IndeterminacyError when the projection has norm below eps.
VectorXcd project_to_subspace(const RepModel& model, const SimpleSubset& I, const VectorXcd& x,
                              double eps = 1e-8);

/// Haar-random unitary (QR of a Ginibre sample with phase fix), deterministic
/// per (seed, index).
MatrixXcd haar_unitary(int n, uint64_t seed, uint64_t index);

/// Deterministic sample of the flag orbit through the highest weight line.
std::vector<VectorXcd> sample_orbit(const RepModel& model, int count, uint64_t seed);

/// Fundamental vector field of u at unit x, as an ambient vector.
VectorXcd xi_field(const RepAction& action, int j, const VectorXcd& x);
VectorXcd xi_field(const RepModel& model, const MatrixXcd& u, const VectorXcd& x);

/// Fubini-Study pairing g(xi_u, xi_v) = 2 Re <xi_u, xi_v>, normalized so the
/// derivative of <Phi, v> along the exp(t iv) flow is minus the diagonal.
double fs_pairing(const RepModel& model, const VectorXcd& x, const MatrixXcd& u,
                  const MatrixXcd& v);

/// One-point Gram block: G_jk = fs_pairing(x, e_j, e_k) over the whole basis.
MatrixXd fs_gram(const RepAction& action, const VectorXcd& x);

/// Torus coordinates of the moment image: the components of Phi along the
/// diagonal basis elements.
VectorXd torus_moment(const RepAction& action, const LieBasis& basis, const VectorXcd& x);

/// Exact weight evaluated on the same diagonal basis elements; the image of a
/// polytope vertex in the numeric torus chart.
VectorXd weight_torus_coords(const RepModel& model, const LieBasis& basis, const WeightVec& w);

/// Deterministic pairwise (binary-tree) summation over an indexed range.
template <typename T, typename Leaf>
T pairwise_sum(int lo, int hi, const Leaf& leaf) {
    if (hi - lo <= 64) {
        T acc = leaf(lo);
        for (int i = lo + 1; i < hi; ++i) acc += leaf(i);
        return acc;
    }
    const int mid = lo + (hi - lo) / 2;
    T left = pairwise_sum<T>(lo, mid, leaf);
    left += pairwise_sum<T>(mid, hi, leaf);
    return left;
}

}  // namespace orbitope
