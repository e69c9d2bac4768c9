#pragma once

#include <orbitope/rational_linalg.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace orbitope {

using IntMatrix = std::vector<std::vector<long long>>;

/// Finite Cartan family with the usual rank restrictions:
/// A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4), E_6..E_8, F_4, G_2.
struct CartanType {
    char family = 'A';
    int rank = 1;

    CartanType() = default;
    CartanType(char f, int r);

    /// Parses "A3", "G2", "E8" (case-insensitive family letter).
    static CartanType parse(std::string_view s);

    std::string name() const { return std::string(1, family) + std::to_string(rank); }

    bool operator==(const CartanType&) const = default;
};

/// Cartan matrix with the convention A(i,j) = <alpha_j, alpha_i^vee>,
/// so column j holds the fundamental-weight coordinates of alpha_j.
IntMatrix cartan_matrix(const CartanType& type);

/// Symmetrizers d_i = (alpha_i, alpha_i)/2 normalized so long roots have
/// squared length 2 (d_i = 1 on the long roots).
std::vector<Rat> symmetrizers(const IntMatrix& cartan);

/// Checks the generalized-Cartan-matrix axioms plus finite type
/// (positive-definite symmetrization).
bool is_finite_type_cartan(const IntMatrix& cartan);

long long weyl_group_order(const CartanType& type);

}  // namespace orbitope
