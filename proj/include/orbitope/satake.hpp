#pragma once

#include <orbitope/root_system.hpp>
#include <orbitope/simple_subset.hpp>
#include <orbitope/weights.hpp>

#include <vector>

namespace orbitope {

/// I is mu-connected when every connected component of I (edges = nonzero
/// pairing between simple roots) contains a root that pairs nontrivially
/// with mu.
bool is_mu_connected(const RootSystem& rs, const SimpleSubset& I, const WeightVec& mu);

/// Largest mu-connected subset of the given mask (the union of all
/// mu-connected subsets it contains).
SimpleSubset largest_mu_connected_subset(const RootSystem& rs, const SimpleSubset& mask,
                                         const WeightVec& mu);

/// J = I together with every simple root orthogonal to both mu and I.
/// Requires I mu-connected.
SimpleSubset mu_saturation(const RootSystem& rs, const SimpleSubset& I, const WeightVec& mu);

/// Combinatorial shadow of one boundary stratum: a mu-connected I, its
/// saturation, the dimension of the irreducible subspace it spans, and the
/// highest weight of the restricted representation on the I-subsystem.
struct BoundaryComponent {
    SimpleSubset I;
    SimpleSubset J;
    long long dim_VI = 0;
    WeightVec restricted_highest_weight;
};

/// All mu-connected subsets with their saturations and dimensions, ordered by
/// inclusion-compatible rank (cardinality, then bitmask). The full set of
/// simple roots appears as the open stratum. Requires mu dominant and nonzero
/// on every connected component of the Dynkin diagram.
std::vector<BoundaryComponent> enumerate_boundary_components(const RootSystem& rs,
                                                             const WeightVec& mu);

/// Inclusion order on components (I-subset test at a fixed datum).
inline bool component_leq(const BoundaryComponent& a, const BoundaryComponent& b) {
    return a.I.subset_of(b.I);
}

}  // namespace orbitope
