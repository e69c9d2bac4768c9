#pragma once

#include <orbitope/root_system.hpp>
#include <orbitope/simple_subset.hpp>

#include <map>

namespace orbitope {

/// Weight diagram of an irreducible highest-weight representation:
/// weight -> multiplicity, complete and Weyl-invariant.
struct WeightDiagram {
    WeightVec highest;
    std::map<WeightVec, long long> entries;

    long long dim() const {
        long long s = 0;
        for (const auto& [w, m] : entries) s += m;
        return s;
    }
    long long multiplicity(const WeightVec& w) const {
        auto it = entries.find(w);
        return it == entries.end() ? 0 : it->second;
    }
};

/// Multiplicities via the Freudenthal recursion, processed by decreasing
/// height so each step only references already-known higher weights.
WeightDiagram weight_diagram(const RootSystem& rs, const WeightVec& highest);

/// Weyl dimension formula, exact rational arithmetic.
long long weyl_dimension(const RootSystem& rs, const WeightVec& highest);

/// supp(lambda) = {alpha : c_alpha > 0} where lambda = highest - sum c_alpha alpha.
/// Throws if lambda is not of that form with nonnegative integers.
SimpleSubset support(const RootSystem& rs, const WeightVec& highest, const WeightVec& lambda);

/// dim V_I = sum of multiplicities over weights with support inside I.
long long dim_V_I(const RootSystem& rs, const WeightDiagram& diagram, const SimpleSubset& I);

/// The sub-root-system spanned by the simple roots in I (Cartan submatrix).
RootSystem sub_root_system(const RootSystem& rs, const SimpleSubset& I);

/// Highest weight of the restriction to the I-subsystem: the coroot pairings
/// <mu, alpha_i^vee> for alpha_i in I, listed in increasing index order.
WeightVec restricted_highest_weight(const RootSystem& rs, const WeightVec& mu,
                                    const SimpleSubset& I);

}  // namespace orbitope
