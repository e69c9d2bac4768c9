#pragma once

#include <orbitope/polytope.hpp>
#include <orbitope/root_system.hpp>

#include <string>

namespace orbitope {

/// Deterministic SVG of a rank-2 moment polytope: the polygon, with the faces
/// of the mu-connected subsets highlighted. Throws unless rank == 2.
std::string render_polytope_svg(const RootSystem& rs, const WeightVec& mu, bool highlight_faces);

/// CSV of the vertex set: fundamental-weight coordinates plus Euclidean
/// embedding coordinates.
std::string polytope_csv(const RootSystem& rs, const MomentPolytope& p);

}  // namespace orbitope
