#pragma once

#include <orbitope/root_system.hpp>
#include <orbitope/satake.hpp>
#include <orbitope/simple_subset.hpp>

#include <optional>
#include <vector>

namespace orbitope {

/// conv(W . mu): the torus image of the coadjoint orbit. Vertices are exact;
/// every orbit point is extreme (they share one norm).
struct MomentPolytope {
    WeightVec highest;
    std::vector<WeightVec> vertices;  // sorted
};

MomentPolytope moment_polytope(const RootSystem& rs, const WeightVec& mu);

/// Exact barycenter of the vertex set (Weyl symmetry forces zero).
std::vector<Rat> vertex_barycenter(const MomentPolytope& p);

/// The face cut out by a mu-connected subset I: its vertices are the orbit of
/// mu under reflections in I, and they all lie in mu + span(I). The offset
/// splits mu = Y + Z with Y in span(I) and Z orthogonal to it.
struct FaceDescriptor {
    SimpleSubset I;
    std::vector<Rat> affine_offset_Y;  // fw coordinates, in span(I)
    std::vector<Rat> affine_offset_Z;  // fw coordinates, orthogonal to span(I)
    std::vector<WeightVec> vertex_set;  // sorted
};

FaceDescriptor face_of_subset(const RootSystem& rs, const MomentPolytope& p,
                              const SimpleSubset& I);

/// Brute-force version of the face vertex set: {v in vertices : v - mu in span_Q(I)}.
std::vector<WeightVec> face_vertices_by_span(const RootSystem& rs, const MomentPolytope& p,
                                             const SimpleSubset& I);

/// The inequalities attached to I. In fundamental-weight coordinates the
/// extreme rays of the dual cone are exactly the fundamental weights indexed
/// by the complement of I, so each generator u imposes B(v,u) <= B(mu,u).
struct ConeSystem {
    SimpleSubset I;
    std::vector<WeightVec> generators;
};

ConeSystem cone_system(const RootSystem& rs, const SimpleSubset& I);

struct ConeWitness {
    int vertex_index;
    int generator_index;
};

struct ConeCheck {
    bool ok = true;
    std::optional<ConeWitness> witness;  // a violating pair when !ok
};

ConeCheck cone_containment_check(const RootSystem& rs, const MomentPolytope& p,
                                 const ConeSystem& cone);

/// Vertices where every cone inequality is tight (should equal the face).
std::vector<WeightVec> cone_equality_vertices(const RootSystem& rs, const MomentPolytope& p,
                                              const ConeSystem& cone);

/// Checks that the face of I equals Z + (moment polytope of the restricted
/// representation on the I-subsystem), embedded back via the span of I.
/// Exact rational arithmetic throughout.
bool theta_shift_oracle(const RootSystem& rs, const WeightVec& mu, const SimpleSubset& I);

/// B-orthogonal projection of lambda onto span_Q(I); exact.
std::vector<Rat> project_to_span(const RootSystem& rs, const WeightVec& lambda,
                                 const SimpleSubset& I);

}  // namespace orbitope
