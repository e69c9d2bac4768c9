#include <orbitope/polytope.hpp>

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace orbitope {

namespace {

std::vector<Rat> rat_coords(const WeightVec& v) {
    return std::vector<Rat>(v.begin(), v.end());
}

}  // namespace

MomentPolytope moment_polytope(const RootSystem& rs, const WeightVec& mu) {
    if (!rs.is_dominant(mu))
        throw std::invalid_argument("moment_polytope: weight is not dominant");
    MomentPolytope p;
    p.highest = mu;
    p.vertices = rs.weyl_orbit(mu);
    return p;
}

std::vector<Rat> vertex_barycenter(const MomentPolytope& p) {
    const int n = static_cast<int>(p.highest.size());
    std::vector<Rat> bary(n, 0);
    for (const auto& v : p.vertices)
        for (int i = 0; i < n; ++i) bary[i] += Rat(v[i]);
    for (auto& c : bary) c /= static_cast<long long>(p.vertices.size());
    return bary;
}

std::vector<Rat> project_to_span(const RootSystem& rs, const WeightVec& lambda,
                                 const SimpleSubset& I) {
    const auto idx = I.indices();
    const int m = static_cast<int>(idx.size());
    std::vector<Rat> out(rs.rank(), 0);
    if (m == 0) return out;
    // Solve the Gram system sum_b c_b (alpha_b, alpha_a) = (lambda, alpha_a).
    RatMatrix gram(m, m);
    std::vector<Rat> rhs(m);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b)
            gram(a, b) = rs.bilinear(rs.simple_roots()[idx[a]], rs.simple_roots()[idx[b]]);
        rhs[a] = rs.bilinear(lambda, rs.simple_roots()[idx[a]]);
    }
    const auto c = solve_linear(gram, rhs);
    for (int b = 0; b < m; ++b) {
        const auto& alpha = rs.simple_roots()[idx[b]];
        for (int i = 0; i < rs.rank(); ++i) out[i] += c[b] * Rat(alpha[i]);
    }
    return out;
}

FaceDescriptor face_of_subset(const RootSystem& rs, const MomentPolytope& p,
                              const SimpleSubset& I) {
    if (!is_mu_connected(rs, I, p.highest))
        throw std::invalid_argument("face_of_subset: subset is not mu-connected");

    FaceDescriptor fd;
    fd.I = I;
    fd.affine_offset_Y = project_to_span(rs, p.highest, I);
    fd.affine_offset_Z.resize(rs.rank());
    for (int i = 0; i < rs.rank(); ++i)
        fd.affine_offset_Z[i] = Rat(p.highest[i]) - fd.affine_offset_Y[i];

    // Orbit of mu under reflections in I only.
    WeightSet seen;
    std::deque<WeightVec> queue;
    seen.insert(p.highest);
    queue.push_back(p.highest);
    const auto idx = I.indices();
    while (!queue.empty()) {
        WeightVec w = std::move(queue.front());
        queue.pop_front();
        for (int i : idx) {
            WeightVec r = rs.simple_reflect(i, w);
            if (seen.insert(r).second) queue.push_back(std::move(r));
        }
    }
    fd.vertex_set.assign(seen.begin(), seen.end());
    std::sort(fd.vertex_set.begin(), fd.vertex_set.end());
    return fd;
}

std::vector<WeightVec> face_vertices_by_span(const RootSystem& rs, const MomentPolytope& p,
                                             const SimpleSubset& I) {
    std::vector<WeightVec> out;
    for (const auto& v : p.vertices) {
        // v - mu in span(I) iff its projection onto span(I) reproduces it.
        const WeightVec diff = v - p.highest;
        const auto proj = project_to_span(rs, diff, I);
        bool in_span = true;
        for (int i = 0; i < rs.rank(); ++i)
            if (proj[i] != Rat(diff[i])) { in_span = false; break; }
        if (in_span) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ConeSystem cone_system(const RootSystem& rs, const SimpleSubset& I) {
    ConeSystem cs;
    cs.I = I;
    for (int b = 0; b < rs.rank(); ++b) {
        if (I.contains(b)) continue;
        WeightVec gen(rs.rank(), 0);
        gen[b] = 1;  // the fundamental weight w_b
        cs.generators.push_back(std::move(gen));
    }
    return cs;
}

ConeCheck cone_containment_check(const RootSystem& rs, const MomentPolytope& p,
                                 const ConeSystem& cone) {
    ConeCheck res;
    for (size_t vi = 0; vi < p.vertices.size(); ++vi) {
        for (size_t gi = 0; gi < cone.generators.size(); ++gi) {
            const auto& u = cone.generators[gi];
            if (rs.bilinear(p.vertices[vi], u) > rs.bilinear(p.highest, u)) {
                res.ok = false;
                res.witness = ConeWitness{static_cast<int>(vi), static_cast<int>(gi)};
                return res;
            }
        }
    }
    return res;
}

std::vector<WeightVec> cone_equality_vertices(const RootSystem& rs, const MomentPolytope& p,
                                              const ConeSystem& cone) {
    std::vector<WeightVec> out;
    for (const auto& v : p.vertices) {
        bool tight = true;
        for (const auto& u : cone.generators)
            if (rs.bilinear(v, u) != rs.bilinear(p.highest, u)) { tight = false; break; }
        if (tight) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool theta_shift_oracle(const RootSystem& rs, const WeightVec& mu, const SimpleSubset& I) {
    const auto polytope = moment_polytope(rs, mu);
    const auto face = face_of_subset(rs, polytope, I);

    if (I.is_empty())
        return face.vertex_set == std::vector<WeightVec>{mu};

    // Orbit of the restricted weight in the subsystem's own coordinates.
    const RootSystem sub = sub_root_system(rs, I);
    const WeightVec rw = restricted_highest_weight(rs, mu, I);
    const auto sub_orbit = sub.weyl_orbit(rw);

    // Embed each sub-orbit point back as the unique vector of span_Q(I) with
    // the prescribed coroot pairings, then shift by Z.
    const auto idx = I.indices();
    const int m = static_cast<int>(idx.size());
    RatMatrix pairings(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const auto& beta = rs.simple_roots()[idx[b]];
            const auto& alpha = rs.simple_roots()[idx[a]];
            pairings(a, b) = Rat(2) * rs.bilinear(beta, alpha) / rs.bilinear(alpha, alpha);
        }

    std::vector<std::vector<Rat>> embedded;
    for (const auto& nu : sub_orbit) {
        std::vector<Rat> rhs(nu.begin(), nu.end());
        const auto c = solve_linear(pairings, rhs);
        std::vector<Rat> v(rs.rank(), 0);
        for (int b = 0; b < m; ++b) {
            const auto& beta = rs.simple_roots()[idx[b]];
            for (int i = 0; i < rs.rank(); ++i) v[i] += c[b] * Rat(beta[i]);
        }
        for (int i = 0; i < rs.rank(); ++i) v[i] += face.affine_offset_Z[i];
        embedded.push_back(std::move(v));
    }
    std::sort(embedded.begin(), embedded.end());

    std::vector<std::vector<Rat>> face_rat;
    for (const auto& v : face.vertex_set) face_rat.push_back(rat_coords(v));
    std::sort(face_rat.begin(), face_rat.end());

    return embedded == face_rat;
}

}  // namespace orbitope
