#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <orbitope/hull.hpp>
#include <orbitope/polytope.hpp>
#include <orbitope/svg.hpp>

using namespace orbitope;

namespace {

RootSystem rs_of(const char* name) { return RootSystem::build(CartanType::parse(name)); }

const std::vector<std::pair<const char*, std::vector<WeightVec>>> kMatrix = {
    {"A1", {{1}, {2}}},
    {"A2", {{1, 0}, {1, 1}, {2, 0}}},
    {"A3", {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}},
    {"B2", {{1, 0}, {0, 1}, {1, 1}}},
    {"G2", {{1, 0}, {0, 1}}}};

std::vector<Eigen::VectorXd> to_doubles(const RootSystem& rs,
                                        const std::vector<WeightVec>& vs) {
    // Euclidean coordinates via a Cholesky factor so distances are the
    // form distances.
    Eigen::MatrixXd gram(rs.rank(), rs.rank());
    for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j)
            gram(i, j) = rs.form()(i, j).to_double();
    Eigen::MatrixXd l = Eigen::LLT<Eigen::MatrixXd>(gram).matrixL().transpose();
    std::vector<Eigen::VectorXd> out;
    for (const auto& w : vs) {
        Eigen::VectorXd v(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) v(i) = static_cast<double>(w[i]);
        out.push_back(l * v);
    }
    return out;
}

}  // namespace

TEST_CASE("basic polytopes") {
    const auto a1 = rs_of("A1");
    CHECK(moment_polytope(a1, {2}).vertices == std::vector<WeightVec>{{-2}, {2}});
    CHECK(moment_polytope(rs_of("A2"), {1, 0}).vertices.size() == 3);
    CHECK(moment_polytope(rs_of("A2"), {1, 1}).vertices.size() == 6);
    CHECK_THROWS_AS(moment_polytope(rs_of("A2"), {-1, 0}), std::invalid_argument);
}

TEST_CASE("orbit barycenter vanishes exactly") {
    for (const auto& [name, mus] : kMatrix) {
        const auto rs = rs_of(name);
        for (const auto& mu : mus) {
            const auto bary = vertex_barycenter(moment_polytope(rs, mu));
            for (const auto& c : bary) CHECK(c == Rat(0));
        }
    }
}

TEST_CASE("face examples") {
    const auto rs = rs_of("A2");
    const WeightVec mu{1, 1};
    const auto p = moment_polytope(rs, mu);

    const auto empty_face = face_of_subset(rs, p, SimpleSubset::empty(2));
    CHECK(empty_face.vertex_set == std::vector<WeightVec>{mu});

    const auto top = face_of_subset(rs, p, SimpleSubset::full(2));
    CHECK(top.vertex_set == p.vertices);

    const auto edge = face_of_subset(rs, p, SimpleSubset::of({0}, 2));
    CHECK(edge.vertex_set.size() == 2);
    std::vector<WeightVec> expected = {rs.simple_reflect(0, mu), mu};
    std::sort(expected.begin(), expected.end());
    CHECK(edge.vertex_set == expected);

    CHECK_THROWS_AS(face_of_subset(rs_of("A2"), moment_polytope(rs_of("A2"), {1, 0}),
                                   SimpleSubset::of({1}, 2)),
                    std::invalid_argument);
}

TEST_CASE("face orbit equals the span computation over the whole matrix") {
    for (const auto& [name, mus] : kMatrix) {
        const auto rs = rs_of(name);
        for (const auto& mu : mus) {
            CAPTURE(name);
            CAPTURE(mu);
            const auto p = moment_polytope(rs, mu);
            for (uint32_t bits = 0; bits < (1u << rs.rank()); ++bits) {
                const SimpleSubset I(bits, rs.rank());
                if (!is_mu_connected(rs, I, mu)) continue;
                CHECK(face_of_subset(rs, p, I).vertex_set == face_vertices_by_span(rs, p, I));
            }
        }
    }
}

TEST_CASE("distinct subsets give distinct faces") {
    for (const auto& [name, mus] : kMatrix) {
        const auto rs = rs_of(name);
        for (const auto& mu : mus) {
            const auto p = moment_polytope(rs, mu);
            std::vector<std::vector<WeightVec>> seen;
            for (uint32_t bits = 0; bits < (1u << rs.rank()); ++bits) {
                const SimpleSubset I(bits, rs.rank());
                if (!is_mu_connected(rs, I, mu)) continue;
                const auto vs = face_of_subset(rs, p, I).vertex_set;
                for (const auto& other : seen) CHECK(other != vs);
                seen.push_back(vs);
            }
        }
    }
}

TEST_CASE("affine offsets split the highest weight orthogonally") {
    const auto rs = rs_of("A2");
    const auto p = moment_polytope(rs, {1, 1});
    const auto fd = face_of_subset(rs, p, SimpleSubset::of({0}, 2));
    // Y + Z = mu, Y in span(a1): Y = <mu, a1^vee> a1 / 2 = a1/2.
    CHECK(fd.affine_offset_Y[0] == Rat(1));    // a1 = (2,-1): half of it
    CHECK(fd.affine_offset_Y[1] == Rat(-1, 2));
    CHECK(fd.affine_offset_Z[0] == Rat(0));
    CHECK(fd.affine_offset_Z[1] == Rat(3, 2));
    // Z is orthogonal to span(I).
    CHECK(rs.bilinear(rs.simple_roots()[0], rs.simple_roots()[0]) != Rat(0));
    Rat pairing = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            pairing += fd.affine_offset_Z[i] * Rat(rs.simple_roots()[0][j]) * rs.form()(i, j);
    CHECK(pairing == Rat(0));
}

TEST_CASE("cone containment holds with equality exactly on the face") {
    for (const auto& [name, mus] : kMatrix) {
        const auto rs = rs_of(name);
        for (const auto& mu : mus) {
            CAPTURE(name);
            CAPTURE(mu);
            const auto p = moment_polytope(rs, mu);
            for (uint32_t bits = 0; bits < (1u << rs.rank()); ++bits) {
                const SimpleSubset I(bits, rs.rank());
                if (!is_mu_connected(rs, I, mu)) continue;
                const auto cone = cone_system(rs, I);
                CHECK(cone_containment_check(rs, p, cone).ok);
                CHECK(cone_equality_vertices(rs, p, cone) ==
                      face_of_subset(rs, p, I).vertex_set);
            }
        }
    }
}

TEST_CASE("cone check produces a witness for a wrong base vertex") {
    const auto rs = rs_of("A2");
    const WeightVec mu{1, 0};
    auto p = moment_polytope(rs, mu);
    // Recentering the inequalities at a non-maximal vertex must fail.
    MomentPolytope bad = p;
    bad.highest = rs.simple_reflect(0, mu);
    const auto check = cone_containment_check(rs, bad, cone_system(rs, SimpleSubset::empty(2)));
    CHECK_FALSE(check.ok);
    REQUIRE(check.witness.has_value());
    const auto& w = *check.witness;
    CHECK(rs.bilinear(p.vertices[w.vertex_index], cone_system(rs, SimpleSubset::empty(2))
                                                      .generators[w.generator_index]) >
          rs.bilinear(bad.highest, cone_system(rs, SimpleSubset::empty(2))
                                       .generators[w.generator_index]));
}

TEST_CASE("theta shift oracle") {
    CHECK(theta_shift_oracle(rs_of("A2"), {1, 1}, SimpleSubset::empty(2)));
    CHECK(theta_shift_oracle(rs_of("A2"), {1, 1}, SimpleSubset::of({0}, 2)));
    CHECK(theta_shift_oracle(rs_of("A3"), {0, 1, 0}, SimpleSubset::of({0, 1}, 3)));
    for (const auto& [name, mus] : kMatrix) {
        const auto rs = rs_of(name);
        for (const auto& mu : mus)
            for (uint32_t bits = 0; bits < (1u << rs.rank()); ++bits) {
                const SimpleSubset I(bits, rs.rank());
                if (!is_mu_connected(rs, I, mu)) continue;
                CAPTURE(name);
                CHECK(theta_shift_oracle(rs, mu, I));
            }
    }
}

TEST_CASE("proper faces are faces: their barycenter avoids the complementary hull") {
    for (const auto& [name, mus] : kMatrix) {
        const auto rs = rs_of(name);
        for (const auto& mu : mus) {
            const auto p = moment_polytope(rs, mu);
            for (uint32_t bits = 0; bits + 1 < (1u << rs.rank()); ++bits) {
                const SimpleSubset I(bits, rs.rank());
                if (!is_mu_connected(rs, I, mu)) continue;
                const auto face = face_of_subset(rs, p, I);
                std::vector<WeightVec> others;
                for (const auto& v : p.vertices)
                    if (std::find(face.vertex_set.begin(), face.vertex_set.end(), v) ==
                        face.vertex_set.end())
                        others.push_back(v);
                if (others.empty()) continue;
                auto face_pts = to_doubles(rs, face.vertex_set);
                auto other_pts = to_doubles(rs, others);
                Eigen::VectorXd bary = Eigen::VectorXd::Zero(rs.rank());
                for (const auto& q : face_pts) bary += q;
                bary /= static_cast<double>(face_pts.size());
                CHECK_FALSE(hull_contains(other_pts, bary, 1e-9));
            }
        }
    }
}

TEST_CASE("hull membership basics") {
    std::vector<Eigen::VectorXd> simplex;
    for (int i = 0; i < 3; ++i) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(2);
        if (i > 0) v(i - 1) = 1.0;
        simplex.push_back(v);
    }
    Eigen::VectorXd bary = Eigen::VectorXd::Constant(2, 1.0 / 3.0);
    CHECK(hull_contains(simplex, bary, 1e-12));
    Eigen::VectorXd outside = Eigen::VectorXd::Constant(2, 1.0);
    CHECK_FALSE(hull_contains(simplex, outside, 1e-6));
    CHECK(hull_distance(simplex, outside) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));

    // Vertex plus a push along the outward normal by 10x the tolerance.
    Eigen::VectorXd v = Eigen::VectorXd::Zero(2);
    v(0) = 1.0 + 10e-6;
    v(1) = -10e-6;
    CHECK_FALSE(hull_contains(simplex, v, 1e-6));

    CHECK_THROWS_AS(hull_distance({}, bary), std::invalid_argument);
    std::vector<Eigen::VectorXd> wrong = {Eigen::VectorXd::Zero(3)};
    CHECK_THROWS_AS(hull_distance(wrong, bary), std::invalid_argument);
}

TEST_CASE("hexagon contains the origin") {
    const auto rs = rs_of("A2");
    const auto p = moment_polytope(rs, {1, 1});
    auto pts = to_doubles(rs, p.vertices);
    CHECK(hull_contains(pts, Eigen::VectorXd::Zero(2), 1e-12));
}

TEST_CASE("rank-2 svg and csv renderings are deterministic") {
    const auto rs = rs_of("A2");
    const auto svg1 = render_polytope_svg(rs, {1, 1}, true);
    const auto svg2 = render_polytope_svg(rs, {1, 1}, true);
    CHECK(svg1 == svg2);
    CHECK(svg1.find("<polygon") != std::string::npos);
    CHECK_THROWS_AS(render_polytope_svg(rs_of("A3"), {1, 0, 0}, false), std::invalid_argument);

    const auto csv = polytope_csv(rs, moment_polytope(rs, {1, 0}));
    CHECK(csv.find("fw1,fw2,x1,x2") == 0);
}
