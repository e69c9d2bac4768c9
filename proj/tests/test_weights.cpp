#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <orbitope/satake.hpp>
#include <orbitope/weights.hpp>

using namespace orbitope;

namespace {

RootSystem rs_of(const char* name) { return RootSystem::build(CartanType::parse(name)); }

}  // namespace

TEST_CASE("A1 adjoint representation") {
    const auto rs = rs_of("A1");
    const auto d = weight_diagram(rs, {2});
    CHECK(d.dim() == 3);
    CHECK(d.multiplicity({2}) == 1);
    CHECK(d.multiplicity({0}) == 1);
    CHECK(d.multiplicity({-2}) == 1);
}

TEST_CASE("A2 defining representation") {
    const auto rs = rs_of("A2");
    const auto d = weight_diagram(rs, {1, 0});
    CHECK(d.dim() == 3);
    CHECK(d.entries.size() == 3);
    for (const auto& [w, m] : d.entries) CHECK(m == 1);
}

TEST_CASE("A2 adjoint has an interior multiplicity") {
    const auto rs = rs_of("A2");
    const auto d = weight_diagram(rs, {1, 1});
    CHECK(d.dim() == 8);
    CHECK(d.multiplicity({0, 0}) == 2);
    CHECK(d.multiplicity({1, 1}) == 1);
}

TEST_CASE("Weyl dimension formula examples") {
    CHECK(weyl_dimension(rs_of("A2"), {1, 0}) == 3);
    CHECK(weyl_dimension(rs_of("A2"), {0, 0}) == 1);
    CHECK(weyl_dimension(rs_of("A3"), {0, 1, 0}) == 6);   // middle exterior power
    CHECK(weyl_dimension(rs_of("B2"), {1, 0}) == 5);
    CHECK(weyl_dimension(rs_of("B2"), {0, 1}) == 4);      // spin
    CHECK(weyl_dimension(rs_of("G2"), {1, 0}) == 7);
    CHECK(weyl_dimension(rs_of("G2"), {0, 1}) == 14);     // adjoint
    CHECK(weyl_dimension(rs_of("F4"), {0, 0, 0, 0}) == 1);
}

TEST_CASE("weight_diagram rejects non-dominant input") {
    const auto rs = rs_of("A2");
    CHECK_THROWS_AS(weight_diagram(rs, {-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(weyl_dimension(rs, {0, -2}), std::invalid_argument);
}

TEST_CASE("Freudenthal total dimension matches the Weyl formula") {
    const std::pair<const char*, WeightVec> cases[] = {
        {"A2", {1, 0}}, {"A2", {1, 1}}, {"A2", {2, 1}}, {"A3", {1, 0, 0}}, {"A3", {0, 1, 0}},
        {"A3", {1, 0, 1}}, {"A3", {1, 1, 0}}, {"B2", {1, 0}}, {"B2", {0, 1}}, {"B2", {1, 1}},
        {"B2", {2, 0}}, {"G2", {1, 0}}, {"G2", {0, 1}}, {"G2", {1, 1}}, {"C3", {0, 0, 1}},
        {"B3", {0, 0, 1}}};
    for (const auto& [name, mu] : cases) {
        CAPTURE(name);
        const auto rs = rs_of(name);
        CHECK(weight_diagram(rs, mu).dim() == weyl_dimension(rs, mu));
    }
}

TEST_CASE("multiplicities are Weyl invariant") {
    for (const auto& [name, mu] : std::vector<std::pair<const char*, WeightVec>>{
             {"A2", {2, 1}}, {"B2", {1, 1}}, {"G2", {1, 0}}, {"A3", {1, 0, 1}}}) {
        CAPTURE(name);
        const auto rs = rs_of(name);
        const auto d = weight_diagram(rs, mu);
        for (const auto& [w, m] : d.entries)
            for (int i = 0; i < rs.rank(); ++i)
                CHECK(d.multiplicity(rs.simple_reflect(i, w)) == m);
    }
}

TEST_CASE("highest weight has multiplicity one and empty support") {
    const auto rs = rs_of("B2");
    const WeightVec mu{1, 1};
    const auto d = weight_diagram(rs, mu);
    CHECK(d.multiplicity(mu) == 1);
    CHECK(support(rs, mu, mu).is_empty());
}

TEST_CASE("support reads off the simple-root coefficients") {
    const auto rs = rs_of("A2");
    const WeightVec mu{1, 0};
    const auto& a1 = rs.simple_roots()[0];
    const auto& a2 = rs.simple_roots()[1];
    CHECK(support(rs, mu, mu - a1) == SimpleSubset::of({0}, 2));
    CHECK(support(rs, mu, mu - a1 - a2) == SimpleSubset::of({0, 1}, 2));
    CHECK_THROWS_AS(support(rs, mu, mu + a1), std::invalid_argument);
}

TEST_CASE("dim_V_I on the defining representation of A2") {
    const auto rs = rs_of("A2");
    const WeightVec mu{1, 0};
    const auto d = weight_diagram(rs, mu);
    CHECK(dim_V_I(rs, d, SimpleSubset::empty(2)) == 1);
    CHECK(dim_V_I(rs, d, SimpleSubset::of({0}, 2)) == 2);
    CHECK(dim_V_I(rs, d, SimpleSubset::full(2)) == 3);
}

TEST_CASE("dim_V_I matches the Weyl dimension of the restricted representation") {
    const std::pair<const char*, WeightVec> cases[] = {
        {"A2", {1, 0}}, {"A2", {1, 1}}, {"A3", {1, 0, 0}}, {"A3", {0, 1, 0}},
        {"A3", {1, 0, 1}}, {"B2", {1, 0}}, {"B2", {0, 1}}, {"B2", {1, 1}}};
    for (const auto& [name, mu] : cases) {
        CAPTURE(name);
        const auto rs = rs_of(name);
        const auto d = weight_diagram(rs, mu);
        const uint32_t total = 1u << rs.rank();
        for (uint32_t bits = 0; bits < total; ++bits) {
            const SimpleSubset I(bits, rs.rank());
            if (!is_mu_connected(rs, I, mu)) continue;
            if (I.is_empty()) {
                CHECK(dim_V_I(rs, d, I) == 1);
                continue;
            }
            const auto sub = sub_root_system(rs, I);
            CHECK(dim_V_I(rs, d, I) ==
                  weyl_dimension(sub, restricted_highest_weight(rs, mu, I)));
        }
    }
}
