#include <orbitope/satake.hpp>

#include <algorithm>
#include <stdexcept>

namespace orbitope {

namespace {

// Connected components of the subgraph of the Dynkin diagram induced by mask.
std::vector<uint32_t> components_of(const RootSystem& rs, uint32_t mask) {
    std::vector<uint32_t> comps;
    uint32_t remaining = mask;
    while (remaining) {
        int seed = __builtin_ctz(remaining);
        uint32_t comp = 1u << seed;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int i = 0; i < rs.rank(); ++i) {
                if (!((mask >> i) & 1u) || ((comp >> i) & 1u)) continue;
                for (int j = 0; j < rs.rank(); ++j) {
                    if (((comp >> j) & 1u) && rs.cartan()[i][j] != 0) {
                        comp |= 1u << i;
                        grew = true;
                        break;
                    }
                }
            }
        }
        comps.push_back(comp);
        remaining &= ~comp;
    }
    return comps;
}

// B(mu, alpha_i) != 0 iff mu_i != 0 in fundamental-weight coordinates.
bool touches_mu(const WeightVec& mu, uint32_t comp) {
    for (size_t i = 0; i < mu.size(); ++i)
        if (((comp >> i) & 1u) && mu[i] != 0) return true;
    return false;
}

}  // namespace

bool is_mu_connected(const RootSystem& rs, const SimpleSubset& I, const WeightVec& mu) {
    if (I.rank != rs.rank() || static_cast<int>(mu.size()) != rs.rank())
        throw std::invalid_argument("is_mu_connected: rank mismatch");
    for (uint32_t comp : components_of(rs, I.bits))
        if (!touches_mu(mu, comp)) return false;
    return true;
}

SimpleSubset largest_mu_connected_subset(const RootSystem& rs, const SimpleSubset& mask,
                                         const WeightVec& mu) {
    uint32_t keep = 0;
    for (uint32_t comp : components_of(rs, mask.bits))
        if (touches_mu(mu, comp)) keep |= comp;
    return SimpleSubset(keep, rs.rank());
}

SimpleSubset mu_saturation(const RootSystem& rs, const SimpleSubset& I, const WeightVec& mu) {
    if (!is_mu_connected(rs, I, mu))
        throw std::invalid_argument("mu_saturation: subset is not mu-connected");
    uint32_t j = I.bits;
    for (int a = 0; a < rs.rank(); ++a) {
        if (I.contains(a)) continue;
        if (mu[a] != 0) continue;  // not orthogonal to mu
        bool orth = true;
        for (int b : I.indices())
            if (rs.cartan()[a][b] != 0) { orth = false; break; }
        if (orth) j |= 1u << a;
    }
    return SimpleSubset(j, rs.rank());
}

std::vector<BoundaryComponent> enumerate_boundary_components(const RootSystem& rs,
                                                             const WeightVec& mu) {
    if (!rs.is_dominant(mu))
        throw std::invalid_argument("enumerate_boundary_components: weight is not dominant");
    for (uint32_t comp : components_of(rs, SimpleSubset::full(rs.rank()).bits))
        if (!touches_mu(mu, comp))
            throw std::invalid_argument(
                "enumerate_boundary_components: weight vanishes on a whole component of the "
                "diagram");

    const auto diagram = weight_diagram(rs, mu);
    std::vector<BoundaryComponent> out;
    const uint32_t total = rs.rank() == 0 ? 1u : (1u << rs.rank());
    for (uint32_t bits = 0; bits < total; ++bits) {
        SimpleSubset I(bits, rs.rank());
        if (!is_mu_connected(rs, I, mu)) continue;
        BoundaryComponent bc;
        bc.I = I;
        bc.J = mu_saturation(rs, I, mu);
        bc.dim_VI = dim_V_I(rs, diagram, I);
        bc.restricted_highest_weight = restricted_highest_weight(rs, mu, I);
        out.push_back(std::move(bc));
    }
    std::sort(out.begin(), out.end(),
              [](const BoundaryComponent& a, const BoundaryComponent& b) { return a.I < b.I; });
    return out;
}

}  // namespace orbitope
