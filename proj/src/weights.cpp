#include <orbitope/weights.hpp>

#include <stdexcept>

namespace orbitope {

long long weyl_dimension(const RootSystem& rs, const WeightVec& highest) {
    if (!rs.is_dominant(highest))
        throw std::invalid_argument("weyl_dimension: weight is not dominant");
    const WeightVec rho = rs.rho();
    Rat prod = 1;
    for (const auto& alpha : rs.positive_roots()) {
        const long long num = rs.coroot_pairing(highest + rho, alpha);
        const long long den = rs.coroot_pairing(rho, alpha);
        prod *= Rat(num, den);
    }
    if (prod.denominator() != 1) throw std::logic_error("Weyl dimension is not integral");
    return prod.numerator();
}

WeightDiagram weight_diagram(const RootSystem& rs, const WeightVec& highest) {
    if (!rs.is_dominant(highest))
        throw std::invalid_argument("weight_diagram: weight is not dominant");
    const int n = rs.rank();
    const WeightVec rho = rs.rho();
    const Rat top_norm = rs.bilinear(highest + rho, highest + rho);

    WeightDiagram diagram;
    diagram.highest = highest;
    diagram.entries[highest] = 1;

    std::map<WeightVec, long long>& mult = diagram.entries;
    std::vector<WeightVec> level = {highest};

    while (!level.empty()) {
        // Candidates one level down from the current weights.
        WeightSet cand;
        for (const auto& w : level)
            for (int i = 0; i < n; ++i) cand.insert(w - rs.simple_roots()[i]);

        std::vector<WeightVec> next;
        for (const auto& lam : cand) {
            const Rat denom = top_norm - rs.bilinear(lam + rho, lam + rho);
            if (denom == 0) continue;  // cannot be a weight below the highest
            Rat num = 0;
            for (const auto& alpha : rs.positive_roots()) {
                WeightVec up = lam;
                while (true) {
                    up = up + alpha;
                    auto it = mult.find(up);
                    if (it == mult.end()) {
                        // Off the stored diagram: no weight of the rep lies
                        // further along this string either, stop.
                        break;
                    }
                    num += Rat(2 * it->second) * rs.bilinear(up, alpha);
                }
            }
            const Rat m = num / denom;
            if (m.denominator() != 1 || m < 0)
                throw std::logic_error("Freudenthal recursion produced a non-integer");
            if (m > 0) {
                mult[lam] = m.numerator();
                next.push_back(lam);
            }
        }
        level = std::move(next);
    }
    return diagram;
}

SimpleSubset support(const RootSystem& rs, const WeightVec& highest, const WeightVec& lambda) {
    const auto coords = rs.nonneg_root_coords(highest - lambda);
    if (!coords)
        throw std::invalid_argument(
            "support: weight is not highest minus a nonnegative integral root combination");
    uint32_t bits = 0;
    for (int j = 0; j < rs.rank(); ++j)
        if ((*coords)[j] > 0) bits |= (1u << j);
    return SimpleSubset(bits, rs.rank());
}

long long dim_V_I(const RootSystem& rs, const WeightDiagram& diagram, const SimpleSubset& I) {
    long long s = 0;
    for (const auto& [w, m] : diagram.entries)
        if (support(rs, diagram.highest, w).subset_of(I)) s += m;
    return s;
}

RootSystem sub_root_system(const RootSystem& rs, const SimpleSubset& I) {
    const auto idx = I.indices();
    const int m = static_cast<int>(idx.size());
    IntMatrix sub(m, std::vector<long long>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) sub[a][b] = rs.cartan()[idx[a]][idx[b]];
    return RootSystem::from_cartan(std::move(sub));
}

WeightVec restricted_highest_weight(const RootSystem& rs, const WeightVec& mu,
                                    const SimpleSubset& I) {
    // In fundamental-weight coordinates <mu, alpha_i^vee> is just mu_i.
    WeightVec out;
    for (int i : I.indices()) out.push_back(mu[i]);
    return out;
}

}  // namespace orbitope
