#pragma once

#include <orbitope/cartan.hpp>
#include <orbitope/rational_linalg.hpp>

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

namespace orbitope {

/// Integer coordinates in the fundamental-weight basis. Roots, weights and
/// dominant characters all live here, so equality is exact.
using WeightVec = std::vector<long long>;

struct WeightVecHash {
    size_t operator()(const WeightVec& v) const noexcept {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (long long x : v) {
            uint64_t u = static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h ^= u * 0xbf58476d1ce4e5b9ull;
        }
        return static_cast<size_t>(h);
    }
};

using WeightSet = std::unordered_set<WeightVec, WeightVecHash>;

WeightVec operator+(const WeightVec& a, const WeightVec& b);
WeightVec operator-(const WeightVec& a, const WeightVec& b);
WeightVec operator*(long long c, const WeightVec& a);

/// Root and Weyl-group arithmetic over exact integers/rationals.
///
/// All weight data is expressed in the fundamental-weight basis; the j-th
/// simple root is column j of the Cartan matrix. The invariant form is
/// normalized so long roots have squared length 2.
class RootSystem {
public:
    /// Empty system; assign from build() or from_cartan() before use.
    RootSystem() = default;

    static RootSystem build(const CartanType& type);

    /// Builds from a raw Cartan matrix (used for the sub-systems spanned by
    /// subsets of the simple roots, which need no type classification).
    static RootSystem from_cartan(IntMatrix cartan);

    int rank() const { return rank_; }
    const std::optional<CartanType>& type() const { return type_; }

    const IntMatrix& cartan() const { return cartan_; }
    const std::vector<WeightVec>& simple_roots() const { return simple_roots_; }
    const std::vector<WeightVec>& positive_roots() const { return positive_roots_; }
    /// Simple-root coordinates of positive root i (nonnegative integers).
    const std::vector<long long>& positive_root_coords(int i) const { return positive_coords_[i]; }

    /// Gram matrix of the fundamental weights under the invariant form.
    const RatMatrix& form() const { return gram_; }
    const std::vector<Rat>& root_lengths_halved() const { return d_; }

    /// B(lambda, mu) for arbitrary weights.
    Rat bilinear(const WeightVec& lambda, const WeightVec& mu) const;

    bool is_root(const WeightVec& alpha) const;

    /// <lambda, alpha^vee> = 2 B(lambda, alpha) / B(alpha, alpha).
    /// alpha must be a root; the result is always an integer.
    long long coroot_pairing(const WeightVec& lambda, const WeightVec& alpha) const;

    /// Reflection s_alpha(lambda) = lambda - <lambda, alpha^vee> alpha.
    WeightVec reflect(const WeightVec& lambda, const WeightVec& alpha) const;

    /// Reflection in the i-th simple root (no validation, O(rank)).
    WeightVec simple_reflect(int i, const WeightVec& lambda) const;

    /// Full Weyl orbit via breadth-first closure under simple reflections.
    std::vector<WeightVec> weyl_orbit(const WeightVec& lambda) const;

    WeightVec rho() const { return WeightVec(rank_, 1); }

    bool is_dominant(const WeightVec& lambda) const;

    /// Simple-root coordinates of a weight (rational in general).
    std::vector<Rat> to_simple_coords(const WeightVec& lambda) const;

    /// lambda written as nonnegative-integer combination of simple roots;
    /// nullopt if some coordinate is negative or non-integral.
    std::optional<std::vector<long long>> nonneg_root_coords(const WeightVec& lambda) const;

private:
    void init();

    int rank_ = 0;
    std::optional<CartanType> type_;
    IntMatrix cartan_;
    RatMatrix cartan_inv_;
    std::vector<Rat> d_;
    RatMatrix gram_;
    std::vector<WeightVec> simple_roots_;
    std::vector<WeightVec> positive_roots_;
    std::vector<std::vector<long long>> positive_coords_;
    WeightSet root_set_;  // positive and negative roots, fw coords
};

}  // namespace orbitope
