#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitope {

/// A subset of the simple roots, stored as a bitmask over positions 0..rank-1.
struct SimpleSubset {
    uint32_t bits = 0;
    int rank = 0;

    SimpleSubset() = default;
    SimpleSubset(uint32_t b, int r) : bits(b), rank(r) {
        if (r < 0 || r > 31) throw std::invalid_argument("SimpleSubset: rank out of range");
        if (b >> r) throw std::invalid_argument("SimpleSubset: bits outside rank");
    }

    static SimpleSubset empty(int rank) { return SimpleSubset(0, rank); }
    static SimpleSubset full(int rank) {
        return SimpleSubset(rank == 0 ? 0u : ((1u << rank) - 1u), rank);
    }
    static SimpleSubset of(std::initializer_list<int> idx, int rank) {
        uint32_t b = 0;
        for (int i : idx) b |= (1u << i);
        return SimpleSubset(b, rank);
    }

    bool contains(int i) const { return (bits >> i) & 1u; }
    bool subset_of(const SimpleSubset& o) const { return (bits & ~o.bits) == 0; }
    int count() const { return __builtin_popcount(bits); }
    bool is_empty() const { return bits == 0; }

    SimpleSubset with(int i) const { return SimpleSubset(bits | (1u << i), rank); }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < rank; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int i = 0; i < rank; ++i)
            if (contains(i)) {
                if (!first) s += ",";
                s += "a" + std::to_string(i + 1);
                first = false;
            }
        return s + "}";
    }

    bool operator==(const SimpleSubset&) const = default;
    bool operator<(const SimpleSubset& o) const {
        if (count() != o.count()) return count() < o.count();
        return bits < o.bits;
    }
};

}  // namespace orbitope
