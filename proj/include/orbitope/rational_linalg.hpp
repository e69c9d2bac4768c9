#pragma once

#include <compare>
#include <cstdlib>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitope {

/// Exact rational over long long with gcd normalization. (boost::rational
/// 1.74 recurses under C++20 operator rewriting, so the artifact carries its
/// own; the sizes appearing here stay far from overflow.)
class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(long long n) : num_(n) {}
    Rat(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        normalize();
    }

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rat& operator+=(const Rat& o) {
        const long long g = std::gcd(den_, o.den_);
        num_ = num_ * (o.den_ / g) + o.num_ * (den_ / g);
        den_ = den_ / g * o.den_;
        normalize();
        return *this;
    }
    Rat& operator-=(const Rat& o) { return *this += -o; }
    Rat& operator*=(const Rat& o) {
        const long long g1 = std::gcd(std::abs(num_), o.den_);
        const long long g2 = std::gcd(std::abs(o.num_), den_);
        num_ = (num_ / g1) * (o.num_ / g2);
        den_ = (den_ / g2) * (o.den_ / g1);
        normalize();
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
        Rat inv;
        inv.num_ = o.den_;
        inv.den_ = o.num_;
        if (inv.den_ < 0) {
            inv.num_ = -inv.num_;
            inv.den_ = -inv.den_;
        }
        return *this *= inv;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        // a.num/a.den <=> b.num/b.den with positive denominators.
        const long long lhs = a.num_ * b.den_;  // sizes here keep this safe
        const long long rhs = b.num_ * a.den_;
        return lhs <=> rhs;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const long long g = std::gcd(std::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    long long num_ = 0;
    long long den_ = 1;
};

/// Dense matrix of exact rationals. Only the handful of operations the
/// combinatorial layer needs: solve, invert, symmetric positivity.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

/// Gaussian elimination with exact pivoting. Throws if the system is singular.
inline std::vector<Rat> solve_linear(RatMatrix a, std::vector<Rat> b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve_linear: shape mismatch");
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col) != Rat(0)) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("solve_linear: singular matrix");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            std::swap(b[pivot], b[col]);
        }
        const Rat inv = Rat(1) / a(col, col);
        for (int c = col; c < n; ++c) a(col, c) *= inv;
        b[col] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col) == Rat(0)) continue;
            const Rat f = a(r, col);
            for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    return b;
}

inline RatMatrix invert(const RatMatrix& a) {
    const int n = a.rows();
    RatMatrix inv(n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<Rat> e(n);
        e[j] = 1;
        auto col = solve_linear(a, std::move(e));
        for (int i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

/// Positive definiteness of a symmetric matrix via elimination pivots.
inline bool is_positive_definite(const RatMatrix& a) {
    const int n = a.rows();
    RatMatrix m = a;
    for (int k = 0; k < n; ++k) {
        if (m(k, k) <= Rat(0)) return false;
        for (int i = k + 1; i < n; ++i) {
            const Rat f = m(i, k) / m(k, k);
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return true;
}

}  // namespace orbitope
