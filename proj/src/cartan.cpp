#include <orbitope/cartan.hpp>

#include <cctype>
#include <stdexcept>

namespace orbitope {

namespace {

void check_rank(char family, int rank) {
    bool ok = false;
    switch (family) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 2; break;
        case 'C': ok = rank >= 3; break;
        case 'D': ok = rank >= 4; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: break;
    }
    if (!ok)
        throw std::invalid_argument("invalid Cartan type " + std::string(1, family) +
                                    std::to_string(rank));
}

}  // namespace

CartanType::CartanType(char f, int r) : family(static_cast<char>(std::toupper(f))), rank(r) {
    check_rank(family, rank);
}

CartanType CartanType::parse(std::string_view s) {
    if (s.size() < 2) throw std::invalid_argument("cannot parse Cartan type '" + std::string(s) + "'");
    const char fam = static_cast<char>(std::toupper(s[0]));
    int rank = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("cannot parse Cartan type '" + std::string(s) + "'");
        rank = rank * 10 + (s[i] - '0');
    }
    return CartanType(fam, rank);
}

IntMatrix cartan_matrix(const CartanType& type) {
    const int n = type.rank;
    IntMatrix a(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };

    switch (type.family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':
            // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[n - 1][n - 2] = -2;
            break;
        case 'C':
            // alpha_n long, the others short.
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[n - 2][n - 1] = -2;
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'E':
            // Bourbaki numbering: chain 1-3-4-5-...-n with node 2 attached to 4.
            link(0, 2);
            link(2, 3);
            link(1, 3);
            for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'F':
            link(0, 1);
            link(1, 2);
            link(2, 3);
            a[2][1] = -2;  // alpha_3, alpha_4 short
            break;
        case 'G':
            // alpha_1 short, alpha_2 long.
            a[0][1] = -3;
            a[1][0] = -1;
            break;
        default:
            throw std::invalid_argument("unknown family");
    }
    return a;
}

std::vector<Rat> symmetrizers(const IntMatrix& cartan) {
    const int n = static_cast<int>(cartan.size());
    // d_j / d_i = a_ij / a_ji on edges; propagate over the Dynkin graph,
    // then rescale so max d = 1.
    std::vector<Rat> d(n, 0);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (i == j || cartan[i][j] == 0 || d[j] != 0) continue;
                d[j] = d[i] * Rat(cartan[i][j]) / Rat(cartan[j][i]);
                stack.push_back(j);
            }
        }
    }
    Rat dmax = d[0];
    for (const auto& x : d) dmax = std::max(dmax, x);
    for (auto& x : d) x /= dmax;
    return d;
}

bool is_finite_type_cartan(const IntMatrix& cartan) {
    const int n = static_cast<int>(cartan.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(cartan[i].size()) != n) return false;
        if (cartan[i][i] != 2) return false;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan[i][j] > 0) return false;
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0)) return false;
        }
    }
    const auto d = symmetrizers(cartan);
    RatMatrix sym(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sym(i, j) = d[i] * Rat(cartan[i][j]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sym(i, j) != sym(j, i)) return false;
    return is_positive_definite(sym);
}

long long weyl_group_order(const CartanType& type) {
    const int n = type.rank;
    auto fact = [](long long m) {
        long long f = 1;
        for (long long i = 2; i <= m; ++i) f *= i;
        return f;
    };
    switch (type.family) {
        case 'A': return fact(n + 1);
        case 'B':
        case 'C': return fact(n) << n;
        case 'D': return fact(n) << (n - 1);
        case 'G': return 12;
        case 'F': return 1152;
        case 'E':
            if (n == 6) return 51840;
            if (n == 7) return 2903040;
            return 696729600;
        default: throw std::invalid_argument("unknown family");
    }
}

}  // namespace orbitope
