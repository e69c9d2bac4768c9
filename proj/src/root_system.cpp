#include <orbitope/root_system.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace orbitope {

WeightVec operator+(const WeightVec& a, const WeightVec& b) {
    WeightVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

WeightVec operator-(const WeightVec& a, const WeightVec& b) {
    WeightVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

WeightVec operator*(long long c, const WeightVec& a) {
    WeightVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

RootSystem RootSystem::build(const CartanType& type) {
    RootSystem rs = from_cartan(cartan_matrix(type));
    rs.type_ = type;
    return rs;
}

RootSystem RootSystem::from_cartan(IntMatrix cartan) {
    if (!is_finite_type_cartan(cartan))
        throw std::invalid_argument("matrix is not a finite-type Cartan matrix");
    RootSystem rs;
    rs.cartan_ = std::move(cartan);
    rs.rank_ = static_cast<int>(rs.cartan_.size());
    rs.init();
    return rs;
}

void RootSystem::init() {
    const int n = rank_;
    d_ = symmetrizers(cartan_);

    RatMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Rat(cartan_[i][j]);
    cartan_inv_ = invert(a);

    // B(w_i, w_j) = (A^{-1})_{ji} d_j; symmetric since D A is symmetric.
    gram_ = RatMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram_(i, j) = cartan_inv_(j, i) * d_[j];

    simple_roots_.resize(n);
    for (int j = 0; j < n; ++j) {
        WeightVec alpha(n);
        for (int i = 0; i < n; ++i) alpha[i] = cartan_[i][j];
        simple_roots_[j] = std::move(alpha);
    }

    // Positive roots by closure: beta + alpha_i is a root iff the alpha_i
    // string through beta continues upward, i.e. q = p - <beta, alpha_i^vee> > 0
    // where p counts the steps beta - k alpha_i that remain roots.
    std::map<std::vector<long long>, int> seen;  // simple coords -> index
    std::deque<std::vector<long long>> queue;
    for (int j = 0; j < n; ++j) {
        std::vector<long long> c(n, 0);
        c[j] = 1;
        seen.emplace(c, j);
        queue.push_back(std::move(c));
    }
    std::vector<std::vector<long long>> coords(queue.begin(), queue.end());
    while (!queue.empty()) {
        auto beta = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            long long pair = 0;
            for (int j = 0; j < n; ++j) pair += beta[j] * cartan_[i][j];
            long long p = 0;
            {
                auto down = beta;
                while (true) {
                    down[i] -= 1;
                    bool zero = std::all_of(down.begin(), down.end(),
                                            [](long long x) { return x == 0; });
                    if (zero || !seen.count(down)) break;
                    ++p;
                }
            }
            if (p - pair > 0) {
                auto up = beta;
                up[i] += 1;
                if (!seen.count(up)) {
                    seen.emplace(up, static_cast<int>(coords.size()));
                    coords.push_back(up);
                    queue.push_back(std::move(up));
                }
            }
        }
    }

    // Order by height; within a height the lower simple-root indices come
    // first, so the simple roots themselves appear in index order.
    std::sort(coords.begin(), coords.end(), [](const auto& x, const auto& y) {
        long long hx = 0, hy = 0;
        for (auto v : x) hx += v;
        for (auto v : y) hy += v;
        if (hx != hy) return hx < hy;
        return x > y;
    });

    positive_coords_ = std::move(coords);
    positive_roots_.clear();
    for (const auto& c : positive_coords_) {
        WeightVec fw(n, 0);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) fw[i] += c[j] * cartan_[i][j];
        root_set_.insert(fw);
        root_set_.insert(WeightVec(-1 * fw));
        positive_roots_.push_back(std::move(fw));
    }
}

Rat RootSystem::bilinear(const WeightVec& lambda, const WeightVec& mu) const {
    if (static_cast<int>(lambda.size()) != rank_ || static_cast<int>(mu.size()) != rank_)
        throw std::invalid_argument("weight has wrong rank");
    Rat s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (lambda[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) {
            if (mu[j] == 0) continue;
            s += Rat(lambda[i] * mu[j]) * gram_(i, j);
        }
    }
    return s;
}

bool RootSystem::is_root(const WeightVec& alpha) const { return root_set_.count(alpha) > 0; }

long long RootSystem::coroot_pairing(const WeightVec& lambda, const WeightVec& alpha) const {
    if (!is_root(alpha)) throw std::invalid_argument("coroot_pairing: not a root");
    const Rat v = Rat(2) * bilinear(lambda, alpha) / bilinear(alpha, alpha);
    if (v.denominator() != 1)
        throw std::logic_error("coroot pairing is not integral");
    return v.numerator();
}

WeightVec RootSystem::reflect(const WeightVec& lambda, const WeightVec& alpha) const {
    return lambda - coroot_pairing(lambda, alpha) * alpha;
}

WeightVec RootSystem::simple_reflect(int i, const WeightVec& lambda) const {
    // <lambda, alpha_i^vee> = lambda_i in fundamental-weight coordinates.
    WeightVec r = lambda;
    const long long c = lambda[i];
    if (c == 0) return r;
    for (int j = 0; j < rank_; ++j) r[j] -= c * cartan_[j][i];
    return r;
}

std::vector<WeightVec> RootSystem::weyl_orbit(const WeightVec& lambda) const {
    WeightSet seen;
    std::deque<WeightVec> queue;
    seen.insert(lambda);
    queue.push_back(lambda);
    while (!queue.empty()) {
        WeightVec w = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < rank_; ++i) {
            WeightVec r = simple_reflect(i, w);
            if (seen.insert(r).second) queue.push_back(std::move(r));
        }
    }
    std::vector<WeightVec> orbit(seen.begin(), seen.end());
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

bool RootSystem::is_dominant(const WeightVec& lambda) const {
    return std::all_of(lambda.begin(), lambda.end(), [](long long x) { return x >= 0; });
}

std::vector<Rat> RootSystem::to_simple_coords(const WeightVec& lambda) const {
    std::vector<Rat> c(rank_);
    for (int j = 0; j < rank_; ++j) {
        Rat s = 0;
        for (int i = 0; i < rank_; ++i) s += cartan_inv_(j, i) * Rat(lambda[i]);
        c[j] = s;
    }
    return c;
}

std::optional<std::vector<long long>> RootSystem::nonneg_root_coords(const WeightVec& lambda) const {
    auto c = to_simple_coords(lambda);
    std::vector<long long> out(rank_);
    for (int j = 0; j < rank_; ++j) {
        if (c[j].denominator() != 1 || c[j] < 0) return std::nullopt;
        out[j] = c[j].numerator();
    }
    return out;
}

}  // namespace orbitope
