#include "psq/energy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <unordered_map>

namespace psq::energy {

namespace {

constexpr double kOracleBudget = 1e9;      // |S|^(2k) tuple limit
constexpr i64 kDenseSpanBudget = 1 << 27;  // dense lattice width limit

void check_table_budget(const arith::PrimeSquareSet& S, int k, bool weighted) {
    if (k < 1) throw std::invalid_argument("rep_counts: k must be >= 1");
    if (S.empty()) return;
    if (!weighted && k * std::log2(static_cast<double>(S.size())) >= 63.0)
        throw budget_error("rep_counts: unweighted counts would overflow 64-bit accumulators");
}

// Chooses the sparse map below a 1/64 fill ratio of the final span.
bool use_sparse(const arith::PrimeSquareSet& S, int k) {
    if (S.empty()) return true;
    i64 span = static_cast<i64>(k) * static_cast<i64>(S.elements.back() - S.elements.front()) + 1;
    double tuples = std::pow(static_cast<double>(S.size()), k);
    double fill = std::min(tuples, static_cast<double>(span)) / static_cast<double>(span);
    if (fill >= 1.0 / 64.0) {
        if (span > kDenseSpanBudget)
            throw budget_error("rep_counts: dense lattice span exceeds budget");
        return false;
    }
    return true;
}

template <typename T>
std::vector<std::pair<i64, T>> fold_sparse(const arith::PrimeSquareSet& S, int k, bool weighted) {
    std::map<i64, T> cur;
    for (std::size_t i = 0; i < S.size(); ++i)
        cur[static_cast<i64>(S.elements[i])] += weighted ? static_cast<T>(S.weights[i]) : T(1);
    for (int fold = 1; fold < k; ++fold) {
        std::map<i64, T> next;
        for (const auto& [n, c] : cur)
            for (std::size_t i = 0; i < S.size(); ++i) {
                T w = weighted ? static_cast<T>(S.weights[i]) : T(1);
                next[n + static_cast<i64>(S.elements[i])] += c * w;
            }
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

template <typename T>
std::vector<std::pair<i64, T>> fold_dense(const arith::PrimeSquareSet& S, int k, bool weighted) {
    const i64 lo1 = static_cast<i64>(S.elements.front());
    const i64 hi1 = static_cast<i64>(S.elements.back());
    std::vector<T> cur(static_cast<std::size_t>(hi1 - lo1 + 1), T(0));
    for (std::size_t i = 0; i < S.size(); ++i)
        cur[S.elements[i] - static_cast<u64>(lo1)] += weighted ? static_cast<T>(S.weights[i]) : T(1);
    i64 lo = lo1;
    for (int fold = 1; fold < k; ++fold) {
        std::vector<T> next(cur.size() + static_cast<std::size_t>(hi1 - lo1), T(0));
        for (std::size_t j = 0; j < cur.size(); ++j) {
            if (cur[j] == T(0)) continue;
            for (std::size_t i = 0; i < S.size(); ++i) {
                T w = weighted ? static_cast<T>(S.weights[i]) : T(1);
                next[j + (S.elements[i] - static_cast<u64>(lo1))] += cur[j] * w;
            }
        }
        cur = std::move(next);
        lo += lo1;
    }
    std::vector<std::pair<i64, T>> out;
    for (std::size_t j = 0; j < cur.size(); ++j)
        if (cur[j] != T(0)) out.emplace_back(lo + static_cast<i64>(j), cur[j]);
    return out;
}

template <typename T>
std::vector<std::pair<i64, T>> fold(const arith::PrimeSquareSet& S, int k, bool weighted) {
    if (S.empty()) return {};
    return use_sparse(S, k) ? fold_sparse<T>(S, k, weighted) : fold_dense<T>(S, k, weighted);
}

void check_oracle_budget(const arith::PrimeSquareSet& S, int k) {
    double tuples = std::pow(static_cast<double>(S.size()), 2 * k);
    if (tuples > kOracleBudget)
        throw budget_error("additive energy oracle: |S|^(2k) exceeds the enumeration budget");
}

// Literal walk over all |S|^(2k) ordered tuples with an incrementally
// maintained signed sum difference; the weight product is only assembled on
// the rare tuples whose two halves balance.
template <bool Weighted, typename Acc>
Acc oracle_enumerate(const arith::PrimeSquareSet& S, int k) {
    const std::size_t sz = S.size();
    const int slots = 2 * k;
    std::vector<std::size_t> idx(slots, 0);
    i64 diff = 0;  // all slots start at element 0, halves cancel
    Acc total = 0;
    kahan_sum wtotal;
    while (true) {
        if (diff == 0) {
            if constexpr (Weighted) {
                double prod = 1.0;
                for (int s = 0; s < slots; ++s) prod *= S.weights[idx[s]];
                wtotal.add(prod);
            } else {
                total += 1;
            }
        }
        int pos = 0;
        while (pos < slots) {
            i64 sign = pos < k ? 1 : -1;
            diff -= sign * static_cast<i64>(S.elements[idx[pos]]);
            if (++idx[pos] == sz) {
                idx[pos] = 0;
                diff += sign * static_cast<i64>(S.elements[0]);
                ++pos;
            } else {
                diff += sign * static_cast<i64>(S.elements[idx[pos]]);
                break;
            }
        }
        if (pos == slots) break;
    }
    if constexpr (Weighted) return wtotal.value();
    return total;
}

}  // namespace

u64 RepCountTable::total_mass_u() const {
    u64 t = 0;
    for (const auto& [n, c] : ucounts) t += c;
    return t;
}

double RepCountTable::total_mass_w() const {
    kahan_sum t;
    for (const auto& [n, c] : wcounts) t.add(c);
    return t.value();
}

void RepCountTable::write_csv(std::ostream& os) const {
    os << "n,count\n";
    if (weighted)
        for (const auto& [n, c] : wcounts) os << n << "," << c << "\n";
    else
        for (const auto& [n, c] : ucounts) os << n << "," << c << "\n";
}

nlohmann::json RepCountTable::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    if (weighted)
        for (const auto& [n, c] : wcounts) rows.push_back({{"n", n}, {"count", c}});
    else
        for (const auto& [n, c] : ucounts) rows.push_back({{"n", n}, {"count", c}});
    return {{"k", k}, {"weighted", weighted}, {"counts", rows}};
}

RepCountTable rep_counts(const arith::PrimeSquareSet& S, int k, bool weighted) {
    check_table_budget(S, k, weighted);
    RepCountTable t;
    t.k = k;
    t.weighted = weighted;
    if (weighted)
        t.wcounts = fold<double>(S, k, true);
    else
        t.ucounts = fold<u64>(S, k, false);
    return t;
}

u128 energy_unweighted(const arith::PrimeSquareSet& S, int k, Backend backend) {
    if (k < 1) throw std::invalid_argument("energy: k must be >= 1");
    if (S.empty()) return 0;
    if (backend == Backend::oracle) {
        check_oracle_budget(S, k);
        return oracle_enumerate<false, u128>(S, k);
    }
    if (2 * k * std::log2(static_cast<double>(S.size())) >= 126.0)
        throw budget_error("energy: |S|^(2k) would overflow the 128-bit accumulator");
    u128 e = 0;
    for (const auto& [n, c] : rep_counts(S, k, false).ucounts) e += u128(c) * c;
    return e;
}

double energy_weighted(const arith::PrimeSquareSet& S, int k, Backend backend) {
    if (k < 1) throw std::invalid_argument("energy: k must be >= 1");
    if (S.empty()) return 0.0;
    if (backend == Backend::oracle) {
        check_oracle_budget(S, k);
        return oracle_enumerate<true, double>(S, k);
    }
    kahan_sum e;
    for (const auto& [n, c] : rep_counts(S, k, true).wcounts) e.add(c * c);
    return e.value();
}

MomentEleven moment_eleven(const arith::PrimeSquareSet& S) {
    MomentEleven m;
    if (S.empty()) return m;
    double maxw = *std::max_element(S.weights.begin(), S.weights.end());
    m.majorant = static_cast<double>(S.size()) * maxw * energy_weighted(S, 5, Backend::convolution);
    auto w6 = rep_counts(S, 6, true).wcounts;
    auto w5 = rep_counts(S, 5, true).wcounts;
    kahan_sum pairing;
    std::size_t j = 0;
    for (const auto& [n, c] : w6) {
        while (j < w5.size() && w5[j].first < n) ++j;
        if (j < w5.size() && w5[j].first == n) pairing.add(c * w5[j].second);
    }
    m.pairing = pairing.value();
    return m;
}

}  // namespace psq::energy
