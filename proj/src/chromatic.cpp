#include "psq/chromatic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "psq/energy.hpp"

namespace psq::chromatic {

namespace {

constexpr double kDpBudget = 2e9;  // n_max * |S| cell limit

}  // namespace

std::vector<std::uint32_t> min_reps(const std::vector<u64>& S, u64 n_max) {
    if (n_max + 1 > std::numeric_limits<std::uint32_t>::max() - 1)
        throw budget_error("min_reps: n_max out of range for 32-bit counts");
    if (static_cast<double>(n_max) * static_cast<double>(std::max<std::size_t>(S.size(), 1)) >
        kDpBudget)
        throw budget_error("min_reps: n_max * |S| exceeds the DP budget");
    const std::uint32_t inf = static_cast<std::uint32_t>(n_max) + 1;
    std::vector<std::uint32_t> r(n_max + 1, inf);
    r[0] = 0;
    for (u64 n = 1; n <= n_max; ++n) {
        std::uint32_t best = inf;
        for (u64 s : S) {
            if (s == 0) throw std::invalid_argument("min_reps: elements must be positive");
            if (s > n) continue;
            std::uint32_t prev = r[n - s];
            if (prev != inf && prev + 1 < best) best = prev + 1;
        }
        r[n] = best;
    }
    return r;
}

nlohmann::json SarkozyReport::to_json() const {
    auto hyp = [](const HypothesisCheck& h) {
        return nlohmann::json{{"pass", h.pass}, {"lhs", h.lhs}, {"rhs", h.rhs}};
    };
    return {{"schema", 1},
            {"N", N},
            {"D", D},
            {"size_hypothesis", hyp(size_hypothesis)},
            {"energy_hypothesis", hyp(energy_hypothesis)},
            {"coprime_hypothesis", hyp(coprime_hypothesis)},
            {"hypotheses_pass", hypotheses_pass},
            {"conclusion_checked", conclusion_checked},
            {"n0", n0},
            {"window", window},
            {"failures", failures},
            {"all_pass", all_pass}};
}

SarkozyReport sarkozy_check(const arith::PrimeSquareSet& S, double D, u64 window) {
    if (S.empty()) throw std::invalid_argument("sarkozy_check: empty set");
    if (!(D >= 1.0)) throw std::invalid_argument("sarkozy_check: D must be >= 1");
    SarkozyReport rep;
    rep.N = S.N;
    rep.D = D;
    rep.window = window;

    rep.size_hypothesis.lhs = static_cast<double>(S.N);
    rep.size_hypothesis.rhs = 72.0 * D + 12.0;
    rep.size_hypothesis.pass = rep.size_hypothesis.lhs >= rep.size_hypothesis.rhs;

    u128 e6 = energy::energy_unweighted(S, 6, energy::Backend::convolution);
    rep.energy_hypothesis.lhs = to_double(e6);
    rep.energy_hypothesis.rhs =
        std::pow(static_cast<double>(S.size()), 12) * D / (3.0 * static_cast<double>(S.N));
    rep.energy_hypothesis.pass = rep.energy_hypothesis.lhs <= rep.energy_hypothesis.rhs;

    u64 bound = static_cast<u64>(std::ceil(6.0 * D));
    rep.coprime_hypothesis.rhs = static_cast<double>(bound);
    u64 best_p = 0;
    for (u64 sq : S.elements) {
        u64 p = isqrt_u64(sq);
        best_p = std::max(best_p, p);
    }
    rep.coprime_hypothesis.lhs = static_cast<double>(best_p);
    rep.coprime_hypothesis.pass = best_p > bound;

    rep.hypotheses_pass = rep.size_hypothesis.pass && rep.energy_hypothesis.pass &&
                          rep.coprime_hypothesis.pass;
    if (!rep.hypotheses_pass) {
        rep.all_pass = false;
        return rep;
    }

    rep.n0 = 30 * S.N * (2 * bound + 1);
    rep.conclusion_checked = true;
    auto r = min_reps(S.elements, rep.n0 + window);
    const std::uint32_t inf = static_cast<std::uint32_t>(rep.n0 + window) + 1;
    for (u64 n = rep.n0; n <= rep.n0 + window; ++n) {
        u64 budget = n / S.N;
        if (r[n] == inf || r[n] > budget) rep.failures.push_back(n);
    }
    rep.all_pass = rep.failures.empty();
    return rep;
}

double derive_D_from_energy(const arith::PrimeSquareSet& S) {
    if (S.empty()) throw std::invalid_argument("derive_D_from_energy: empty set");
    u128 e6 = energy::energy_unweighted(S, 6, energy::Backend::convolution);
    double ratio = 3.0 * static_cast<double>(S.N) * to_double(e6) /
                   std::pow(static_cast<double>(S.size()), 12);
    // Nudged past the rounding grain so recomputing the hypothesis from this
    // D cannot land an ulp below equality.
    return std::max(1.0, ratio * (1.0 + 1e-12));
}

ChainingReport chaining_overlap(u64 N, double D_n, double D_next) {
    if (!(D_n >= 1.0) || !(D_next >= 1.0))
        throw std::invalid_argument("chaining_overlap: caps must be >= 1");
    ChainingReport rep;
    rep.lo_n = (288.0 * D_n + 72.0) * static_cast<double>(N);
    rep.hi_n = (288.0 * D_n + 73.0) * static_cast<double>(N);
    rep.lo_next = (288.0 * D_next + 72.0) * static_cast<double>(N + 1);
    rep.hi_next = (288.0 * D_next + 73.0) * static_cast<double>(N + 1);
    rep.overlaps = rep.lo_next < rep.hi_n && rep.hi_next > rep.lo_n;
    return rep;
}

const char* to_string(ColoringStrategy s) {
    switch (s) {
        case ColoringStrategy::round_robin: return "round-robin";
        case ColoringStrategy::uniform_random: return "uniform-random";
        default: return "congruence-class";
    }
}

ColoringStrategy coloring_strategy_from(const std::string& name) {
    if (name == "round-robin") return ColoringStrategy::round_robin;
    if (name == "uniform-random") return ColoringStrategy::uniform_random;
    if (name == "congruence-class") return ColoringStrategy::congruence_class;
    throw std::invalid_argument("unknown colouring strategy: " + name);
}

std::vector<std::vector<u64>> Coloring::classes() const {
    std::vector<std::vector<u64>> cls(K);
    for (std::size_t i = 0; i < squares.size(); ++i) cls[colour[i]].push_back(squares[i]);
    return cls;
}

Coloring build_coloring(int K, u64 X, ColoringStrategy strategy, u64 seed) {
    if (K < 1) throw std::invalid_argument("build_coloring: K must be >= 1");
    Coloring col;
    col.K = K;
    col.strategy = strategy;
    col.seed = seed;
    for (u64 p : arith::sieve_primes(isqrt_u64(X))) col.squares.push_back(p * p);

    switch (strategy) {
        case ColoringStrategy::round_robin:
            for (std::size_t i = 0; i < col.squares.size(); ++i)
                col.colour.push_back(static_cast<int>(i % static_cast<std::size_t>(K)));
            break;
        case ColoringStrategy::uniform_random: {
            std::mt19937_64 rng(seed);
            for (std::size_t i = 0; i < col.squares.size(); ++i)
                col.colour.push_back(static_cast<int>(rng() % static_cast<u64>(K)));
            break;
        }
        case ColoringStrategy::congruence_class: {
            // Colour p^2 by p mod the K-th prime, folded onto [0, K).
            std::vector<u64> primes = arith::sieve_primes(200 + 20 * static_cast<u64>(K));
            while (primes.size() < static_cast<std::size_t>(K))
                primes = arith::sieve_primes(primes.empty() ? 64 : 4 * primes.back());
            u64 kth = primes[static_cast<std::size_t>(K) - 1];
            for (u64 sq : col.squares) {
                u64 p = isqrt_u64(sq);
                col.colour.push_back(static_cast<int>((p % kth) % static_cast<u64>(K)));
            }
            break;
        }
    }
    return col;
}

nlohmann::json SkEstimate::to_json() const {
    nlohmann::json j{{"schema", 1},
                     {"K", K},
                     {"X", X},
                     {"strategy", to_string(strategy)},
                     {"seed", seed},
                     {"window", {{"lo", window_lo}, {"hi", window_hi}}},
                     {"failures", failures}};
    if (finite)
        j["s_estimate"] = s;
    else
        j["s_estimate"] = "infinity";
    return j;
}

SkEstimate estimate_sK(int K, u64 X, ColoringStrategy strategy, u64 seed, u64 window) {
    if (X < 8) throw std::invalid_argument("estimate_sK: X too small to colour");
    Coloring col = build_coloring(K, X, strategy, seed);
    SkEstimate est;
    est.K = K;
    est.X = X;
    est.strategy = strategy;
    est.seed = seed;
    est.window_lo = X / 2;
    est.window_hi = X / 2 + window;

    std::vector<std::vector<std::uint32_t>> tables;
    const std::uint32_t inf = static_cast<std::uint32_t>(est.window_hi) + 1;
    for (const auto& cls : col.classes()) {
        if (cls.empty())
            tables.emplace_back();
        else
            tables.push_back(min_reps(cls, est.window_hi));
    }

    u64 worst = 0;
    for (u64 n = est.window_lo; n <= est.window_hi; ++n) {
        std::uint32_t best = inf;
        for (const auto& table : tables) {
            if (table.empty()) continue;
            best = std::min(best, table[n]);
        }
        if (best == inf)
            est.failures.push_back(n);
        else
            worst = std::max<u64>(worst, best);
    }
    est.finite = est.failures.empty();
    est.s = worst;
    return est;
}

}  // namespace psq::chromatic
