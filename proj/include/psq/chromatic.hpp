#ifndef PSQ_CHROMATIC_HPP
#define PSQ_CHROMATIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "psq/arith.hpp"
#include "psq/common.hpp"

namespace psq::chromatic {

// Unbounded-knapsack minimum summand counts: r[n] is the least number of
// elements of S (with repetition) summing to n, with sentinel n_max + 1 for
// unrepresentable n.  O(n_max |S|) time, O(n_max) space.
std::vector<std::uint32_t> min_reps(const std::vector<u64>& S, u64 n_max);

struct HypothesisCheck {
    bool pass = false;
    double lhs = 0.0;
    double rhs = 0.0;
};

// The finite-addition check: hypotheses (N >= 72D + 12, six-fold energy at
// most |S|^12 D / (3N), an element coprime to all primes <= ceil(6D)), then
// the conclusion that every n in [n0, n0 + window] with n0 = 30N(2 ceil(6D)+1)
// is a sum of at most n/N elements of S.
struct SarkozyReport {
    u64 N = 0;
    double D = 1.0;
    HypothesisCheck size_hypothesis;      // N >= 72D + 12
    HypothesisCheck energy_hypothesis;    // e6(S) <= |S|^12 D / (3N)
    HypothesisCheck coprime_hypothesis;   // some p > ceil(6D)
    bool hypotheses_pass = false;
    bool conclusion_checked = false;
    u64 n0 = 0;
    u64 window = 0;
    std::vector<u64> failures;  // n in the window with min count > n/N
    bool all_pass = false;

    nlohmann::json to_json() const;
};

SarkozyReport sarkozy_check(const arith::PrimeSquareSet& S, double D, u64 window);

// Least D >= 1 satisfying the energy hypothesis: max(1, 3N e6(S) / |S|^12).
double derive_D_from_energy(const arith::PrimeSquareSet& S);

// Symbolic chaining report: whether the covered interval
// I(N) = ((288 D(N) + 72) N, (288 D(N) + 73) N] meets I(N+1) for the given
// cap values, so consecutive windows tile once the caps stabilize.
struct ChainingReport {
    double lo_n = 0.0, hi_n = 0.0;
    double lo_next = 0.0, hi_next = 0.0;
    bool overlaps = false;
};

ChainingReport chaining_overlap(u64 N, double D_n, double D_next);

enum class ColoringStrategy { round_robin, uniform_random, congruence_class };

const char* to_string(ColoringStrategy s);
ColoringStrategy coloring_strategy_from(const std::string& name);

// Assignment of every prime square <= X to one of K colour classes.
struct Coloring {
    int K = 1;
    ColoringStrategy strategy = ColoringStrategy::round_robin;
    u64 seed = 0;
    std::vector<u64> squares;   // ascending
    std::vector<int> colour;    // colour[i] in [0, K)

    std::vector<std::vector<u64>> classes() const;
};

Coloring build_coloring(int K, u64 X, ColoringStrategy strategy, u64 seed);

// Estimate of the monochromatic representation order on the finite window
// [X/2, X/2 + window]: the worst over the window of the best per-colour
// minimal representation count.  Unrepresentable n make the estimate a lower
// bound and are reported.
struct SkEstimate {
    int K = 1;
    u64 X = 0;
    ColoringStrategy strategy = ColoringStrategy::round_robin;
    u64 seed = 0;
    u64 window_lo = 0;
    u64 window_hi = 0;
    bool finite = true;
    u64 s = 0;  // max over represented n; lower bound when !finite
    std::vector<u64> failures;

    nlohmann::json to_json() const;
};

SkEstimate estimate_sK(int K, u64 X, ColoringStrategy strategy, u64 seed, u64 window);

}  // namespace psq::chromatic

#endif
