#ifndef PSQ_EXTREMAL_HPP
#define PSQ_EXTREMAL_HPP

#include <functional>
#include <vector>

#include "psq/common.hpp"

namespace psq::extremal {

// The capped simplex K: sum x_i = P, 0 <= x_i <= D.  Empty specs (nD < P)
// are rejected at construction.
struct CappedSimplexSpec {
    int n;
    double P;
    double D;

    CappedSimplexSpec(int n_, double P_, double D_);
};

struct ExtremePoint {
    std::vector<double> coords;
};

// Checks the three extreme-point invariants: mass P, box constraints, at
// most one coordinate strictly inside (0, D), and m*D >= P > (m-1)*D for
// m = #nonzero coordinates.
bool is_extreme_point(const ExtremePoint& pt, const CappedSimplexSpec& spec, double tol = 1e-9);

bool is_feasible(const std::vector<double>& x, const CappedSimplexSpec& spec, double tol = 1e-9);

// Maximizes sum coeffs_i x_i over K: assigns D along descending coefficients
// (ties to the lower index) until the mass is spent, with at most one
// fractional remainder coordinate.
ExtremePoint greedy_linear_max(const std::vector<double>& coeffs, const CappedSimplexSpec& spec);

using BilinearOracle = std::function<double(int, int)>;

struct AscendResult {
    ExtremePoint x_star;
    ExtremePoint y_star;
    double value = 0.0;
};

double bilinear_value(const BilinearOracle& alpha, int n, const std::vector<double>& x,
                      const std::vector<double>& y);

// Two-step ascent: y* maximizes f(x0, .), then x* maximizes f(., y*), so
// f(x0, x0) <= f(x0, y*) <= f(x*, y*).
AscendResult bilinear_ascend(const BilinearOracle& alpha, const CappedSimplexSpec& spec,
                             const std::vector<double>& x0);

// The weight-reduction chain: replaces class multiplicities m(a) (mass P,
// cap D) by extreme points, reads off the supports X and Y, counts passing
// pairs T on X x Y, and returns the bound 4 T P^2 / (|X||Y|).
struct WeightedReduction {
    std::vector<std::size_t> support_x;  // indices into the class list
    std::vector<std::size_t> support_y;
    u64 passing_pairs = 0;
    double bound = 0.0;
};

using PairPredicate = std::function<bool(std::size_t, std::size_t)>;

WeightedReduction reduce_weighted_count(const std::vector<double>& multiplicities, double D,
                                        const PairPredicate& alpha);

}  // namespace psq::extremal

#endif
