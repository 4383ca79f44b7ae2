#include "psq/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace psq::extremal {

CappedSimplexSpec::CappedSimplexSpec(int n_, double P_, double D_) : n(n_), P(P_), D(D_) {
    if (n < 1) throw std::invalid_argument("CappedSimplexSpec: n must be >= 1");
    if (!(P > 0.0) || !(D > 0.0))
        throw std::invalid_argument("CappedSimplexSpec: P and D must be positive");
    if (static_cast<double>(n) * D < P)
        throw std::invalid_argument("CappedSimplexSpec: empty polytope (nD < P)");
}

bool is_feasible(const std::vector<double>& x, const CappedSimplexSpec& spec, double tol) {
    if (static_cast<int>(x.size()) != spec.n) return false;
    double mass = 0.0;
    for (double v : x) {
        if (v < -tol || v > spec.D + tol) return false;
        mass += v;
    }
    return std::abs(mass - spec.P) <= tol * std::max(1.0, spec.P);
}

bool is_extreme_point(const ExtremePoint& pt, const CappedSimplexSpec& spec, double tol) {
    if (!is_feasible(pt.coords, spec, tol)) return false;
    int interior = 0, nonzero = 0;
    for (double v : pt.coords) {
        if (v > tol * spec.D) ++nonzero;
        if (v > tol * spec.D && v < spec.D * (1.0 - tol)) ++interior;
    }
    if (interior > 1) return false;
    double m = static_cast<double>(nonzero);
    double slack = tol * std::max(1.0, spec.P);
    return m * spec.D >= spec.P - slack && spec.P > (m - 1.0) * spec.D - slack;
}

ExtremePoint greedy_linear_max(const std::vector<double>& coeffs, const CappedSimplexSpec& spec) {
    if (static_cast<int>(coeffs.size()) != spec.n)
        throw std::invalid_argument("greedy_linear_max: coefficient count mismatch");
    std::vector<int> order(spec.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return coeffs[a] > coeffs[b]; });
    ExtremePoint pt;
    pt.coords.assign(spec.n, 0.0);
    double remaining = spec.P;
    for (int i : order) {
        if (remaining <= 0.0) break;
        double take = std::min(spec.D, remaining);
        pt.coords[i] = take;
        remaining -= take;
    }
    return pt;
}

double bilinear_value(const BilinearOracle& alpha, int n, const std::vector<double>& x,
                      const std::vector<double>& y) {
    kahan_sum total;
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0.0) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j] == 0.0) continue;
            total.add(alpha(i, j) * x[i] * y[j]);
        }
    }
    return total.value();
}

AscendResult bilinear_ascend(const BilinearOracle& alpha, const CappedSimplexSpec& spec,
                             const std::vector<double>& x0) {
    if (!is_feasible(x0, spec))
        throw std::invalid_argument("bilinear_ascend: x0 is not feasible");
    std::vector<double> ycoeffs(spec.n, 0.0);
    for (int j = 0; j < spec.n; ++j) {
        kahan_sum s;
        for (int i = 0; i < spec.n; ++i)
            if (x0[i] != 0.0) s.add(alpha(i, j) * x0[i]);
        ycoeffs[j] = s.value();
    }
    AscendResult res;
    res.y_star = greedy_linear_max(ycoeffs, spec);

    std::vector<double> xcoeffs(spec.n, 0.0);
    for (int i = 0; i < spec.n; ++i) {
        kahan_sum s;
        for (int j = 0; j < spec.n; ++j)
            if (res.y_star.coords[j] != 0.0) s.add(alpha(i, j) * res.y_star.coords[j]);
        xcoeffs[i] = s.value();
    }
    res.x_star = greedy_linear_max(xcoeffs, spec);
    res.value = bilinear_value(alpha, spec.n, res.x_star.coords, res.y_star.coords);
    return res;
}

WeightedReduction reduce_weighted_count(const std::vector<double>& multiplicities, double D,
                                        const PairPredicate& alpha) {
    if (multiplicities.empty())
        throw std::invalid_argument("reduce_weighted_count: empty class list");
    double P = 0.0;
    for (double v : multiplicities) {
        if (v < 0.0 || v > D * (1.0 + 1e-12))
            throw std::invalid_argument("reduce_weighted_count: multiplicity outside [0, D]");
        P += v;
    }
    if (!(P > 0.0)) throw std::invalid_argument("reduce_weighted_count: zero total mass");

    CappedSimplexSpec spec(static_cast<int>(multiplicities.size()), P, D);
    auto oracle = [&](int i, int j) {
        return alpha(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) ? 1.0 : 0.0;
    };
    AscendResult asc = bilinear_ascend(oracle, spec, multiplicities);

    WeightedReduction red;
    for (std::size_t i = 0; i < asc.x_star.coords.size(); ++i)
        if (asc.x_star.coords[i] > 0.0) red.support_x.push_back(i);
    for (std::size_t j = 0; j < asc.y_star.coords.size(); ++j)
        if (asc.y_star.coords[j] > 0.0) red.support_y.push_back(j);

    double mx = static_cast<double>(red.support_x.size());
    if (!(mx * D >= P * (1.0 - 1e-9) && P > (mx - 1.0) * D - 1e-9 * std::max(1.0, P)))
        throw std::logic_error("reduce_weighted_count: support size invariant violated");

    for (std::size_t a : red.support_x)
        for (std::size_t b : red.support_y)
            if (alpha(a, b)) ++red.passing_pairs;
    red.bound = 4.0 * static_cast<double>(red.passing_pairs) * P * P /
                (mx * static_cast<double>(red.support_y.size()));
    return red;
}

}  // namespace psq::extremal
