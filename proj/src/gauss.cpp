#include "psq/gauss.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace psq::gauss {

namespace {

constexpr u64 kSumBudget = 50'000'000;

// e(j/q) for 0 <= j < q, from exactly reduced residues.
std::vector<std::complex<double>> unit_roots(u64 q) {
    std::vector<std::complex<double>> roots(q);
    for (u64 j = 0; j < q; ++j) {
        double arg = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(q);
        roots[j] = {std::cos(arg), std::sin(arg)};
    }
    return roots;
}

}  // namespace

std::complex<double> v_q(const VqParams& params) {
    const u64 q = params.q;
    if (q < 1) throw std::invalid_argument("v_q: q must be >= 1");
    if (q > kSumBudget) throw budget_error("v_q: q exceeds the summation budget");
    if (params.W == 0 || params.W % 2 != 0)
        throw std::invalid_argument("v_q: W must be a positive even integer");
    if (gcd_u64(mod_i64(params.a, q), q) != 1)
        throw std::invalid_argument("v_q: a must be coprime to q");
    if (gcd_u64(params.r % params.W, params.W) != 1)
        throw std::invalid_argument("v_q: r must be coprime to W");

    // (r + mW, qW) = 1 reduces to (r + mW, q) = 1 because (r, W) = 1, so the
    // whole sum lives on residues mod q.
    const u64 wq = params.W % q;
    const u64 rq = params.r % q;
    const u64 aq = mod_i64(params.a, q);
    auto roots = unit_roots(q);
    std::complex<double> sum = 0.0;
    for (u64 m = 0; m < q; ++m) {
        u64 rho = (rq + m * wq % q) % q;
        if (gcd_u64(rho, q) != 1) continue;
        sum += roots[aq * (rho * rho % q) % q];
    }
    return sum;
}

std::complex<double> quad_gauss_units(i64 a, u64 V) {
    if (V < 1) throw std::invalid_argument("quad_gauss_units: V must be >= 1");
    if (V > kSumBudget) throw budget_error("quad_gauss_units: V exceeds the summation budget");
    const u64 av = mod_i64(a, V);
    if (gcd_u64(av, V) != 1) throw std::invalid_argument("quad_gauss_units: a must be coprime to V");
    auto roots = unit_roots(V);
    std::complex<double> sum = 0.0;
    for (u64 x = 0; x < V; ++x) {
        if (gcd_u64(x, V) != 1) continue;
        sum += roots[av * (x * x % V) % V];
    }
    return sum;
}

FactorSplit factor_split_check(i64 c0, i64 c1, i64 c2, u64 d1, u64 d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("factor_split_check: d1, d2 must be >= 1");
    const u64 d = d1 * d2;
    if (d > kSumBudget) throw budget_error("factor_split_check: d exceeds the summation budget");
    if (mod_i64(c0, d2) != 0)
        throw std::invalid_argument("factor_split_check: d2 must divide c0");

    const u64 a0 = mod_i64(c0, d), a1 = mod_i64(c1, d), a2 = mod_i64(c2, d);
    auto roots = unit_roots(d);
    auto poly = [&](u64 m) {
        u64 v = (a0 * (m * m % d) % d + a1 * m % d + a2) % d;
        return roots[v];
    };

    FactorSplit out;
    out.lhs = 0.0;
    for (u64 m = 0; m < d; ++m) out.lhs += poly(m);

    std::complex<double> first = 0.0;
    for (u64 m1 = 0; m1 < d1; ++m1) first += poly(m1);
    auto roots2 = unit_roots(d2);
    const u64 c1d2 = mod_i64(c1, d2);
    std::complex<double> second = 0.0;
    for (u64 m2 = 0; m2 < d2; ++m2) second += roots2[c1d2 * m2 % d2];
    out.rhs = first * second;
    return out;
}

const char* to_string(VqClass c) {
    switch (c) {
        case VqClass::MustVanish: return "must_vanish";
        case VqClass::ClosedForm: return "closed_form";
        default: return "general";
    }
}

VqClass vq_vanishing_predict(u64 q, const arith::PrimorialModulus& m) {
    if (q < 1) throw std::invalid_argument("vq_vanishing_predict: q must be >= 1");
    if (m.divides_two_W(q)) return VqClass::ClosedForm;
    if (m.is_smooth(q)) return VqClass::MustVanish;
    return VqClass::General;
}

double phi_qw(u64 q, const arith::PrimorialModulus& m) {
    // phi(qW) = qW * prod over distinct primes of qW of (1 - 1/p).
    double value = static_cast<double>(q) * m.W().get_d();
    for (u64 p : m.primes()) value *= 1.0 - 1.0 / static_cast<double>(p);
    u64 rest = q;
    for (u64 p : m.primes())
        while (rest % p == 0) rest /= p;
    for (u64 p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            value *= 1.0 - 1.0 / static_cast<double>(p);
            while (rest % p == 0) rest /= p;
        }
    }
    if (rest > 1) value *= 1.0 - 1.0 / static_cast<double>(rest);
    return value;
}

VqRatio vq_ratio(const VqParams& params, const arith::PrimorialModulus& m) {
    VqRatio out;
    out.ratio = std::abs(v_q(params)) / phi_qw(params.q, m);
    double phiW = m.phi_W().get_d();
    out.comparator =
        1.0 / (phiW * std::pow(static_cast<double>(m.smoothness()), 97.0 / 200.0));
    return out;
}

}  // namespace psq::gauss
