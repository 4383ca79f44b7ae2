#ifndef PSQ_GAUSS_HPP
#define PSQ_GAUSS_HPP

#include <complex>

#include "psq/arith.hpp"
#include "psq/common.hpp"

namespace psq::gauss {

// V_q(a, r) = sum over 0 <= m < q with (r + mW, qW) = 1 of e(a (r+mW)^2 / q).
// Requires gcd(a, q) = 1 and gcd(r, W) = 1, W even.
struct VqParams {
    u64 q;
    i64 a;
    u64 r;
    u64 W;
};

std::complex<double> v_q(const VqParams& params);

// sum over 0 <= x < V, (x, V) = 1 of e(a x^2 / V); gcd(a, V) = 1.
std::complex<double> quad_gauss_units(i64 a, u64 V);

// Both sides of the quadratic-sum factorization for P(z) = c0 z^2 + c1 z + c2
// and d = d1 d2 with d2 | c0:
//   sum_{m < d} e(P(m)/d)  vs  (sum_{m1 < d1} e(P(m1)/d)) (sum_{m2 < d2} e(c1 m2 / d2)).
struct FactorSplit {
    std::complex<double> lhs;
    std::complex<double> rhs;
};

FactorSplit factor_split_check(i64 c0, i64 c1, i64 c2, u64 d1, u64 d2);

// Size law classification: ClosedForm when q | 2W (V_q = q e(a r^2 / q)),
// MustVanish when q does not divide 2W but is w-smooth, General otherwise.
enum class VqClass { MustVanish, ClosedForm, General };

const char* to_string(VqClass c);

VqClass vq_vanishing_predict(u64 q, const arith::PrimorialModulus& m);

// |V_q(a,r)| / phi(qW) next to the comparison quantity 1/(phi(W) w^{97/200});
// diagnostic only.
struct VqRatio {
    double ratio;
    double comparator;
};

VqRatio vq_ratio(const VqParams& params, const arith::PrimorialModulus& m);

// phi(q W) as a double, from the factorization of q and the primes of W.
double phi_qw(u64 q, const arith::PrimorialModulus& m);

}  // namespace psq::gauss

#endif
