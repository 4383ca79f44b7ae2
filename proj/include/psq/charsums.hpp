#ifndef PSQ_CHARSUMS_HPP
#define PSQ_CHARSUMS_HPP

#include <vector>

#include "psq/arith.hpp"
#include "psq/common.hpp"

namespace psq::charsums {

struct CharParams {
    u64 p;   // odd prime
    i64 c;   // residue class, reduced mod p on entry
    int t;   // even, >= 2
    int k;   // 1 <= k <= t
};

// epsilon_p(x, y) = 1 + legendre(x^2 + y^2 + c, p), in {0, 1, 2}.
int epsilon_p(i64 x, i64 y, i64 c, u64 p);

// The expectation E_p(k, t) over nonzero residue tuples, evaluated in the
// factorized form E_{y_1..y_k}[ (E_x prod_j eps(x, y_j))^t ] at cost
// O(p^(k+1)).  The exact integer numerator over (p-1)^(t+k) is kept so tests
// can compare against naive enumeration without rounding.
struct ScriptE {
    double value = 0.0;
    u128 numerator = 0;
    int denom_pow = 0;  // value = numerator / (p-1)^denom_pow
};

ScriptE script_E_p(const CharParams& params);

// Naive O(p^2t) enumeration of the same expectation, for exact cross-checks
// of the factorized evaluator at small p and t.
ScriptE script_E_p_naive(const CharParams& params);

// Exact left-hand side of the mod-p product inequality: the sum over
// (y_1..y_{t/2}) in G_p^{t/2} and (x_1..x_t) in G_p^t of
// prod (1 + legendre(x_i^2 + y_j^2 + c)).
u128 sumzp_lhs(u64 p, i64 c, int t);

// E_p(t/2, t) <= (p/(p-1))^(2t) * exp(4 t^5 2^t / p), both sides reported.
// The right side overflows double range for larger t, so it is carried in
// log space.
struct ModpBound {
    double lhs = 0.0;
    double log_rhs = 0.0;
    bool pass = false;
};

ModpBound check_modp_bound(u64 p, i64 c, int t);

// |T_c(X, Y)|: pairs (x, y) in X x Y with x^2 + y^2 + c an invertible square
// mod U.  X and Y must consist of units mod U.
u64 count_T_c(const std::vector<u64>& X, const std::vector<u64>& Y, i64 c,
              const arith::PrimorialModulus& m);

// |R_U(Z, c)|: triples (x, y, i) with x^2 + y^2 + c(i) an invertible square
// mod U, counted through class multiplicities mod U.
u64 count_R_U(const std::vector<u64>& Z, const std::vector<i64>& cseq,
              const arith::PrimorialModulus& m);

// The fully explicit intermediate bound
//   (U/phi(U))^2 * (|X||Y|/tau(U)) * exp(3 log A / t + 8 log(50) t^3 2^t loglog A),
// carried in log space (its exponent exceeds double range for every admissible
// scale A).  value() saturates to infinity when exp overflows.
struct HolderBound {
    double log_value = 0.0;
    int t = 2;
    double value() const;
};

HolderBound holder_bound_eq8(double sizeX, double sizeY, const arith::PrimorialModulus& m,
                             double A, int t);
HolderBound holder_bound_eq8_log(double sizeX, double sizeY, const arith::PrimorialModulus& m,
                                 double logA, int t);

// Exponent selection rule: v log 2 = log(log A / (loglog A)^6), t the even
// integer in [v, v+2]; falls back to t = 2 when v < 4.
int select_holder_t(double logA);

}  // namespace psq::charsums

#endif
