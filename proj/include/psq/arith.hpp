#ifndef PSQ_ARITH_HPP
#define PSQ_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "psq/common.hpp"

namespace psq::arith {

// Primes in [2, x], ascending. x < 2 gives an empty sequence.
std::vector<u64> sieve_primes(u64 x);

bool is_prime_u64(u64 n);

// Legendre symbol (x|p) in {-1, 0, +1} by Euler's criterion.
// p must be an odd prime; anything else is rejected.
int legendre(i64 x, u64 p);

// U = prod of primes <= w, with the per-prime residue machinery needed by the
// CRT predicates. U, phi(U), tau(U) and W = 2U are held exactly.
class PrimorialModulus {
public:
    explicit PrimorialModulus(u64 w);

    // w = floor(A^25). Rejects scales whose sieve would exceed the desk budget.
    static PrimorialModulus for_scale(double A);

    u64 smoothness() const { return w_; }
    const std::vector<u64>& primes() const { return primes_; }
    const mpz_class& U() const { return U_; }
    const mpz_class& phi_U() const { return phiU_; }
    const mpz_class& tau_U() const { return tauU_; }
    const mpz_class& W() const { return W_; }
    mpz_class two_W() const { return 2 * W_; }
    // phi(W) = phi(2U) = 2*phi(U) since U is even.
    mpz_class phi_W() const { return 2 * phiU_; }

    // Checked narrowing for the set-enumeration operations.
    u64 u64_U() const;
    u64 u64_W() const;

    // U/phi(U) = prod p/(p-1) over p <= w.
    double unit_density_inv() const;

    bool divides_two_W(u64 q) const;
    bool is_smooth(u64 q) const;  // every prime factor <= w

private:
    u64 w_;
    std::vector<u64> primes_;
    mpz_class U_, phiU_, tauU_, W_;
};

// Residue n is a unit square modulo U (mod_two_w = false) or modulo 2W = 4U
// (mod_two_w = true).  Characterization over a squarefree odd part times a
// 2-power: unit everywhere, Legendre +1 at each odd prime, and for the
// 2-part: no extra condition mod 2, n = 1 mod 8 when 8 divides the modulus
// (2W = 8 * odd, so the mod-2W test requires n = 1 mod 8).
bool is_invertible_square_mod(i64 n, const PrimorialModulus& m, bool mod_two_w = false);

// The squares of primes in (N, 4N] together with their log p weights.
struct PrimeSquareSet {
    u64 N = 0;
    std::vector<u64> elements;   // p^2, ascending
    std::vector<double> weights; // log p

    std::size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }

    // Subset keeping the given ascending element indices.
    PrimeSquareSet subset(const std::vector<std::size_t>& indices) const;

    static PrimeSquareSet from_primes(u64 N, const std::vector<u64>& primes);
};

PrimeSquareSet prime_squares_in(u64 N);

}  // namespace psq::arith

#endif
