#include "psq/arith.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace psq {

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace psq

namespace psq::arith {

namespace {

constexpr u64 kSieveBudget = 200'000'000;

}  // namespace

std::vector<u64> sieve_primes(u64 x) {
    std::vector<u64> primes;
    if (x < 2) return primes;
    if (x > kSieveBudget)
        throw budget_error("sieve_primes: limit " + std::to_string(x) + " exceeds sieve budget");
    std::vector<char> composite(x + 1, 0);
    for (u64 i = 2; i * i <= x; ++i) {
        if (!composite[i])
            for (u64 j = i * i; j <= x; j += i) composite[j] = 1;
    }
    for (u64 i = 2; i <= x; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic Miller-Rabin for 64-bit inputs with the 12 bases above.
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

int legendre(i64 x, u64 p) {
    if (p < 3 || (p & 1) == 0 || !is_prime_u64(p))
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    u64 r = mod_i64(x, p);
    if (r == 0) return 0;
    u64 e = powmod_u64(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

PrimorialModulus::PrimorialModulus(u64 w) : w_(w) {
    if (w < 2) throw std::invalid_argument("PrimorialModulus: w must be >= 2");
    primes_ = sieve_primes(w);
    U_ = 1;
    phiU_ = 1;
    for (u64 p : primes_) {
        U_ *= static_cast<unsigned long>(p);
        phiU_ *= static_cast<unsigned long>(p - 1);
    }
    mpz_class two = 2;
    mpz_pow_ui(tauU_.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(primes_.size()));
    W_ = 2 * U_;
}

PrimorialModulus PrimorialModulus::for_scale(double A) {
    if (!(A > 1.0)) throw std::invalid_argument("for_scale: A must exceed 1");
    double w = std::pow(A, 25.0);
    if (!(w <= static_cast<double>(kSieveBudget)))
        throw budget_error("for_scale: A^25 exceeds the sieve budget");
    return PrimorialModulus(static_cast<u64>(w));
}

u64 PrimorialModulus::u64_U() const {
    if (!U_.fits_ulong_p())
        throw budget_error("PrimorialModulus: U does not fit 64 bits at this smoothness");
    return static_cast<u64>(U_.get_ui());
}

u64 PrimorialModulus::u64_W() const {
    if (!W_.fits_ulong_p())
        throw budget_error("PrimorialModulus: W does not fit 64 bits at this smoothness");
    return static_cast<u64>(W_.get_ui());
}

double PrimorialModulus::unit_density_inv() const {
    double r = 1.0;
    for (u64 p : primes_) r *= static_cast<double>(p) / static_cast<double>(p - 1);
    return r;
}

bool PrimorialModulus::divides_two_W(u64 q) const {
    if (q == 0) return false;
    mpz_class two_w = 2 * W_;
    return mpz_divisible_ui_p(two_w.get_mpz_t(), static_cast<unsigned long>(q)) != 0;
}

bool PrimorialModulus::is_smooth(u64 q) const {
    for (u64 p : primes_) {
        while (q % p == 0) q /= p;
        if (q == 1) return true;
    }
    return q == 1;
}

bool is_invertible_square_mod(i64 n, const PrimorialModulus& m, bool mod_two_w) {
    // 2-part: U carries one factor of 2, 2W = 4U carries three.
    if (mod_i64(n, 2) == 0) return false;
    if (mod_two_w && mod_i64(n, 8) != 1) return false;
    for (u64 p : m.primes()) {
        if (p == 2) continue;
        u64 r = mod_i64(n, p);
        if (r == 0) return false;
        if (powmod_u64(r, (p - 1) / 2, p) != 1) return false;
    }
    return true;
}

PrimeSquareSet PrimeSquareSet::subset(const std::vector<std::size_t>& indices) const {
    PrimeSquareSet s;
    s.N = N;
    for (std::size_t i : indices) {
        s.elements.push_back(elements.at(i));
        s.weights.push_back(weights.at(i));
    }
    return s;
}

PrimeSquareSet PrimeSquareSet::from_primes(u64 N, const std::vector<u64>& primes) {
    PrimeSquareSet s;
    s.N = N;
    for (u64 p : primes) {
        if (!is_prime_u64(p)) throw std::invalid_argument("from_primes: element is not prime");
        u64 sq = p * p;
        if (!(sq > N && sq <= 4 * N))
            throw std::invalid_argument("from_primes: square outside (N, 4N]");
        s.elements.push_back(sq);
        s.weights.push_back(std::log(static_cast<double>(p)));
    }
    if (!std::is_sorted(s.elements.begin(), s.elements.end()))
        throw std::invalid_argument("from_primes: primes must be ascending");
    return s;
}

PrimeSquareSet prime_squares_in(u64 N) {
    if (N < 2) throw std::invalid_argument("prime_squares_in: N must be >= 2");
    PrimeSquareSet s;
    s.N = N;
    u64 hi = isqrt_u64(4 * N);
    for (u64 p : sieve_primes(hi)) {
        u64 sq = p * p;
        if (sq > N && sq <= 4 * N) {
            s.elements.push_back(sq);
            s.weights.push_back(std::log(static_cast<double>(p)));
        }
    }
    return s;
}

}  // namespace psq::arith
