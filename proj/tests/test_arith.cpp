#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "psq/arith.hpp"

using namespace psq;
using namespace psq::arith;

TEST_CASE("sieve_primes basics") {
    CHECK(sieve_primes(10) == std::vector<u64>{2, 3, 5, 7});
    CHECK(sieve_primes(2) == std::vector<u64>{2});
    CHECK(sieve_primes(1).empty());
    CHECK(sieve_primes(0).empty());
    auto p100 = sieve_primes(100);
    CHECK(p100.size() == 25);
    CHECK(p100.back() == 97);
}

TEST_CASE("prime_squares_in windows") {
    auto s10 = prime_squares_in(10);
    CHECK(s10.elements == std::vector<u64>{25});
    CHECK(s10.weights[0] == doctest::Approx(std::log(5.0)));

    auto s4 = prime_squares_in(4);
    CHECK(s4.elements == std::vector<u64>{9});

    auto s100 = prime_squares_in(100);
    CHECK(s100.elements == std::vector<u64>{121, 169, 289, 361});
}

TEST_CASE("legendre examples and contract") {
    CHECK(legendre(1, 3) == 1);
    CHECK(legendre(0, 5) == 0);
    CHECK(legendre(2, 3) == -1);
    CHECK_THROWS_AS(legendre(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(legendre(1, 9), std::invalid_argument);
    CHECK_THROWS_AS(legendre(1, 2), std::invalid_argument);
}

TEST_CASE("legendre against residue search for p <= 97") {
    for (u64 p : sieve_primes(97)) {
        if (p == 2) continue;
        for (u64 x = 0; x < p; ++x)
            CHECK(legendre(static_cast<i64>(x), p) == oracles::legendre_search(static_cast<i64>(x), p));
    }
}

TEST_CASE("legendre multiplicativity") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 500; ++it) {
        u64 p = std::vector<u64>{3, 5, 7, 11, 13, 31, 97}[rng() % 7];
        i64 a = static_cast<i64>(rng() % 1000) + 1;
        i64 b = static_cast<i64>(rng() % 1000) + 1;
        if (mod_i64(a, p) == 0 || mod_i64(b, p) == 0) continue;
        CHECK(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
    }
}

TEST_CASE("primorial modulus fields") {
    PrimorialModulus m(3);
    CHECK(m.U() == 6);
    CHECK(m.phi_U() == 2);
    CHECK(m.tau_U() == 4);
    CHECK(m.W() == 12);
    CHECK(m.u64_U() == 6);
    CHECK(m.primes() == std::vector<u64>{2, 3});

    PrimorialModulus m7(7);
    CHECK(m7.U() == 210);
    CHECK(m7.phi_U() == 48);
    CHECK(m7.tau_U() == 16);
    CHECK(m7.unit_density_inv() == doctest::Approx(210.0 / 48.0));

    CHECK_THROWS_AS(PrimorialModulus(1), std::invalid_argument);
}

TEST_CASE("primorial invariants across w") {
    for (u64 w : {2, 3, 5, 10, 20, 50}) {
        PrimorialModulus m(w);
        mpz_class u = 1, phi = 1;
        for (u64 p : m.primes()) {
            CHECK(p <= w);
            u *= static_cast<unsigned long>(p);
            phi *= static_cast<unsigned long>(p - 1);
        }
        CHECK(m.U() == u);
        CHECK(m.phi_U() == phi);
        mpz_class tau;
        mpz_ui_pow_ui(tau.get_mpz_t(), 2, m.primes().size());
        CHECK(m.tau_U() == tau);
        CHECK(m.W() == 2 * u);
    }
}

TEST_CASE("invertible square examples mod U") {
    PrimorialModulus m(3);  // U = 6
    CHECK(is_invertible_square_mod(1, m));
    CHECK_FALSE(is_invertible_square_mod(3, m));
    CHECK(is_invertible_square_mod(25, m));
}

TEST_CASE("invertible square matches exhaustive search mod U") {
    for (u64 w : {2, 3, 5, 7, 11}) {
        PrimorialModulus m(w);
        u64 U = m.u64_U();
        if (U > 10000) continue;
        for (u64 n = 0; n < U; ++n)
            CHECK(is_invertible_square_mod(static_cast<i64>(n), m) ==
                  oracles::invertible_square_search(static_cast<i64>(n), U));
    }
}

TEST_CASE("invertible square matches exhaustive search mod 2W") {
    for (u64 w : {2, 3, 5}) {
        PrimorialModulus m(w);
        u64 two_w = 4 * m.u64_U();
        for (u64 n = 0; n < two_w; ++n)
            CHECK(is_invertible_square_mod(static_cast<i64>(n), m, true) ==
                  oracles::invertible_square_search(static_cast<i64>(n), two_w));
    }
}

TEST_CASE("square root count mod 2W is 2 tau(U)") {
    // Every invertible square mod 2W has exactly 2 tau(U) unit roots.
    for (u64 w : {2, 3, 5}) {
        PrimorialModulus m(w);
        u64 two_w = 4 * m.u64_U();
        u64 expected = 2 * static_cast<u64>(m.tau_U().get_ui());
        for (u64 n = 1; n < two_w; ++n) {
            if (!is_invertible_square_mod(static_cast<i64>(n), m, true)) continue;
            u64 roots = 0;
            for (u64 r = 0; r < two_w; ++r)
                if (gcd_u64(r, two_w) == 1 && r * r % two_w == n) ++roots;
            CHECK(roots == expected);
        }
    }
}

TEST_CASE("prime square set validation") {
    CHECK_THROWS_AS(PrimeSquareSet::from_primes(10, {4}), std::invalid_argument);
    CHECK_THROWS_AS(PrimeSquareSet::from_primes(10, {2}), std::invalid_argument);
    auto s = PrimeSquareSet::from_primes(3, {2, 3});
    CHECK(s.elements == std::vector<u64>{4, 9});
}

TEST_CASE("for_scale rejects astronomically large smoothness") {
    CHECK_THROWS_AS(PrimorialModulus::for_scale(1618.18), budget_error);
    auto m = PrimorialModulus::for_scale(1.3);  // w = floor(1.3^25) = 705
    CHECK(m.smoothness() == 705);
    CHECK(m.primes().back() <= 705);
}
