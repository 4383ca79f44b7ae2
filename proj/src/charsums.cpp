#include "psq/charsums.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace psq::charsums {

namespace {

constexpr double kEnumBudget = 2e9;

void check_odd_prime(u64 p) {
    if (p < 3 || (p & 1) == 0 || !arith::is_prime_u64(p))
        throw std::invalid_argument("charsums: modulus must be an odd prime");
}

// qr[r] = 1 + legendre(r, p), so products of epsilon values are table lookups.
std::vector<int> epsilon_table(u64 p, i64 c) {
    std::vector<int> eps(p);
    u64 cr = mod_i64(c, p);
    for (u64 r = 0; r < p; ++r) {
        u64 v = (r + cr) % p;
        if (v == 0)
            eps[r] = 1;
        else
            eps[r] = powmod_u64(v, (p - 1) / 2, p) == 1 ? 2 : 0;
    }
    return eps;  // indexed by (x^2 + y^2) mod p
}

u128 ipow_u128(u128 base, int e) {
    u128 r = 1;
    while (e-- > 0) r *= base;
    return r;
}

// Per-prime residue tables for the invertible-square predicate on pair sums.
struct CrtTables {
    std::vector<u64> primes;           // odd primes of U
    std::vector<std::vector<int8_t>> qr;  // legendre tables

    explicit CrtTables(const arith::PrimorialModulus& m) {
        for (u64 p : m.primes()) {
            if (p == 2) continue;
            primes.push_back(p);
            std::vector<int8_t> t(p);
            for (u64 r = 0; r < p; ++r)
                t[r] = r == 0 ? int8_t(0)
                              : (powmod_u64(r, (p - 1) / 2, p) == 1 ? int8_t(1) : int8_t(-1));
            qr.push_back(std::move(t));
        }
    }

    // x, y, c given as residues per prime; the 2-part is handled by the caller.
    bool pair_passes(const std::vector<u64>& xr, const std::vector<u64>& yr,
                     const std::vector<u64>& cr) const {
        for (std::size_t i = 0; i < primes.size(); ++i) {
            u64 p = primes[i];
            u64 v = (xr[i] * xr[i] + yr[i] * yr[i] + cr[i]) % p;
            if (qr[i][v] != 1) return false;
        }
        return true;
    }
};

std::vector<u64> residues_of(u64 x, const std::vector<u64>& primes) {
    std::vector<u64> r(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) r[i] = x % primes[i];
    return r;
}

}  // namespace

int epsilon_p(i64 x, i64 y, i64 c, u64 p) {
    check_odd_prime(p);
    u64 xr = mod_i64(x, p), yr = mod_i64(y, p);
    u64 v = (xr * xr % p + yr * yr % p + mod_i64(c, p)) % p;
    if (v == 0) return 1;
    return powmod_u64(v, (p - 1) / 2, p) == 1 ? 2 : 0;
}

ScriptE script_E_p(const CharParams& params) {
    check_odd_prime(params.p);
    if (params.t < 2 || params.t % 2 != 0)
        throw std::invalid_argument("script_E_p: t must be even and >= 2");
    if (params.k < 1 || params.k > params.t)
        throw std::invalid_argument("script_E_p: k must lie in [1, t]");
    const u64 p = params.p;
    const int k = params.k, t = params.t;
    if (std::pow(static_cast<double>(p), k + 1) > kEnumBudget)
        throw budget_error("script_E_p: p^(k+1) exceeds the enumeration budget");
    // Overflow guard for the exact numerator: (2^k (p-1))^t * (p-1)^k < 2^127.
    double bits = t * (k + std::log2(static_cast<double>(p - 1))) +
                  k * std::log2(static_cast<double>(p - 1));
    if (bits >= 126.0)
        throw budget_error("script_E_p: exact numerator would overflow 128 bits");

    auto eps = epsilon_table(p, params.c);
    std::vector<u64> sq(p);
    for (u64 r = 0; r < p; ++r) sq[r] = r * r % p;

    // Odometer over (y_1..y_k) in (G_p \ {0})^k.
    std::vector<u64> y(k, 1);
    u128 total = 0;
    while (true) {
        u128 inner = 0;
        for (u64 x = 1; x < p; ++x) {
            u64 prod = 1;
            for (int j = 0; j < k && prod != 0; ++j)
                prod *= static_cast<u64>(eps[(sq[x] + sq[y[j]]) % p]);
            inner += prod;
        }
        total += ipow_u128(inner, t);
        int pos = 0;
        while (pos < k && ++y[pos] == p) y[pos++] = 1;
        if (pos == k) break;
    }

    ScriptE out;
    out.numerator = total;
    out.denom_pow = t + k;
    out.value = to_double(total) / std::pow(static_cast<double>(p - 1), t + k);
    return out;
}

ScriptE script_E_p_naive(const CharParams& params) {
    check_odd_prime(params.p);
    const u64 p = params.p;
    const int k = params.k, t = params.t;
    if (t < 2 || t % 2 != 0 || k < 1 || k > t)
        throw std::invalid_argument("script_E_p_naive: need even t >= 2 and k in [1, t]");
    if (std::pow(static_cast<double>(p - 1), 2 * t) > 2e7)
        throw budget_error("script_E_p_naive: (p-1)^(2t) exceeds the enumeration budget");

    auto eps = epsilon_table(p, params.c);
    std::vector<u64> sq(p);
    for (u64 r = 0; r < p; ++r) sq[r] = r * r % p;

    std::vector<u64> vars(2 * t, 1);  // y_1..y_t then x_1..x_t, all nonzero
    u128 total = 0;
    while (true) {
        u64 prod = 1;
        for (int i = 0; i < t && prod != 0; ++i)
            for (int j = 0; j < k && prod != 0; ++j)
                prod *= static_cast<u64>(eps[(sq[vars[t + i]] + sq[vars[j]]) % p]);
        total += prod;
        std::size_t pos = 0;
        while (pos < vars.size() && ++vars[pos] == p) vars[pos++] = 1;
        if (pos == vars.size()) break;
    }
    ScriptE out;
    out.numerator = total;
    out.denom_pow = 2 * t;
    out.value = to_double(total) / std::pow(static_cast<double>(p - 1), 2 * t);
    return out;
}

u128 sumzp_lhs(u64 p, i64 c, int t) {
    check_odd_prime(p);
    if (t < 2 || t % 2 != 0) throw std::invalid_argument("sumzp_lhs: t must be even and >= 2");
    const int half = t / 2;
    if (std::pow(static_cast<double>(p), half + 1) > kEnumBudget)
        throw budget_error("sumzp_lhs: p^(t/2+1) exceeds the enumeration budget");
    double bits = t * (half + std::log2(static_cast<double>(p))) +
                  half * std::log2(static_cast<double>(p));
    if (bits >= 126.0) throw budget_error("sumzp_lhs: value would overflow 128 bits");

    auto eps = epsilon_table(p, c);
    std::vector<u64> sq(p);
    for (u64 r = 0; r < p; ++r) sq[r] = r * r % p;

    // Sum over (y_1..y_{t/2}) in G_p^{t/2} of (sum_x prod_j eps)^t, the
    // x_i-factorized form of the full 3t/2-fold sum.
    std::vector<u64> y(half, 0);
    u128 total = 0;
    while (true) {
        u128 inner = 0;
        for (u64 x = 0; x < p; ++x) {
            u64 prod = 1;
            for (int j = 0; j < half && prod != 0; ++j)
                prod *= static_cast<u64>(eps[(sq[x] + sq[y[j]]) % p]);
            inner += prod;
        }
        total += ipow_u128(inner, t);
        int pos = 0;
        while (pos < half && ++y[pos] == p) y[pos++] = 0;
        if (pos == half) break;
    }
    return total;
}

ModpBound check_modp_bound(u64 p, i64 c, int t) {
    CharParams params{p, c, t, t / 2};
    ScriptE e = script_E_p(params);
    ModpBound b;
    b.lhs = e.value;
    b.log_rhs = 2.0 * t * std::log(static_cast<double>(p) / static_cast<double>(p - 1)) +
                4.0 * std::pow(static_cast<double>(t), 5) * std::pow(2.0, t) /
                    static_cast<double>(p);
    b.pass = b.lhs <= 0.0 || std::log(b.lhs) <= b.log_rhs;
    return b;
}

u64 count_T_c(const std::vector<u64>& X, const std::vector<u64>& Y, i64 c,
              const arith::PrimorialModulus& m) {
    const u64 U = m.u64_U();
    CrtTables tables(m);
    for (u64 x : X)
        if (gcd_u64(x % U, U) != 1) throw std::invalid_argument("count_T_c: X must be units mod U");
    for (u64 y : Y)
        if (gcd_u64(y % U, U) != 1) throw std::invalid_argument("count_T_c: Y must be units mod U");

    // x, y odd units: x^2 + y^2 + c is odd iff c is odd, uniformly in the pair.
    if (mod_i64(c, 2) == 0) return 0;
    std::vector<u64> cr = residues_of(mod_i64(c, U), tables.primes);

    std::vector<std::vector<u64>> xres, yres;
    xres.reserve(X.size());
    for (u64 x : X) xres.push_back(residues_of(x % U, tables.primes));
    yres.reserve(Y.size());
    for (u64 y : Y) yres.push_back(residues_of(y % U, tables.primes));

    u64 count = 0;
    for (const auto& xr : xres)
        for (const auto& yr : yres)
            if (tables.pair_passes(xr, yr, cr)) ++count;
    return count;
}

u64 count_R_U(const std::vector<u64>& Z, const std::vector<i64>& cseq,
              const arith::PrimorialModulus& m) {
    if (cseq.empty() || Z.empty()) return 0;
    const u64 U = m.u64_U();
    CrtTables tables(m);

    // Class multiplicities of Z mod U and of the shift sequence.
    std::map<u64, u64> zmult;
    for (u64 z : Z) ++zmult[z % U];
    std::map<u64, u64> cmult;
    for (i64 c : cseq) ++cmult[mod_i64(c, U)];

    struct Shift {
        std::vector<u64> res;
        u64 parity, mult;
    };
    std::vector<Shift> shifts;
    for (const auto& [c, mc] : cmult)
        shifts.push_back({residues_of(c, tables.primes), c & 1, mc});
    struct Cls {
        std::vector<u64> res;
        u64 label, mult;
    };
    std::vector<Cls> classes;
    for (const auto& [a, ma] : zmult) classes.push_back({residues_of(a, tables.primes), a, ma});

    u64 count = 0;
    for (const auto& ca : classes)
        for (const auto& cb : classes) {
            u64 parity = (ca.label + cb.label) & 1;  // a^2 + b^2 mod 2
            for (const auto& sh : shifts) {
                if (((parity + sh.parity) & 1) == 0) continue;
                if (tables.pair_passes(ca.res, cb.res, sh.res))
                    count += ca.mult * cb.mult * sh.mult;
            }
        }
    return count;
}

double HolderBound::value() const { return std::exp(log_value); }

int select_holder_t(double logA) {
    if (!(logA > 1.0)) throw std::invalid_argument("select_holder_t: loglog A must be positive");
    double loglogA = std::log(logA);
    double v = std::log(logA / std::pow(loglogA, 6)) / std::log(2.0);
    if (!(v >= 4.0)) return 2;
    int t = 2 * static_cast<int>(std::ceil(v / 2.0));
    return t;
}

HolderBound holder_bound_eq8_log(double sizeX, double sizeY, const arith::PrimorialModulus& m,
                                 double logA, int t) {
    if (t < 2 || t % 2 != 0)
        throw std::invalid_argument("holder_bound_eq8: t must be even and >= 2");
    if (!(logA > 1.0))
        throw std::invalid_argument("holder_bound_eq8: loglog A must be positive");
    if (!(sizeX > 0.0) || !(sizeY > 0.0))
        throw std::invalid_argument("holder_bound_eq8: set sizes must be positive");
    double loglogA = std::log(logA);
    HolderBound b;
    b.t = t;
    b.log_value = 2.0 * std::log(m.unit_density_inv()) + std::log(sizeX) + std::log(sizeY) -
                  static_cast<double>(m.primes().size()) * std::log(2.0) +
                  3.0 * logA / static_cast<double>(t) +
                  8.0 * std::log(50.0) * std::pow(static_cast<double>(t), 3) * std::pow(2.0, t) *
                      loglogA;
    return b;
}

HolderBound holder_bound_eq8(double sizeX, double sizeY, const arith::PrimorialModulus& m,
                             double A, int t) {
    if (!(A >= 4.0)) throw std::invalid_argument("holder_bound_eq8: A must be >= 4");
    return holder_bound_eq8_log(sizeX, sizeY, m, std::log(A), t);
}

}  // namespace psq::charsums
