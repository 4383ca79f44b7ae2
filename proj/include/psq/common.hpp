#ifndef PSQ_COMMON_HPP
#define PSQ_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace psq {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Thrown when an operation would exceed the desk-scale budgets documented
// per module (table spans, enumeration counts, sieve limits).
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

std::string to_string_u128(u128 v);

inline double to_double(u128 v) {
    return static_cast<double>(static_cast<long double>(v));
}

// Neumaier compensated accumulator for long weighted reductions.
class kahan_sum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline u64 gcd_u64(u64 a, u64 b) {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// n mod m in [0, m) for possibly negative n.
inline u64 mod_i64(i64 n, u64 m) {
    i64 r = n % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    return static_cast<u64>(r);
}

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

u64 isqrt_u64(u64 n);

}  // namespace psq

#endif
