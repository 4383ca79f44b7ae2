#include "psq/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "psq/energy.hpp"
#include "psq/gauss.hpp"

namespace psq::circle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> e_of(double z) {
    double frac = z - std::floor(z);
    return {std::cos(kTwoPi * frac), std::sin(kTwoPi * frac)};
}

double sinc(double z) {
    if (z == 0.0) return 1.0;
    double piz = std::numbers::pi * z;
    return std::sin(piz) / piz;
}

}  // namespace

double tent_alpha(double t, u64 N) {
    double half = 2.5 * static_cast<double>(N);
    double v = 1.0 - std::abs(t) / half;
    return v > 0.0 ? v : 0.0;
}

double tent_beta(double t, u64 N) { return tent_alpha(t - 2.5 * static_cast<double>(N), N); }

std::complex<double> beta_hat(double u, u64 N) {
    double half = 2.5 * static_cast<double>(N);
    double s = sinc(u * half);
    return e_of(-u * half) * (half * s * s);
}

std::complex<double> s_hat(double t, const arith::PrimeSquareSet& S) {
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < S.size(); ++i)
        sum += S.weights[i] * e_of(static_cast<double>(S.elements[i]) * t);
    return sum;
}

std::complex<double> psi(double t, u64 N) {
    u64 limit = isqrt_u64(5 * N);
    std::complex<double> sum = 0.0;
    for (u64 n : arith::sieve_primes(limit)) {
        double nn = static_cast<double>(n);
        double w = 2.0 * nn * std::log(nn) * tent_beta(nn * nn, N);
        if (w == 0.0) continue;
        sum += w * e_of(static_cast<double>(n * n) * t);
    }
    return sum;
}

std::complex<double> t_partial(double u, double alpha_phase) {
    if (u < 0.0) throw std::invalid_argument("t_partial: u must be >= 0");
    std::complex<double> sum = 0.0;
    if (u < 2.0) return sum;
    for (u64 n : arith::sieve_primes(static_cast<u64>(u))) {
        double nn = static_cast<double>(n);
        sum += std::log(nn) * e_of(static_cast<double>(n * n) * alpha_phase);
    }
    return sum;
}

double ArcPartition::total_measure() const {
    return static_cast<double>(arcs.size()) * 2.0 / static_cast<double>(M);
}

ArcPartition build_major_arcs(u64 Q, u64 M) {
    if (Q < 1) throw std::invalid_argument("build_major_arcs: Q must be >= 1");
    if (M <= 2 * Q * Q)
        throw std::invalid_argument("build_major_arcs: need M > 2Q^2 for disjoint arcs");
    ArcPartition part;
    part.Q = Q;
    part.M = M;
    part.arcs.push_back({0, 1});
    for (u64 q = 2; q <= Q; ++q)
        for (u64 a = 1; a < q; ++a)
            if (gcd_u64(a, q) == 1) part.arcs.push_back({a, q});
    std::sort(part.arcs.begin(), part.arcs.end(), [](const Arc& l, const Arc& r) {
        return static_cast<u128>(l.a) * r.q < static_cast<u128>(r.a) * l.q;
    });
    return part;
}

QmParameters canonical_qm(u64 N, double A, double B) {
    if (N < 3) throw std::invalid_argument("canonical_qm: N too small");
    if (!(A > 0.0) || !(B > 0.0))
        throw std::invalid_argument("canonical_qm: A and B must be positive");
    double logN = std::log(static_cast<double>(N));
    QmParameters qm;
    qm.Q = std::pow(logN, B) * std::pow(A, 48.0);
    qm.M = static_cast<double>(N) / std::pow(logN, 2.0 * B);
    return qm;
}

Classification classify_point(i64 num, i64 den, const ArcPartition& arcs) {
    if (den <= 0) throw std::invalid_argument("classify_point: denominator must be positive");
    const i64 M = static_cast<i64>(arcs.M);
    // Shift num/den into [-1/M, 1 - 1/M): subtract floor((num M + den) / (den M)).
    i128 scaled_num = static_cast<i128>(num) * M + den;
    i128 scaled_den = static_cast<i128>(den) * M;
    i128 k = scaled_num / scaled_den;
    if (scaled_num % scaled_den < 0) --k;
    i64 tn = static_cast<i64>(num - k * den);  // tn/den in [-1/M, 1 - 1/M)

    for (const Arc& arc : arcs.arcs) {
        // -1/M <= tn/den - a/q < 1/M, exactly.
        i128 diff = static_cast<i128>(tn) * static_cast<i128>(arc.q) -
                    static_cast<i128>(arc.a) * static_cast<i128>(den);
        i128 width = static_cast<i128>(den) * static_cast<i128>(arc.q);
        if (diff * M >= -width && diff * M < width) return {true, arc.a, arc.q};
    }
    return {};
}

Classification classify_point(double t, const ArcPartition& arcs) {
    const double M = static_cast<double>(arcs.M);
    double tau = t - std::floor(t + 1.0 / M);  // [-1/M, 1 - 1/M)
    for (const Arc& arc : arcs.arcs) {
        double center = static_cast<double>(arc.a) / static_cast<double>(arc.q);
        double d = tau - center;
        if (d >= -1.0 / M && d < 1.0 / M) return {true, arc.a, arc.q};
    }
    return {};
}

Approx dirichlet_approx(double t, double M) {
    if (!(M >= 1.0)) throw std::invalid_argument("dirichlet_approx: M must be >= 1");
    const u64 qmax = static_cast<u64>(M);
    // Continued-fraction convergents p_k/q_k of t up to denominator M.
    double x = t;
    i64 p_prev = 1, p_cur = static_cast<i64>(std::floor(x));
    u64 q_prev = 0, q_cur = 1;
    double frac = x - std::floor(x);
    for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
        x = 1.0 / frac;
        double fa = std::floor(x);
        if (fa > 1e12) break;  // partial quotient past double resolution; convergent is final
        i64 a = static_cast<i64>(fa);
        u64 q_next = static_cast<u64>(a) * q_cur + q_prev;
        if (q_next > qmax) break;
        i64 p_next = a * p_cur + p_prev;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
        frac = x - fa;
    }
    double err = std::abs(t - static_cast<double>(p_cur) / static_cast<double>(q_cur));
    if (err <= 1.0 / (static_cast<double>(q_cur) * M)) return {p_cur, q_cur};
    // Rounding starved the convergent stream; scan denominators directly.
    for (u64 q = 1; q <= qmax; ++q) {
        i64 a = static_cast<i64>(std::llround(t * static_cast<double>(q)));
        if (std::abs(t - static_cast<double>(a) / static_cast<double>(q)) <=
            1.0 / (static_cast<double>(q) * M)) {
            u64 g = gcd_u64(static_cast<u64>(std::abs(a)), q);
            if (g == 0) g = q;
            return {a / static_cast<i64>(g), q / g};
        }
    }
    return {p_cur, q_cur};
}

std::complex<double> major_main_term(double t, u64 a, u64 q, u64 N,
                                     const arith::PrimorialModulus& m) {
    if (q < 1 || gcd_u64(a % q, q) != 1)
        throw std::invalid_argument("major_main_term: a/q must be reduced");
    const u64 W = m.u64_W();
    if (W > 1'000'000) throw budget_error("major_main_term: residue sweep over W too large");
    std::complex<double> sum = 0.0;
    for (u64 r = 0; r < W; ++r) {
        if (gcd_u64(r, W) != 1) continue;
        sum += gauss::v_q({q, static_cast<i64>(a), r, W});
    }
    double theta = t - static_cast<double>(a) / static_cast<double>(q);
    return sum / gauss::phi_qw(q, m) * std::conj(beta_hat(theta, N));
}

Identity32 energy_integral_identity(const arith::PrimeSquareSet& S, u64 N) {
    Identity32 out;
    if (S.empty()) return out;
    if (S.size() > 12)
        throw budget_error("energy_integral_identity: |S| exceeds the desk budget of 12");
    u64 limit = isqrt_u64(5 * N);
    if (limit > 1000)
        throw budget_error("energy_integral_identity: sqrt(5N) exceeds the desk budget");

    // Exact value of the integral by orthogonality:
    //   sum over (p_1..p_6) in S^6, (p_7..p_11) in S^5, n prime with
    //   sum p_i^2 (left) = sum p_j^2 (right) + n^2
    //   of prod log p_i * 2 n log n beta(n^2),
    // assembled from the 6-fold and 5-fold tables and the psi weights.
    auto w6 = energy::rep_counts(S, 6, true).wcounts;
    auto w5 = energy::rep_counts(S, 5, true).wcounts;

    std::vector<std::pair<i64, double>> h;  // (n^2, 2 n log n beta(n^2))
    for (u64 n : arith::sieve_primes(limit)) {
        double nn = static_cast<double>(n);
        double w = 2.0 * nn * std::log(nn) * tent_beta(nn * nn, N);
        if (w > 0.0) h.emplace_back(static_cast<i64>(n * n), w);
    }

    // conv[m] = sum over w5 entries and h entries with matching sum.
    std::vector<std::pair<i64, double>> conv;
    {
        std::vector<std::pair<i64, double>> terms;
        terms.reserve(w5.size() * h.size());
        for (const auto& [m5, c5] : w5)
            for (const auto& [sq, wh] : h) terms.emplace_back(m5 + sq, c5 * wh);
        std::sort(terms.begin(), terms.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        for (const auto& [n, c] : terms) {
            if (!conv.empty() && conv.back().first == n)
                conv.back().second += c;
            else
                conv.emplace_back(n, c);
        }
    }

    kahan_sum rhs;
    std::size_t j = 0;
    for (const auto& [n, c] : w6) {
        while (j < conv.size() && conv[j].first < n) ++j;
        if (j < conv.size() && conv[j].first == n) rhs.add(c * conv[j].second);
    }
    out.rhs = rhs.value();
    out.lhs = 0.8 * std::sqrt(static_cast<double>(N)) *
              energy::energy_weighted(S, 6, energy::Backend::convolution);
    return out;
}

}  // namespace psq::circle
