#ifndef PSQ_CIRCLE_HPP
#define PSQ_CIRCLE_HPP

#include <complex>
#include <vector>

#include "psq/arith.hpp"
#include "psq/common.hpp"

namespace psq::circle {

// Tent weights: alpha is the unit triangle of half-width 5N/2 at the origin,
// beta its translate centred at 5N/2, so beta >= 2/5 on [N, 4N].
double tent_alpha(double t, u64 N);
double tent_beta(double t, u64 N);

// Closed form of the beta transform: e(-u 5N/2) * (5N/2) * sinc^2(u 5N/2).
std::complex<double> beta_hat(double u, u64 N);

// S-hat(t) = sum over p^2 in S of log p * e(p^2 t).
std::complex<double> s_hat(double t, const arith::PrimeSquareSet& S);

// psi(t) = sum over primes n of 2 n log n beta(n^2) e(n^2 t); the support is
// the primes below sqrt(5N).
std::complex<double> psi(double t, u64 N);

// T(u) = sum over primes n <= u of log n * e(n^2 alpha).
std::complex<double> t_partial(double u, double alpha_phase);

struct Arc {
    u64 a;
    u64 q;
};

// Reduced fractions a/q with 0 <= a < q <= Q, each carrying the interval
// [a/q - 1/M, a/q + 1/M) on the wrapped window [-1/M, 1 - 1/M).
struct ArcPartition {
    u64 Q = 1;
    u64 M = 3;
    std::vector<Arc> arcs;  // ascending by a/q

    double total_measure() const;
};

ArcPartition build_major_arcs(u64 Q, u64 M);

// The canonical arc parameters for a window N at scale A with exponent B:
// Q = (log N)^B A^48 and M = N / (log N)^(2B).  Reported as doubles; the
// identities hold for any (Q, M) with M > 2Q^2, so callers clamp as needed.
struct QmParameters {
    double Q;
    double M;
};

QmParameters canonical_qm(u64 N, double A, double B);

struct Classification {
    bool major = false;
    u64 a = 0;
    u64 q = 1;
};

Classification classify_point(double t, const ArcPartition& arcs);
// Exact classification for rational t = num/den.
Classification classify_point(i64 num, i64 den, const ArcPartition& arcs);

// Best rational approximation via continued-fraction convergents: a reduced
// a/q with q <= M and |t - a/q| <= 1/(qM).
struct Approx {
    i64 a;
    u64 q;
};

Approx dirichlet_approx(double t, double M);

// Major-arc model for psi at t near a/q:
//   (1/phi(qW)) * sum over r < W, (r, W) = 1 of V_q(a, r) * conj(beta_hat)(t - a/q).
std::complex<double> major_main_term(double t, u64 a, u64 q, u64 N,
                                     const arith::PrimorialModulus& m);

// Both sides of the energy inequality: lhs = (4/5) sqrt(N) E_6(S) and rhs the
// exact value of the 6-vs-5 moment integral against psi, evaluated through
// orthogonality as a finite weighted solution count (never by quadrature).
struct Identity32 {
    double lhs = 0.0;
    double rhs = 0.0;
};

Identity32 energy_integral_identity(const arith::PrimeSquareSet& S, u64 N);

}  // namespace psq::circle

#endif
