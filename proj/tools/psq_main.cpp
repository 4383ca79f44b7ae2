// psq: verification suites for additive properties of prime squares.

#include <iostream>

#include "CLI11.hpp"
#include "psq/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "Numerical verification toolkit for additive properties of prime squares:\n"
        "representation counts and additive energies, character-sum expectations\n"
        "modulo primes and primorials, quadratic exponential sums, circle-method\n"
        "arc decompositions, and monochromatic representation estimates."};
    app.require_subcommand(1);

    psq::cli::RunConfig cfg;

    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "output file (stdout if omitted; relative paths resolve against PSQ_OUT_DIR)");
        sub->add_option("--format", cfg.format, "output format: json or csv");
    };

    auto* charsums = app.add_subcommand(
        "verify-charsums",
        "Check the mod-p expectation inequality E_p(t/2,t) <= (p/(p-1))^2t exp(4 t^5 2^t / p)\n"
        "over a grid of odd primes, all shifts c, and even t, with an exact\n"
        "factorized-vs-naive cross-check of the evaluator at small p.");
    charsums->add_option("--p", cfg.p, "restrict to a single odd prime (default grid 3,5,7,11)");
    charsums->add_option("--t", cfg.t, "restrict to a single even exponent (default grid 2,4)");
    auto* copt = charsums->add_option("--c", cfg.c, "restrict to a single shift c (default: all residues)");
    add_out(charsums);

    auto* vgauss = app.add_subcommand(
        "verify-gauss",
        "Sweep the complete quadratic sums V_q(a,r) over progressions r mod W restricted\n"
        "to units: q-smooth moduli off 2W must vanish, divisors of 2W must match the\n"
        "closed form q e(a r^2 / q); emits CSV (q,a,r,|V|,class,pass).");
    vgauss->add_option("--w", cfg.w, "smoothness bound of the primorial U (W = 2U)")
        ->default_val(3);
    vgauss->add_option("--qmax", cfg.qmax, "largest modulus q to sweep")->default_val(200);
    add_out(vgauss);

    auto* vext = app.add_subcommand(
        "verify-extremal",
        "Random bilinear forms over the capped simplex {sum x = P, 0 <= x <= D}: the\n"
        "two-step greedy ascent must dominate the diagonal and return extreme points\n"
        "with at most one fractional coordinate.");
    vext->add_option("--count", cfg.count, "number of random instances")->default_val(1000);
    vext->add_option("--seed", cfg.seed, "RNG seed");
    add_out(vext);

    auto* energy = app.add_subcommand(
        "energy",
        "Representation counts and 2k-fold additive energies of the prime squares in\n"
        "(N, 4N], by exact convolution and/or direct tuple enumeration; with\n"
        "--backend both the run fails unless the two agree.");
    energy->add_option("--N", cfg.N, "window base: squares taken from (N, 4N]")->default_val(100);
    energy->add_option("--k", cfg.k, "summand count k (energy order 2k)")->default_val(6);
    energy->add_option("--backend", cfg.backend, "oracle | convolution | both")
        ->default_val("both");
    energy->add_option("--size", cfg.size, "restrict to a random subset of this size");
    energy->add_option("--seed", cfg.seed, "subset RNG seed");
    add_out(energy);

    auto* arcs = app.add_subcommand(
        "arcs",
        "Build the family of arcs [a/q - 1/M, a/q + 1/M) over reduced fractions with\n"
        "q <= Q; verifies pairwise disjointness (exact rational endpoints) and the\n"
        "totient arc count.");
    arcs->add_option("--Q", cfg.Q, "largest denominator")->default_val(3);
    arcs->add_option("--M", cfg.M, "arc half-width denominator, must exceed 2Q^2")
        ->default_val(32);
    add_out(arcs);

    auto* id32 = app.add_subcommand(
        "identity32",
        "Exact evaluation of the 6-vs-5 moment of S-hat against the weighted prime sum\n"
        "psi, via orthogonality (a finite weighted solution count), checked against\n"
        "(4/5) sqrt(N) E_6(S).");
    id32->add_option("--N", cfg.N, "window base")->default_val(100);
    id32->add_option("--size", cfg.size, "restrict to a random subset of this size");
    id32->add_option("--seed", cfg.seed, "subset RNG seed");
    add_out(id32);

    auto* sark = app.add_subcommand(
        "sarkozy",
        "Finite addition check for S = prime squares in (N, 4N]: when the energy,\n"
        "size, and coprimality hypotheses hold, every n in [n0, n0 + window] with\n"
        "n0 = 30N(2 ceil(6D) + 1) must be a sum of at most n/N elements of S;\n"
        "failed hypotheses are reported, never silently skipped.");
    sark->add_option("--N", cfg.N, "window base")->default_val(10000);
    sark->add_option("--window", cfg.window, "number of integers checked past n0")
        ->default_val(1000);
    sark->add_option("--D", cfg.D, "energy cap D (derived from e_6(S) when omitted)");
    add_out(sark);

    auto* sk = app.add_subcommand(
        "estimate-sk",
        "Colour the prime squares up to X with K colours and report the worst-case\n"
        "minimal monochromatic summand count over the window [X/2, X/2 + window]\n"
        "(a lower-bound estimate; unrepresentable n are listed).");
    sk->add_option("--K", cfg.K, "number of colours")->required();
    sk->add_option("--X", cfg.X, "colour the prime squares <= X")->default_val(100000);
    sk->add_option("--strategy", cfg.strategy,
                   "round-robin | uniform-random | congruence-class")
        ->default_val("uniform-random");
    sk->add_option("--seed", cfg.seed, "colouring seed");
    sk->add_option("--window", cfg.window, "window width")->default_val(1000);
    add_out(sk);

    auto* sweep = app.add_subcommand(
        "sweep",
        "Grid reports for plotting: kind=grid emits (t, |S-hat|, |psi|, arc class)\n"
        "over [0,1); kind=tu emits the partial sums |T(u)| along one phase with the\n"
        "sqrt(N)/A^6 comparison scale (diagnostic only).");
    sweep->add_option("--N", cfg.N, "window base")->default_val(1000);
    sweep->add_option("--w", cfg.w, "smoothness bound")->default_val(3);
    sweep->add_option("--Q", cfg.Q, "largest denominator")->default_val(3);
    sweep->add_option("--M", cfg.M, "arc half-width denominator")->default_val(32);
    sweep->add_option("--points", cfg.points, "grid size")->default_val(256);
    sweep->add_option("--kind", cfg.kind, "grid | tu")->default_val("grid");
    sweep->add_option("--phase", cfg.phase, "phase for kind=tu");
    sweep->add_option("--A", cfg.A, "scale parameter for the tu comparison column");
    add_out(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    cfg.c_given = copt->count() > 0;
    for (auto* sub : {charsums, vgauss, vext, energy, arcs, id32, sark, sk, sweep})
        if (sub->parsed()) cfg.command = sub->get_name();
    return psq::cli::run(cfg);
}
