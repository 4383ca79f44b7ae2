#ifndef PSQ_ENERGY_HPP
#define PSQ_ENERGY_HPP

#include <iosfwd>
#include <vector>

#include "json.hpp"
#include "psq/arith.hpp"
#include "psq/common.hpp"

namespace psq::energy {

enum class Backend { oracle, convolution };

// Ordered k-fold representation counts of a prime-square set: counts[n] is the
// number (or log-weighted mass) of ordered k-tuples of S summing to n.
struct RepCountTable {
    int k = 1;
    bool weighted = false;
    std::vector<std::pair<i64, u64>> ucounts;   // unweighted entries, ascending n
    std::vector<std::pair<i64, double>> wcounts;

    std::size_t support_size() const { return weighted ? wcounts.size() : ucounts.size(); }
    u64 total_mass_u() const;
    double total_mass_w() const;

    void write_csv(std::ostream& os) const;
    nlohmann::json to_json() const;
};

RepCountTable rep_counts(const arith::PrimeSquareSet& S, int k, bool weighted);

// 2k-fold additive energy: the number (e_k, unweighted) or log-weighted mass
// (E_k) of ordered 2k-tuples whose two k-fold sums agree.  The oracle backend
// enumerates all |S|^2k tuples directly; the convolution backend sums the
// squares of the k-fold representation counts.
u128 energy_unweighted(const arith::PrimeSquareSet& S, int k, Backend backend);
double energy_weighted(const arith::PrimeSquareSet& S, int k, Backend backend);

// Both sides of the eleventh-moment majorization: the bounding quantity
// |S| * max(log p) * E_5(S), and the exact pairing sum_n w6(n) * w5(n)
// (the 6-vs-5 moment integral evaluated by orthogonality).
struct MomentEleven {
    double majorant = 0.0;
    double pairing = 0.0;
};

MomentEleven moment_eleven(const arith::PrimeSquareSet& S);

}  // namespace psq::energy

#endif
