#ifndef UPDOWN_MEASURES_HPP
#define UPDOWN_MEASURES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "updown/partition.hpp"
#include "updown/rational.hpp"

namespace updown {

// Number of paths from mu up to la in the branching graph of shifted
// diagrams, each path weighted by the product of its edge multiplicities.
// Zero unless mu's diagram is contained in la's.  h(empty, la) is the
// weighted dimension h(la).  Computed by the downward recurrence
//   h(mu, nu) = sum over la covered by nu of h(mu, la) * kappa(la, nu),
// memoized per call (the cache is confined to the call, so concurrent
// callers never share state).
Int path_count(const StrictPartition& mu, const StrictPartition& la);

// The weighted dimension h(la) = path_count(empty, la) by the closed
// product formula
//   h(la) = 2^(n-l) * n! / (la_1! ... la_l!) * prod_{i<j} (la_i - la_j)/(la_i + la_j),
// n = |la|, l = number of rows.  Always an integer.
Int h_closed_form(const StrictPartition& la);

// One-step down transition probability from la to mu = la minus a box:
//   p_down(la, mu) = h(mu) * kappa(mu, la) / h(la).
// Throws std::domain_error if la does not cover mu.
Rat down_prob(const StrictPartition& la, const StrictPartition& mu);

// One-step up transition probability from la to la plus the box of content
// x, for the measure family with parameter alpha:
//   p_up(la, la + box(x)) = (x(x+1) + alpha) / (2|la| + alpha)
//                           * h(la + box) / (h(la) * (|la| + 1)),
// and its alpha -> infinity limit h(la + box) / (h(la) * (|la| + 1)).
// Throws std::domain_error if x is not addable.
Rat up_prob(const StrictPartition& la, std::int64_t x, const Alpha& alpha);

// A probability measure on the strict partitions of one weight.  The
// support vector lists all of them in decreasing lexicographic order and
// weights is aligned with it.
struct MeasureOnLevel {
  std::int64_t n = 0;
  std::optional<Rat> alpha;  // nullopt: the alpha -> infinity member
  std::vector<StrictPartition> support;
  std::vector<Rat> weights;

  const Rat& weight_of(const StrictPartition& la) const;
};

// The weighted-dimension (Plancherel-type) measure on weight n:
//   Pl_n(la) = h(la)^2 * 2^(l(la) - n) / n!.
MeasureOnLevel plancherel_measure(std::int64_t n);

// The multiplicative member with finite parameter alpha > 0:
//   M_n(la) = Pl_n(la) * prod over boxes (c(c+1) + alpha) / Z(n),
//   Z(n) = alpha (alpha+2) ... (alpha + 2n - 2),
// where c runs over the contents 0..la_i-1 of each row i.
MeasureOnLevel multiplicative_measure(std::int64_t n, const Rat& alpha);

// Dispatch on the parameter: finite -> multiplicative, infinite -> Plancherel.
MeasureOnLevel measure_on_level(std::int64_t n, const Alpha& alpha);

struct CoherenceReport {
  bool pass = false;
  std::string detail;  // first violated identity, or a summary of the checks
};

// Exact verification that the measures on weights n and n+1 are coherent:
// the down transitions push the (n+1)-level measure to the n-level one, and
// the up transitions push the n-level measure to the (n+1)-level one.
CoherenceReport verify_coherence(std::int64_t n, const Alpha& alpha);

// Relative dimension via the factorial Schur-Q evaluation:
//   h(mu, la) / h(la) = 2^(-|mu|) * Qstar_mu(la) / (n (n-1) ... (n - |mu| + 1)),
// n = |la|.  Returns that right-hand side (exact rational); callers compare
// it against path_count ratios.  Zero when |mu| > n.
Rat ivanov_dimension(const StrictPartition& mu, const StrictPartition& la);

}  // namespace updown

#endif  // UPDOWN_MEASURES_HPP
