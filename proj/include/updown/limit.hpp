#ifndef UPDOWN_LIMIT_HPP
#define UPDOWN_LIMIT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "updown/gamma.hpp"
#include "updown/partition.hpp"
#include "updown/rational.hpp"

namespace updown {

// A point of the closed ordered simplex: x_1 >= x_2 >= ... >= 0 with
// sum x_i <= 1 (trailing zeros trimmed).
struct SimplexPoint {
  std::vector<Rat> x;

  explicit SimplexPoint(std::vector<Rat> coords = {});
};

// The scaled shape of a weight-n diagram: coordinates la_i / n.
SimplexPoint embed(const StrictPartition& la, std::int64_t n);

// Moment coordinates q_{2k}(x) = sum_i x_i^{2k+1} for k = 1..K.
std::vector<Rat> moments(const SimplexPoint& p, int K);

// Expectation of an OddP polynomial under the level-n member of the
// measure family.  Two exact routes:
//   * direct summation over the level (n <= 16),
//   * expansion in the factorial basis plus the closed-form expectations
//       E[Qstar_mu] = 2^|mu| * n^(falling |mu|) * M_{|mu|}(mu) / h(mu),
// which works for every n.  exact_moment picks direct for n <= 16 and the
// expansion otherwise; both are exported for cross-checking.
Rat exact_moment(std::int64_t n, const Rat& alpha, const GammaPoly& f);
Rat exact_moment_direct(std::int64_t n, const Rat& alpha, const GammaPoly& f);
Rat exact_moment_expansion(std::int64_t n, const Rat& alpha,
                           const GammaPoly& f);

// Monte Carlo estimate of the stationary mean of q_{2k} on the scaled
// level-n chain, by one long trajectory with batch means: the post-burn-in
// stretch is cut into 64 batches and the standard error is the sample
// deviation of the batch means over sqrt(batches).
struct McEstimate {
  double mean = 0.0;
  double std_err = 0.0;
  std::int64_t n = 0;
  std::string alpha;
  std::int64_t steps = 0;     // post-burn-in samples
  std::int64_t burn_in = 0;
  std::uint64_t seed = 0;
};
McEstimate stationary_moment_mc(std::int64_t n, const Rat& alpha, int k,
                                std::int64_t steps, std::int64_t burn_in,
                                std::uint64_t seed);

// Greedy reconstruction of the largest coordinates from moment values
// q_{2k_1}, ..., q_{2k_r} (pairs of (2k, value), strictly increasing
// even orders, at least two of them): coordinate m+1 is read off the
// largest order as (residual)^(1/(2k_max+1)) and subtracted from every
// moment.  Returns the coordinates and an error estimate per coordinate
// (the disagreement between the two largest orders).  Throws
// std::invalid_argument when the input violates the monotonicity a moment
// sequence must satisfy.
struct ReconstructedPoint {
  std::vector<double> x;
  std::vector<double> error;
};
ReconstructedPoint reconstruct_point(
    const std::vector<std::pair<int, double>>& moments, int depth);

// Moment coordinates of the doubled point: the doubling map sends x to the
// pair (x/2; x/2), and the super power sums of a pair (a; b) are
//   qhat_m(a; b) = sum_i a_i^(m+1) + (-1)^m sum_i b_i^(m+1),
// so qhat_m(doubled x) = 2^-m q_m(x) for even m and 0 for odd m.
// Returns qhat_1 .. qhat_M computed from the doubled coordinates.
std::vector<Rat> thoma_double_moments(const SimplexPoint& p, int M);

}  // namespace updown

#endif  // UPDOWN_LIMIT_HPP
