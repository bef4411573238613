#ifndef UPDOWN_CHAINS_HPP
#define UPDOWN_CHAINS_HPP

#include <cstdint>
#include <vector>

#include "updown/measures.hpp"
#include "updown/partition.hpp"
#include "updown/ratmat.hpp"
#include "updown/rational.hpp"
#include "updown/rng.hpp"

namespace updown {

// One level of the state space: the strict partitions of weight n in
// decreasing lexicographic order.
std::vector<StrictPartition> level_states(std::int64_t n);

// Up transition matrix, rows = weight n, cols = weight n+1, entries
// p_up(la, nu); each row sums to 1.
RatMat up_matrix(std::int64_t n, const Alpha& alpha);

// Down transition matrix, rows = weight n+1, cols = weight n, entries
// p_down(nu, mu); each row sums to 1.
RatMat down_matrix(std::int64_t n_plus_1);

// The same two matrices viewed as operators on functions: the down matrix
// averages a weight-n function into a weight-(n+1) function and the up
// matrix averages a weight-(n+1) function into a weight-n one.
struct FunctionOps {
  RatMat down;  // rows weight n+1, cols weight n
  RatMat up;    // rows weight n,   cols weight n+1
};
FunctionOps down_up_function_ops(std::int64_t n, const Alpha& alpha);

// One full step of the up-down chain on weight n: up then down.
struct TransitionMatrix {
  std::int64_t n = 0;
  std::vector<StrictPartition> order;
  RatMat T;
};

// threads <= 1 runs the serial reference; more threads fill rows of the
// product in parallel.  Both give identical exact entries.
TransitionMatrix transition_matrix(std::int64_t n, const Alpha& alpha,
                                   int threads = 1);

// Exact stationarity (pi T = pi) and reversibility (detailed balance) of
// the level-n measure under the chain.
bool check_stationarity(const TransitionMatrix& tm, const MeasureOnLevel& m);
bool check_reversibility(const TransitionMatrix& tm, const MeasureOnLevel& m);

// Spectrum of the one-step chain, checked against the closed form
//   e_m = 1 - m (m - 1 + alpha/2) / ((n+1)(n + alpha/2)),  m = 0, 2, 3, ..., n
// (m = 1 never contributes), with multiplicity
//   #strict(m) - #strict(m-1).
// Two routes: the exact characteristic polynomial (Newton's identities,
// run when the level has at most 12 states) and 256-bit Jacobi on the
// symmetrized matrix (always run; tolerance pinned by the caller).
struct SpectrumResult {
  std::int64_t n = 0;
  std::vector<Rat> values;             // predicted eigenvalues, descending
  std::vector<std::int64_t> multiplicities;
  bool char_poly_checked = false;      // exact route ran
  bool char_poly_match = false;
  std::vector<double> numeric;         // Jacobi eigenvalues, descending
  double max_numeric_error = 0.0;      // against predicted values
};
SpectrumResult spectrum(std::int64_t n, const Alpha& alpha);

// Characteristic polynomial coefficients (constant term first, monic) of a
// square exact matrix, via Newton's identities on the power-sum traces.
std::vector<Rat> char_poly(const RatMat& m);

// One up-down step by exact inverse-CDF sampling: the 64-bit draw is
// compared as the exact rational r / 2^64 against the exact cumulative
// weights, so trajectories are reproducible bit for bit.
StrictPartition step(const StrictPartition& la, const Alpha& alpha,
                     CounterRng& rng);

// Empirical law of one up-down step from la: counts of the arrival states
// over `samples` independent draws.  Draw i always runs on stream i of the
// seed, so the counts are identical for every thread count; threads > 1
// spreads the streams across OpenMP threads.
std::map<StrictPartition, std::int64_t> one_step_law(const StrictPartition& la,
                                                     const Alpha& alpha,
                                                     std::int64_t samples,
                                                     std::uint64_t seed,
                                                     int threads = 1);

struct Trajectory {
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::vector<StrictPartition> states;  // steps + 1 entries, start first
};
Trajectory run(std::int64_t n, const Alpha& alpha, std::int64_t steps,
               std::uint64_t seed, const StrictPartition& start);

// A start state drawn exactly from the level-n member of the measure
// family: inverse-CDF over the whole level for n <= 16, otherwise n up
// steps from the empty diagram.
StrictPartition sample_start(std::int64_t n, const Alpha& alpha,
                             CounterRng& rng);

}  // namespace updown

#endif  // UPDOWN_CHAINS_HPP
