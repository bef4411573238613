#include "updown/chains.hpp"

#include <map>
#include <stdexcept>

#include "updown/bigfloat.hpp"
#include "updown/kerov.hpp"

#ifdef UPDOWN_HAVE_OPENMP
#include <omp.h>
#endif

namespace updown {

std::vector<StrictPartition> level_states(std::int64_t n) {
  return enumerate_strict(n);
}

namespace {

std::map<StrictPartition, std::size_t> index_of(
    const std::vector<StrictPartition>& states) {
  std::map<StrictPartition, std::size_t> idx;
  for (std::size_t i = 0; i < states.size(); ++i) idx.emplace(states[i], i);
  return idx;
}

}  // namespace

RatMat up_matrix(std::int64_t n, const Alpha& alpha) {
  auto lo = level_states(n);
  auto hi = level_states(n + 1);
  auto hi_idx = index_of(hi);
  RatMat up(lo.size(), hi.size());
  for (std::size_t i = 0; i < lo.size(); ++i)
    for (auto x : addable_contents(lo[i])) {
      StrictPartition nu = add_box(lo[i], x);
      up(i, hi_idx.at(nu)) = up_prob(lo[i], x, alpha);
    }
  return up;
}

RatMat down_matrix(std::int64_t n_plus_1) {
  if (n_plus_1 < 1)
    throw std::domain_error("down_matrix: weight must be at least 1");
  auto hi = level_states(n_plus_1);
  auto lo = level_states(n_plus_1 - 1);
  auto lo_idx = index_of(lo);
  RatMat down(hi.size(), lo.size());
  for (std::size_t i = 0; i < hi.size(); ++i)
    for (auto y : removable_contents(hi[i])) {
      StrictPartition mu = remove_box(hi[i], y);
      down(i, lo_idx.at(mu)) = down_prob(hi[i], mu);
    }
  return down;
}

FunctionOps down_up_function_ops(std::int64_t n, const Alpha& alpha) {
  return FunctionOps{down_matrix(n + 1), up_matrix(n, alpha)};
}

namespace {

// Row i of the product up * down, written into the preallocated row.
void product_row(const RatMat& up, const RatMat& down, std::size_t i,
                 RatMat& t) {
  for (std::size_t k = 0; k < up.cols(); ++k) {
    const Rat& uik = up(i, k);
    if (uik == 0) continue;
    for (std::size_t j = 0; j < down.cols(); ++j) {
      const Rat& dkj = down(k, j);
      if (dkj != 0) t(i, j) += uik * dkj;
    }
  }
}

}  // namespace

TransitionMatrix transition_matrix(std::int64_t n, const Alpha& alpha,
                                   int threads) {
  TransitionMatrix tm;
  tm.n = n;
  tm.order = level_states(n);
  RatMat up = up_matrix(n, alpha);
  RatMat down = down_matrix(n + 1);
  const std::size_t N = tm.order.size();
  tm.T = RatMat(N, N);
#ifdef UPDOWN_HAVE_OPENMP
  if (threads > 1) {
    #pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(N); ++i)
      product_row(up, down, static_cast<std::size_t>(i), tm.T);
    return tm;
  }
#endif
  (void)threads;
  for (std::size_t i = 0; i < N; ++i) product_row(up, down, i, tm.T);
  return tm;
}

bool check_stationarity(const TransitionMatrix& tm, const MeasureOnLevel& m) {
  if (m.support != tm.order) return false;
  const std::size_t N = tm.order.size();
  for (std::size_t j = 0; j < N; ++j) {
    Rat s(0);
    for (std::size_t i = 0; i < N; ++i) s += m.weights[i] * tm.T(i, j);
    if (s != m.weights[j]) return false;
  }
  return true;
}

bool check_reversibility(const TransitionMatrix& tm, const MeasureOnLevel& m) {
  if (m.support != tm.order) return false;
  const std::size_t N = tm.order.size();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (m.weights[i] * tm.T(i, j) != m.weights[j] * tm.T(j, i)) return false;
  return true;
}

std::vector<Rat> char_poly(const RatMat& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("char_poly: matrix not square");
  const std::size_t N = m.rows();
  // Power sums tr(m^k), k = 1..N.
  std::vector<Rat> power(N + 1, Rat(0));
  RatMat acc = m;
  for (std::size_t k = 1; k <= N; ++k) {
    power[k] = acc.trace();
    if (k < N) acc = acc * m;
  }
  // Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} power_i.
  std::vector<Rat> e(N + 1, Rat(0));
  e[0] = 1;
  for (std::size_t k = 1; k <= N; ++k) {
    Rat s(0);
    for (std::size_t i = 1; i <= k; ++i) {
      Rat term = e[k - i] * power[i];
      s += (i % 2 ? term : -term);
    }
    e[k] = s / Rat(static_cast<long>(k));
  }
  // char(x) = sum_k (-1)^k e_k x^(N-k), constant term first.
  std::vector<Rat> coeffs(N + 1, Rat(0));
  for (std::size_t k = 0; k <= N; ++k)
    coeffs[N - k] = (k % 2 ? -e[k] : e[k]);
  return coeffs;
}

namespace {

// Predicted eigenvalue for index m.
Rat predicted_eigenvalue(std::int64_t n, std::int64_t m, const Alpha& alpha) {
  if (m == 0) return Rat(1);
  if (alpha.is_infinite()) return Rat(1) - make_rat(m, n + 1);
  const Rat& a = alpha.value();
  Rat num = Rat(m) * (Rat(m - 1) + a / 2);
  Rat den = Rat(n + 1) * (Rat(n) + a / 2);
  return Rat(1) - num / den;
}

}  // namespace

SpectrumResult spectrum(std::int64_t n, const Alpha& alpha) {
  SpectrumResult res;
  res.n = n;
  for (std::int64_t m = 0; m <= n; ++m) {
    std::int64_t mult =
        (m == 0) ? 1
                 : static_cast<std::int64_t>(count_strict(m)) -
                       static_cast<std::int64_t>(count_strict(m - 1));
    if (mult <= 0) continue;
    res.values.push_back(predicted_eigenvalue(n, m, alpha));
    res.multiplicities.push_back(mult);
  }

  TransitionMatrix tm = transition_matrix(n, alpha);
  const std::size_t N = tm.order.size();

  // Exact route: the characteristic polynomial must equal the product of
  // (x - e_m)^mult.
  if (N <= 12) {
    res.char_poly_checked = true;
    Poly predicted{Rat(1)};
    for (std::size_t t = 0; t < res.values.size(); ++t)
      for (std::int64_t rep = 0; rep < res.multiplicities[t]; ++rep)
        predicted = poly_mul(predicted, Poly{-res.values[t], Rat(1)});
    Poly actual = char_poly(tm.T);
    poly_trim(actual);
    res.char_poly_match = (predicted == actual);
  }

  // Numeric route: Jacobi on the reversibility-symmetrized matrix
  // s_ij = sqrt(t_ij t_ji), similar to T when detailed balance holds.
  std::vector<std::vector<Float256>> s(N, std::vector<Float256>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) {
      Float256 v = Float256(tm.T(i, j) * tm.T(j, i)).sqrt();
      s[i][j] = v;
      s[j][i] = v;
    }
  std::vector<Float256> eigs = jacobi_eigenvalues(std::move(s));
  double max_err = 0.0;
  std::size_t pos = 0;
  for (std::size_t t = 0; t < res.values.size(); ++t) {
    Float256 target(res.values[t]);
    for (std::int64_t rep = 0; rep < res.multiplicities[t]; ++rep, ++pos) {
      double err = (eigs[pos] - target).abs().to_double();
      if (err > max_err) max_err = err;
    }
  }
  res.max_numeric_error = max_err;
  res.numeric.reserve(N);
  for (const auto& ev : eigs) res.numeric.push_back(ev.to_double());
  return res;
}

namespace {

// Exact inverse-CDF pick: weights must sum to 1; the draw r is compared as
// r / 2^64 against the cumulative sums.
std::size_t pick(const std::vector<Rat>& weights, std::uint64_t r) {
  Int rr(static_cast<unsigned long>(r));
  Rat cum(0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    cum += weights[i];
    // r / 2^64 < cum  <=>  r < cum * 2^64
    Rat scaled = cum;
    mpz_mul_2exp(mpq_numref(scaled.get_mpq_t()), mpq_numref(scaled.get_mpq_t()),
                 64);
    scaled.canonicalize();
    if (Rat(rr) < scaled) return i;
  }
  return weights.size() - 1;  // guard against a rounding-free total < 1 draw
}

}  // namespace

StrictPartition step(const StrictPartition& la, const Alpha& alpha,
                     CounterRng& rng) {
  // Up move, weights from the interlacing-coordinate residues:
  //   p_up(la, la + box(x)) = (x(x+1) + alpha) / (2|la| + alpha) * theta_up_x,
  // with the plain residues in the infinite-parameter limit.
  auto th = theta_up(la);
  std::vector<std::int64_t> xs;
  std::vector<Rat> weights;
  for (const auto& [x, t] : th) {
    xs.push_back(x);
    if (alpha.is_infinite()) {
      weights.push_back(t);
    } else {
      const Rat& a = alpha.value();
      weights.push_back(t * (Rat(x) * Rat(x + 1) + a) /
                        (Rat(2 * la.weight()) + a));
    }
  }
  StrictPartition nu = add_box(la, xs[pick(weights, rng.next_u64())]);

  // Down move: p_down(nu, nu - box(y)) = theta_down_y / (2 |nu|).
  auto td = theta_down(nu);
  std::vector<std::int64_t> ys;
  std::vector<Rat> dweights;
  for (const auto& [y, t] : td) {
    ys.push_back(y);
    dweights.push_back(t / Rat(2 * nu.weight()));
  }
  return remove_box(nu, ys[pick(dweights, rng.next_u64())]);
}

std::map<StrictPartition, std::int64_t> one_step_law(const StrictPartition& la,
                                                     const Alpha& alpha,
                                                     std::int64_t samples,
                                                     std::uint64_t seed,
                                                     int threads) {
  std::map<StrictPartition, std::int64_t> counts;
#ifdef UPDOWN_HAVE_OPENMP
  if (threads > 1) {
    #pragma omp parallel num_threads(threads)
    {
      std::map<StrictPartition, std::int64_t> local;
      #pragma omp for schedule(static)
      for (std::int64_t i = 0; i < samples; ++i) {
        CounterRng rng(seed, static_cast<std::uint64_t>(i));
        ++local[step(la, alpha, rng)];
      }
      #pragma omp critical
      for (const auto& [state, c] : local) counts[state] += c;
    }
    return counts;
  }
#endif
  (void)threads;
  for (std::int64_t i = 0; i < samples; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    ++counts[step(la, alpha, rng)];
  }
  return counts;
}

Trajectory run(std::int64_t n, const Alpha& alpha, std::int64_t steps,
               std::uint64_t seed, const StrictPartition& start) {
  if (start.weight() != n)
    throw std::domain_error("run: start state is not on level " +
                            std::to_string(n));
  Trajectory tr;
  tr.n = n;
  tr.seed = seed;
  tr.states.reserve(static_cast<std::size_t>(steps) + 1);
  tr.states.push_back(start);
  CounterRng rng(seed);
  StrictPartition cur = start;
  for (std::int64_t s = 0; s < steps; ++s) {
    cur = step(cur, alpha, rng);
    tr.states.push_back(cur);
  }
  return tr;
}

StrictPartition sample_start(std::int64_t n, const Alpha& alpha,
                             CounterRng& rng) {
  if (n <= 16) {
    MeasureOnLevel m = measure_on_level(n, alpha);
    return m.support[pick(m.weights, rng.next_u64())];
  }
  StrictPartition cur;
  for (std::int64_t s = 0; s < n; ++s) {
    auto th = theta_up(cur);
    std::vector<std::int64_t> xs;
    std::vector<Rat> weights;
    for (const auto& [x, t] : th) {
      xs.push_back(x);
      if (alpha.is_infinite()) {
        weights.push_back(t);
      } else {
        const Rat& a = alpha.value();
        weights.push_back(t * (Rat(x) * Rat(x + 1) + a) /
                          (Rat(2 * cur.weight()) + a));
      }
    }
    cur = add_box(cur, xs[pick(weights, rng.next_u64())]);
  }
  return cur;
}

}  // namespace updown
