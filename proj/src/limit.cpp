#include "updown/limit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "updown/chains.hpp"
#include "updown/measures.hpp"
#include "updown/rng.hpp"

namespace updown {

SimplexPoint::SimplexPoint(std::vector<Rat> coords) : x(std::move(coords)) {
  while (!x.empty() && x.back() == 0) x.pop_back();
  Rat total(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0)
      throw std::invalid_argument("SimplexPoint: negative coordinate");
    if (i > 0 && x[i] > x[i - 1])
      throw std::invalid_argument("SimplexPoint: coordinates must not increase");
    total += x[i];
  }
  if (total > 1)
    throw std::invalid_argument("SimplexPoint: coordinates sum to more than 1");
}

SimplexPoint embed(const StrictPartition& la, std::int64_t n) {
  if (la.weight() != n)
    throw std::domain_error("embed: diagram weight " +
                            std::to_string(la.weight()) + " is not " +
                            std::to_string(n));
  std::vector<Rat> coords;
  for (auto part : la.parts()) coords.push_back(make_rat(part, n));
  return SimplexPoint(std::move(coords));
}

std::vector<Rat> moments(const SimplexPoint& p, int K) {
  if (K < 0) throw std::domain_error("moments: negative order");
  std::vector<Rat> out;
  for (int k = 1; k <= K; ++k) {
    Rat s(0);
    for (const auto& xi : p.x)
      s += rat_pow(xi, static_cast<unsigned long>(2 * k + 1));
    out.push_back(s);
  }
  return out;
}

Rat exact_moment_direct(std::int64_t n, const Rat& alpha, const GammaPoly& f) {
  MeasureOnLevel m = multiplicative_measure(n, alpha);
  Rat total(0);
  for (std::size_t i = 0; i < m.support.size(); ++i)
    total += m.weights[i] * evaluate(f, m.support[i]);
  return total;
}

Rat exact_moment_expansion(std::int64_t n, const Rat& alpha,
                           const GammaPoly& f) {
  if (f.is_zero()) return Rat(0);
  Rat total(0);
  for (const auto& [mu, c] : expand_in_qstar(f, f.degree())) {
    const std::int64_t k = mu.weight();
    if (k > n) continue;  // the factorial basis element vanishes on the level
    if (k == 0) {
      total += c;
      continue;
    }
    // E[Qstar_mu] = 2^|mu| * n^(falling |mu|) * M_|mu|(mu) / h(mu).
    Rat e = make_rat(falling_factorial(Int(n), static_cast<unsigned long>(k)),
                     h_closed_form(mu));
    mpz_mul_2exp(mpq_numref(e.get_mpq_t()), mpq_numref(e.get_mpq_t()),
                 static_cast<mp_bitcnt_t>(k));
    e.canonicalize();
    e *= multiplicative_measure(k, alpha).weight_of(mu);
    total += c * e;
  }
  return total;
}

Rat exact_moment(std::int64_t n, const Rat& alpha, const GammaPoly& f) {
  return n <= 16 ? exact_moment_direct(n, alpha, f)
                 : exact_moment_expansion(n, alpha, f);
}

McEstimate stationary_moment_mc(std::int64_t n, const Rat& alpha, int k,
                                std::int64_t steps, std::int64_t burn_in,
                                std::uint64_t seed) {
  if (n < 1) throw std::domain_error("stationary_moment_mc: level must be >= 1");
  if (k < 1) throw std::domain_error("stationary_moment_mc: order must be >= 1");
  if (steps < 64)
    throw std::domain_error("stationary_moment_mc: need at least 64 samples");
  const Alpha a(alpha);
  CounterRng rng(seed);
  StrictPartition cur = sample_start(n, a, rng);
  for (std::int64_t s = 0; s < burn_in; ++s) cur = step(cur, a, rng);

  const std::int64_t batches = 64;
  const std::int64_t batch_len = steps / batches;
  const std::int64_t used = batches * batch_len;
  const double dn = static_cast<double>(n);
  const int power = 2 * k + 1;
  std::vector<double> batch_mean(static_cast<std::size_t>(batches), 0.0);
  double total = 0.0;
  for (std::int64_t b = 0; b < batches; ++b) {
    double acc = 0.0;
    for (std::int64_t s = 0; s < batch_len; ++s) {
      cur = step(cur, a, rng);
      double q = 0.0;
      for (auto part : cur.parts())
        q += std::pow(static_cast<double>(part) / dn, power);
      acc += q;
    }
    batch_mean[static_cast<std::size_t>(b)] = acc / static_cast<double>(batch_len);
    total += acc;
  }
  McEstimate est;
  est.mean = total / static_cast<double>(used);
  double ss = 0.0;
  for (double m : batch_mean) {
    double d = m - est.mean;
    ss += d * d;
  }
  double var_of_mean = ss / static_cast<double>(batches - 1) /
                       static_cast<double>(batches);
  est.std_err = std::sqrt(var_of_mean);
  est.n = n;
  est.alpha = rat_to_string(alpha);
  est.steps = used;
  est.burn_in = burn_in;
  est.seed = seed;
  return est;
}

ReconstructedPoint reconstruct_point(
    const std::vector<std::pair<int, double>>& ms, int depth) {
  if (ms.size() < 2)
    throw std::invalid_argument("reconstruct_point: need at least two moments");
  if (depth < 1) throw std::invalid_argument("reconstruct_point: depth < 1");
  for (std::size_t j = 0; j < ms.size(); ++j) {
    if (ms[j].first < 2 || ms[j].first % 2 != 0)
      throw std::invalid_argument(
          "reconstruct_point: orders must be positive even integers");
    if (j > 0 && ms[j].first <= ms[j - 1].first)
      throw std::invalid_argument(
          "reconstruct_point: orders must be strictly increasing");
    if (ms[j].second < 0 || (j > 0 && ms[j].second > ms[j - 1].second))
      throw std::invalid_argument(
          "reconstruct_point: values must be nonnegative and nonincreasing in "
          "the order");
  }
  // Each residual carries an absolute noise bound: the rounding of the input
  // plus the error injected by every coordinate subtraction.  Subtracting the
  // first coordinate wipes out the top-order residuals (they become pure
  // cancellation noise), so each level reads off the highest order whose
  // residual still stands clear of its noise floor; there the single root
  // v^(1/(order+1)) shrinks any relative error by the exponent.
  std::vector<double> resid, noise;
  for (const auto& [o, v] : ms) {
    resid.push_back(v);
    noise.push_back(std::abs(v) * 1e-14 + 1e-300);
  }
  const double safety = 1e4;

  ReconstructedPoint out;
  double prev_coord = 1.0;
  for (int m = 0; m < depth; ++m) {
    std::size_t j = ms.size();
    while (j > 0 && !(resid[j - 1] > safety * noise[j - 1])) --j;
    double xm = 0.0, alt = 0.0;
    if (j >= 1) {
      xm = std::pow(resid[j - 1], 1.0 / (ms[j - 1].first + 1));
      alt = j >= 2 && resid[j - 2] > safety * noise[j - 2]
                ? std::pow(resid[j - 2], 1.0 / (ms[j - 2].first + 1))
                : xm;
    }
    if (xm > prev_coord) xm = prev_coord;  // keep the output ordered
    out.x.push_back(xm);
    out.error.push_back(std::abs(xm - alt));
    prev_coord = xm;
    if (xm == 0.0) continue;
    const double delta = xm * 1e-12;  // cushion over the root's actual error
    for (std::size_t i = 0; i < resid.size(); ++i) {
      const int e = ms[i].first + 1;
      const double sub = std::pow(xm, e);
      resid[i] -= sub;
      noise[i] += e * (sub / xm) * delta + sub * 1e-15;
      if (resid[i] < 0) resid[i] = 0;
    }
  }
  return out;
}

std::vector<Rat> thoma_double_moments(const SimplexPoint& p, int M) {
  if (M < 0) throw std::domain_error("thoma_double_moments: negative order");
  std::vector<Rat> a;  // doubled coordinates, both halves equal to x/2
  for (const auto& xi : p.x) a.push_back(xi / 2);
  std::vector<Rat> out;
  for (int m = 1; m <= M; ++m) {
    Rat s(0);
    for (const auto& ai : a) {
      Rat pw = rat_pow(ai, static_cast<unsigned long>(m + 1));
      s += pw;                      // alpha-coordinate sum
      s += (m % 2 ? -pw : pw);      // beta-coordinate sum, sign (-1)^m
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace updown
