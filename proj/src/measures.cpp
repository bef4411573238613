#include "updown/measures.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "updown/gamma.hpp"

namespace updown {

namespace {

Int path_count_rec(const StrictPartition& mu, const StrictPartition& nu,
                   std::map<StrictPartition, Int>& memo) {
  if (nu.weight() == mu.weight()) return nu == mu ? 1 : 0;
  if (!nu.contains(mu)) return 0;
  auto it = memo.find(nu);
  if (it != memo.end()) return it->second;
  Int total = 0;
  for (auto y : removable_contents(nu)) {
    StrictPartition la = remove_box(nu, y);
    if (!la.contains(mu)) continue;
    total += path_count_rec(mu, la, memo) * edge_multiplicity(la, nu);
  }
  memo.emplace(nu, total);
  return total;
}

}  // namespace

Int path_count(const StrictPartition& mu, const StrictPartition& la) {
  if (la.weight() < mu.weight() || !la.contains(mu)) return 0;
  std::map<StrictPartition, Int> memo;  // confined to this call
  return path_count_rec(mu, la, memo);
}

Int h_closed_form(const StrictPartition& la) {
  const auto& p = la.parts();
  const std::size_t l = p.size();
  const std::int64_t n = la.weight();
  // 2^(n-l) * n! / prod(parts!)
  Rat r(1);
  mpz_mul_2exp(mpq_numref(r.get_mpq_t()), mpq_numref(r.get_mpq_t()),
               static_cast<mp_bitcnt_t>(n - static_cast<std::int64_t>(l)));
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  r *= fact;
  for (auto part : p) {
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(part));
    r /= Rat(fact);
  }
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      r *= make_rat(p[i] - p[j], p[i] + p[j]);
  if (r.get_den() != 1)
    throw std::logic_error("h_closed_form: non-integral result for " +
                           la.to_string());
  return r.get_num();
}

Rat down_prob(const StrictPartition& la, const StrictPartition& mu) {
  int kappa = edge_multiplicity(mu, la);
  if (kappa == 0)
    throw std::domain_error("down_prob: " + la.to_string() +
                            " does not cover " + mu.to_string());
  return make_rat(h_closed_form(mu) * kappa, h_closed_form(la));
}

Rat up_prob(const StrictPartition& la, std::int64_t x, const Alpha& alpha) {
  StrictPartition nu = add_box(la, x);  // validates x, names it on error
  const std::int64_t n = la.weight();
  Rat dim_ratio = make_rat(h_closed_form(nu), h_closed_form(la) * (n + 1));
  if (alpha.is_infinite()) return dim_ratio;
  const Rat& a = alpha.value();
  Rat weight = (Rat(x) * Rat(x + 1) + a) / (Rat(2 * n) + a);
  return weight * dim_ratio;
}

const Rat& MeasureOnLevel::weight_of(const StrictPartition& la) const {
  for (std::size_t i = 0; i < support.size(); ++i)
    if (support[i] == la) return weights[i];
  throw std::domain_error("MeasureOnLevel: " + la.to_string() +
                          " is not on level " + std::to_string(n));
}

MeasureOnLevel plancherel_measure(std::int64_t n) {
  if (n < 0) throw std::domain_error("plancherel_measure: negative level");
  MeasureOnLevel m;
  m.n = n;
  m.support = enumerate_strict(n);
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  for (const auto& la : m.support) {
    Int h = h_closed_form(la);
    Rat w = make_rat(h * h, fact);
    // times 2^(l - n), i.e. divided by 2^(n - l)
    mpz_mul_2exp(mpq_denref(w.get_mpq_t()), mpq_denref(w.get_mpq_t()),
                 static_cast<mp_bitcnt_t>(n - static_cast<std::int64_t>(la.length())));
    w.canonicalize();
    m.weights.push_back(std::move(w));
  }
  return m;
}

MeasureOnLevel multiplicative_measure(std::int64_t n, const Rat& alpha) {
  if (alpha <= 0)
    throw std::domain_error("multiplicative_measure: parameter must be positive");
  MeasureOnLevel pl = plancherel_measure(n);
  MeasureOnLevel m;
  m.n = n;
  m.alpha = alpha;
  m.support = std::move(pl.support);
  Rat z(1);  // Z(n) = alpha (alpha+2) ... (alpha + 2n - 2)
  for (std::int64_t k = 0; k < n; ++k) z *= alpha + Rat(2 * k);
  for (std::size_t idx = 0; idx < m.support.size(); ++idx) {
    Rat w = pl.weights[idx];
    for (auto part : m.support[idx].parts())
      for (std::int64_t c = 0; c < part; ++c)
        w *= Rat(c) * Rat(c + 1) + alpha;
    m.weights.push_back(w / z);
  }
  return m;
}

MeasureOnLevel measure_on_level(std::int64_t n, const Alpha& alpha) {
  return alpha.is_infinite() ? plancherel_measure(n)
                             : multiplicative_measure(n, alpha.value());
}

CoherenceReport verify_coherence(std::int64_t n, const Alpha& alpha) {
  MeasureOnLevel mn = measure_on_level(n, alpha);
  MeasureOnLevel mn1 = measure_on_level(n + 1, alpha);

  CoherenceReport rep;
  // Down coherence: M_n(mu) = sum over la covering mu of M_{n+1}(la) p_down(la, mu).
  for (std::size_t i = 0; i < mn.support.size(); ++i) {
    const auto& mu = mn.support[i];
    Rat total(0);
    for (std::size_t j = 0; j < mn1.support.size(); ++j) {
      const auto& la = mn1.support[j];
      if (edge_multiplicity(mu, la) == 0) continue;
      total += mn1.weights[j] * down_prob(la, mu);
    }
    if (total != mn.weights[i]) {
      rep.detail = "down coherence fails at " + mu.to_string() + ": expected " +
                   rat_to_string(mn.weights[i]) + ", got " + rat_to_string(total);
      return rep;
    }
  }
  // Up coherence: M_{n+1}(nu) = sum over la covered by nu of M_n(la) p_up(la, nu).
  for (std::size_t j = 0; j < mn1.support.size(); ++j) {
    const auto& nu = mn1.support[j];
    Rat total(0);
    for (auto y : removable_contents(nu)) {
      StrictPartition la = remove_box(nu, y);
      total += mn.weight_of(la) * up_prob(la, y, alpha);
    }
    if (total != mn1.weights[j]) {
      rep.detail = "up coherence fails at " + nu.to_string() + ": expected " +
                   rat_to_string(mn1.weights[j]) + ", got " + rat_to_string(total);
      return rep;
    }
  }
  // Normalization of both levels.
  for (const MeasureOnLevel* m : {&mn, &mn1}) {
    Rat total(0);
    for (const auto& w : m->weights) {
      if (w < 0) {
        rep.detail = "negative weight on level " + std::to_string(m->n);
        return rep;
      }
      total += w;
    }
    if (total != 1) {
      rep.detail = "level " + std::to_string(m->n) + " weights sum to " +
                   rat_to_string(total);
      return rep;
    }
  }
  rep.pass = true;
  rep.detail = "levels " + std::to_string(n) + " and " + std::to_string(n + 1) +
               " coherent (parameter " + alpha.to_string() + ")";
  return rep;
}

Rat ivanov_dimension(const StrictPartition& mu, const StrictPartition& la) {
  const std::int64_t k = mu.weight();
  const std::int64_t n = la.weight();
  if (k > n) return Rat(0);
  Rat value = schur_q_factorial_eval(mu, la);
  Int denom = falling_factorial(Int(n), static_cast<unsigned long>(k));
  // 2^(-k) * Qstar_mu(la) / n^(falling k)
  Rat scale = make_rat(Int(1), denom);
  mpz_mul_2exp(mpq_denref(scale.get_mpq_t()), mpq_denref(scale.get_mpq_t()),
               static_cast<mp_bitcnt_t>(k));
  scale.canonicalize();
  return value * scale;
}

}  // namespace updown
