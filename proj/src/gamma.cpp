#include "updown/gamma.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "updown/kerov.hpp"

namespace updown {

std::int64_t generator_weight(VarKind kind, std::size_t i) {
  switch (kind) {
    case VarKind::OddP:
      return 2 * static_cast<std::int64_t>(i) + 1;  // p_{2i+1}
    case VarKind::EvenQ:
      return 2 * static_cast<std::int64_t>(i) + 3;  // q_{2i+2}, deg q_{2k} = 2k+1
    case VarKind::GCoord:
      return 2 * static_cast<std::int64_t>(i) + 1;  // g_{i+1}, deg g_k = 2k-1
  }
  throw std::logic_error("generator_weight: bad kind");
}

std::int64_t expo_weight(VarKind kind, const Expo& e) {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    w += static_cast<std::int64_t>(e[i]) * generator_weight(kind, i);
  return w;
}

namespace {

void trim_expo(Expo& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

void add_term(std::map<Expo, Rat>& terms, Expo e, const Rat& c) {
  if (c == 0) return;
  trim_expo(e);
  auto [it, inserted] = terms.emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

SparsePoly SparsePoly::constant(VarKind kind, const Rat& c) {
  SparsePoly f;
  f.kind = kind;
  if (c != 0) f.terms.emplace(Expo{}, c);
  return f;
}

SparsePoly SparsePoly::generator(VarKind kind, std::size_t i) {
  SparsePoly f;
  f.kind = kind;
  Expo e(i + 1, 0);
  e[i] = 1;
  f.terms.emplace(std::move(e), Rat(1));
  return f;
}

std::int64_t SparsePoly::degree() const {
  std::int64_t d = -1;
  for (const auto& [e, c] : terms) d = std::max(d, expo_weight(kind, e));
  return d;
}

SparsePoly SparsePoly::homogeneous_component(std::int64_t d) const {
  SparsePoly f;
  f.kind = kind;
  for (const auto& [e, c] : terms)
    if (expo_weight(kind, e) == d) f.terms.emplace(e, c);
  return f;
}

SparsePoly SparsePoly::derivative(std::size_t i) const {
  SparsePoly f;
  f.kind = kind;
  for (const auto& [e, c] : terms) {
    if (i >= e.size() || e[i] == 0) continue;
    Expo d = e;
    d[i] -= 1;
    add_term(f.terms, std::move(d), c * Rat(static_cast<long>(e[i])));
  }
  return f;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly f = *this;
  f += o;
  return f;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly f = *this;
  f -= o;
  return f;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (kind != o.kind) throw std::invalid_argument("SparsePoly: kind mismatch");
  for (const auto& [e, c] : o.terms) add_term(terms, e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  if (kind != o.kind) throw std::invalid_argument("SparsePoly: kind mismatch");
  for (const auto& [e, c] : o.terms) add_term(terms, e, -c);
  return *this;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  if (kind != o.kind) throw std::invalid_argument("SparsePoly: kind mismatch");
  SparsePoly f;
  f.kind = kind;
  for (const auto& [ea, ca] : terms)
    for (const auto& [eb, cb] : o.terms) {
      Expo e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      add_term(f.terms, std::move(e), ca * cb);
    }
  return f;
}

SparsePoly SparsePoly::operator*(const Rat& c) const {
  SparsePoly f;
  f.kind = kind;
  if (c == 0) return f;
  for (const auto& [e, coeff] : terms) f.terms.emplace(e, coeff * c);
  return f;
}

std::string SparsePoly::to_string() const {
  if (terms.empty()) return "0";
  auto gen_name = [&](std::size_t i) {
    switch (kind) {
      case VarKind::OddP:
        return "p" + std::to_string(2 * i + 1);
      case VarKind::EvenQ:
        return "q" + std::to_string(2 * i + 2);
      case VarKind::GCoord:
        return "g" + std::to_string(i + 1);
    }
    return std::string("?");
  };
  std::string s;
  for (const auto& [e, c] : terms) {
    if (!s.empty()) s += " + ";
    s += rat_to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      s += "*" + gen_name(i);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
  }
  return s;
}

namespace {

// Power sums p_k(la) for the odd k needed by an exponent vector.
Rat eval_oddp_monomial(const Expo& e, const StrictPartition& la) {
  Rat r(1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    Int ps = 0;
    for (auto part : la.parts())
      ps += int_pow(Int(part), static_cast<unsigned long>(2 * i + 1));
    r *= rat_pow(Rat(ps), e[i]);
  }
  return r;
}

Rat eval_gcoord_monomial(const Expo& e, const std::vector<Rat>& gvals) {
  Rat r(1);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) r *= rat_pow(gvals[i], e[i]);
  return r;
}

}  // namespace

Rat evaluate(const SparsePoly& f, const StrictPartition& la) {
  Rat total(0);
  if (f.kind == VarKind::OddP) {
    for (const auto& [e, c] : f.terms) total += c * eval_oddp_monomial(e, la);
    return total;
  }
  if (f.kind == VarKind::GCoord) {
    std::size_t kmax = 0;
    for (const auto& [e, c] : f.terms) kmax = std::max(kmax, e.size());
    CoordinateVector g =
        coordinates(la, CoordinateKind::G, static_cast<int>(kmax));
    for (const auto& [e, c] : f.terms)
      total += c * eval_gcoord_monomial(e, g.values);
    return total;
  }
  throw std::invalid_argument(
      "evaluate: EvenQ polynomials are evaluated at simplex points");
}

Rat evaluate_quotient(const QuotientPoly& f, const std::vector<Rat>& x) {
  if (f.kind != VarKind::EvenQ)
    throw std::invalid_argument("evaluate_quotient: expected an EvenQ polynomial");
  Rat total(0);
  for (const auto& [e, c] : f.terms) {
    Rat r = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      // generator i is q_{2i+2}(x) = sum_j x_j^{2i+3}
      Rat ps(0);
      for (const auto& xi : x)
        ps += rat_pow(xi, static_cast<unsigned long>(2 * i + 3));
      r *= rat_pow(ps, e[i]);
    }
    total += r;
  }
  return total;
}

GammaPoly q_one_row(std::int64_t r) {
  if (r < 0) throw std::domain_error("q_one_row: negative row length");
  // E(t) = exp(S(t)), S = 2 sum_{k odd} p_k t^k / k, solved from E' = S' E:
  //   m E_m = sum over odd j <= m of 2 p_j E_{m-j}.
  std::vector<GammaPoly> E;
  E.push_back(SparsePoly::constant(VarKind::OddP, Rat(1)));
  for (std::int64_t m = 1; m <= r; ++m) {
    GammaPoly em = SparsePoly::constant(VarKind::OddP, Rat(0));
    for (std::int64_t j = 1; j <= m; j += 2) {
      GammaPoly pj = SparsePoly::generator(
          VarKind::OddP, static_cast<std::size_t>((j - 1) / 2));
      em += (pj * E[static_cast<std::size_t>(m - j)]) * Rat(2);
    }
    E.push_back(em * make_rat(1, m));
  }
  return E[static_cast<std::size_t>(r)];
}

namespace {

// Two-row polynomial Q_(r,s) for r > s >= 0, with Q_(r,0) = q_r.
GammaPoly schur_q_two_row(std::int64_t r, std::int64_t s) {
  GammaPoly f = q_one_row(r) * q_one_row(s);
  for (std::int64_t i = 1; i <= s; ++i) {
    GammaPoly term = q_one_row(r + i) * q_one_row(s - i);
    f += term * Rat(i % 2 ? -2 : 2);
  }
  return f;
}

// Pfaffian of the antisymmetric matrix with upper entries m(i,j), expanded
// along the first remaining index.
GammaPoly pfaffian(const std::vector<std::vector<GammaPoly>>& m,
                   std::vector<std::size_t> idx) {
  if (idx.empty()) return SparsePoly::constant(VarKind::OddP, Rat(1));
  GammaPoly total = SparsePoly::constant(VarKind::OddP, Rat(0));
  const std::size_t i0 = idx[0];
  for (std::size_t t = 1; t < idx.size(); ++t) {
    std::vector<std::size_t> rest;
    for (std::size_t u = 1; u < idx.size(); ++u)
      if (u != t) rest.push_back(idx[u]);
    GammaPoly sub = pfaffian(m, std::move(rest));
    GammaPoly contrib = m[i0][idx[t]] * sub;
    total += (t % 2 ? contrib : contrib * Rat(-1));
  }
  return total;
}

}  // namespace

GammaPoly schur_q(const StrictPartition& la) {
  const auto& p = la.parts();
  if (p.empty()) return SparsePoly::constant(VarKind::OddP, Rat(1));
  if (p.size() == 1) return q_one_row(p[0]);
  if (p.size() == 2) return schur_q_two_row(p[0], p[1]);
  std::vector<std::int64_t> rows = p;
  if (rows.size() % 2) rows.push_back(0);
  const std::size_t L = rows.size();
  std::vector<std::vector<GammaPoly>> m(L, std::vector<GammaPoly>(L));
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i + 1; j < L; ++j)
      m[i][j] = schur_q_two_row(rows[i], rows[j]);
  std::vector<std::size_t> idx(L);
  for (std::size_t i = 0; i < L; ++i) idx[i] = i;
  return pfaffian(m, std::move(idx));
}

Rat schur_q_factorial_eval(const StrictPartition& mu,
                           const StrictPartition& la) {
  const std::size_t l = mu.length();
  const std::size_t n = la.length();
  if (l > n) return Rat(0);
  if (n == 0) return Rat(1);  // mu and la both empty
  std::vector<std::int64_t> y = la.parts();
  std::sort(y.begin(), y.end());
  Rat total(0);
  do {
    // prod_i y_i^(falling mu_i)
    Rat term(1);
    for (std::size_t i = 0; i < l; ++i)
      term *= Rat(falling_factorial(Int(y[i]),
                                    static_cast<unsigned long>(mu.part(i))));
    if (term == 0) continue;
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        term *= make_rat(y[i] + y[j], y[i] - y[j]);
    total += term;
  } while (std::next_permutation(y.begin(), y.end()));
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n - l));
  total /= Rat(fact);
  mpz_mul_2exp(mpq_numref(total.get_mpq_t()), mpq_numref(total.get_mpq_t()),
               static_cast<mp_bitcnt_t>(l));
  total.canonicalize();
  return total;
}

namespace {

void enumerate_monomials_rec(VarKind kind, std::int64_t budget, std::size_t gen,
                             Expo& cur, std::vector<Expo>& out) {
  // Record the current exponent vector, then extend with generators >= gen.
  Expo trimmed = cur;
  trim_expo(trimmed);
  out.push_back(std::move(trimmed));
  for (std::size_t i = gen;; ++i) {
    std::int64_t w = generator_weight(kind, i);
    if (w > budget) break;
    cur.resize(std::max(cur.size(), i + 1), 0);
    ++cur[i];
    enumerate_monomials_rec(kind, budget - w, i, cur, out);
    --cur[i];
    trim_expo(cur);
  }
}

std::vector<Expo> monomials_up_to(VarKind kind, std::int64_t m) {
  std::vector<Expo> out;
  Expo cur;
  enumerate_monomials_rec(kind, m, 0, cur, out);
  std::sort(out.begin(), out.end(), [&](const Expo& a, const Expo& b) {
    auto wa = expo_weight(kind, a), wb = expo_weight(kind, b);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return out;
}

std::vector<StrictPartition> points_up_to(std::int64_t m) {
  std::vector<StrictPartition> pts;
  for (std::int64_t w = 0; w <= m; ++w)
    for (auto& la : enumerate_strict(w)) pts.push_back(std::move(la));
  return pts;
}

std::mutex grid_mutex;
std::map<std::int64_t, std::unique_ptr<const EvaluationGrid>> grid_cache;

const EvaluationGrid& build_grid(std::int64_t m) {
  if (m < 0) throw std::domain_error("evaluation_grid: negative weight");
  std::lock_guard<std::mutex> lock(grid_mutex);
  auto it = grid_cache.find(m);
  if (it != grid_cache.end()) return *it->second;

  auto grid = std::make_unique<EvaluationGrid>();
  grid->max_weight = m;
  grid->points = points_up_to(m);
  grid->monomials = monomials_up_to(VarKind::OddP, m);
  if (grid->points.size() != grid->monomials.size())
    throw std::logic_error(
        "evaluation_grid: point and monomial counts disagree");
  const std::size_t P = grid->points.size();
  grid->values = RatMat(P, P);
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = 0; j < P; ++j)
      grid->values(i, j) = eval_oddp_monomial(grid->monomials[j], grid->points[i]);
  grid->inverse = grid->values.inverse();
  grid->qstar_values = RatMat(P, P);
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = 0; j < P; ++j)
      grid->qstar_values(i, j) =
          schur_q_factorial_eval(grid->points[j], grid->points[i]);
  grid->qstar_inverse = grid->qstar_values.inverse();

  auto [pos, ok] = grid_cache.emplace(m, std::move(grid));
  return *pos->second;
}

}  // namespace

const EvaluationGrid& evaluation_grid(std::int64_t m) { return build_grid(m); }

std::vector<Expo> monomial_basis(VarKind kind, std::int64_t m) {
  if (m < 0) throw std::domain_error("monomial_basis: negative degree bound");
  return monomials_up_to(kind, m);
}

GammaPoly to_monomial_basis(const std::vector<Rat>& values, std::int64_t m) {
  const EvaluationGrid& grid = evaluation_grid(m);
  if (values.size() != grid.points.size())
    throw std::invalid_argument("to_monomial_basis: value count mismatch");
  std::vector<Rat> coeffs = grid.inverse.apply(values);
  GammaPoly f;
  f.kind = VarKind::OddP;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) f.terms.emplace(grid.monomials[j], coeffs[j]);
  return f;
}

std::map<StrictPartition, Rat> expand_in_qstar(const GammaPoly& f,
                                               std::int64_t m) {
  if (f.kind != VarKind::OddP)
    throw std::invalid_argument("expand_in_qstar: expected an OddP polynomial");
  if (f.degree() > m)
    throw std::domain_error("expand_in_qstar: polynomial degree exceeds grid");
  const EvaluationGrid& grid = evaluation_grid(m);
  std::vector<Rat> values(grid.points.size());
  for (std::size_t i = 0; i < grid.points.size(); ++i)
    values[i] = evaluate(f, grid.points[i]);
  std::vector<Rat> coeffs = grid.qstar_inverse.apply(values);
  std::map<StrictPartition, Rat> out;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) out.emplace(grid.points[j], coeffs[j]);
  return out;
}

namespace {

std::mutex qstar_mutex;
std::map<StrictPartition, GammaPoly> qstar_cache;

}  // namespace

GammaPoly schur_q_factorial_symbolic(const StrictPartition& mu) {
  {
    std::lock_guard<std::mutex> lock(qstar_mutex);
    auto it = qstar_cache.find(mu);
    if (it != qstar_cache.end()) return it->second;
  }
  const std::int64_t m = mu.weight();
  const EvaluationGrid& grid = evaluation_grid(m);
  std::vector<Rat> values(grid.points.size());
  for (std::size_t i = 0; i < grid.points.size(); ++i)
    values[i] = schur_q_factorial_eval(mu, grid.points[i]);
  GammaPoly f = to_monomial_basis(values, m);
  std::lock_guard<std::mutex> lock(qstar_mutex);
  qstar_cache.emplace(mu, f);
  return f;
}

GammaPoly g_symbolic(std::int64_t k, std::int64_t degree_bound) {
  if (k < 1) throw std::domain_error("g_symbolic: order must be >= 1");
  const std::int64_t deg = 2 * k - 1;
  if (degree_bound != -1 && degree_bound < deg)
    throw std::domain_error("g_symbolic: degree bound below the exact degree " +
                            std::to_string(deg));
  const EvaluationGrid& grid = evaluation_grid(deg);
  std::vector<Rat> values(grid.points.size());
  for (std::size_t i = 0; i < grid.points.size(); ++i)
    values[i] = coordinates(grid.points[i], CoordinateKind::G,
                            static_cast<int>(k))
                    .values[static_cast<std::size_t>(k - 1)];
  return to_monomial_basis(values, deg);
}

GammaPoly boldp_symbolic(std::int64_t m, std::int64_t degree_bound) {
  if (m < 1) throw std::domain_error("boldp_symbolic: order must be >= 1");
  const std::int64_t deg = 2 * m - 1;
  if (degree_bound != -1 && degree_bound < deg)
    throw std::domain_error(
        "boldp_symbolic: degree bound below the exact degree " +
        std::to_string(deg));
  const EvaluationGrid& grid = evaluation_grid(deg);
  std::vector<Rat> values(grid.points.size());
  for (std::size_t i = 0; i < grid.points.size(); ++i)
    values[i] = coordinates(grid.points[i], CoordinateKind::BoldP,
                            static_cast<int>(m))
                    .values[static_cast<std::size_t>(m - 1)];
  return to_monomial_basis(values, deg);
}

namespace {

std::mutex gbasis_mutex;
std::map<std::int64_t, RatMat> gbasis_inverse_cache;

}  // namespace

SparsePoly expand_in_g(const GammaPoly& f, std::int64_t M) {
  if (f.kind != VarKind::OddP)
    throw std::invalid_argument("expand_in_g: expected an OddP polynomial");
  if (f.degree() > M)
    throw std::domain_error("expand_in_g: polynomial degree exceeds bound");
  const EvaluationGrid& grid = evaluation_grid(M);
  const std::size_t P = grid.points.size();
  RatMat inv;
  {
    std::lock_guard<std::mutex> lock(gbasis_mutex);
    auto it = gbasis_inverse_cache.find(M);
    if (it != gbasis_inverse_cache.end()) inv = it->second;
  }
  if (inv.rows() == 0) {
    // Values of the g-monomials on the grid points.  The GCoord grading
    // assigns g_{i+1} the same weight as p_{2i+1}, so the OddP exponent
    // list doubles as the GCoord monomial list.
    const int kmax = static_cast<int>((M + 1) / 2);
    RatMat vals(P, P);
    for (std::size_t i = 0; i < P; ++i) {
      CoordinateVector g =
          coordinates(grid.points[i], CoordinateKind::G, kmax);
      for (std::size_t j = 0; j < P; ++j)
        vals(i, j) = eval_gcoord_monomial(grid.monomials[j], g.values);
    }
    inv = vals.inverse();
    std::lock_guard<std::mutex> lock(gbasis_mutex);
    gbasis_inverse_cache.emplace(M, inv);
  }
  std::vector<Rat> values(P);
  for (std::size_t i = 0; i < P; ++i) values[i] = evaluate(f, grid.points[i]);
  std::vector<Rat> coeffs = inv.apply(values);
  SparsePoly out;
  out.kind = VarKind::GCoord;
  for (std::size_t j = 0; j < P; ++j)
    if (coeffs[j] != 0) out.terms.emplace(grid.monomials[j], coeffs[j]);
  return out;
}

QuotientPoly project(const GammaPoly& f) {
  if (f.kind != VarKind::OddP)
    throw std::invalid_argument("project: expected an OddP polynomial");
  QuotientPoly out;
  out.kind = VarKind::EvenQ;
  for (const auto& [e, c] : f.terms) {
    // p_1 -> 1 (drop exponent 0), p_{2i+1} -> q_{2i} (shift down by one).
    Expo q(e.size() > 1 ? e.size() - 1 : 0, 0);
    for (std::size_t i = 1; i < e.size(); ++i) q[i - 1] = e[i];
    add_term(out.terms, std::move(q), c);
  }
  return out;
}

GammaPoly lift(const QuotientPoly& f) {
  if (f.kind != VarKind::EvenQ)
    throw std::invalid_argument("lift: expected an EvenQ polynomial");
  GammaPoly out;
  out.kind = VarKind::OddP;
  for (const auto& [e, c] : f.terms) {
    Expo p(e.size() + 1, 0);
    for (std::size_t i = 0; i < e.size(); ++i) p[i + 1] = e[i];
    add_term(out.terms, std::move(p), c);
  }
  return out;
}

}  // namespace updown
