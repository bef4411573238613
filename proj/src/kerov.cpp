#include "updown/kerov.hpp"

#include <algorithm>
#include <stdexcept>

namespace updown {

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

Poly poly_scale(const Poly& a, const Rat& c) {
  if (c == 0) return {};
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

Rat poly_eval(const Poly& a, const Rat& v) {
  Rat r(0);
  for (std::size_t i = a.size(); i-- > 0;) r = r * v + a[i];
  return r;
}

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly series_mul(const Poly& a, const Poly& b, std::size_t order) {
  Poly r(order + 1, Rat(0));
  for (std::size_t i = 0; i < a.size() && i <= order; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
      r[i + j] += a[i] * b[j];
  return r;
}

Poly series_inv(const Poly& a, std::size_t order) {
  if (a.empty() || a[0] == 0)
    throw std::domain_error("series_inv: constant term must be a unit");
  Poly r(order + 1, Rat(0));
  r[0] = 1 / a[0];
  for (std::size_t k = 1; k <= order; ++k) {
    Rat s(0);
    for (std::size_t i = 1; i <= k; ++i)
      if (i < a.size()) s += a[i] * r[k - i];
    r[k] = -s / a[0];
  }
  return r;
}

Poly series_log(const Poly& a, std::size_t order) {
  if (a.empty() || a[0] != 1)
    throw std::domain_error("series_log: constant term must be 1");
  // l' = a'/a, solved coefficient by coefficient:
  // (k+1) l_{k+1} = (k+1) a_{k+1} - sum_{i=1}^{k} i l_i a_{k+1-i}.
  Poly l(order + 1, Rat(0));
  for (std::size_t k1 = 1; k1 <= order; ++k1) {
    Rat s = (k1 < a.size()) ? Rat(static_cast<long>(k1)) * a[k1] : Rat(0);
    for (std::size_t i = 1; i < k1; ++i)
      if (k1 - i < a.size()) s -= Rat(static_cast<long>(i)) * l[i] * a[k1 - i];
    l[k1] = s / Rat(static_cast<long>(k1));
  }
  return l;
}

bool rational_functions_equal(const RationalFunctionOneVar& f,
                              const RationalFunctionOneVar& g) {
  return poly_mul(f.num, g.den) == poly_mul(g.num, f.den);
}

namespace {

// prod over v0 in roots of (v - v0), as a polynomial in v.
Poly product_of_linear(const std::vector<Int>& roots) {
  Poly p{Rat(1)};
  for (const auto& v0 : roots) p = poly_mul(p, Poly{Rat(-v0), Rat(1)});
  return p;
}

std::vector<Int> squared_contents(const std::vector<std::int64_t>& cs,
                                  bool drop_zero) {
  std::vector<Int> out;
  for (auto c : cs) {
    if (drop_zero && c == 0) continue;
    out.push_back(Int(c) * Int(c + 1));
  }
  return out;
}

}  // namespace

std::map<std::int64_t, Rat> theta_up(const StrictPartition& la) {
  KerovCoordinates kc = kerov_coordinates(la);
  std::vector<Int> ypoles = squared_contents(kc.Y, false);
  std::vector<Int> xpoles = squared_contents(kc.X, true);  // X' = X minus {0}
  std::map<std::int64_t, Rat> th;
  for (auto x : kc.X) {
    Int v0 = Int(x) * Int(x + 1);
    // Residue of R_up at v0: numerator prod_Y (v0 - y(y+1)); denominator
    // v0 * prod over the other poles of X', or prod over X' when v0 = 0.
    Rat num(1), den(1);
    for (const auto& yp : ypoles) num *= Rat(v0 - yp);
    if (x == 0) {
      for (const auto& xp : xpoles) den *= Rat(v0 - xp);
    } else {
      den = Rat(v0);
      for (const auto& xp : xpoles)
        if (xp != v0) den *= Rat(v0 - xp);
    }
    th[x] = num / den;
  }
  return th;
}

std::map<std::int64_t, Rat> theta_down(const StrictPartition& la) {
  if (la.empty())
    throw std::domain_error("theta_down: the empty diagram has no removable box");
  KerovCoordinates kc = kerov_coordinates(la);
  std::vector<Int> ypoles = squared_contents(kc.Y, false);
  std::vector<Int> xpoles = squared_contents(kc.X, true);
  std::map<std::int64_t, Rat> th;
  for (auto y : kc.Y) {
    Int w0 = Int(y) * Int(y + 1);
    // R_down = prod_X' (v - x(x+1)) / prod_Y (v - y(y+1)); the weight is
    // minus its residue at w0.
    Rat num(1), den(1);
    for (const auto& xp : xpoles) num *= Rat(xp - w0);
    for (const auto& yp : ypoles)
      if (yp != w0) den *= Rat(yp - w0);
    th[y] = num / den;
  }
  return th;
}

RationalFunctionOneVar phi(const StrictPartition& la) {
  KerovCoordinates kc = kerov_coordinates(la);
  RationalFunctionOneVar f;
  f.num = product_of_linear(squared_contents(kc.Y, false));
  f.den = product_of_linear(squared_contents(kc.X, true));
  return f;
}

RationalFunctionOneVar phi_from_parts(const StrictPartition& la) {
  RationalFunctionOneVar f;
  std::vector<Int> num_roots, den_roots;
  for (auto p : la.parts()) {
    num_roots.push_back(Int(p) * Int(p - 1));
    den_roots.push_back(Int(p) * Int(p + 1));
  }
  f.num = product_of_linear(num_roots);
  f.den = product_of_linear(den_roots);
  return f;
}

namespace {

// Coefficients of Phi as a power series in w = 1/v, to the given order.
// With roots r of the numerator and s of the denominator (both of size d),
//   Phi = prod (1 - r w) / prod (1 - s w).
Poly phi_series(const StrictPartition& la, std::size_t order) {
  KerovCoordinates kc = kerov_coordinates(la);
  Poly num{Rat(1)}, den{Rat(1)};
  for (const auto& r : squared_contents(kc.Y, false))
    num = poly_mul(num, Poly{Rat(1), Rat(-r)});
  for (const auto& s : squared_contents(kc.X, true))
    den = poly_mul(den, Poly{Rat(1), Rat(-s)});
  return series_mul(num, series_inv(den, order), order);
}

}  // namespace

CoordinateVector coordinates(const StrictPartition& la, CoordinateKind kind,
                             int M) {
  if (M < 0) throw std::domain_error("coordinates: negative order");
  const std::size_t order = static_cast<std::size_t>(M);
  Poly ph = phi_series(la, order);
  CoordinateVector cv;
  cv.kind = kind;
  switch (kind) {
    case CoordinateKind::G:
      for (std::size_t m = 1; m <= order; ++m) cv.values.push_back(ph[m]);
      break;
    case CoordinateKind::GHat: {
      Poly inv = series_inv(ph, order);
      for (std::size_t m = 1; m <= order; ++m) cv.values.push_back(-inv[m]);
      break;
    }
    case CoordinateKind::BoldP: {
      Poly lg = series_log(ph, order);
      for (std::size_t m = 1; m <= order; ++m)
        cv.values.push_back(Rat(static_cast<long>(m)) * lg[m]);
      break;
    }
  }
  return cv;
}

CoordinateVector coordinates_via_sums(const StrictPartition& la,
                                      CoordinateKind kind, int M) {
  if (M < 0) throw std::domain_error("coordinates_via_sums: negative order");
  CoordinateVector cv;
  cv.kind = kind;
  KerovCoordinates kc = kerov_coordinates(la);
  switch (kind) {
    case CoordinateKind::BoldP:
      for (int m = 1; m <= M; ++m) {
        Rat s(0);
        for (auto x : kc.X)
          s += Rat(int_pow(Int(x) * Int(x + 1), static_cast<unsigned long>(m)));
        for (auto y : kc.Y)
          s -= Rat(int_pow(Int(y) * Int(y + 1), static_cast<unsigned long>(m)));
        cv.values.push_back(s);
      }
      break;
    case CoordinateKind::G: {
      auto th = theta_up(la);
      for (int m = 1; m <= M; ++m) {
        Rat s(0);
        for (const auto& [x, t] : th)
          s += t * Rat(int_pow(Int(x) * Int(x + 1), static_cast<unsigned long>(m)));
        cv.values.push_back(s);
      }
      break;
    }
    case CoordinateKind::GHat: {
      if (la.empty()) {
        cv.values.assign(static_cast<std::size_t>(M), Rat(0));
        break;
      }
      auto th = theta_down(la);
      for (int m = 1; m <= M; ++m) {
        Rat s(0);
        for (const auto& [y, t] : th)
          s += t * Rat(int_pow(Int(y) * Int(y + 1),
                               static_cast<unsigned long>(m - 1)));
        cv.values.push_back(s);
      }
      break;
    }
  }
  return cv;
}

}  // namespace updown
