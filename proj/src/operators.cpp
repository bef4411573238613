#include "updown/operators.hpp"

#include <stdexcept>
#include <string>

namespace updown {

namespace {

GammaPoly zero_gamma() { return SparsePoly::constant(VarKind::OddP, Rat(0)); }

GammaPoly p1_poly() { return SparsePoly::generator(VarKind::OddP, 0); }

}  // namespace

GammaPoly D_op(const GammaPoly& f) {
  if (f.kind != VarKind::OddP)
    throw std::invalid_argument("D_op: expected an OddP polynomial");
  if (f.is_zero()) return zero_gamma();
  GammaPoly out = zero_gamma();
  GammaPoly p1 = p1_poly();
  for (const auto& [mu, c] : expand_in_qstar(f, f.degree())) {
    GammaPoly qs = schur_q_factorial_symbolic(mu);
    GammaPoly factor = p1 + SparsePoly::constant(VarKind::OddP, Rat(-mu.weight()));
    out += (factor * qs) * c;
  }
  return out;
}

GammaPoly U_op(const GammaPoly& f, const Rat& alpha) {
  if (f.kind != VarKind::OddP)
    throw std::invalid_argument("U_op: expected an OddP polynomial");
  if (f.is_zero()) return zero_gamma();
  GammaPoly out = zero_gamma();
  GammaPoly p1 = p1_poly();
  for (const auto& [mu, c] : expand_in_qstar(f, f.degree())) {
    GammaPoly qs = schur_q_factorial_symbolic(mu);
    GammaPoly factor =
        p1 + SparsePoly::constant(VarKind::OddP, Rat(mu.weight()) + alpha / 2);
    out += (factor * qs) * c;
    for (auto y : removable_contents(mu)) {
      Rat w = Rat(y) * Rat(y + 1) + alpha;
      out += schur_q_factorial_symbolic(remove_box(mu, y)) * (c * w);
    }
  }
  return out;
}

std::map<StrictPartition, Rat> tn_on_qstar(const StrictPartition& mu,
                                           std::int64_t n, const Rat& alpha) {
  if (mu.weight() > n)
    throw std::domain_error("tn_on_qstar: basis label heavier than the level");
  Rat denom = Rat(n + 1) * (Rat(n) + alpha / 2);
  std::map<StrictPartition, Rat> out;
  Rat m(mu.weight());
  Rat diag = -m * (m + alpha / 2 - 1) / denom;
  if (diag != 0) out[mu] = diag;
  Rat scale = Rat(n - mu.weight() + 1) / denom;
  for (auto y : removable_contents(mu)) {
    Rat w = (Rat(y) * Rat(y + 1) + alpha) * scale;
    auto [it, fresh] = out.emplace(remove_box(mu, y), w);
    if (!fresh) it->second += w;
  }
  return out;
}

GammaPoly B_op(const GammaPoly& f, const Rat& alpha) {
  if (f.kind != VarKind::OddP)
    throw std::invalid_argument("B_op: expected an OddP polynomial");
  GammaPoly out = zero_gamma();
  GammaPoly p1 = p1_poly();
  // Generator g (0-indexed) is p_{2g+1}; the classical index is i = g+1,
  // so p_{2i-1} corresponds to generator i-1.
  std::size_t gmax = 0;
  for (const auto& [e, c] : f.terms) gmax = std::max(gmax, e.size());
  // Second-order terms, i, j >= 2 (generators >= 1).
  for (std::size_t gi = 1; gi < gmax; ++gi) {
    for (std::size_t gj = 1; gj < gmax; ++gj) {
      GammaPoly d2 = f.derivative(gi).derivative(gj);
      if (d2.is_zero()) continue;
      const long i = static_cast<long>(gi) + 1, j = static_cast<long>(gj) + 1;
      // p_1 p_{2i+2j-3} - p_{2i-1} p_{2j-1}; 2i+2j-3 is generator i+j-2.
      GammaPoly coeff =
          p1 * SparsePoly::generator(VarKind::OddP,
                                     static_cast<std::size_t>(i + j - 2)) -
          SparsePoly::generator(VarKind::OddP, gi) *
              SparsePoly::generator(VarKind::OddP, gj);
      out += (coeff * d2) * Rat((2 * i - 1) * (2 * j - 1));
    }
  }
  // Transport terms: 2 (2i+2j-1) p_1 p_{2i-1} p_{2j-1} d/dp_{2i+2j-1},
  // i, j >= 1; the target 2i+2j-1 is generator i+j-1.
  for (std::size_t gt = 1; gt < gmax; ++gt) {
    GammaPoly d1 = f.derivative(gt);
    if (d1.is_zero()) continue;
    const long t = static_cast<long>(gt) + 1;  // i + j = t
    for (long i = 1; i < t; ++i) {
      long j = t - i;
      GammaPoly coeff = p1 *
                        SparsePoly::generator(VarKind::OddP,
                                              static_cast<std::size_t>(i - 1)) *
                        SparsePoly::generator(VarKind::OddP,
                                              static_cast<std::size_t>(j - 1));
      out += (coeff * d1) * Rat(2 * (2 * i + 2 * j - 1));
    }
  }
  // Drift terms: -(2i-1)(2i-2+alpha/2) p_{2i-1} d/dp_{2i-1}, i >= 2.
  for (std::size_t gi = 1; gi < gmax; ++gi) {
    GammaPoly d1 = f.derivative(gi);
    if (d1.is_zero()) continue;
    const long i = static_cast<long>(gi) + 1;
    Rat c = -Rat(2 * i - 1) * (Rat(2 * i - 2) + alpha / 2);
    out += (SparsePoly::generator(VarKind::OddP, gi) * d1) * c;
  }
  return out;
}

QuotientPoly A_op(const QuotientPoly& f, const Rat& alpha) {
  if (f.kind != VarKind::EvenQ)
    throw std::invalid_argument("A_op: expected an EvenQ polynomial");
  QuotientPoly out = SparsePoly::constant(VarKind::EvenQ, Rat(0));
  // Generator g (0-indexed) is q_{2g+2}; the classical index is i = g+1,
  // so q_{2i} corresponds to generator i-1 and q_0 means the constant 1.
  std::size_t gmax = 0;
  for (const auto& [e, c] : f.terms) gmax = std::max(gmax, e.size());
  // Second-order terms, i, j >= 1.
  for (std::size_t gi = 0; gi < gmax; ++gi) {
    for (std::size_t gj = 0; gj < gmax; ++gj) {
      QuotientPoly d2 = f.derivative(gi).derivative(gj);
      if (d2.is_zero()) continue;
      const long i = static_cast<long>(gi) + 1, j = static_cast<long>(gj) + 1;
      // q_{2i+2j} - q_{2i} q_{2j}; 2i+2j is generator i+j-1.
      QuotientPoly coeff =
          SparsePoly::generator(VarKind::EvenQ,
                                static_cast<std::size_t>(i + j - 1)) -
          SparsePoly::generator(VarKind::EvenQ, gi) *
              SparsePoly::generator(VarKind::EvenQ, gj);
      out += (coeff * d2) * Rat((2 * i + 1) * (2 * j + 1));
    }
  }
  // Transport terms: 2 (2i+2j+3) q_{2i} q_{2j} d/dq_{2i+2j+2}, i, j >= 0,
  // with q_0 = 1; the target 2i+2j+2 is generator i+j.
  for (std::size_t gt = 0; gt < gmax; ++gt) {
    QuotientPoly d1 = f.derivative(gt);
    if (d1.is_zero()) continue;
    // The target q_{2i+2j+2} is generator i+j, so the pairs satisfy i+j = gt.
    const long t = static_cast<long>(gt);
    for (long i = 0; i <= t; ++i) {
      long j = t - i;
      QuotientPoly coeff = SparsePoly::constant(VarKind::EvenQ, Rat(1));
      if (i > 0)
        coeff = coeff * SparsePoly::generator(VarKind::EvenQ,
                                              static_cast<std::size_t>(i - 1));
      if (j > 0)
        coeff = coeff * SparsePoly::generator(VarKind::EvenQ,
                                              static_cast<std::size_t>(j - 1));
      out += (coeff * d1) * Rat(2 * (2 * i + 2 * j + 3));
    }
  }
  // Drift terms: -(2i+1)(2i+alpha/2) q_{2i} d/dq_{2i}, i >= 1.
  for (std::size_t gi = 0; gi < gmax; ++gi) {
    QuotientPoly d1 = f.derivative(gi);
    if (d1.is_zero()) continue;
    const long i = static_cast<long>(gi) + 1;
    Rat c = -Rat(2 * i + 1) * (Rat(2 * i) + alpha / 2);
    out += (SparsePoly::generator(VarKind::EvenQ, gi) * d1) * c;
  }
  return out;
}

QuotientPoly A_on_Q(const StrictPartition& mu, const Rat& alpha) {
  Rat m(mu.weight());
  QuotientPoly out = project(schur_q(mu)) * (-m * (m + alpha / 2 - 1));
  for (auto y : removable_contents(mu)) {
    Rat w = Rat(y) * Rat(y + 1) + alpha;
    out += project(schur_q(remove_box(mu, y))) * w;
  }
  return out;
}

TruncatedFun0 kerov_sl2(SL2 which, const TruncatedFun0& v) {
  TruncatedFun0 out;
  out.cutoff = v.cutoff;
  out.alpha = v.alpha;
  auto add = [&out](const StrictPartition& la, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = out.coeffs.emplace(la, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.coeffs.erase(it);
    }
  };
  for (const auto& [la, c] : v.coeffs) {
    if (c == 0) continue;
    switch (which) {
      case SL2::E: {
        if (la.weight() + 1 > v.cutoff)
          throw std::domain_error(
              "kerov_sl2: raising past the truncation cutoff (weight " +
              std::to_string(la.weight() + 1) + " > " +
              std::to_string(v.cutoff) + ")");
        for (auto x : addable_contents(la)) {
          Rat w = Rat(x) * Rat(x + 1) + v.alpha;
          if (x == 0) w /= 2;
          add(add_box(la, x), c * w);
        }
        break;
      }
      case SL2::F:
        for (auto y : removable_contents(la)) add(remove_box(la, y), -c);
        break;
      case SL2::H:
        add(la, c * (v.alpha / 2 + Rat(2 * la.weight())));
        break;
    }
  }
  return out;
}

}  // namespace updown
