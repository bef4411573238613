#include "updown/verify.hpp"

#include <string>
#include <vector>

#include "updown/chains.hpp"
#include "updown/gamma.hpp"
#include "updown/kerov.hpp"
#include "updown/measures.hpp"
#include "updown/operators.hpp"
#include "updown/partition.hpp"

namespace updown {

namespace {

std::vector<StrictPartition> all_diagrams(std::int64_t max_weight) {
  std::vector<StrictPartition> out;
  for (std::int64_t w = 0; w <= max_weight; ++w)
    for (auto& la : enumerate_strict(w)) out.push_back(std::move(la));
  return out;
}

std::string expo_str(VarKind kind, const Expo& e) {
  SparsePoly f;
  f.kind = kind;
  f.terms.emplace(e, Rat(1));
  return f.to_string();
}

SparsePoly monomial_poly(VarKind kind, const Expo& e) {
  SparsePoly f;
  f.kind = kind;
  f.terms.emplace(e, Rat(1));
  return f;
}

}  // namespace

Report coherence_suite(std::int64_t max_weight, const Alpha& alpha) {
  Report rep;
  rep.name = "measure-coherence";
  rep.parameters = {{"max_weight", std::to_string(max_weight)},
                    {"alpha", alpha.to_string()}};
  for (std::int64_t n = 0; n + 1 <= max_weight; ++n) {
    CoherenceReport cr = verify_coherence(n, alpha);
    rep.add("levels " + std::to_string(n) + "->" + std::to_string(n + 1),
            "coherent", cr.pass ? "coherent" : cr.detail, cr.pass);
  }
  rep.finalize();
  return rep;
}

Report kerov_suite(std::int64_t max_weight) {
  Report rep;
  rep.name = "interlacing-coordinates";
  rep.parameters = {{"max_weight", std::to_string(max_weight)}};
  const int M = 6;  // coordinate orders checked
  for (const auto& la : all_diagrams(max_weight)) {
    const std::string tag = la.to_string();
    KerovCoordinates kc = kerov_coordinates(la);

    bool ok = interlacing_valid(kc) && from_kerov(kc) == la;
    rep.add(tag + " interlacing+reconstruction", "valid round trip",
            ok ? "valid round trip" : "broken", ok);

    // sum_X x(x+1) - sum_Y y(y+1) = 2|la|
    Int s = 0;
    for (auto x : kc.X) s += Int(x) * Int(x + 1);
    for (auto y : kc.Y) s -= Int(y) * Int(y + 1);
    ok = (s == 2 * la.weight());
    rep.add(tag + " weight identity", Int(2 * la.weight()).get_str(),
            s.get_str(), ok);

    // Up residues: total 1 and agreement with the transition probability.
    auto tu = theta_up(la);
    Rat total(0);
    bool agree = true;
    for (const auto& [x, t] : tu) {
      total += t;
      agree = agree && (t == up_prob(la, x, Alpha::infinity()));
    }
    ok = (total == 1) && agree;
    rep.add(tag + " up residues", "sum 1, match up transitions",
            ok ? "sum 1, match up transitions"
               : "sum " + rat_to_string(total) + (agree ? "" : ", mismatch"),
            ok);

    // Down residues: total 2|la| and agreement with 2|la| p_down.
    if (!la.empty()) {
      auto td = theta_down(la);
      Rat dtotal(0);
      bool dagree = true;
      for (const auto& [y, t] : td) {
        dtotal += t;
        dagree = dagree &&
                 (t == Rat(2 * la.weight()) * down_prob(la, remove_box(la, y)));
      }
      ok = (dtotal == Rat(2 * la.weight())) && dagree;
      rep.add(tag + " down residues", "sum 2|la|, match down transitions",
              ok ? "sum 2|la|, match down transitions"
                 : "sum " + rat_to_string(dtotal) + (dagree ? "" : ", mismatch"),
              ok);
    }

    // The two product forms of the generating function agree.
    ok = rational_functions_equal(phi(la), phi_from_parts(la));
    rep.add(tag + " generating function forms", "equal",
            ok ? "equal" : "different", ok);

    // Series extraction equals the residue-weighted sums.
    ok = true;
    for (auto kind :
         {CoordinateKind::BoldP, CoordinateKind::G, CoordinateKind::GHat})
      ok = ok && coordinates(la, kind, M).values ==
                     coordinates_via_sums(la, kind, M).values;
    rep.add(tag + " coordinate extraction routes", "equal",
            ok ? "equal" : "different", ok);

    // Coordinate recurrences (orders up to M) and the order-1 identity.
    auto bp = coordinates(la, CoordinateKind::BoldP, M).values;
    auto g = coordinates(la, CoordinateKind::G, M).values;
    auto gh = coordinates(la, CoordinateKind::GHat, M).values;
    ok = bp[0] == Rat(2 * la.weight()) && g[0] == bp[0] && gh[0] == bp[0];
    for (int k = 1; k <= M; ++k) {
      // k g_k = boldp_k + boldp_{k-1} g_1 + ... + boldp_1 g_{k-1}
      Rat lhs = Rat(k) * g[static_cast<std::size_t>(k - 1)];
      Rat rhs = bp[static_cast<std::size_t>(k - 1)];
      for (int i = 1; i < k; ++i)
        rhs += bp[static_cast<std::size_t>(i - 1)] *
               g[static_cast<std::size_t>(k - i - 1)];
      ok = ok && lhs == rhs;
      // ghat_k = g_k - g_{k-1} ghat_1 - ... - g_1 ghat_{k-1}
      Rat rhs2 = g[static_cast<std::size_t>(k - 1)];
      for (int i = 1; i < k; ++i)
        rhs2 -= g[static_cast<std::size_t>(k - i - 1)] *
                gh[static_cast<std::size_t>(i - 1)];
      ok = ok && gh[static_cast<std::size_t>(k - 1)] == rhs2;
    }
    rep.add(tag + " coordinate recurrences", "hold", ok ? "hold" : "fail", ok);

    // One-box ratios of the generating function.
    RationalFunctionOneVar ph = phi(la);
    ok = true;
    for (auto x : addable_contents(la)) {
      RationalFunctionOneVar pn = phi(add_box(la, x));
      Rat a = Rat(x) * Rat(x + 1);
      // (v - a)^2 and (v - a)^2 - 2(v + a)
      Poly sq{a * a, -2 * a, Rat(1)};
      Poly sq_shift{a * a - 2 * a, -2 * a - 2, Rat(1)};
      ok = ok && poly_mul(poly_mul(pn.num, ph.den), sq_shift) ==
                     poly_mul(poly_mul(ph.num, pn.den), sq);
    }
    for (auto y : removable_contents(la)) {
      RationalFunctionOneVar pr = phi(remove_box(la, y));
      Rat b = Rat(y) * Rat(y + 1);
      Poly sq{b * b, -2 * b, Rat(1)};
      Poly sq_shift{b * b - 2 * b, -2 * b - 2, Rat(1)};
      ok = ok && poly_mul(poly_mul(pr.num, ph.den), sq) ==
                     poly_mul(poly_mul(ph.num, pr.den), sq_shift);
    }
    rep.add(tag + " one-box ratios", "hold", ok ? "hold" : "fail", ok);
  }
  rep.finalize();
  return rep;
}

Report ivanov_suite(std::int64_t max_weight) {
  Report rep;
  rep.name = "relative-dimension";
  rep.parameters = {{"max_weight", std::to_string(max_weight)}};
  auto diagrams = all_diagrams(max_weight);
  for (const auto& mu : diagrams)
    for (const auto& la : diagrams) {
      if (mu.weight() > la.weight()) continue;
      Rat lhs = make_rat(path_count(mu, la), h_closed_form(la));
      Rat rhs = ivanov_dimension(mu, la);
      rep.add(mu.to_string() + " in " + la.to_string(), rat_to_string(lhs),
              rat_to_string(rhs), lhs == rhs);
    }
  rep.finalize();
  return rep;
}

Report qstar_transition_suite(std::int64_t mu_bound, std::int64_t n_bound,
                              const Rat& alpha) {
  Report rep;
  rep.name = "factorial-basis-transition";
  rep.parameters = {{"mu_bound", std::to_string(mu_bound)},
                    {"n_bound", std::to_string(n_bound)},
                    {"alpha", rat_to_string(alpha)}};
  const Alpha a(alpha);
  for (const auto& mu : all_diagrams(mu_bound)) {
    for (std::int64_t n = std::max<std::int64_t>(mu.weight(), 1); n <= n_bound;
         ++n) {
      TransitionMatrix tm = transition_matrix(n, a);
      const std::size_t N = tm.order.size();
      std::vector<Rat> v(N);
      for (std::size_t i = 0; i < N; ++i)
        v[i] = schur_q_factorial_eval(mu, tm.order[i]);
      std::vector<Rat> lhs = tm.T.apply(v);
      for (std::size_t i = 0; i < N; ++i) lhs[i] -= v[i];
      std::vector<Rat> rhs(N, Rat(0));
      for (const auto& [nu, c] : tn_on_qstar(mu, n, alpha))
        for (std::size_t i = 0; i < N; ++i)
          rhs[i] += c * schur_q_factorial_eval(nu, tm.order[i]);
      bool ok = lhs == rhs;
      rep.add("mu=" + mu.to_string() + " n=" + std::to_string(n),
              "matrix action equals predicted coefficients",
              ok ? "equal" : "different", ok);
    }
  }
  rep.finalize();
  return rep;
}

namespace {

// sum_{r,s >= 1} (2r-1)(2s-1) g_{r+s-1} d^2 f / dg_r dg_s  (GCoord algebra).
SparsePoly second_order_g(const SparsePoly& f) {
  SparsePoly out = SparsePoly::constant(VarKind::GCoord, Rat(0));
  std::size_t kmax = 0;
  for (const auto& [e, c] : f.terms) kmax = std::max(kmax, e.size());
  for (std::size_t gr = 0; gr < kmax; ++gr)
    for (std::size_t gs = 0; gs < kmax; ++gs) {
      SparsePoly d2 = f.derivative(gr).derivative(gs);
      if (d2.is_zero()) continue;
      const long r = static_cast<long>(gr) + 1, s = static_cast<long>(gs) + 1;
      out += (SparsePoly::generator(VarKind::GCoord, gr + gs) * d2) *
             Rat((2 * r - 1) * (2 * s - 1));
    }
  return out;
}

// sum over targets t of sum_{r+s=t} coeff(t) g_r g_s df/dg_t, with
// coeff(t) = t for the down operator and t-1 for the up operator.
SparsePoly transport_g(const SparsePoly& f, bool down) {
  SparsePoly out = SparsePoly::constant(VarKind::GCoord, Rat(0));
  std::size_t kmax = 0;
  for (const auto& [e, c] : f.terms) kmax = std::max(kmax, e.size());
  for (std::size_t gt = 1; gt < kmax; ++gt) {  // t = gt+1 >= 2
    SparsePoly d1 = f.derivative(gt);
    if (d1.is_zero()) continue;
    const long t = static_cast<long>(gt) + 1;
    for (long r = 1; r < t; ++r) {
      long s = t - r;
      SparsePoly pair =
          SparsePoly::generator(VarKind::GCoord, static_cast<std::size_t>(r - 1)) *
          SparsePoly::generator(VarKind::GCoord, static_cast<std::size_t>(s - 1));
      out += (pair * d1) * Rat(down ? t : t - 1);
    }
  }
  return out;
}

}  // namespace

Report gbasis_suite(const Rat& alpha, std::int64_t max_deg) {
  Report rep;
  rep.name = "derivation-leading-terms";
  rep.parameters = {{"alpha", rat_to_string(alpha)},
                    {"max_deg", std::to_string(max_deg)}};
  SparsePoly g1 = SparsePoly::generator(VarKind::GCoord, 0);
  for (const auto& e : monomial_basis(VarKind::GCoord, max_deg)) {
    SparsePoly f = monomial_poly(VarKind::GCoord, e);
    const std::int64_t d = expo_weight(VarKind::GCoord, e);
    // The same monomial as an element of the power-sum algebra.
    GammaPoly fp = SparsePoly::constant(VarKind::OddP, Rat(1));
    for (std::size_t i = 0; i < e.size(); ++i) {
      GammaPoly gi = g_symbolic(static_cast<std::int64_t>(i) + 1);
      for (unsigned rep_i = 0; rep_i < e[i]; ++rep_i) fp = fp * gi;
    }

    // Down derivation.
    SparsePoly actual = expand_in_g(D_op(fp), d + 1);
    SparsePoly pred_hi = (g1 * f) * make_rat(1, 2);
    SparsePoly pred_mid = f * Rat(-d);
    SparsePoly pred_lo = second_order_g(f) + transport_g(f, true);
    bool ok = actual.homogeneous_component(d + 1) == pred_hi &&
              actual.homogeneous_component(d) == pred_mid &&
              actual.homogeneous_component(d - 1) == pred_lo;
    rep.add("down on " + expo_str(VarKind::GCoord, e),
            "graded orders +1,0,-1 as displayed", ok ? "match" : "mismatch",
            ok);

    // Up derivation.
    actual = expand_in_g(U_op(fp, alpha), d + 1);
    pred_mid = f * (alpha / 2 + Rat(d));
    pred_lo = second_order_g(f) + transport_g(f, false) +
              f.derivative(0) * alpha;
    ok = actual.homogeneous_component(d + 1) == pred_hi &&
         actual.homogeneous_component(d) == pred_mid &&
         actual.homogeneous_component(d - 1) == pred_lo;
    rep.add("up on " + expo_str(VarKind::GCoord, e),
            "graded orders +1,0,-1 as displayed", ok ? "match" : "mismatch",
            ok);
  }
  rep.finalize();
  return rep;
}

Report compensation_suite(const Rat& alpha, std::int64_t max_deg) {
  Report rep;
  rep.name = "updown-compensation";
  rep.parameters = {{"alpha", rat_to_string(alpha)},
                    {"max_deg", std::to_string(max_deg)}};
  GammaPoly p1 = SparsePoly::generator(VarKind::OddP, 0);
  GammaPoly one = SparsePoly::constant(VarKind::OddP, Rat(1));
  // (2 p_1 + alpha)(2 p_1 + 2) / 4
  GammaPoly comp =
      ((p1 * Rat(2) + one * alpha) * (p1 * Rat(2) + one * Rat(2))) *
      make_rat(1, 4);
  auto compensated = [&](const GammaPoly& f) {
    return U_op(D_op(f), alpha) - comp * f;
  };

  bool ok = compensated(one).is_zero();
  rep.add("constant 1", "annihilated exactly", ok ? "0" : "nonzero", ok);
  ok = compensated(p1).is_zero();
  rep.add("p1", "annihilated exactly", ok ? "0" : "nonzero", ok);

  for (const auto& e : monomial_basis(VarKind::OddP, max_deg)) {
    GammaPoly f = monomial_poly(VarKind::OddP, e);
    const std::int64_t d = expo_weight(VarKind::OddP, e);
    GammaPoly diff = compensated(f) - B_op(f, alpha);
    ok = diff.degree() <= d - 1;
    rep.add("monomial " + expo_str(VarKind::OddP, e),
            "difference of degree <= " + std::to_string(d - 1),
            "degree " + std::to_string(diff.degree()), ok);
  }

  // Commutation with multiplication by p_1.
  for (const auto& e : monomial_basis(VarKind::OddP, max_deg - 1)) {
    GammaPoly f = monomial_poly(VarKind::OddP, e);
    ok = B_op(p1 * f, alpha) == p1 * B_op(f, alpha);
    rep.add("p1-commutation on " + expo_str(VarKind::OddP, e), "commute",
            ok ? "commute" : "fail", ok);
  }
  rep.finalize();
  return rep;
}

Report limit_generator_suite(const Rat& alpha, std::int64_t mu_bound,
                             std::int64_t deg_bound) {
  Report rep;
  rep.name = "limit-generator";
  rep.parameters = {{"alpha", rat_to_string(alpha)},
                    {"mu_bound", std::to_string(mu_bound)},
                    {"deg_bound", std::to_string(deg_bound)}};
  // Action on projected Schur-Q polynomials.
  for (const auto& mu : all_diagrams(mu_bound)) {
    bool ok = A_op(project(schur_q(mu)), alpha) == A_on_Q(mu, alpha);
    rep.add("projected Schur-Q " + mu.to_string(),
            "predicted eigen-action", ok ? "match" : "mismatch", ok);
  }
  // Agreement with the projected second-order operator.
  for (const auto& e : monomial_basis(VarKind::EvenQ, deg_bound)) {
    QuotientPoly f = monomial_poly(VarKind::EvenQ, e);
    bool ok = project(B_op(lift(f), alpha)) == A_op(f, alpha);
    rep.add("projection consistency on " + expo_str(VarKind::EvenQ, e),
            "equal", ok ? "equal" : "different", ok);
  }
  // Eigen-behavior of the leading term.
  for (const auto& e : monomial_basis(VarKind::EvenQ, deg_bound)) {
    QuotientPoly f = monomial_poly(VarKind::EvenQ, e);
    const std::int64_t m = expo_weight(VarKind::EvenQ, e);
    QuotientPoly r = A_op(f, alpha) + f * (Rat(m) * (Rat(m - 1) + alpha / 2));
    bool ok = r.degree() <= m - 1;
    rep.add("eigen-behavior on " + expo_str(VarKind::EvenQ, e),
            "remainder degree <= " + std::to_string(m - 1),
            "degree " + std::to_string(r.degree()), ok);
  }
  rep.finalize();
  return rep;
}

namespace {

TruncatedFun0 fun0_sub(const TruncatedFun0& a, const TruncatedFun0& b) {
  TruncatedFun0 out = a;
  for (const auto& [la, c] : b.coeffs) {
    auto [it, fresh] = out.coeffs.emplace(la, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) out.coeffs.erase(it);
    }
  }
  return out;
}

TruncatedFun0 fun0_scale(const TruncatedFun0& a, const Rat& c) {
  TruncatedFun0 out = a;
  if (c == 0) {
    out.coeffs.clear();
    return out;
  }
  for (auto& [la, v] : out.coeffs) v *= c;
  return out;
}

}  // namespace

Report sl2_suite(const Rat& alpha, std::int64_t max_weight) {
  Report rep;
  rep.name = "sl2-commutators";
  rep.parameters = {{"alpha", rat_to_string(alpha)},
                    {"max_weight", std::to_string(max_weight)}};
  for (const auto& la : all_diagrams(max_weight)) {
    TruncatedFun0 v;
    v.cutoff = max_weight + 2;
    v.alpha = alpha;
    v.coeffs.emplace(la, Rat(1));
    auto E = [&](const TruncatedFun0& w) { return kerov_sl2(SL2::E, w); };
    auto F = [&](const TruncatedFun0& w) { return kerov_sl2(SL2::F, w); };
    auto H = [&](const TruncatedFun0& w) { return kerov_sl2(SL2::H, w); };

    bool ok = fun0_sub(E(F(v)), F(E(v))).coeffs == H(v).coeffs;
    rep.add("[E,F] at " + la.to_string(), "H", ok ? "H" : "differs", ok);
    ok = fun0_sub(E(H(v)), H(E(v))).coeffs == fun0_scale(E(v), Rat(-2)).coeffs;
    rep.add("[E,H] at " + la.to_string(), "-2E", ok ? "-2E" : "differs", ok);
    ok = fun0_sub(F(H(v)), H(F(v))).coeffs == fun0_scale(F(v), Rat(2)).coeffs;
    rep.add("[F,H] at " + la.to_string(), "2F", ok ? "2F" : "differs", ok);
  }
  rep.finalize();
  return rep;
}

Report spectrum_suite(std::int64_t n_bound, const Alpha& alpha) {
  Report rep;
  rep.name = "chain-spectrum";
  rep.parameters = {{"n_bound", std::to_string(n_bound)},
                    {"alpha", alpha.to_string()},
                    {"tolerance", "1e-9"}};
  for (std::int64_t n = 1; n <= n_bound; ++n) {
    SpectrumResult sr = spectrum(n, alpha);
    std::int64_t mult_total = 0;
    for (auto m : sr.multiplicities) mult_total += m;
    bool counts_ok =
        mult_total == static_cast<std::int64_t>(count_strict(n));
    bool exact_ok = !sr.char_poly_checked || sr.char_poly_match;
    bool numeric_ok = sr.max_numeric_error <= kSpectrumTolerance;
    TransitionMatrix tm = transition_matrix(n, alpha);
    MeasureOnLevel m = measure_on_level(n, alpha);
    bool stat_ok = check_stationarity(tm, m);
    bool rev_ok = check_reversibility(tm, m);
    bool ok = counts_ok && exact_ok && numeric_ok && stat_ok && rev_ok;
    std::string got = std::string(exact_ok ? "char-poly ok" : "char-poly FAIL") +
                      ", numeric err " + std::to_string(sr.max_numeric_error) +
                      (counts_ok ? "" : ", multiplicity total off") +
                      (stat_ok ? "" : ", not stationary") +
                      (rev_ok ? "" : ", not reversible");
    rep.add("n=" + std::to_string(n),
            "closed-form spectrum, stationary, reversible", got, ok);
  }
  rep.finalize();
  return rep;
}

}  // namespace updown
