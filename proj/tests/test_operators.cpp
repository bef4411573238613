#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "updown/gamma.hpp"
#include "updown/operators.hpp"
#include "updown/partition.hpp"

using namespace updown;

namespace {

GammaPoly P(std::size_t i) { return SparsePoly::generator(VarKind::OddP, i); }
QuotientPoly Q(std::size_t i) {
  return SparsePoly::generator(VarKind::EvenQ, i);
}
QuotientPoly Qc(const Rat& c) {
  return SparsePoly::constant(VarKind::EvenQ, c);
}

std::vector<StrictPartition> diagrams_up_to(std::int64_t w) {
  std::vector<StrictPartition> out;
  for (std::int64_t n = 0; n <= w; ++n)
    for (auto& la : enumerate_strict(n)) out.push_back(la);
  return out;
}

}  // namespace

TEST_CASE("down derivation on the factorial basis") {
  GammaPoly one = SparsePoly::constant(VarKind::OddP, Rat(1));
  CHECK(D_op(one) == P(0));
  CHECK(D_op(P(0)) == P(0) * P(0) - P(0));
  for (const auto& mu : diagrams_up_to(4)) {
    GammaPoly qs = schur_q_factorial_symbolic(mu);
    CHECK(D_op(qs) == (P(0) - SparsePoly::constant(VarKind::OddP,
                                                   Rat(mu.weight()))) *
                          qs);
  }
}

TEST_CASE("up derivation on the factorial basis") {
  for (const Rat& alpha : {Rat(1), Rat(2)}) {
    GammaPoly one = SparsePoly::constant(VarKind::OddP, Rat(1));
    CHECK(U_op(one, alpha) ==
          P(0) + SparsePoly::constant(VarKind::OddP, alpha / 2));
    for (const auto& mu : diagrams_up_to(4)) {
      GammaPoly qs = schur_q_factorial_symbolic(mu);
      GammaPoly expected =
          (P(0) + SparsePoly::constant(VarKind::OddP,
                                       Rat(mu.weight()) + alpha / 2)) *
          qs;
      for (auto y : removable_contents(mu))
        expected += schur_q_factorial_symbolic(remove_box(mu, y)) *
                    (Rat(y) * Rat(y + 1) + alpha);
      CHECK(U_op(qs, alpha) == expected);
    }
  }
}

TEST_CASE("centered one-step action on the factorial basis") {
  auto act = tn_on_qstar(StrictPartition({1}), 3, Rat(2));
  REQUIRE(act.size() == 2);
  CHECK(act.at(StrictPartition({1})) == make_rat(-1, 16));
  CHECK(act.at(StrictPartition()) == make_rat(3, 8));
  CHECK_THROWS_AS(tn_on_qstar(StrictPartition({3, 1}), 3, Rat(2)),
                  std::domain_error);
}

TEST_CASE("second-order operator: annihilations and worked values") {
  GammaPoly one = SparsePoly::constant(VarKind::OddP, Rat(1));
  for (const Rat& alpha : {Rat(1), Rat(2)}) {
    CHECK(B_op(one, alpha).is_zero());
    CHECK(B_op(P(0), alpha).is_zero());
    CHECK(B_op(P(0) * P(0), alpha).is_zero());
  }
  // B p3 = 6 p1^3 - 3 (2 + alpha/2) p3.
  CHECK(B_op(P(1), Rat(2)) ==
        P(0) * P(0) * P(0) * Rat(6) - P(1) * Rat(9));
  CHECK(B_op(P(1), Rat(1)) ==
        P(0) * P(0) * P(0) * Rat(6) - P(1) * make_rat(15, 2));
  // B p3^2 = 18 p1 p5 + 12 p1^3 p3 - 36 p3^2 at alpha = 2.
  CHECK(B_op(P(1) * P(1), Rat(2)) ==
        P(0) * P(2) * Rat(18) + P(0) * P(0) * P(0) * P(1) * Rat(12) -
            P(1) * P(1) * Rat(36));
}

TEST_CASE("second-order operator commutes with the first power sum") {
  for (const GammaPoly& f : {P(1), P(1) * P(1), P(2), P(0) * P(1)})
    for (const Rat& alpha : {Rat(1), Rat(2)})
      CHECK(B_op(P(0) * f, alpha) == P(0) * B_op(f, alpha));
}

TEST_CASE("projected operator: worked values") {
  CHECK(A_op(Qc(Rat(1)), Rat(2)).is_zero());
  // A q2 = 6 - 3 (2 + alpha/2) q2.
  CHECK(A_op(Q(0), Rat(2)) == Qc(Rat(6)) - Q(0) * Rat(9));
  CHECK(A_op(Q(0), Rat(1)) == Qc(Rat(6)) - Q(0) * make_rat(15, 2));
}

TEST_CASE("projected operator agrees with projecting the full operator") {
  for (const QuotientPoly& f : {Q(0), Q(1), Q(0) * Q(0), Q(0) * Q(1)})
    for (const Rat& alpha : {Rat(1), Rat(2)})
      CHECK(project(B_op(lift(f), alpha)) == A_op(f, alpha));
}

TEST_CASE("projected operator on projected Schur-Q polynomials") {
  for (const auto& mu : diagrams_up_to(5))
    for (const Rat& alpha : {Rat(1), Rat(2)}) {
      INFO("mu = ", mu.to_string());
      CHECK(A_op(project(schur_q(mu)), alpha) == A_on_Q(mu, alpha));
    }
}

TEST_CASE("raising, lowering, and grading operators") {
  const Rat alpha(2);
  TruncatedFun0 v;
  v.cutoff = 4;
  v.alpha = alpha;
  v.coeffs.emplace(StrictPartition(), Rat(1));

  TruncatedFun0 e = kerov_sl2(SL2::E, v);
  REQUIRE(e.coeffs.size() == 1);
  // The content-0 box enters with the halved weight (0 + alpha)/2.
  CHECK(e.coeffs.at(StrictPartition({1})) == Rat(1));

  TruncatedFun0 f = kerov_sl2(SL2::F, v);
  CHECK(f.coeffs.empty());
  TruncatedFun0 h = kerov_sl2(SL2::H, v);
  CHECK(h.coeffs.at(StrictPartition()) == Rat(1));

  TruncatedFun0 v1;
  v1.cutoff = 4;
  v1.alpha = alpha;
  v1.coeffs.emplace(StrictPartition({1}), Rat(1));
  TruncatedFun0 e1 = kerov_sl2(SL2::E, v1);
  CHECK(e1.coeffs.at(StrictPartition({2})) == Rat(4));
  TruncatedFun0 f1 = kerov_sl2(SL2::F, v1);
  CHECK(f1.coeffs.at(StrictPartition()) == Rat(-1));
  TruncatedFun0 h1 = kerov_sl2(SL2::H, v1);
  CHECK(h1.coeffs.at(StrictPartition({1})) == Rat(3));
}

TEST_CASE("raising past the cutoff is a named truncation error") {
  TruncatedFun0 v;
  v.cutoff = 2;
  v.alpha = Rat(2);
  v.coeffs.emplace(StrictPartition({2}), Rat(1));
  CHECK_THROWS_WITH_AS(kerov_sl2(SL2::E, v), doctest::Contains("3"),
                       std::domain_error);
}

TEST_CASE("commutation relations on indicator vectors") {
  const Rat alpha = make_rat(1, 2);
  for (const auto& la : diagrams_up_to(4)) {
    TruncatedFun0 v;
    v.cutoff = 6;
    v.alpha = alpha;
    v.coeffs.emplace(la, Rat(1));
    auto E = [](const TruncatedFun0& w) { return kerov_sl2(SL2::E, w); };
    auto F = [](const TruncatedFun0& w) { return kerov_sl2(SL2::F, w); };
    auto H = [](const TruncatedFun0& w) { return kerov_sl2(SL2::H, w); };
    auto sub = [](TruncatedFun0 a, const TruncatedFun0& b) {
      for (const auto& [mu, c] : b.coeffs) {
        auto [it, fresh] = a.coeffs.emplace(mu, -c);
        if (!fresh) {
          it->second -= c;
          if (it->second == 0) a.coeffs.erase(it);
        }
      }
      return a;
    };
    CHECK(sub(E(F(v)), F(E(v))).coeffs == H(v).coeffs);
    auto e2 = E(v);
    for (auto& [mu, c] : e2.coeffs) c *= Rat(-2);
    CHECK(sub(E(H(v)), H(E(v))).coeffs == e2.coeffs);
    auto f2 = F(v);
    for (auto& [mu, c] : f2.coeffs) c *= Rat(2);
    CHECK(sub(F(H(v)), H(F(v))).coeffs == f2.coeffs);
  }
}
