// Acceptance battery: one line per criterion, process exit code equals the
// number of failed criteria.  Value tolerances are pinned here; the printed
// wall times are informational (ctest enforces the overall timeout).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "updown/chains.hpp"
#include "updown/gamma.hpp"
#include "updown/kerov.hpp"
#include "updown/limit.hpp"
#include "updown/measures.hpp"
#include "updown/operators.hpp"
#include "updown/partition.hpp"
#include "updown/verify.hpp"

using namespace updown;

namespace {

std::vector<StrictPartition> diagrams_up_to(std::int64_t w) {
  std::vector<StrictPartition> out;
  for (std::int64_t n = 0; n <= w; ++n)
    for (auto& la : enumerate_strict(n)) out.push_back(la);
  return out;
}

bool require(bool ok, const std::string& what, std::string& note) {
  if (!ok && note.empty()) note = what;
  return ok;
}

bool criterion_dimensions(std::string& note) {
  bool ok = true;
  for (const auto& la : diagrams_up_to(12))
    ok &= require(h_closed_form(la) ==
                      oracle::path_count_dfs(StrictPartition(), la),
                  "closed form vs path enumeration at " + la.to_string(), note);
  Report rep = ivanov_suite(8);
  ok &= require(rep.pass, "factorial-evaluation dimension ratios", note);
  return ok;
}

bool criterion_kerov(std::string& note) {
  Report rep = kerov_suite(10);
  for (const auto& c : rep.checks)
    if (!c.pass) {
      note = c.input + ": got " + c.got;
      break;
    }
  return rep.pass;
}

bool criterion_coherence(std::string& note) {
  bool ok = true;
  const std::vector<Alpha> alphas{Alpha(make_rat(1, 2)), Alpha(Rat(1)),
                                  Alpha(Rat(2)), Alpha(Rat(7))};
  for (const Alpha& a : alphas) {
    ok &= require(coherence_suite(9, a).pass,
                  "coherence at alpha " + a.to_string(), note);
    for (std::int64_t n = 1; n <= 9; ++n) {
      TransitionMatrix tm = transition_matrix(n, a);
      MeasureOnLevel m = measure_on_level(n, a);
      ok &= require(check_stationarity(tm, m),
                    "stationarity at n " + std::to_string(n), note);
      ok &= require(check_reversibility(tm, m),
                    "reversibility at n " + std::to_string(n), note);
    }
  }
  MeasureOnLevel m3 = measure_on_level(3, Alpha(Rat(2)));
  ok &= require(m3.weight_of(StrictPartition({3})) == make_rat(8, 9) &&
                    m3.weight_of(StrictPartition({2, 1})) == make_rat(1, 9),
                "worked level-3 measure", note);
  TransitionMatrix t3 = transition_matrix(3, Alpha(Rat(2)));
  ok &= require(t3.T(0, 0) == make_rat(15, 16) &&
                    t3.T(0, 1) == make_rat(1, 16) &&
                    t3.T(1, 0) == make_rat(1, 2) &&
                    t3.T(1, 1) == make_rat(1, 2),
                "worked level-3 matrix", note);
  return ok;
}

bool criterion_qstar_transition(std::string& note) {
  bool ok = true;
  for (const Rat& alpha : {Rat(1), Rat(2)})
    ok &= require(qstar_transition_suite(5, 8, alpha).pass,
                  "factorial-basis action at alpha " + rat_to_string(alpha),
                  note);
  return ok;
}

bool criterion_spectrum(std::string& note) {
  bool ok = true;
  for (const Alpha& a : {Alpha(make_rat(1, 2)), Alpha(Rat(1)), Alpha(Rat(2)),
                         Alpha(Rat(7))})
    ok &= require(spectrum_suite(9, a).pass,
                  "spectrum closed form at alpha " + a.to_string(), note);
  SpectrumResult sr = spectrum(3, Alpha(Rat(2)));
  ok &= require(sr.values == std::vector<Rat>{Rat(1), make_rat(7, 16)},
                "worked spectrum {1, 7/16}", note);
  return ok;
}

bool criterion_compensation(std::string& note) {
  bool ok = true;
  for (const Rat& alpha : {Rat(1), Rat(2)})
    ok &= require(compensation_suite(alpha, 8).pass,
                  "compensation at alpha " + rat_to_string(alpha), note);
  return ok;
}

bool criterion_limit_generator(std::string& note) {
  bool ok = true;
  for (const Rat& alpha : {Rat(1), Rat(2)})
    ok &= require(limit_generator_suite(alpha, 6, 8).pass,
                  "limit generator at alpha " + rat_to_string(alpha), note);
  return ok;
}

bool criterion_gbasis(std::string& note) {
  bool ok = true;
  for (const Rat& alpha : {Rat(1), Rat(2)})
    ok &= require(gbasis_suite(alpha, 5).pass,
                  "coordinate-basis leading terms at alpha " +
                      rat_to_string(alpha),
                  note);
  return ok;
}

bool criterion_sl2(std::string& note) {
  bool ok = true;
  for (const Rat& alpha : {make_rat(1, 2), Rat(1), Rat(2)})
    ok &= require(sl2_suite(alpha, 9).pass,
                  "commutators at alpha " + rat_to_string(alpha), note);
  return ok;
}

bool criterion_monte_carlo(std::string& note) {
  bool ok = true;
  const Alpha a2(Rat(2));

  // Empirical one-step law from (3) against the exact row, chi-square with
  // one degree of freedom at the 0.001 level.
  const std::int64_t samples = 1000000;
  auto law = one_step_law(StrictPartition({3}), a2, samples, 2024);
  double observed_top = 0.0;
  for (const auto& [state, count] : law)
    if (state == StrictPartition({3}))
      observed_top = static_cast<double>(count);
  double expected_top = static_cast<double>(samples) * 15.0 / 16.0;
  double expected_low = static_cast<double>(samples) / 16.0;
  double observed_low = static_cast<double>(samples) - observed_top;
  double chi2 =
      (observed_top - expected_top) * (observed_top - expected_top) /
          expected_top +
      (observed_low - expected_low) * (observed_low - expected_low) /
          expected_low;
  ok &= require(chi2 < 10.828,
                "chi-square " + std::to_string(chi2) + " exceeds 10.828",
                note);

  // Thread-count invariance of the sampled law.
  auto law1 = one_step_law(StrictPartition({3}), a2, 100000, 77, 1);
  auto law4 = one_step_law(StrictPartition({3}), a2, 100000, 77, 4);
  ok &= require(law1 == law4, "thread-count invariance", note);

  // Stationary time-average of the first moment coordinate at level 16
  // within three standard errors of the exact expectation.
  GammaPoly p3 = SparsePoly::generator(VarKind::OddP, 1);
  Rat exact = exact_moment(16, Rat(2), p3) /
              rat_pow(Rat(16), static_cast<unsigned long>(3));
  McEstimate est = stationary_moment_mc(16, Rat(2), 1, 192000, 2560, 1);
  double gap = std::abs(est.mean - exact.get_d());
  ok &= require(gap <= 3.0 * est.std_err,
                "level-16 mean off by " + std::to_string(gap) + " with SE " +
                    std::to_string(est.std_err),
                note);

  // Bit-exact reproducibility of the estimate and of a raw trajectory.
  McEstimate again = stationary_moment_mc(16, Rat(2), 1, 192000, 2560, 1);
  ok &= require(est.mean == again.mean && est.std_err == again.std_err,
                "estimate reproducibility", note);
  Trajectory t1 = run(9, a2, 2000, 5, StrictPartition({4, 3, 2}));
  Trajectory t2 = run(9, a2, 2000, 5, StrictPartition({4, 3, 2}));
  ok &= require(t1.states == t2.states, "trajectory reproducibility", note);
  return ok;
}

bool criterion_trend(std::string& note) {
  GammaPoly p3 = SparsePoly::generator(VarKind::OddP, 1);
  const double limit_value = 2.0 / 3.0;
  double previous_gap = 1e9;
  bool ok = true;
  for (std::int64_t n = 4; n <= 16; ++n) {
    Rat e = exact_moment(n, Rat(2), p3) /
            rat_pow(Rat(n), static_cast<unsigned long>(3));
    double gap = std::abs(e.get_d() - limit_value);
    ok &= require(gap < previous_gap,
                  "gap grew at n " + std::to_string(n), note);
    previous_gap = gap;
    if (n == 16)
      ok &= require(gap < 0.08,
                    "final gap " + std::to_string(gap) + " not below 0.08",
                    note);
  }
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string label;
    std::function<bool(std::string&)> check;
  };
  std::vector<Criterion> criteria{
      {1, "dimension formulas", criterion_dimensions},
      {2, "interlacing coordinate identities", criterion_kerov},
      {3, "coherence, stationarity, reversibility", criterion_coherence},
      {4, "factorial-basis matrix action", criterion_qstar_transition},
      {5, "spectrum closed form", criterion_spectrum},
      {6, "up-down compensation", criterion_compensation},
      {7, "limit generator", criterion_limit_generator},
      {8, "coordinate-basis leading terms", criterion_gbasis},
      {9, "sl2 commutators", criterion_sl2},
      {10, "monte carlo battery", criterion_monte_carlo},
      {11, "limit trend of the first moment", criterion_trend},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = c.check(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double dt = std::chrono::duration<double>(t1 - t0).count();
    std::printf("ACCEPTANCE %d %s: %s (%.1f s)%s%s\n", c.id, c.label.c_str(),
                ok ? "PASS" : "FAIL", dt, note.empty() ? "" : " — ",
                note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures;
}
