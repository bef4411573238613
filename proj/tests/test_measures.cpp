#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "updown/measures.hpp"
#include "updown/partition.hpp"

using namespace updown;

TEST_CASE("weighted dimensions by closed form") {
  CHECK(h_closed_form(StrictPartition()) == 1);
  CHECK(h_closed_form(StrictPartition({1})) == 1);
  CHECK(h_closed_form(StrictPartition({2})) == 2);
  CHECK(h_closed_form(StrictPartition({3})) == 4);
  CHECK(h_closed_form(StrictPartition({4})) == 8);
  CHECK(h_closed_form(StrictPartition({2, 1})) == 2);
  CHECK(h_closed_form(StrictPartition({3, 1})) == 8);
}

TEST_CASE("closed form equals the path-enumeration oracle") {
  for (std::int64_t n = 0; n <= 9; ++n)
    for (const auto& la : enumerate_strict(n)) {
      CHECK(h_closed_form(la) == oracle::path_count_dfs(StrictPartition(), la));
      CHECK(path_count(StrictPartition(), la) == h_closed_form(la));
    }
}

TEST_CASE("weighted path counts between diagrams") {
  // (2) -> (3,1) admits two routes, each of weight 2.
  CHECK(path_count(StrictPartition({2}), StrictPartition({3, 1})) == 4);
  CHECK(path_count(StrictPartition({2}), StrictPartition({2})) == 1);
  CHECK(path_count(StrictPartition({3}), StrictPartition({2, 1})) == 0);
  for (std::int64_t w = 0; w <= 7; ++w)
    for (const auto& la : enumerate_strict(w))
      for (std::int64_t v = 0; v <= w; ++v)
        for (const auto& mu : enumerate_strict(v))
          CHECK(path_count(mu, la) == oracle::path_count_dfs(mu, la));
}

TEST_CASE("down transition probabilities") {
  // From (3,1): h((2,1)) k / h((3,1)) = 2*2/8 and h((3))*1/8.
  CHECK(down_prob(StrictPartition({3, 1}), StrictPartition({2, 1})) ==
        make_rat(1, 2));
  CHECK(down_prob(StrictPartition({3, 1}), StrictPartition({3})) ==
        make_rat(1, 2));
  CHECK_THROWS_AS(down_prob(StrictPartition({3}), StrictPartition({1})),
                  std::domain_error);
  // Rows of the down kernel sum to one.
  for (std::int64_t n = 1; n <= 8; ++n)
    for (const auto& la : enumerate_strict(n)) {
      Rat total(0);
      for (auto y : removable_contents(la))
        total += down_prob(la, remove_box(la, y));
      CHECK(total == 1);
    }
}

TEST_CASE("up transition probabilities") {
  const Alpha two(Rat(2));
  // From (2): new row 1/9, grown row 8/9.
  CHECK(up_prob(StrictPartition({2}), 2, two) == make_rat(8, 9));
  CHECK(up_prob(StrictPartition({2}), 0, two) == make_rat(1, 9));
  CHECK_THROWS_AS(up_prob(StrictPartition({2, 1}), 0, two), std::domain_error);
  // Rows sum to one for finite and infinite parameter.
  for (const Alpha& a : {Alpha(make_rat(1, 2)), Alpha(Rat(7)),
                         Alpha::infinity()})
    for (std::int64_t n = 0; n <= 8; ++n)
      for (const auto& la : enumerate_strict(n)) {
        Rat total(0);
        for (auto x : addable_contents(la)) total += up_prob(la, x, a);
        CHECK(total == 1);
      }
}

TEST_CASE("level measures: worked values") {
  MeasureOnLevel pl = plancherel_measure(3);
  REQUIRE(pl.support.size() == 2);
  CHECK(pl.support[0] == StrictPartition({3}));
  CHECK(pl.weight_of(StrictPartition({3})) == make_rat(2, 3));
  CHECK(pl.weight_of(StrictPartition({2, 1})) == make_rat(1, 3));

  MeasureOnLevel m = multiplicative_measure(3, Rat(2));
  CHECK(m.weight_of(StrictPartition({3})) == make_rat(8, 9));
  CHECK(m.weight_of(StrictPartition({2, 1})) == make_rat(1, 9));

  // The general-parameter values (2/3)(a+6)/(a+4) and (1/3)a/(a+4) at a=7.
  MeasureOnLevel m7 = multiplicative_measure(3, Rat(7));
  CHECK(m7.weight_of(StrictPartition({3})) == make_rat(26, 33));
  CHECK(m7.weight_of(StrictPartition({2, 1})) == make_rat(7, 33));
}

TEST_CASE("level measures normalize and dispatch") {
  for (std::int64_t n = 0; n <= 8; ++n) {
    for (const Alpha& a : {Alpha(make_rat(1, 2)), Alpha(Rat(1)), Alpha(Rat(2)),
                           Alpha(Rat(7)), Alpha::infinity()}) {
      MeasureOnLevel m = measure_on_level(n, a);
      Rat total(0);
      for (const auto& w : m.weights) {
        CHECK(w > 0);
        total += w;
      }
      CHECK(total == 1);
    }
    // The infinite-parameter member is the weighted-dimension measure.
    CHECK(measure_on_level(n, Alpha::infinity()).weights ==
          plancherel_measure(n).weights);
  }
}

TEST_CASE("coherence of the measure family") {
  for (const Alpha& a : {Alpha(make_rat(1, 2)), Alpha(Rat(1)), Alpha(Rat(2)),
                         Alpha(Rat(7)), Alpha::infinity()})
    for (std::int64_t n = 0; n <= 6; ++n) {
      CoherenceReport r = verify_coherence(n, a);
      INFO("n = ", n, ", detail: ", r.detail);
      CHECK(r.pass);
    }
}

TEST_CASE("relative dimension via the factorial evaluation") {
  CHECK(ivanov_dimension(StrictPartition({2}), StrictPartition({3, 1})) ==
        make_rat(1, 2));
  CHECK(ivanov_dimension(StrictPartition(), StrictPartition({3, 1})) == 1);
  CHECK(ivanov_dimension(StrictPartition({3, 1}), StrictPartition({2})) == 0);
  for (std::int64_t w = 0; w <= 7; ++w)
    for (const auto& la : enumerate_strict(w))
      for (std::int64_t v = 0; v <= w; ++v)
        for (const auto& mu : enumerate_strict(v))
          CHECK(ivanov_dimension(mu, la) ==
                make_rat(path_count(mu, la), h_closed_form(la)));
}
