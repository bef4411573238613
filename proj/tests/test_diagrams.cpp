#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "updown/partition.hpp"

using namespace updown;

TEST_CASE("strict partition validation and accessors") {
  StrictPartition la({6, 5, 1});
  CHECK(la.weight() == 12);
  CHECK(la.length() == 3);
  CHECK(la.part(0) == 6);
  CHECK(la.part(2) == 1);
  CHECK(la.to_string() == "[6,5,1]");
  CHECK(StrictPartition().to_string() == "[]");
  CHECK(StrictPartition().empty());
  CHECK_FALSE(la.empty());

  CHECK_THROWS_AS(StrictPartition({3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(StrictPartition({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(StrictPartition({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(StrictPartition({-1}), std::invalid_argument);
}

TEST_CASE("containment of shifted diagrams") {
  CHECK(StrictPartition().contains(StrictPartition()));
  CHECK(StrictPartition({3, 1}).contains(StrictPartition({2})));
  CHECK(StrictPartition({3, 1}).contains(StrictPartition({3, 1})));
  CHECK(StrictPartition({3, 1}).contains(StrictPartition({2, 1})));
  CHECK_FALSE(StrictPartition({3}).contains(StrictPartition({2, 1})));
  CHECK_FALSE(StrictPartition({3, 1}).contains(StrictPartition({3, 2})));
  CHECK_FALSE(StrictPartition({2}).contains(StrictPartition({3})));
}

TEST_CASE("counts of strict partitions") {
  // 1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10 for n = 0..10.
  std::vector<std::uint64_t> expected{1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
  for (std::size_t n = 0; n < expected.size(); ++n)
    CHECK(count_strict(static_cast<std::int64_t>(n)) == expected[n]);
  CHECK(count_strict(12) == 15);
  CHECK(count_strict(16) == 32);
  CHECK(count_strict(20) == 64);
}

TEST_CASE("enumeration agrees with the subset-scan oracle") {
  for (std::int64_t n = 0; n <= 12; ++n) {
    auto lib = enumerate_strict(n);
    auto ref = oracle::enumerate_bitmask(n);
    REQUIRE(lib == ref);
    CHECK(lib.size() == count_strict(n));
  }
}

TEST_CASE("enumeration order is decreasing lexicographic") {
  auto s9 = enumerate_strict(9);
  std::vector<StrictPartition> expected{
      StrictPartition({9}),       StrictPartition({8, 1}),
      StrictPartition({7, 2}),    StrictPartition({6, 3}),
      StrictPartition({6, 2, 1}), StrictPartition({5, 4}),
      StrictPartition({5, 3, 1}), StrictPartition({4, 3, 2})};
  CHECK(s9 == expected);
}

TEST_CASE("addable and removable contents") {
  CHECK(addable_contents(StrictPartition()) == std::vector<std::int64_t>{0});
  CHECK(removable_contents(StrictPartition()).empty());

  // A one-box row blocks content 0; the next new-box content after row i
  // is la_i when the gap above allows it.
  CHECK(addable_contents(StrictPartition({2, 1})) ==
        std::vector<std::int64_t>{2});
  CHECK(removable_contents(StrictPartition({2, 1})) ==
        std::vector<std::int64_t>{0});

  CHECK(addable_contents(StrictPartition({6, 5, 1})) ==
        std::vector<std::int64_t>{1, 6});
  CHECK(removable_contents(StrictPartition({6, 5, 1})) ==
        std::vector<std::int64_t>{0, 4});

  CHECK(addable_contents(StrictPartition({3, 1})) ==
        std::vector<std::int64_t>{1, 3});
  CHECK(removable_contents(StrictPartition({3, 1})) ==
        std::vector<std::int64_t>{0, 2});
}

TEST_CASE("box moves and their errors") {
  CHECK(add_box(StrictPartition({2}), 0) == StrictPartition({2, 1}));
  CHECK(add_box(StrictPartition({2}), 2) == StrictPartition({3}));
  CHECK(remove_box(StrictPartition({3, 1}), 2) == StrictPartition({2, 1}));
  CHECK(remove_box(StrictPartition({3, 1}), 0) == StrictPartition({3}));

  CHECK_THROWS_WITH_AS(add_box(StrictPartition({2, 1}), 0),
                       doctest::Contains("0"), std::domain_error);
  CHECK_THROWS_WITH_AS(remove_box(StrictPartition({3, 1}), 1),
                       doctest::Contains("1"), std::domain_error);
}

TEST_CASE("edge multiplicities") {
  // Same number of rows: 2.  New one-box row: 1.  Not an edge: 0.
  CHECK(edge_multiplicity(StrictPartition({2}), StrictPartition({3})) == 2);
  CHECK(edge_multiplicity(StrictPartition({2}), StrictPartition({2, 1})) == 1);
  CHECK(edge_multiplicity(StrictPartition(), StrictPartition({1})) == 1);
  CHECK(edge_multiplicity(StrictPartition({2}), StrictPartition({4})) == 0);
  CHECK(edge_multiplicity(StrictPartition({3}), StrictPartition({2})) == 0);
}

TEST_CASE("doubled diagram in half-integer coordinates") {
  // Rows la_i split into the pair (la_i + 1/2, la_i - 1/2); twice those.
  FrobeniusDouble d = double_diagram(StrictPartition({3, 1}));
  CHECK(d.twice_a == std::vector<std::int64_t>{7, 3});
  CHECK(d.twice_b == std::vector<std::int64_t>{5, 1});
  CHECK(double_diagram(StrictPartition()).twice_a.empty());
}
