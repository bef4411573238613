#include <doctest.h>

#include "updown/chains.hpp"
#include "updown/partition.hpp"

using namespace updown;

TEST_CASE("parallel transition matrix equals the serial reference") {
  for (const Alpha& a : {Alpha(Rat(2)), Alpha::infinity()}) {
    TransitionMatrix serial = transition_matrix(8, a, 1);
    TransitionMatrix parallel = transition_matrix(8, a, 4);
    CHECK(serial.order == parallel.order);
    CHECK(serial.T == parallel.T);
  }
}

TEST_CASE("sampled one-step law is independent of the thread count") {
  const Alpha a(Rat(2));
  StrictPartition la({4, 2, 1});
  auto one = one_step_law(la, a, 20000, 99, 1);
  auto four = one_step_law(la, a, 20000, 99, 4);
  CHECK(one == four);
}
