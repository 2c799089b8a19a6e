#include <doctest.h>

#include <numeric>

#include "hyperorder/orderings.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace hyperorder;

// Each property runs over at least 1000 generated cases; the same routines
// back the acceptance binary.

TEST_CASE("concatenation identity") {
  const auto r = props::concatenation_identity(1000, Seed{101});
  CHECK_MESSAGE(r.failures == 0, r.first_failure);
  CHECK(r.cases >= 1000);
}

TEST_CASE("single-step identity") {
  const auto r = props::step_identity(1000, Seed{102});
  CHECK_MESSAGE(r.failures == 0, r.first_failure);
  CHECK(r.cases >= 1000);
}

TEST_CASE("steps change the excess by at most c - 1 and at least -1") {
  const auto r = props::step_range(1000, Seed{103});
  CHECK_MESSAGE(r.failures == 0, r.first_failure);
  CHECK(r.cases >= 1000);
}

TEST_CASE("greedy on connected 3-set families rises by at most one") {
  const auto r = props::greedy_increment(1000, Seed{104});
  CHECK_MESSAGE(r.failures == 0, r.first_failure);
  CHECK(r.cases >= 1000);
}

TEST_CASE("standard orderings of 2-set families peak at the component formula") {
  const auto r = props::two_set_component_formula(1000, Seed{105});
  CHECK_MESSAGE(r.failures == 0, r.first_failure);
  CHECK(r.cases >= 1000);
}

TEST_CASE("padding with a fresh singleton keeps the optimum") {
  const auto r = props::singleton_padding(1000, Seed{106});
  CHECK_MESSAGE(r.failures == 0, r.first_failure);
  CHECK(r.cases >= 1000);
}
