#include <doctest.h>

#include <numeric>

#include "hyperorder/errors.hpp"
#include "hyperorder/gluing.hpp"
#include "hyperorder/orderings.hpp"

using namespace hyperorder;

namespace {

std::uint64_t ipow(std::uint64_t q, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= q;
  return r;
}

Ordering shuffled(std::size_t m, SplitMix64& rng) {
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), std::size_t{0});
  rng.shuffle(std::span<std::size_t>(p));
  return Ordering(p);
}

}  // namespace

TEST_CASE("prime field") {
  CHECK(is_prime(2));
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(65537), std::invalid_argument);
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 101u}) {
    const PrimeField f(q);
    for (std::uint32_t a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("small GF(2) system") {
  // x1 + x2 = 1, x2 + x3 = 0
  const LinearSystem sys(2, 3, 2, {{{{1, 1}, {2, 1}}, 1}, {{{2, 1}, {3, 1}}, 0}});
  const auto trace = glue_solve(sys, Ordering::identity(2));
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].partials == 2);
  CHECK(trace.steps[1].partials == 2);
  CHECK(trace.steps[1].delta == 1);
  CHECK(trace.consistent);
  CHECK(trace.solution_count() == 2);
  const auto sols = materialize_solutions(trace);
  CHECK(sols == std::vector<Assignment>{{0, 1, 1}, {1, 0, 0}});
  CHECK(sols == brute_force_solve(sys));
}

TEST_CASE("contradictions empty the state") {
  const LinearSystem sys(3, 2, 2, {{{{1, 1}, {2, 2}}, 1}, {{{1, 2}, {2, 1}}, 1}});
  // Second equation is twice the first with a different right-hand side (2 != 1).
  const auto trace = glue_solve(sys, Ordering::identity(2));
  CHECK_FALSE(trace.consistent);
  CHECK(trace.partial_count() == 0);
  CHECK(trace.solution_count() == 0);
  CHECK(materialize_solutions(trace).empty());
  CHECK(brute_force_solve(sys).empty());
}

TEST_CASE("duplicate equations keep the state size") {
  const LinearSystem sys(5, 3, 3, {{{{1, 2}, {3, 4}}, 3}, {{{1, 2}, {3, 4}}, 3}, {{{2, 1}}, 4}});
  const auto trace = glue_solve(sys, Ordering::identity(3));
  REQUIRE(trace.steps.size() == 3);
  CHECK(trace.steps[0].partials == 5);
  CHECK(trace.steps[1].partials == 5);
  CHECK(trace.steps[2].partials == 5);
  CHECK(prefix_rank(sys, Ordering::identity(3), 2) == 1);
  CHECK(prefix_rank(sys, Ordering::identity(3), 3) == 2);
  CHECK(materialize_solutions(trace) == brute_force_solve(sys));
}

TEST_CASE("empty system enumerates everything") {
  const LinearSystem sys(2, 2, 3, {});
  const auto trace = glue_solve(sys, Ordering::identity(0));
  CHECK(trace.free_variables == 2);
  CHECK(trace.solution_count() == 4);
  CHECK(materialize_solutions(trace).size() == 4);
  CHECK(brute_force_solve(sys).size() == 4);
}

TEST_CASE("gluing agrees with brute force") {
  SplitMix64 rng(Seed{41});
  const std::uint32_t fields[] = {2, 3, 5};
  for (int trial = 0; trial < 100; ++trial) {
    const auto q = fields[trial % 3];
    const auto n = static_cast<std::uint32_t>(1 + rng.below(q == 5 ? 8 : 10));
    const auto m = static_cast<std::uint32_t>(rng.below(12));
    const auto sys = gen_random_system(q, n, m, 3, Seed{rng.next()}, trial % 2 == 0);
    const auto trace = glue_solve(sys, shuffled(sys.m(), rng));
    const auto expected = brute_force_solve(sys);
    CHECK(materialize_solutions(trace) == expected);
    CHECK(trace.solution_count() == expected.size());
    if (trial % 2 == 0) CHECK(trace.consistent);
  }
}

TEST_CASE("solution sets do not depend on the ordering") {
  SplitMix64 rng(Seed{42});
  for (int trial = 0; trial < 60; ++trial) {
    const auto sys = gen_random_system(3, 9, 8, 3, Seed{rng.next()});
    const auto a = materialize_solutions(glue_solve(sys, Ordering::identity(sys.m())));
    const auto b = materialize_solutions(glue_solve(sys, shuffled(sys.m(), rng)));
    CHECK(a == b);
  }
}

TEST_CASE("state sizes follow union size minus rank") {
  SplitMix64 rng(Seed{43});
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t q = trial % 2 == 0 ? 2 : 7;
    const auto sys = gen_random_system(q, 12, 10, 3, Seed{rng.next()});
    const auto order = shuffled(sys.m(), rng);
    const auto trace = glue_solve(sys, order);
    REQUIRE(trace.consistent);
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
      const auto& s = trace.steps[k];
      CHECK(s.partials == ipow(q, s.union_size - prefix_rank(sys, order, k + 1)));
      CHECK(s.work >= s.partials);
    }
  }
}

TEST_CASE("work grows with the prefix excess") {
  // On independent equations |S_k| = q^delta_k, and work sums those sizes.
  const LinearSystem sys(2, 6, 2, {{{{1, 1}, {2, 1}}, 0}, {{{3, 1}, {4, 1}}, 0}, {{{5, 1}, {6, 1}}, 0}});
  const auto trace = glue_solve(sys, Ordering::identity(3));
  std::uint64_t expected = 0;
  std::size_t previous = 1;
  for (const auto& s : trace.steps) {
    CHECK(s.partials == ipow(2, static_cast<std::size_t>(s.delta)));
    expected += previous + s.partials;
    previous = s.partials;
    CHECK(s.work == expected);
  }
}

TEST_CASE("gfsys text format") {
  const auto sys = gen_random_system(5, 7, 6, 3, Seed{8});
  const auto text = format_system(sys);
  CHECK(parse_system(text) == sys);
  CHECK(format_system(parse_system(text)) == text);
  CHECK(support_family(sys).m() == 6);

  auto line_of = [](const char* t) {
    try {
      parse_system(t);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  CHECK(line_of("gfsys 4 3 1 2\n1 1 1 0\n") == 1);
  CHECK(line_of("gfsys 3 3 1 2\n1 1 3 0\n") == 2);
  CHECK(line_of("gfsys 3 3 1 2\n2 1 1 1 1 0\n") == 2);
  CHECK(line_of("gfsys 3 3 1 2\n1 4 1 0\n") == 2);
  CHECK(line_of("gfsys 3 3 1 2\n1 1 1\n") == 2);
  CHECK(line_of("gfsys 3 3 2 2\n1 1 1 0\n") == 2);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(brute_force_solve(LinearSystem(2, 25, 3, {})), GuardExceeded);
  GlueOptions tiny;
  tiny.max_partial_digits = 4;
  const auto sys = gen_random_system(3, 10, 4, 3, Seed{5});
  CHECK_THROWS_AS(glue_solve(sys, Ordering::identity(4), tiny), GuardExceeded);
  CHECK_THROWS_AS(glue_solve(sys, Ordering::identity(3)), std::invalid_argument);
}
