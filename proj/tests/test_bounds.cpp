#include <doctest.h>

#include <cmath>

#include "hyperorder/bounds.hpp"
#include "hyperorder/instances.hpp"
#include "hyperorder/orderings.hpp"
#include "support/oracles.hpp"

using namespace hyperorder;

namespace {

const BoundReport& find(const std::vector<BoundReport>& reports, const std::string& name) {
  for (const auto& r : reports) {
    if (r.name == name) return r;
  }
  FAIL("missing bound " << name);
  return reports.front();
}

std::int64_t as_int(const BoundReport& r) { return std::get<std::int64_t>(*r.value); }

}  // namespace

TEST_CASE("f2 formula") {
  CHECK(f2_formula(10, 4) == 4);
  CHECK(f2_formula(10, 5) == 5);
  CHECK(f2_formula(10, 7) == 3);
  CHECK(f2_formula(10, 9) == 1);
  CHECK(f2_formula(10, 40) == 1);
  CHECK_THROWS_AS(f2_formula(1, 1), std::invalid_argument);
}

TEST_CASE("f2 formula equals the worst optimum over simple graphs") {
  for (int n = 2; n <= 5; ++n) {
    const auto best = oracle::max_optimum_over_graphs(n, [](const SetFamily& f) { return oracle::min_over_permutations(f); });
    for (int m = 1; m < static_cast<int>(best.size()); ++m) {
      CHECK_MESSAGE(f2_formula(n, m) == best[m], "n=" << n << " m=" << m);
    }
  }
  const auto best6 = oracle::max_optimum_over_graphs(6, [](const SetFamily& f) { return subset_dp_exact(f).report.max_delta; });
  for (int m = 1; m < static_cast<int>(best6.size()); ++m) CHECK_MESSAGE(f2_formula(6, m) == best6[m], "m=" << m);
}

TEST_CASE("f2 is not the component count once a cycle fits beside an edge") {
  // A triangle plus a disjoint edge has two non-trivial components, yet laying
  // out the triangle first keeps the excess at 1.
  const SetFamily f(5, 2, {{1, 2}, {2, 3}, {1, 3}, {4, 5}});
  CHECK(components(f).size() == 2);
  CHECK(subset_dp_exact(f).report.max_delta == 1);
  CHECK(f2_formula(5, 4) == 1);
  CHECK(oracle::max_nontrivial_components(5)[4] == 2);
  for (int n = 2; n <= 4; ++n) {
    const auto comps = oracle::max_nontrivial_components(n);
    for (int m = 1; m < static_cast<int>(comps.size()); ++m) CHECK(f2_formula(n, m) == comps[m]);
  }
}

TEST_CASE("3-set bounds") {
  SUBCASE("n = m = 9") {
    const auto r = f3_bounds(9, 9);
    CHECK(as_int(find(r, "exact")) == 3);
    CHECK(as_int(find(r, "quarter_plus_two")) == 5);
    CHECK(as_int(find(r, "prefix_cap")) == 6);
    CHECK(as_int(find(r, "dense")) == 5);
    const auto ref = std::get<double>(*find(r, "fifth_log_reference").value);
    CHECK(ref == doctest::Approx(9.0 / 5.0 + 1.0 + std::log2(9.0)));
  }
  SUBCASE("small n") {
    CHECK(as_int(find(f3_bounds(4, 4), "exact")) == 2);
    CHECK(as_int(find(f3_bounds(3, 3), "exact")) == 2);
    CHECK(as_int(find(f3_bounds(6, 6), "exact")) == 2);
    CHECK(as_int(find(f3_bounds(7, 7), "exact")) == 3);
  }
  SUBCASE("n = 100") {
    const auto r = f3_bounds(100, 100);
    CHECK(as_int(find(r, "quarter_plus_two")) == 27);
    CHECK_FALSE(find(r, "exact").applicable);
    CHECK_FALSE(find(r, "exact").value.has_value());
  }
  SUBCASE("applicability follows m") {
    const auto r = f3_bounds(20, 5);
    CHECK_FALSE(find(r, "dense").applicable);
    CHECK_FALSE(find(r, "quarter_plus_two").applicable);
    CHECK_FALSE(find(r, "fifth_log_reference").applicable);
    CHECK(find(r, "prefix_cap").applicable);
    CHECK(find(f3_bounds(20, 10), "dense").applicable);
  }
  CHECK_THROWS_AS(f3_bounds(2, 2), std::invalid_argument);
}

TEST_CASE("disconnected bound") {
  SUBCASE("orders 5 and 3") {
    const SetFamily f(8, 3, {{1, 2, 3}, {3, 4, 5}, {1, 4, 5}, {2, 5, 4}, {6, 7, 8}, {6, 7, 8}, {6, 7, 8}, {6, 7, 8}});
    const auto r = disconnected_bound(f);
    REQUIRE(r.applicable);
    CHECK(std::get<std::int64_t>(*r.value) == 3);
  }
  SUBCASE("connected is inapplicable") {
    const auto r = disconnected_bound(fano());
    CHECK_FALSE(r.applicable);
    CHECK_FALSE(r.value.has_value());
  }
  SUBCASE("m < n is inapplicable") {
    CHECK_FALSE(disconnected_bound(SetFamily(8, 3, {{1, 2, 3}, {4, 5, 6}})).applicable);
  }
  SUBCASE("holds against the exact optimum") {
    SplitMix64 rng(Seed{31});
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const auto n = static_cast<std::uint32_t>(6 + rng.below(9));
      const auto split = static_cast<std::uint32_t>(3 + rng.below(n - 5));
      std::vector<MemberSet> sets;
      for (std::uint32_t i = 0; i < n; ++i) {
        const bool left = rng.below(2) == 0;
        const auto lo = left ? 1u : split + 1;
        const auto span = left ? split : n - split;
        const auto part = oracle::random_family(rng, span, 1, 3, 3);
        MemberSet s;
        for (auto x : part[0]) s.push_back(x + lo - 1);
        sets.push_back(std::move(s));
      }
      const SetFamily f(n, 3, std::move(sets));
      const auto r = disconnected_bound(f);
      if (!r.applicable) continue;
      ++checked;
      CHECK(subset_dp_exact(f).report.max_delta <= std::get<std::int64_t>(*r.value));
    }
    CHECK(checked > 100);
  }
}

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  // High-precision reference value, computed independently at 50 digits.
  CHECK(binary_entropy(0.11) == doctest::Approx(0.49991595816452799564).epsilon(1e-14));
  CHECK(binary_entropy(0.3) == doctest::Approx(binary_entropy(0.7)).epsilon(1e-15));
  CHECK_THROWS_AS(binary_entropy(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(binary_entropy(1.5), std::invalid_argument);
}

TEST_CASE("lower-bound certificate") {
  const auto at_constants = lower_bound_lhs(0.4590625, 0.0818757697241);
  // Reference computed independently at 50 digits: -4.7888259347732e-13.
  CHECK(at_constants.lhs == doctest::Approx(-4.7888259347732e-13).epsilon(1e-2));
  CHECK(at_constants.certified);

  const auto too_wide = lower_bound_lhs(0.4590625, 0.2);
  CHECK(too_wide.lhs > 0.0);
  CHECK_FALSE(too_wide.certified);
  CHECK(lower_bound_lhs(0.4590625, 1e-6).lhs < 0.0);
  CHECK(lower_bound_lhs(0.4590625, 0.082).lhs > 0.0);

  CHECK_THROWS_AS(lower_bound_lhs(0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(lower_bound_lhs(0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(lower_bound_lhs(0.5, 0.0), std::invalid_argument);
}

TEST_CASE("certification is monotone in eps on a grid") {
  for (int ci = 1; ci < 100; ++ci) {
    const double c = ci / 100.0;
    bool seen_failure = false;
    for (int ei = 1; ei * 0.002 < 1.0 - c; ++ei) {
      const bool ok = lower_bound_lhs(c, ei * 0.002).certified;
      if (!ok) seen_failure = true;
      CHECK_MESSAGE(!(seen_failure && ok), "c=" << c << " eps=" << ei * 0.002);
    }
  }
}

TEST_CASE("lhs is continuous near the constants") {
  const double c = 0.4590625;
  const double e = 0.0818757697241;
  const double base = lower_bound_lhs(c, e).lhs;
  CHECK(std::abs(lower_bound_lhs(c + 1e-9, e).lhs - base) < 1e-8);
  CHECK(std::abs(lower_bound_lhs(c, e + 1e-9).lhs - base) < 1e-8);
}

TEST_CASE("grid search for the constants") {
  const auto fine = search_constants(1e-4);
  CHECK(fine.certified);
  CHECK(fine.eps >= 0.0818 - 1e-12);
  CHECK(fine.c_const == doctest::Approx(0.459).epsilon(2e-3));
  const auto coarse = search_constants(1e-2);
  CHECK(coarse.certified);
  CHECK(coarse.eps <= fine.eps);
  CHECK_THROWS_AS(search_constants(0.0), std::invalid_argument);
  CHECK_THROWS_AS(search_constants(0.1), std::invalid_argument);
}
