#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperorder/family.hpp"

namespace hyperorder {

using BoundValue = std::variant<std::int64_t, double>;

struct BoundReport {
  std::string name;
  std::optional<BoundValue> value;  // empty exactly when !applicable
  bool applicable = false;
  std::string statement;            // the inequality or identity being evaluated
};

// Worst-case minimum width over families of m sets of size <= 2 on n points:
// m for m <= n/2, n-m below n-1, then 1. This is not the largest number of
// non-trivial components of a graph with n vertices and m edges: a triangle
// next to an edge has two, yet width 1. Throws std::invalid_argument for n < 2 or m < 1.
std::int64_t f2_formula(std::int64_t n, std::int64_t m);

// Every closed-form statement about the worst case for 3-sets, each with its
// applicability evaluated for (n, m). Throws std::invalid_argument for n < 3.
//   exact              f(3)=2, f(n)=ceil(n/3) for 4<=n<=9        (m = n, n <= 9)
//   prefix_cap         f(n,m) <= 2*ceil(n/3)                      (always)
//   dense              f(n,m) <= floor((n+1)/2)                   (m >= ceil((n-1)/2))
//   quarter_plus_two   f(n) <= ceil(n/4)+2                        (m = n)
//   fifth_log_reference f(n) <= n/5+1+log2(n), reference only     (m = n)
std::vector<BoundReport> f3_bounds(std::int64_t n, std::int64_t m);

// floor((L+1)/2) with L the largest component order, for disconnected
// families of sets of size <= 3 with m >= n. Hypothesis failures come back as
// an inapplicable report.
BoundReport disconnected_bound(const SetFamily& family);

// H(a) = -a log2 a - (1-a) log2 (1-a), with H(0) = H(1) = 0.
// Throws std::invalid_argument outside [0, 1].
double binary_entropy(double a);

struct LowerBoundCertificate {
  double c_const = 0.0;
  double eps = 0.0;
  double lhs = 0.0;  // (1-c)H(eps/(1-c)) + 2(c+eps)H(c/(c+eps)) - H(c)
  bool certified = false;
};

// Throws std::invalid_argument unless 0 < c_const < 1 and 0 < eps < 1 - c_const.
LowerBoundCertificate lower_bound_lhs(double c_const, double eps);

// Grid search over c = i*step, eps = k*step for the largest certified eps.
// Ties on eps go to the most negative lhs. Throws std::invalid_argument unless
// 0 < grid_step <= 0.05.
LowerBoundCertificate search_constants(double grid_step);

}  // namespace hyperorder
