#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string_view>

#include "hyperorder/family.hpp"

namespace hyperorder {

enum class Method { greedy, two_set_exact, subset_dp, branch_bound };

std::string_view to_string(Method method);

struct OrderingResult {
  Ordering ordering;
  DeltaReport report;   // always delta_profile(family, ordering)
  Method method = Method::greedy;
  bool optimal = false; // report.max_delta is proven minimal over all orderings
};

struct SearchBudget {
  std::size_t max_m_for_dp = 24;
  std::chrono::duration<double> time_limit{60.0};
  std::size_t memory_limit = std::size_t{1} << 30;  // bytes
};

// How the first member-set of each component is picked.
enum class StartRule {
  lowest_index,        // the lowest-index member-set of the component
  best_of_all_starts,  // try every member-set as its component's start, keep the smallest max
};

// How components are sequenced before their member-sets are laid out.
enum class ComponentRule {
  d_increasing,      // by |C| - e(C), ascending
  gamma_decreasing,  // by e(C) - ceil((|C|-1)/2), descending
  vertex_order,      // by smallest vertex id
};

// Throw std::invalid_argument on an unknown tag.
StartRule parse_start_rule(std::string_view tag);
ComponentRule parse_component_rule(std::string_view tag);
std::string_view to_string(StartRule rule);
std::string_view to_string(ComponentRule rule);

// Greedy standard ordering: components are sequenced by `component_rule`
// (ties by smallest vertex), and inside a component each next member-set is
// one adding the fewest new elements (ties by lowest index).
OrderingResult standard_ordering(const SetFamily& family,
                                 StartRule start_rule = StartRule::lowest_index,
                                 ComponentRule component_rule = ComponentRule::d_increasing);

// Exact polynomial ordering for families whose member-sets have at most two
// elements. Throws std::invalid_argument otherwise.
OrderingResult two_set_optimal(const SetFamily& family);

// Exact minimum over all orderings by dynamic programming over subsets of
// member-sets. Throws GuardExceeded when m, memory, or time exceed the budget.
OrderingResult subset_dp_exact(const SetFamily& family, const SearchBudget& budget = {});

// Anytime depth-first search over prefixes, seeded with the greedy ordering.
// Prunes every prefix whose running max reaches the best known value (or the
// caller's incumbent, when smaller). optimal=false after a timeout.
OrderingResult branch_bound(const SetFamily& family, const SearchBudget& budget = {},
                            std::optional<int> incumbent = std::nullopt);

}  // namespace hyperorder
