#include "hyperorder/orderings.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hyperorder/detail/dense_bits.hpp"
#include "hyperorder/errors.hpp"

namespace hyperorder {

namespace {

using Clock = std::chrono::steady_clock;

OrderingResult finish(const SetFamily& family, std::vector<std::size_t> perm, Method method,
                      bool optimal) {
  OrderingResult result;
  result.ordering = Ordering(std::move(perm));
  result.report = delta_profile(family, result.ordering);
  result.method = method;
  result.optimal = optimal;
  return result;
}

// Greedy layout of one component at a time. Scratch state is reset after
// every call, so one instance serves all components and all trial starts.
class GreedyLayout {
 public:
  explicit GreedyLayout(const SetFamily& family)
      : family_(family),
        incidence_(std::size_t{family.n()} + 1),
        covered_(std::size_t{family.n()} + 1),
        fresh_(family.m(), 0),
        placed_(family.m(), 0),
        buckets_(family.max_set_size() + 1) {
    for (std::size_t i = 0; i < family.m(); ++i) {
      for (auto x : family[i]) incidence_[x].push_back(i);
    }
  }

  // Appends the member-sets of one component to `out`, beginning with `start`.
  void layout(const std::vector<std::size_t>& members, std::size_t start,
              std::vector<std::size_t>& out) {
    for (auto i : members) {
      fresh_[i] = family_[i].size();
      buckets_[fresh_[i]].insert(i);
    }
    std::vector<Element> touched;
    auto place = [&](std::size_t i) {
      buckets_[fresh_[i]].erase(i);
      placed_[i] = 1;
      out.push_back(i);
      for (auto x : family_[i]) {
        if (!covered_.insert(x)) continue;
        touched.push_back(x);
        for (auto j : incidence_[x]) {
          if (placed_[j]) continue;
          buckets_[fresh_[j]].erase(j);
          --fresh_[j];
          buckets_[fresh_[j]].insert(j);
        }
      }
    };
    place(start);
    for (std::size_t done = 1; done < members.size(); ++done) {
      auto bucket = std::find_if(buckets_.begin(), buckets_.end(),
                                 [](const auto& b) { return !b.empty(); });
      place(*bucket->begin());
    }
    for (auto x : touched) covered_.reset(x);
    for (auto i : members) placed_[i] = 0;
  }

  // max over k of (|union of first k| - k) for a component-local sequence.
  int relative_peak(const std::vector<std::size_t>& sequence) {
    std::vector<Element> touched;
    long union_size = 0;
    int peak = INT_MIN;
    for (std::size_t k = 0; k < sequence.size(); ++k) {
      for (auto x : family_[sequence[k]]) {
        if (covered_.insert(x)) {
          touched.push_back(x);
          ++union_size;
        }
      }
      peak = std::max(peak, static_cast<int>(union_size - static_cast<long>(k + 1)));
    }
    for (auto x : touched) covered_.reset(x);
    return peak;
  }

 private:
  const SetFamily& family_;
  std::vector<std::vector<std::size_t>> incidence_;
  detail::DenseBits covered_;
  std::vector<std::size_t> fresh_;
  std::vector<char> placed_;
  std::vector<std::set<std::size_t>> buckets_;
};

void sort_components(std::vector<ComponentStats>& comps, ComponentRule rule) {
  // components() already yields smallest-vertex order; stable sorts keep it for ties.
  switch (rule) {
    case ComponentRule::d_increasing:
      std::stable_sort(comps.begin(), comps.end(),
                       [](const auto& a, const auto& b) { return a.d < b.d; });
      break;
    case ComponentRule::gamma_decreasing:
      std::stable_sort(comps.begin(), comps.end(),
                       [](const auto& a, const auto& b) { return a.gamma > b.gamma; });
      break;
    case ComponentRule::vertex_order:
      break;
  }
}

std::size_t popcount_bits(std::uint64_t x) { return static_cast<std::size_t>(std::popcount(x)); }

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::greedy: return "greedy";
    case Method::two_set_exact: return "two_set_exact";
    case Method::subset_dp: return "subset_dp";
    case Method::branch_bound: return "branch_bound";
  }
  return "unknown";
}

StartRule parse_start_rule(std::string_view tag) {
  if (tag == "lowest_index" || tag == "lowest-index") return StartRule::lowest_index;
  if (tag == "best_of_all_starts" || tag == "best-of-all-starts") return StartRule::best_of_all_starts;
  throw std::invalid_argument("unknown start rule '" + std::string(tag) + "'");
}

ComponentRule parse_component_rule(std::string_view tag) {
  if (tag == "d_increasing" || tag == "d-increasing") return ComponentRule::d_increasing;
  if (tag == "gamma_decreasing" || tag == "gamma-decreasing") return ComponentRule::gamma_decreasing;
  if (tag == "vertex_order" || tag == "vertex-order") return ComponentRule::vertex_order;
  throw std::invalid_argument("unknown component rule '" + std::string(tag) + "'");
}

std::string_view to_string(StartRule rule) {
  return rule == StartRule::lowest_index ? "lowest_index" : "best_of_all_starts";
}

std::string_view to_string(ComponentRule rule) {
  switch (rule) {
    case ComponentRule::d_increasing: return "d_increasing";
    case ComponentRule::gamma_decreasing: return "gamma_decreasing";
    case ComponentRule::vertex_order: return "vertex_order";
  }
  return "unknown";
}

OrderingResult standard_ordering(const SetFamily& family, StartRule start_rule,
                                 ComponentRule component_rule) {
  auto comps = components(family);
  sort_components(comps, component_rule);

  GreedyLayout greedy(family);
  std::vector<std::size_t> perm;
  perm.reserve(family.m());
  for (const auto& comp : comps) {
    const auto& members = comp.member_sets;
    if (start_rule == StartRule::lowest_index || members.size() == 1) {
      greedy.layout(members, members.front(), perm);
      continue;
    }
    // Each component's prefix values are its own relative profile shifted by
    // the net of the components before it, so the start can be chosen per
    // component.
    std::vector<std::size_t> best;
    int best_peak = INT_MAX;
    for (auto start : members) {
      std::vector<std::size_t> trial;
      greedy.layout(members, start, trial);
      const int peak = greedy.relative_peak(trial);
      if (peak < best_peak) {
        best_peak = peak;
        best = std::move(trial);
      }
    }
    perm.insert(perm.end(), best.begin(), best.end());
  }
  return finish(family, std::move(perm), Method::greedy, false);
}

OrderingResult two_set_optimal(const SetFamily& family) {
  if (family.max_set_size() > 2) {
    throw std::invalid_argument("two-set ordering requires every member-set to have at most 2 elements");
  }
  struct Job {
    const ComponentStats* comp;
    std::size_t start;
    int peak;  // relative peak of the component's greedy run: 0 if it can open with a singleton
  };
  const auto comps = components(family);
  std::vector<Job> jobs;
  jobs.reserve(comps.size());
  for (const auto& comp : comps) {
    Job job{&comp, comp.member_sets.front(), 1};
    for (auto i : comp.member_sets) {
      if (family[i].size() == 1) {
        job.start = i;
        job.peak = 0;
        break;
      }
    }
    jobs.push_back(job);
  }
  // Components with non-positive d first (cheaper openings first), then the
  // d = 1 components. With only 2-sets every peak is 1 and this is plain
  // d-increasing order.
  std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
    const bool a_pos = a.comp->d > 0;
    const bool b_pos = b.comp->d > 0;
    if (a_pos != b_pos) return b_pos;
    if (a.peak != b.peak) return a.peak < b.peak;
    return a.comp->d < b.comp->d;
  });

  GreedyLayout greedy(family);
  std::vector<std::size_t> perm;
  perm.reserve(family.m());
  for (const auto& job : jobs) greedy.layout(job.comp->member_sets, job.start, perm);
  return finish(family, std::move(perm), Method::two_set_exact, true);
}

OrderingResult subset_dp_exact(const SetFamily& family, const SearchBudget& budget) {
  const std::size_t m = family.m();
  if (m > budget.max_m_for_dp || m >= 63) {
    throw GuardExceeded("subset DP refused: m = " + std::to_string(m) + " exceeds the cap of " +
                        std::to_string(budget.max_m_for_dp));
  }
  if (m == 0) return finish(family, {}, Method::subset_dp, true);

  const std::size_t states = std::size_t{1} << m;
  const std::size_t words = detail::words_for(std::size_t{family.n()} + 1);
  const std::size_t low_bits = m / 2;
  const std::size_t high_bits = m - low_bits;
  const std::size_t table_bytes = ((std::size_t{1} << low_bits) + (std::size_t{1} << high_bits)) * words * 8;
  const std::size_t needed = states * sizeof(std::int32_t) + table_bytes;
  if (needed > budget.memory_limit) {
    throw GuardExceeded("subset DP refused: needs " + std::to_string(needed) +
                        " bytes, memory limit is " + std::to_string(budget.memory_limit));
  }

  // Union masks of the low and high halves of the index set; the union of S
  // is the OR of one row from each table.
  auto build = [&](std::size_t offset, std::size_t bits) {
    std::vector<std::uint64_t> table((std::size_t{1} << bits) * words, 0);
    for (std::size_t s = 1; s < (std::size_t{1} << bits); ++s) {
      const auto j = static_cast<std::size_t>(std::countr_zero(s));
      const auto prev = s & (s - 1);
      std::copy_n(&table[prev * words], words, &table[s * words]);
      for (auto x : family[offset + j]) table[s * words + (x >> 6)] |= std::uint64_t{1} << (x & 63);
    }
    return table;
  };
  const auto low = build(0, low_bits);
  const auto high = build(low_bits, high_bits);
  const std::size_t low_mask = (std::size_t{1} << low_bits) - 1;

  auto union_size = [&](std::size_t s) {
    const auto* a = &low[(s & low_mask) * words];
    const auto* b = &high[(s >> low_bits) * words];
    std::size_t total = 0;
    for (std::size_t w = 0; w < words; ++w) total += popcount_bits(a[w] | b[w]);
    return total;
  };

  constexpr std::int32_t kEmpty = std::numeric_limits<std::int32_t>::min();
  std::vector<std::int32_t> best(states);
  best[0] = kEmpty;
  const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget.time_limit);
  for (std::size_t s = 1; s < states; ++s) {
    if ((s & 0xFFFF) == 0 && Clock::now() > deadline) {
      throw GuardExceeded("subset DP refused: time limit exceeded");
    }
    std::int32_t inner = std::numeric_limits<std::int32_t>::max();
    for (auto rest = s; rest != 0; rest &= rest - 1) {
      inner = std::min(inner, best[s ^ (rest & (~rest + 1))]);
    }
    const auto here = static_cast<std::int32_t>(union_size(s)) - std::popcount(s);
    best[s] = std::max(inner, here);
  }

  // Walk back from the full set, placing last the lowest index whose removal
  // keeps the optimum.
  std::vector<std::size_t> perm(m);
  std::size_t s = states - 1;
  for (std::size_t pos = m; pos-- > 0;) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto bit = std::size_t{1} << j;
      if ((s & bit) && best[s ^ bit] <= best[s]) {
        perm[pos] = j;
        s ^= bit;
        break;
      }
    }
  }
  auto result = finish(family, std::move(perm), Method::subset_dp, true);
  if (result.report.max_delta != best[states - 1]) {
    throw std::logic_error("subset DP reconstruction disagrees with the table");
  }
  return result;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const SetFamily& family, const SearchBudget& budget, int bound,
                 std::vector<std::size_t> best_perm)
      : family_(family),
        m_(family.m()),
        cover_(std::size_t{family.n()} + 1, 0),
        chosen_(family.m()),
        bound_(bound),
        best_perm_(std::move(best_perm)),
        deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget.time_limit)) {
    final_value_ = static_cast<int>(family.covered_count()) - static_cast<int>(m_);
    const std::size_t entry_bytes = 64 + detail::words_for(m_) * 8;
    memo_cap_ = budget.memory_limit / entry_bytes;
    prefix_.reserve(m_);
  }

  void run() { dfs(0, INT_MIN); }

  bool timed_out() const { return timed_out_; }
  bool improved() const { return improved_; }
  int bound() const { return bound_; }
  const std::vector<std::size_t>& best_perm() const { return best_perm_; }

 private:
  struct Child {
    std::size_t fresh;
    std::size_t index;
  };

  void dfs(std::size_t depth, int prefix_max) {
    if (timed_out_) return;
    if ((++nodes_ & 0x3FF) == 0 && Clock::now() > deadline_) {
      timed_out_ = true;
      return;
    }
    if (depth == m_) {
      if (prefix_max < bound_) {
        bound_ = prefix_max;
        best_perm_ = prefix_;
        improved_ = true;
      }
      return;
    }
    if (depth > 0) {
      auto it = memo_.find(chosen_);
      if (it != memo_.end()) {
        if (it->second <= prefix_max) return;
        it->second = prefix_max;
      } else if (memo_.size() < memo_cap_) {
        memo_.emplace(chosen_, prefix_max);
      }
    }

    std::vector<Child> children;
    children.reserve(m_ - depth);
    for (std::size_t j = 0; j < m_; ++j) {
      if (chosen_.test(j)) continue;
      std::size_t fresh = 0;
      for (auto x : family_[j]) fresh += cover_[x] == 0 ? 1 : 0;
      if (fresh == 0) {
        // A member-set inside the current union never hurts when placed now.
        children.assign(1, Child{0, j});
        break;
      }
      children.push_back({fresh, j});
    }
    std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) {
      return a.fresh != b.fresh ? a.fresh < b.fresh : a.index < b.index;
    });

    for (const auto& child : children) {
      const int value = static_cast<int>(union_size_ + child.fresh) - static_cast<int>(depth + 1);
      const int next_max = std::max(prefix_max, value);
      if (std::max(next_max, final_value_) >= bound_) break;
      apply(child.index, +1);
      dfs(depth + 1, next_max);
      apply(child.index, -1);
      if (timed_out_) return;
    }
  }

  void apply(std::size_t j, int sign) {
    for (auto x : family_[j]) {
      if (sign > 0) {
        if (cover_[x]++ == 0) ++union_size_;
      } else {
        if (--cover_[x] == 0) --union_size_;
      }
    }
    chosen_.flip(j);
    if (sign > 0) {
      prefix_.push_back(j);
    } else {
      prefix_.pop_back();
    }
  }

  const SetFamily& family_;
  std::size_t m_;
  std::vector<std::uint32_t> cover_;
  std::size_t union_size_ = 0;
  detail::DenseBits chosen_;
  std::vector<std::size_t> prefix_;
  int bound_;
  int final_value_ = 0;
  std::vector<std::size_t> best_perm_;
  Clock::time_point deadline_;
  std::unordered_map<detail::DenseBits, int, detail::DenseBitsHash> memo_;
  std::size_t memo_cap_ = 0;
  std::size_t nodes_ = 0;
  bool timed_out_ = false;
  bool improved_ = false;
};

}  // namespace

OrderingResult branch_bound(const SetFamily& family, const SearchBudget& budget,
                            std::optional<int> incumbent) {
  auto seed = standard_ordering(family);
  if (family.m() == 0) {
    seed.method = Method::branch_bound;
    seed.optimal = true;
    return seed;
  }
  const int greedy_value = seed.report.max_delta;
  const int start_bound = incumbent ? std::min(*incumbent, greedy_value) : greedy_value;

  BranchAndBound search(family, budget, start_bound, seed.ordering.indices());
  search.run();

  auto result = finish(family, search.best_perm(), Method::branch_bound, false);
  // Exhausting the tree proves nothing strictly below the final bound exists.
  result.optimal = !search.timed_out() && result.report.max_delta <= search.bound();
  return result;
}

}  // namespace hyperorder
