#pragma once

// Test-only oracles. Nothing here calls into the code under test except the
// SetFamily accessors, so agreement with the library is meaningful.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "hyperorder/family.hpp"
#include "hyperorder/prng.hpp"

namespace oracle {

using hyperorder::Element;
using hyperorder::MemberSet;
using hyperorder::SetFamily;

// Prefix excess profile recomputed with std::set unions.
inline std::vector<int> naive_profile(const SetFamily& f, const std::vector<std::size_t>& perm) {
  std::set<Element> seen;
  std::vector<int> out;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    seen.insert(f[perm[k]].begin(), f[perm[k]].end());
    out.push_back(static_cast<int>(seen.size()) - static_cast<int>(k + 1));
  }
  return out;
}

inline int naive_max(const SetFamily& f, const std::vector<std::size_t>& perm) {
  const auto p = naive_profile(f, perm);
  return p.empty() ? 0 : *std::max_element(p.begin(), p.end());
}

// Minimum over all m! orderings. Keep m <= 9.
inline int min_over_permutations(const SetFamily& f) {
  std::vector<std::size_t> perm(f.m());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  if (perm.empty()) return 0;
  int best = INT_MAX;
  do {
    best = std::min(best, naive_max(f, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Largest number of components with at least one edge over all simple graphs
// on n vertices with m edges, by enumerating every edge subset of K_n.
// Returns -1 when no simple graph has m edges.
inline std::vector<int> max_nontrivial_components(int n) {
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  }
  const int total = static_cast<int>(all.size());
  std::vector<int> best(total + 1, -1);
  for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<char> touched(n, 0);
    int edges = 0;
    for (int e = 0; e < total; ++e) {
      if (!(mask >> e & 1u)) continue;
      ++edges;
      touched[all[e].first] = touched[all[e].second] = 1;
      parent[find(all[e].first)] = find(all[e].second);
    }
    int comps = 0;
    for (int v = 0; v < n; ++v) comps += (touched[v] && find(v) == v) ? 1 : 0;
    best[edges] = std::max(best[edges], comps);
  }
  return best;
}

// Largest optimum over all simple graphs on n vertices with m edges, read as
// pair families; `solve` returns the optimum of one family. Index m, -1 when
// no simple graph has m edges.
template <class Solve>
std::vector<int> max_optimum_over_graphs(int n, Solve solve) {
  std::vector<std::pair<int, int>> all;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) all.emplace_back(a, b);
  }
  const int total = static_cast<int>(all.size());
  std::vector<int> best(total + 1, -1);
  for (std::uint32_t mask = 1; mask < (1u << total); ++mask) {
    std::vector<MemberSet> sets;
    for (int e = 0; e < total; ++e) {
      if (mask >> e & 1u) {
        sets.push_back({static_cast<Element>(all[e].first), static_cast<Element>(all[e].second)});
      }
    }
    const auto m = sets.size();
    best[m] = std::max(best[m], solve(SetFamily(static_cast<std::uint32_t>(n), 2, std::move(sets))));
  }
  return best;
}

// Random family on [1, n] with m sets whose sizes are uniform in [min_size, max_size].
inline SetFamily random_family(hyperorder::SplitMix64& rng, std::uint32_t n, std::uint32_t m,
                               std::uint32_t min_size, std::uint32_t max_size) {
  std::vector<MemberSet> sets;
  std::vector<Element> pool(n);
  for (std::uint32_t i = 0; i < m; ++i) {
    const auto size = min_size + static_cast<std::uint32_t>(rng.below(max_size - min_size + 1));
    std::iota(pool.begin(), pool.end(), Element{1});
    rng.shuffle(std::span<Element>(pool));
    MemberSet s(pool.begin(), pool.begin() + size);
    sets.push_back(std::move(s));
  }
  return SetFamily(n, max_size, std::move(sets));
}

// Connected family of exact c-sets: every set after the first reuses at least
// one element already used, and the union is all of [1, n] when m allows it.
inline SetFamily random_connected_family(hyperorder::SplitMix64& rng, std::uint32_t n, std::uint32_t m,
                                         std::uint32_t c) {
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{1});
  rng.shuffle(std::span<Element>(order));
  std::vector<MemberSet> sets;
  std::vector<Element> used;
  std::vector<Element> unused(order.begin(), order.end());
  for (std::uint32_t i = 0; i < m; ++i) {
    MemberSet s;
    if (!used.empty()) s.push_back(used[rng.below(used.size())]);
    while (s.size() < c) {
      Element x;
      if (!unused.empty() && rng.below(3) != 0) {
        x = unused.back();
      } else {
        x = static_cast<Element>(1 + rng.below(n));
      }
      if (std::find(s.begin(), s.end(), x) != s.end()) continue;
      s.push_back(x);
      auto it = std::find(unused.begin(), unused.end(), x);
      if (it != unused.end()) unused.erase(it);
    }
    for (auto x : s) {
      if (std::find(used.begin(), used.end(), x) == used.end()) used.push_back(x);
    }
    sets.push_back(std::move(s));
  }
  return SetFamily(n, c, std::move(sets));
}

}  // namespace oracle
