#include "hyperorder/family.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hyperorder/detail/dense_bits.hpp"

namespace hyperorder {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Smaller root wins so that the representative is the minimum element.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

long ceil_half(long x) { return x <= 0 ? -((-x) / 2) : (x + 1) / 2; }

}  // namespace

SetFamily::SetFamily(std::uint32_t n, std::uint32_t c, std::vector<MemberSet> sets)
    : n_(n), c_(c), sets_(std::move(sets)) {
  if (n_ == 0) throw std::invalid_argument("ground-set size n must be positive");
  if (n_ > kMaxGroundSet) {
    throw std::invalid_argument("ground-set size n exceeds " + std::to_string(kMaxGroundSet));
  }
  if (c_ == 0) throw std::invalid_argument("size cap c must be positive");
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    auto& s = sets_[i];
    const auto where = "member-set " + std::to_string(i + 1);
    if (s.empty()) throw std::invalid_argument(where + " is empty");
    if (s.size() > c_) throw std::invalid_argument(where + " has more than c elements");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw std::invalid_argument(where + " repeats an element");
    }
    if (s.front() < 1 || s.back() > n_) {
      throw std::invalid_argument(where + " has an element outside [1, n]");
    }
  }
}

std::size_t SetFamily::max_set_size() const noexcept {
  std::size_t best = 0;
  for (const auto& s : sets_) best = std::max(best, s.size());
  return best;
}

std::size_t SetFamily::covered_count() const {
  detail::DenseBits seen(std::size_t{n_} + 1);
  std::size_t count = 0;
  for (const auto& s : sets_) {
    for (auto x : s) count += seen.insert(x) ? 1 : 0;
  }
  return count;
}

Ordering::Ordering(std::vector<std::size_t> perm) : perm_(std::move(perm)) {
  std::vector<char> seen(perm_.size(), 0);
  for (auto p : perm_) {
    if (p >= perm_.size()) throw std::invalid_argument("ordering entry out of range");
    if (seen[p]) throw std::invalid_argument("ordering repeats an entry");
    seen[p] = 1;
  }
}

Ordering Ordering::identity(std::size_t m) {
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return Ordering(std::move(perm));
}

DeltaReport delta_profile(const SetFamily& family, const Ordering& order) {
  if (order.size() != family.m()) {
    throw std::invalid_argument("ordering has " + std::to_string(order.size()) +
                                " entries but the family has " + std::to_string(family.m()) +
                                " member-sets");
  }
  DeltaReport report;
  report.profile.reserve(family.m());
  detail::DenseBits covered(std::size_t{family.n()} + 1);
  long union_size = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (auto x : family[order[k]]) union_size += covered.insert(x) ? 1 : 0;
    const int value = static_cast<int>(union_size - static_cast<long>(k + 1));
    report.profile.push_back(value);
    if (k == 0 || value > report.max_delta) {
      report.max_delta = value;
      report.argmax_k = k + 1;
    }
  }
  return report;
}

PrimalGraph primal_graph(const SetFamily& family) {
  PrimalGraph graph;
  std::map<std::pair<Element, Element>, std::uint32_t> multiplicity;
  detail::DenseBits seen(std::size_t{family.n()} + 1);
  for (const auto& s : family.sets()) {
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (seen.insert(s[a])) graph.vertices.push_back(s[a]);
      for (std::size_t b = a + 1; b < s.size(); ++b) ++multiplicity[{s[a], s[b]}];
    }
  }
  std::sort(graph.vertices.begin(), graph.vertices.end());
  graph.edges.reserve(multiplicity.size());
  for (const auto& [edge, count] : multiplicity) {
    graph.edges.push_back({edge.first, edge.second, count});
  }
  return graph;
}

std::vector<ComponentStats> components(const SetFamily& family) {
  DisjointSets dsu(std::size_t{family.n()} + 1);
  detail::DenseBits covered(std::size_t{family.n()} + 1);
  for (const auto& s : family.sets()) {
    for (auto x : s) {
      covered.set(x);
      dsu.unite(s.front(), x);
    }
  }

  // Roots are component minima, so scanning elements upward yields the
  // components already sorted by smallest vertex.
  std::vector<std::size_t> slot(std::size_t{family.n()} + 1, 0);
  std::vector<ComponentStats> result;
  for (Element x = 1; x <= family.n(); ++x) {
    if (!covered.test(x)) continue;
    const auto root = dsu.find(x);
    if (root == x) {
      slot[x] = result.size();
      result.emplace_back();
    }
    result[slot[root]].vertex_set.push_back(x);
  }
  for (std::size_t i = 0; i < family.m(); ++i) {
    result[slot[dsu.find(family[i].front())]].member_sets.push_back(i);
  }
  for (auto& comp : result) {
    comp.order = comp.vertex_set.size();
    comp.size = comp.member_sets.size();
    comp.d = static_cast<long>(comp.order) - static_cast<long>(comp.size);
    comp.gamma = static_cast<long>(comp.size) - ceil_half(static_cast<long>(comp.order) - 1);
  }
  return result;
}

bool is_connected(const SetFamily& family) {
  return family.m() > 0 && components(family).size() == 1;
}

bool connectivity_lower_bound_check(const SetFamily& family) {
  if (!is_connected(family)) {
    throw std::invalid_argument("connectivity bound requires a connected, non-empty family");
  }
  const auto covered = static_cast<long>(family.covered_count());
  const long cap = family.c();
  if (cap == 1) return covered == 1;
  const long needed = (covered - 1 + cap - 2) / (cap - 1);
  return static_cast<long>(family.m()) >= needed;
}

SetFamily pad_to_c(const SetFamily& family) {
  const auto c = family.c();
  if (family.n() < c) {
    throw std::invalid_argument("cannot pad member-sets to c elements when n < c");
  }
  std::vector<MemberSet> padded;
  padded.reserve(family.m());
  for (const auto& s : family.sets()) {
    MemberSet grown = s;
    auto it = s.begin();
    for (Element x = 1; grown.size() < c; ++x) {
      while (it != s.end() && *it < x) ++it;
      if (it != s.end() && *it == x) continue;
      grown.push_back(x);
    }
    padded.push_back(std::move(grown));
  }
  return SetFamily(family.n(), c, std::move(padded));
}

SetFamily relabel_elements(const SetFamily& family, std::span<const Element> relabel) {
  if (relabel.size() != family.n()) {
    throw std::invalid_argument("relabeling must cover the whole ground set");
  }
  std::vector<MemberSet> sets;
  sets.reserve(family.m());
  for (const auto& s : family.sets()) {
    MemberSet mapped;
    mapped.reserve(s.size());
    for (auto x : s) mapped.push_back(relabel[x - 1]);
    sets.push_back(std::move(mapped));
  }
  return SetFamily(family.n(), family.c(), std::move(sets));
}

}  // namespace hyperorder
