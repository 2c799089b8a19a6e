#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hyperorder {

using Element = std::uint32_t;
using MemberSet = std::vector<Element>;

inline constexpr std::uint32_t kMaxGroundSet = 1'000'000;

// A multiset {X_1, ..., X_m} of subsets of the ground set [1, n], each of size
// between 1 and the cap c. Member-sets are stored sorted; duplicates keep
// their multiplicity and position. Elements of [1, n] covered by no member-set
// are allowed and play no part in prefix unions.
class SetFamily {
 public:
  SetFamily() = default;
  // Throws std::invalid_argument if any invariant is violated.
  SetFamily(std::uint32_t n, std::uint32_t c, std::vector<MemberSet> sets);

  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t c() const noexcept { return c_; }
  std::size_t m() const noexcept { return sets_.size(); }

  const MemberSet& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<MemberSet>& sets() const noexcept { return sets_; }

  std::size_t max_set_size() const noexcept;
  // |X_1 u ... u X_m|
  std::size_t covered_count() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::uint32_t n_ = 1;
  std::uint32_t c_ = 1;
  std::vector<MemberSet> sets_;
};

// A permutation of the member-set indices, stored 0-based. The text format
// and reports use 1-based positions.
class Ordering {
 public:
  Ordering() = default;
  // Throws std::invalid_argument unless perm is a permutation of [0, perm.size()).
  explicit Ordering(std::vector<std::size_t> perm);

  static Ordering identity(std::size_t m);

  std::size_t size() const noexcept { return perm_.size(); }
  std::size_t operator[](std::size_t k) const { return perm_[k]; }
  const std::vector<std::size_t>& indices() const noexcept { return perm_; }

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<std::size_t> perm_;
};

// profile[k-1] = |X_pi(1) u ... u X_pi(k)| - k.
struct DeltaReport {
  std::vector<int> profile;
  int max_delta = 0;          // 0 for an empty family
  std::size_t argmax_k = 0;   // 1-based, smallest k attaining max_delta; 0 if empty
};

DeltaReport delta_profile(const SetFamily& family, const Ordering& order);

struct PrimalEdge {
  Element u;
  Element v;  // u < v
  std::uint32_t multiplicity;

  friend bool operator==(const PrimalEdge&, const PrimalEdge&) = default;
};

struct PrimalGraph {
  std::vector<Element> vertices;   // sorted union of all member-sets
  std::vector<PrimalEdge> edges;   // sorted by (u, v)
};

PrimalGraph primal_graph(const SetFamily& family);

struct ComponentStats {
  std::vector<Element> vertex_set;        // sorted
  std::vector<std::size_t> member_sets;   // indices of the member-sets inside, ascending
  std::size_t order = 0;                  // |C|
  std::size_t size = 0;                   // e(C)
  long d = 0;                             // |C| - e(C)
  long gamma = 0;                         // e(C) - ceil((|C| - 1) / 2)
};

// Components of the primal graph, sorted by smallest vertex id.
std::vector<ComponentStats> components(const SetFamily& family);

bool is_connected(const SetFamily& family);

// m >= ceil((|uX_i| - 1) / (c - 1)) for a connected family. Throws
// std::invalid_argument on a disconnected (or empty) family.
bool connectivity_lower_bound_check(const SetFamily& family);

// Enlarges every member-set to exactly c elements by adding the smallest ids
// of [1, n] not already present. Throws std::invalid_argument if n < c.
SetFamily pad_to_c(const SetFamily& family);

// Same family with every element relabeled through `relabel` (a permutation
// of [1, n] given as relabel[x - 1]).
SetFamily relabel_elements(const SetFamily& family, std::span<const Element> relabel);

}  // namespace hyperorder
