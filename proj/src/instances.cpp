#include "hyperorder/instances.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperorder {

namespace {

// Affine plane of order 3 in the documented line order.
const std::vector<MemberSet>& affine_plane_lines() {
  static const std::vector<MemberSet> lines = {
      {1, 2, 3}, {4, 5, 6}, {7, 8, 9},  // rows
      {1, 4, 7}, {2, 5, 8}, {3, 6, 9},  // columns
      {1, 5, 9}, {2, 6, 7}, {3, 4, 8},  // c - r = 0, 1, 2
      {1, 6, 8}, {2, 4, 9}, {3, 5, 7},  // r + c = 0, 1, 2
  };
  return lines;
}

}  // namespace

Model parse_model(std::string_view tag) {
  if (tag == "random3") return Model::random3;
  if (tag == "fano") return Model::fano;
  if (tag == "sts9") return Model::sts9;
  if (tag == "sts9_minus_point" || tag == "sts9-minus-point") return Model::sts9_minus_point;
  if (tag == "disjoint_pairs" || tag == "disjoint-pairs") return Model::disjoint_pairs;
  if (tag == "uniform_random" || tag == "uniform-random") return Model::uniform_random;
  throw std::invalid_argument("unknown model '" + std::string(tag) + "'");
}

std::string_view to_string(Model model) {
  switch (model) {
    case Model::random3: return "random3";
    case Model::fano: return "fano";
    case Model::sts9: return "sts9";
    case Model::sts9_minus_point: return "sts9_minus_point";
    case Model::disjoint_pairs: return "disjoint_pairs";
    case Model::uniform_random: return "uniform_random";
  }
  return "unknown";
}

SetFamily generate(const GeneratorSpec& spec) {
  switch (spec.model) {
    case Model::random3:
      return gen_random3(spec.n, spec.seed);
    case Model::fano:
      if (spec.n != 7 || spec.m != 7) throw std::invalid_argument("fano requires n = m = 7");
      return fano();
    case Model::sts9:
      if (spec.n != 9) throw std::invalid_argument("sts9 requires n = 9");
      return sts9(spec.m);
    case Model::sts9_minus_point:
      if (spec.n != 8 || spec.m != 8) throw std::invalid_argument("sts9_minus_point requires n = m = 8");
      return sts9_minus_point();
    case Model::disjoint_pairs:
      return gen_disjoint_pairs(spec.n, spec.m);
    case Model::uniform_random:
      return gen_uniform_random(spec.n, spec.m, spec.c, spec.seed);
  }
  throw std::invalid_argument("unknown model");
}

SetFamily gen_random3(std::uint32_t n, Seed seed) {
  if (n == 0) throw std::invalid_argument("random3 requires n >= 1");
  SplitMix64 rng(seed);
  std::vector<Element> pi(n);
  std::vector<Element> tau(n);
  std::iota(pi.begin(), pi.end(), Element{1});
  std::iota(tau.begin(), tau.end(), Element{1});
  rng.shuffle(std::span<Element>(pi));
  rng.shuffle(std::span<Element>(tau));

  std::vector<MemberSet> sets;
  sets.reserve(n);
  for (Element i = 1; i <= n; ++i) {
    MemberSet s{i, pi[i - 1], tau[i - 1]};
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    sets.push_back(std::move(s));
  }
  return SetFamily(n, 3, std::move(sets));
}

SetFamily fano() {
  return SetFamily(7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
}

SetFamily sts9(std::uint32_t count) {
  const auto& lines = affine_plane_lines();
  if (count < 1 || count > lines.size()) throw std::invalid_argument("sts9 takes between 1 and 12 lines");
  return SetFamily(9, 3, std::vector<MemberSet>(lines.begin(), lines.begin() + count));
}

SetFamily sts9_minus_point() {
  std::vector<MemberSet> sets;
  for (const auto& line : affine_plane_lines()) {
    if (std::find(line.begin(), line.end(), Element{1}) != line.end()) continue;
    MemberSet shifted;
    for (auto x : line) shifted.push_back(x - 1);
    sets.push_back(std::move(shifted));
  }
  return SetFamily(8, 3, std::move(sets));
}

SetFamily gen_disjoint_pairs(std::uint32_t n, std::uint32_t m) {
  if (m > n / 2) throw std::invalid_argument("at most floor(n/2) disjoint pairs fit in [1, n]");
  std::vector<MemberSet> sets;
  sets.reserve(m);
  for (Element i = 0; i < m; ++i) sets.push_back({2 * i + 1, 2 * i + 2});
  return SetFamily(n, 2, std::move(sets));
}

SetFamily gen_uniform_random(std::uint32_t n, std::uint32_t m, std::uint32_t c, Seed seed) {
  if (c == 0 || c > n) throw std::invalid_argument("uniform_random requires 1 <= c <= n");
  SplitMix64 rng(seed);
  std::vector<Element> pool(n);
  std::vector<MemberSet> sets;
  sets.reserve(m);
  for (std::uint32_t s = 0; s < m; ++s) {
    std::iota(pool.begin(), pool.end(), Element{1});
    for (std::size_t i = n; i-- > n - c;) {
      const auto j = static_cast<std::size_t>(rng.below(i + 1));
      std::swap(pool[i], pool[j]);
    }
    MemberSet chosen(pool.end() - c, pool.end());
    std::sort(chosen.begin(), chosen.end());
    sets.push_back(std::move(chosen));
  }
  return SetFamily(n, c, std::move(sets));
}

}  // namespace hyperorder
