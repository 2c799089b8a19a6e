#pragma once

#include <cstdint>
#include <string_view>

#include "hyperorder/family.hpp"
#include "hyperorder/prng.hpp"

namespace hyperorder {

enum class Model { random3, fano, sts9, sts9_minus_point, disjoint_pairs, uniform_random };

Model parse_model(std::string_view tag);  // throws std::invalid_argument
std::string_view to_string(Model model);

struct GeneratorSpec {
  Model model = Model::random3;
  std::uint32_t n = 0;
  std::uint32_t m = 0;  // sts9: triple count; disjoint_pairs / uniform_random: set count
  std::uint32_t c = 3;  // uniform_random only
  Seed seed{};
};

// Dispatches to the generator named by spec.model after checking the
// model's parameter constraints (fano: n = m = 7; sts9: n = 9, 1 <= m <= 12;
// sts9_minus_point: n = m = 8). Throws std::invalid_argument.
SetFamily generate(const GeneratorSpec& spec);

// X_i = {i, pi(i), tau(i)} for two independent uniform permutations pi, tau of
// [n], drawn in that order by Fisher-Yates from one SplitMix64 stream seeded
// with `seed`. Coinciding values shrink the set; they are not resampled.
SetFamily gen_random3(std::uint32_t n, Seed seed);

// The seven lines of the Fano plane.
SetFamily fano();

// The first `count` lines of STS(9) realized as the affine plane of order 3
// on points 3r + c + 1: rows, columns, then the lines c - r = 0, 1, 2, then
// the lines r + c = 0, 1, 2 (mod 3).
SetFamily sts9(std::uint32_t count = 12);

// STS(9) without the four lines through point 1, relabeled x -> x - 1.
SetFamily sts9_minus_point();

// {1,2}, {3,4}, ... (m pairs, c = 2). Throws if m > n / 2.
SetFamily gen_disjoint_pairs(std::uint32_t n, std::uint32_t m);

// m independent uniform c-subsets of [n]. Each set is the tail of a partial
// Fisher-Yates pass (indices n-1 down to n-c) over a fresh 1..n array.
SetFamily gen_uniform_random(std::uint32_t n, std::uint32_t m, std::uint32_t c, Seed seed);

}  // namespace hyperorder
