#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperorder/family.hpp"
#include "hyperorder/field.hpp"
#include "hyperorder/prng.hpp"

namespace hyperorder {

struct Term {
  std::uint32_t var;   // 1-based
  std::uint32_t coef;  // in [1, q-1]

  friend bool operator==(const Term&, const Term&) = default;
};

// sum coef_i * x_{var_i} = rhs  (mod q)
struct Equation {
  std::vector<Term> terms;
  std::uint32_t rhs = 0;

  friend bool operator==(const Equation&, const Equation&) = default;
};

class LinearSystem {
 public:
  // Throws std::invalid_argument on any invariant violation: q prime,
  // 1 <= |terms| <= c, distinct variables in [1, n], nonzero coefficients
  // and residues below q.
  LinearSystem(std::uint32_t q, std::uint32_t n, std::uint32_t c, std::vector<Equation> equations);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_.order(); }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t c() const noexcept { return c_; }
  std::size_t m() const noexcept { return equations_.size(); }
  const std::vector<Equation>& equations() const noexcept { return equations_; }
  const Equation& operator[](std::size_t i) const { return equations_[i]; }

  friend bool operator==(const LinearSystem&, const LinearSystem&) = default;

 private:
  PrimeField field_;
  std::uint32_t n_;
  std::uint32_t c_;
  std::vector<Equation> equations_;
};

// gfsys text format:
//   gfsys <q> <n> <m> <c>
//   <k> <v1> <a1> ... <vk> <ak> <b>      (m lines)
LinearSystem parse_system(std::string_view text);
std::string format_system(const LinearSystem& sys);

// Set j is the support of equation j; n and c carry over.
SetFamily support_family(const LinearSystem& sys);

struct GlueStep {
  std::size_t equation = 0;     // 0-based index of the equation glued at this step
  std::size_t partials = 0;     // |S_k|
  std::size_t union_size = 0;   // variables touched by the first k equations
  int delta = 0;                // union_size - k
  std::uint64_t work = 0;       // cumulative: partials read plus partials emitted
};

struct GlueTrace {
  std::uint32_t q = 2;
  std::uint32_t n = 0;
  std::vector<GlueStep> steps;           // stops early at the first empty S_k
  std::vector<std::uint32_t> variables;  // discovery order of the supported variables
  // S_m (or the empty S_k that stopped the run), one row of
  // variables.size() digits per partial solution, lexicographically sorted.
  std::vector<std::uint16_t> partials;
  std::size_t free_variables = 0;  // variables in no support; each multiplies the count by q
  bool consistent = true;

  std::size_t partial_count() const {
    return variables.empty() ? (consistent ? 1 : 0) : partials.size() / variables.size();
  }
  // |S_m| * q^free, or nullopt on 64-bit overflow.
  std::optional<std::uint64_t> solution_count() const;
};

struct GlueOptions {
  std::size_t max_partial_digits = std::size_t{1} << 28;  // guard on |S_k| * |union|
};

// Gluing: S_0 = {empty}; at step k the next equation, with the known
// variables substituted, is solved over its new variables (q^(nu-1)
// extensions when nu >= 1 variables are new, kept or dropped when nu = 0).
// Throws std::invalid_argument on a bad ordering, GuardExceeded when a state
// outgrows the options.
GlueTrace glue_solve(const LinearSystem& sys, const Ordering& order, const GlueOptions& options = {});

using Assignment = std::vector<std::uint32_t>;  // x_1..x_n

// Expands a trace to full assignments (free variables enumerated),
// lexicographically sorted. Throws GuardExceeded beyond `limit` solutions.
std::vector<Assignment> materialize_solutions(const GlueTrace& trace, std::size_t limit = std::size_t{1} << 24);

// Every assignment in [0, q)^n satisfying all equations, lexicographically
// sorted. Throws GuardExceeded when q^n > 2^24.
std::vector<Assignment> brute_force_solve(const LinearSystem& sys);

// Rank over GF(q) of the first k equations under `order`.
std::size_t prefix_rank(const LinearSystem& sys, const Ordering& order, std::size_t k);

// Random system over GF(q): each equation takes a uniform size in [1, c], a
// uniform set of distinct variables, and uniform nonzero coefficients. With
// `planted`, right-hand sides come from a hidden uniform assignment, so the
// system is consistent; otherwise they are uniform.
LinearSystem gen_random_system(std::uint32_t q, std::uint32_t n, std::uint32_t m, std::uint32_t c,
                               Seed seed, bool planted = true);

}  // namespace hyperorder
