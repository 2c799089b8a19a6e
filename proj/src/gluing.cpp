#include "hyperorder/gluing.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hyperorder/detail/line_reader.hpp"
#include "hyperorder/errors.hpp"

namespace hyperorder {

LinearSystem::LinearSystem(std::uint32_t q, std::uint32_t n, std::uint32_t c,
                           std::vector<Equation> equations)
    : field_(q), n_(n), c_(c), equations_(std::move(equations)) {
  if (n_ == 0 || n_ > kMaxGroundSet) throw std::invalid_argument("variable count out of range");
  if (c_ == 0) throw std::invalid_argument("term cap c must be positive");
  for (std::size_t i = 0; i < equations_.size(); ++i) {
    const auto& eq = equations_[i];
    const auto where = "equation " + std::to_string(i + 1);
    if (eq.terms.empty() || eq.terms.size() > c_) {
      throw std::invalid_argument(where + " must have between 1 and c terms");
    }
    if (eq.rhs >= q) throw std::invalid_argument(where + " has a right-hand side outside [0, q)");
    std::vector<std::uint32_t> vars;
    for (const auto& t : eq.terms) {
      if (t.var < 1 || t.var > n_) throw std::invalid_argument(where + " uses a variable outside [1, n]");
      if (t.coef == 0 || t.coef >= q) throw std::invalid_argument(where + " has a coefficient outside [1, q)");
      vars.push_back(t.var);
    }
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
      throw std::invalid_argument(where + " repeats a variable");
    }
  }
}

LinearSystem parse_system(std::string_view text) {
  using detail::parse_unsigned;
  detail::LineReader reader(text);
  auto header = reader.next();
  if (!header) throw ParseError(0, "missing 'gfsys <q> <n> <m> <c>' header");
  const auto& h = header->tokens;
  if (h.size() != 5 || h[0] != "gfsys") throw ParseError(header->number, "expected 'gfsys <q> <n> <m> <c>'");
  const auto q = parse_unsigned(h[1], header->number, "q");
  const auto n = parse_unsigned(h[2], header->number, "n");
  const auto m = parse_unsigned(h[3], header->number, "m");
  const auto c = parse_unsigned(h[4], header->number, "c");
  if (q > kMaxFieldOrder || !is_prime(static_cast<std::uint32_t>(q))) {
    throw ParseError(header->number, "q must be a prime in [2, 65521]");
  }
  if (n == 0 || n > kMaxGroundSet) throw ParseError(header->number, "n out of range");
  if (c == 0) throw ParseError(header->number, "c must be positive");

  std::vector<Equation> equations;
  for (std::uint64_t i = 0; i < m; ++i) {
    auto line = reader.next();
    if (!line) {
      throw ParseError(reader.line(), "expected " + std::to_string(m) + " equations, found " + std::to_string(i));
    }
    const auto& t = line->tokens;
    const auto k = parse_unsigned(t[0], line->number, "term count");
    if (k < 1 || k > c) throw ParseError(line->number, "term count must lie in [1, c]");
    if (t.size() != 2 * k + 2) throw ParseError(line->number, "expected 2k+2 tokens");
    Equation eq;
    for (std::uint64_t j = 0; j < k; ++j) {
      const auto v = parse_unsigned(t[1 + 2 * j], line->number, "variable");
      const auto a = parse_unsigned(t[2 + 2 * j], line->number, "coefficient");
      if (v < 1 || v > n) throw ParseError(line->number, "variable outside [1, n]");
      if (a < 1 || a >= q) throw ParseError(line->number, "coefficient outside [1, q-1]");
      for (const auto& prev : eq.terms) {
        if (prev.var == v) throw ParseError(line->number, "variable repeated within an equation");
      }
      eq.terms.push_back({static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(a)});
    }
    const auto b = parse_unsigned(t.back(), line->number, "right-hand side");
    if (b >= q) throw ParseError(line->number, "right-hand side outside [0, q-1]");
    eq.rhs = static_cast<std::uint32_t>(b);
    equations.push_back(std::move(eq));
  }
  if (auto extra = reader.next()) throw ParseError(extra->number, "more data lines than the declared m");
  return LinearSystem(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(n),
                      static_cast<std::uint32_t>(c), std::move(equations));
}

std::string format_system(const LinearSystem& sys) {
  std::ostringstream out;
  out << "gfsys " << sys.q() << ' ' << sys.n() << ' ' << sys.m() << ' ' << sys.c() << '\n';
  for (const auto& eq : sys.equations()) {
    out << eq.terms.size();
    for (const auto& t : eq.terms) out << ' ' << t.var << ' ' << t.coef;
    out << ' ' << eq.rhs << '\n';
  }
  return out.str();
}

SetFamily support_family(const LinearSystem& sys) {
  std::vector<MemberSet> sets;
  sets.reserve(sys.m());
  for (const auto& eq : sys.equations()) {
    MemberSet s;
    for (const auto& t : eq.terms) s.push_back(t.var);
    sets.push_back(std::move(s));
  }
  return SetFamily(sys.n(), sys.c(), std::move(sets));
}

std::optional<std::uint64_t> GlueTrace::solution_count() const {
  std::uint64_t count = partial_count();
  for (std::size_t i = 0; i < free_variables && count != 0; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
    count *= q;
  }
  return count;
}

GlueTrace glue_solve(const LinearSystem& sys, const Ordering& order, const GlueOptions& options) {
  if (order.size() != sys.m()) throw std::invalid_argument("ordering length differs from the equation count");
  const auto& F = sys.field();
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

  GlueTrace trace;
  trace.q = sys.q();
  trace.n = sys.n();
  std::vector<std::uint32_t> position(std::size_t{sys.n()} + 1, kUnseen);
  std::vector<std::uint16_t> rows;  // width = trace.variables.size()
  std::size_t count = 1;            // S_0 holds the empty assignment
  std::uint64_t work = 0;

  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& eq = sys[order[k]];
    std::vector<Term> known;
    std::vector<Term> fresh;
    for (const auto& t : eq.terms) {
      (position[t.var] == kUnseen ? fresh : known).push_back(t);
    }
    const std::size_t width = trace.variables.size();
    const std::size_t new_width = width + fresh.size();
    for (const auto& t : fresh) {
      position[t.var] = static_cast<std::uint32_t>(trace.variables.size());
      trace.variables.push_back(t.var);
    }

    std::size_t extensions = 1;
    for (std::size_t i = 1; i < fresh.size(); ++i) extensions *= F.order();
    if (!fresh.empty() && count * extensions > options.max_partial_digits / std::max<std::size_t>(new_width, 1)) {
      throw GuardExceeded("gluing state would exceed " + std::to_string(options.max_partial_digits) + " digits");
    }

    std::vector<std::uint16_t> next;
    std::size_t next_count = 0;
    const auto last_inv = fresh.empty() ? 0u : F.inv(fresh.back().coef);
    std::vector<std::uint32_t> free_digits(fresh.empty() ? 0 : fresh.size() - 1, 0);
    for (std::size_t r = 0; r < count; ++r) {
      const std::uint16_t* row = rows.data() + r * width;
      std::uint32_t residual = eq.rhs;
      for (const auto& t : known) residual = F.sub(residual, F.mul(t.coef, row[position[t.var]]));

      if (fresh.empty()) {
        if (residual != 0) continue;
        next.insert(next.end(), row, row + width);
        ++next_count;
        continue;
      }
      // Odometer over the first nu-1 new variables; the last one is solved for.
      std::fill(free_digits.begin(), free_digits.end(), 0u);
      for (std::size_t e = 0; e < extensions; ++e) {
        std::uint32_t rest = residual;
        for (std::size_t i = 0; i < free_digits.size(); ++i) rest = F.sub(rest, F.mul(fresh[i].coef, free_digits[i]));
        next.insert(next.end(), row, row + width);
        for (auto d : free_digits) next.push_back(static_cast<std::uint16_t>(d));
        next.push_back(static_cast<std::uint16_t>(F.mul(rest, last_inv)));
        ++next_count;
        for (std::size_t i = free_digits.size(); i-- > 0;) {
          if (++free_digits[i] < F.order()) break;
          free_digits[i] = 0;
        }
      }
    }

    work += count + next_count;
    rows = std::move(next);
    count = next_count;
    trace.steps.push_back({order[k], count, new_width, static_cast<int>(new_width) - static_cast<int>(k + 1), work});
    if (count == 0) {
      trace.consistent = false;
      break;
    }
  }

  trace.partials = std::move(rows);
  trace.free_variables = sys.n() - trace.variables.size();
  return trace;
}

std::vector<Assignment> materialize_solutions(const GlueTrace& trace, std::size_t limit) {
  const auto total = trace.solution_count();
  if (!total || *total > limit) throw GuardExceeded("solution set too large to materialize");
  std::vector<Assignment> out;
  if (*total == 0) return out;
  out.reserve(*total);

  std::vector<char> supported(std::size_t{trace.n} + 1, 0);
  for (auto v : trace.variables) supported[v] = 1;
  std::vector<std::uint32_t> free_vars;
  for (std::uint32_t v = 1; v <= trace.n; ++v) {
    if (!supported[v]) free_vars.push_back(v);
  }

  const std::size_t width = trace.variables.size();
  for (std::size_t r = 0; r < trace.partial_count(); ++r) {
    Assignment base(trace.n, 0);
    for (std::size_t i = 0; i < width; ++i) base[trace.variables[i] - 1] = trace.partials[r * width + i];
    std::vector<std::uint32_t> digits(free_vars.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free_vars.size(); ++i) base[free_vars[i] - 1] = digits[i];
      out.push_back(base);
      std::size_t i = digits.size();
      while (i > 0 && ++digits[i - 1] == trace.q) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Assignment> brute_force_solve(const LinearSystem& sys) {
  double space = 1.0;
  for (std::uint32_t i = 0; i < sys.n(); ++i) space *= sys.q();
  if (space > static_cast<double>(std::size_t{1} << 24)) {
    throw GuardExceeded("brute force refused: q^n exceeds 2^24");
  }
  const auto& F = sys.field();
  // Each equation is checked once its highest variable is assigned.
  std::vector<std::vector<std::size_t>> due(std::size_t{sys.n()} + 1);
  for (std::size_t i = 0; i < sys.m(); ++i) {
    std::uint32_t top = 0;
    for (const auto& t : sys[i].terms) top = std::max(top, t.var);
    due[top].push_back(i);
  }

  std::vector<Assignment> out;
  Assignment x(sys.n(), 0);
  auto holds = [&](const Equation& eq) {
    std::uint32_t sum = 0;
    for (const auto& t : eq.terms) sum = F.add(sum, F.mul(t.coef, x[t.var - 1]));
    return sum == eq.rhs;
  };
  auto search = [&](auto&& self, std::uint32_t var) -> void {
    if (var > sys.n()) {
      out.push_back(x);
      return;
    }
    for (std::uint32_t value = 0; value < sys.q(); ++value) {
      x[var - 1] = value;
      bool ok = true;
      for (auto i : due[var]) ok = ok && holds(sys[i]);
      if (ok) self(self, var + 1);
    }
    x[var - 1] = 0;
  };
  search(search, 1);
  return out;
}

std::size_t prefix_rank(const LinearSystem& sys, const Ordering& order, std::size_t k) {
  if (order.size() != sys.m()) throw std::invalid_argument("ordering length differs from the equation count");
  if (k > sys.m()) throw std::invalid_argument("prefix length exceeds the equation count");
  const auto& F = sys.field();
  const std::size_t n = sys.n();
  // basis[col] holds a row whose first nonzero entry is a 1 at col.
  std::vector<std::vector<std::uint32_t>> basis(n);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint32_t> row(n, 0);
    for (const auto& t : sys[order[i]].terms) row[t.var - 1] = t.coef;
    for (std::size_t col = 0; col < n; ++col) {
      if (row[col] == 0) continue;
      if (basis[col].empty()) {
        const auto scale = F.inv(row[col]);
        for (std::size_t j = col; j < n; ++j) row[j] = F.mul(row[j], scale);
        basis[col] = std::move(row);
        ++rank;
        break;
      }
      const auto factor = row[col];
      const auto& b = basis[col];
      for (std::size_t j = col; j < n; ++j) row[j] = F.sub(row[j], F.mul(factor, b[j]));
    }
  }
  return rank;
}

LinearSystem gen_random_system(std::uint32_t q, std::uint32_t n, std::uint32_t m, std::uint32_t c,
                               Seed seed, bool planted) {
  const PrimeField field(q);
  if (n == 0 || c == 0) throw std::invalid_argument("random system needs n >= 1 and c >= 1");
  SplitMix64 rng(seed);
  std::vector<std::uint32_t> hidden(n, 0);
  if (planted) {
    for (auto& v : hidden) v = static_cast<std::uint32_t>(rng.below(q));
  }
  const std::uint32_t cap = std::min(c, n);
  std::vector<std::uint32_t> pool(n);
  std::vector<Equation> equations;
  equations.reserve(m);
  for (std::uint32_t e = 0; e < m; ++e) {
    const auto size = static_cast<std::uint32_t>(1 + rng.below(cap));
    std::iota(pool.begin(), pool.end(), 1u);
    for (std::size_t i = n; i-- > n - size;) std::swap(pool[i], pool[static_cast<std::size_t>(rng.below(i + 1))]);
    std::vector<std::uint32_t> vars(pool.end() - size, pool.end());
    std::sort(vars.begin(), vars.end());
    Equation eq;
    std::uint32_t sum = 0;
    for (auto v : vars) {
      const auto a = static_cast<std::uint32_t>(1 + rng.below(q - 1));
      eq.terms.push_back({v, a});
      sum = field.add(sum, field.mul(a, hidden[v - 1]));
    }
    eq.rhs = planted ? sum : static_cast<std::uint32_t>(rng.below(q));
    equations.push_back(std::move(eq));
  }
  return LinearSystem(q, n, c, std::move(equations));
}

}  // namespace hyperorder
