#include "hyperorder/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperorder {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

BoundReport integral(std::string name, bool applicable, std::int64_t value, std::string statement) {
  BoundReport r{std::move(name), std::nullopt, applicable, std::move(statement)};
  if (applicable) r.value = value;
  return r;
}

}  // namespace

std::int64_t f2_formula(std::int64_t n, std::int64_t m) {
  if (n < 2) throw std::invalid_argument("f2 requires n >= 2");
  if (m < 1) throw std::invalid_argument("f2 requires m >= 1");
  if (2 * m <= n) return m;
  if (m < n - 1) return n - m;
  return 1;
}

std::vector<BoundReport> f3_bounds(std::int64_t n, std::int64_t m) {
  if (n < 3) throw std::invalid_argument("3-set bounds require n >= 3");
  std::vector<BoundReport> out;

  const bool square = m == n;
  const std::int64_t exact = n == 3 ? 2 : ceil_div(n, 3);
  out.push_back(integral("exact", square && n <= 9, exact, "f(3)=2, f(n)=ceil(n/3) for 4<=n<=9"));
  out.push_back(integral("prefix_cap", true, 2 * ceil_div(n, 3), "f(n,m) <= 2*ceil(n/3)"));
  out.push_back(integral("dense", m >= ceil_div(n - 1, 2), (n + 1) / 2,
                         "f(n,m) <= floor((n+1)/2) when m >= ceil((n-1)/2)"));
  out.push_back(integral("quarter_plus_two", square, ceil_div(n, 4) + 2, "f(n) <= ceil(n/4)+2"));

  BoundReport reference{"fifth_log_reference", std::nullopt, square,
                        "f(n) <= n/5+1+log2(n) (reference value, not constructed)"};
  if (square) reference.value = static_cast<double>(n) / 5.0 + 1.0 + std::log2(static_cast<double>(n));
  out.push_back(std::move(reference));
  return out;
}

BoundReport disconnected_bound(const SetFamily& family) {
  const std::string statement = "Delta(X) <= floor((L+1)/2), L = largest component order";
  const auto comps = components(family);
  const bool applicable = family.max_set_size() <= 3 && family.m() >= family.n() && comps.size() >= 2;
  std::size_t largest = 0;
  for (const auto& comp : comps) largest = std::max(largest, comp.order);
  return integral("disconnected", applicable, static_cast<std::int64_t>((largest + 1) / 2), statement);
}

double binary_entropy(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("binary entropy needs a in [0, 1]");
  if (a == 0.0 || a == 1.0) return 0.0;
  return -a * std::log2(a) - (1.0 - a) * std::log2(1.0 - a);
}

LowerBoundCertificate lower_bound_lhs(double c_const, double eps) {
  if (!(c_const > 0.0 && c_const < 1.0)) throw std::invalid_argument("need 0 < c < 1");
  if (!(eps > 0.0 && eps < 1.0 - c_const)) throw std::invalid_argument("need 0 < eps < 1 - c");
  LowerBoundCertificate cert;
  cert.c_const = c_const;
  cert.eps = eps;
  cert.lhs = (1.0 - c_const) * binary_entropy(eps / (1.0 - c_const)) +
             2.0 * (c_const + eps) * binary_entropy(c_const / (c_const + eps)) -
             binary_entropy(c_const);
  cert.certified = cert.lhs < 0.0;
  return cert;
}

LowerBoundCertificate search_constants(double grid_step) {
  if (!(grid_step > 0.0 && grid_step <= 0.05)) {
    throw std::invalid_argument("grid step must lie in (0, 0.05]");
  }
  auto lhs = [](double c, double e) { return lower_bound_lhs(c, e).lhs; };

  LowerBoundCertificate best;
  const auto c_steps = static_cast<std::int64_t>(std::floor((1.0 - 1e-12) / grid_step));
  for (std::int64_t i = 1; i <= c_steps; ++i) {
    const double c = static_cast<double>(i) * grid_step;
    const double ceiling = 1.0 - c;

    // Bracket the first sign change of lhs along eps, then bisect it.
    const double scan = std::max(grid_step, 1e-3);
    double lo = 0.0;
    double hi = ceiling;
    for (double e = scan; e < ceiling; e += scan) {
      if (lhs(c, e) >= 0.0) {
        hi = e;
        break;
      }
      lo = e;
    }
    if (hi < ceiling) {
      for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        (lhs(c, mid) < 0.0 ? lo : hi) = mid;
      }
    }

    auto k = static_cast<std::int64_t>(std::floor(hi / grid_step));
    while (k > 0 && (static_cast<double>(k) * grid_step >= ceiling ||
                     lhs(c, static_cast<double>(k) * grid_step) >= 0.0)) {
      --k;
    }
    if (k == 0) continue;
    const auto cert = lower_bound_lhs(c, static_cast<double>(k) * grid_step);
    if (!best.certified || cert.eps > best.eps + 0.5 * grid_step ||
        (std::abs(cert.eps - best.eps) <= 0.5 * grid_step && cert.lhs < best.lhs)) {
      best = cert;
    }
  }
  return best;
}

}  // namespace hyperorder
