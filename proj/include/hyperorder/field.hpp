#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperorder {

inline bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint32_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

inline constexpr std::uint32_t kMaxFieldOrder = 65521;

// GF(q) for prime q, 2 <= q <= 65521. Elements are residues in [0, q).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t q) : q_(q) {
    if (q < 2 || q > kMaxFieldOrder || !is_prime(q)) {
      throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime in [2, 65521]");
    }
  }

  std::uint32_t order() const noexcept { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (q_ == 2) return a ^ b;
    const auto s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    if (q_ == 2) return a ^ b;
    return a >= b ? a - b : a + q_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (q_ == 2) return a & b;
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % q_);
  }
  // a^(q-2); a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("zero has no inverse");
    std::uint32_t result = 1;
    std::uint32_t base = a;
    for (std::uint32_t e = q_ - 2; e != 0; e >>= 1) {
      if (e & 1u) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t q_;
};

}  // namespace hyperorder
