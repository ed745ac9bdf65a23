#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace hgf {

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce_signed(std::int64_t v, std::uint32_t p);
// Residue of a signed decimal integer of arbitrary length.
std::uint32_t reduce_decimal(std::string_view text, std::uint32_t p);
// Symmetric lift of a residue into (-p/2, p/2].
std::int64_t centered(std::uint32_t a, std::uint32_t p);

bool is_prime(std::uint64_t n);
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
// Multiplicative order of a modulo n; requires gcd(a, n) == 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

// A prime p with 5 < p < 2^31.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);
  std::uint32_t value() const { return p_; }
  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint32_t p_;
};

}  // namespace hgf
