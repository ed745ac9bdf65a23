#include "hgf/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hgf {

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t base = a % p, acc = 1 % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  if (new_r == 0) throw std::domain_error("inverse of zero modulo " + std::to_string(p));
  while (new_r) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("element not invertible modulo " + std::to_string(p));
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

std::uint32_t reduce_signed(std::int64_t v, std::uint32_t p) {
  std::int64_t m = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(m < 0 ? m + p : m);
}

std::uint32_t reduce_decimal(std::string_view text, std::uint32_t p) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::uint64_t acc = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
    acc = (acc * 10 + static_cast<unsigned>(ch - '0')) % p;
  }
  auto r = static_cast<std::uint32_t>(acc);
  return negative ? neg_mod(r, p) : r;
}

std::int64_t centered(std::uint32_t a, std::uint32_t p) {
  return a > p / 2 ? static_cast<std::int64_t>(a) - p : a;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    unsigned e = 0;
    while (n % d == 0) n /= d, ++e;
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [q, e] : factorize(n)) {
    std::size_t base = out.size();
    std::uint64_t pw = 1;
    for (unsigned i = 0; i < e; ++i) {
      pw *= q;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [q, e] : factorize(n)) phi = phi / q * (q - 1);
  return phi;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(a, n) != 1) throw std::domain_error("order of a non-unit");
  auto pw = [n](std::uint64_t b, std::uint64_t e) {
    unsigned __int128 acc = 1, x = b % n;
    while (e) {
      if (e & 1) acc = acc * x % n;
      x = x * x % n;
      e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
  };
  for (std::uint64_t d : divisors(euler_phi(n))) {
    if (pw(a, d) == 1) return d;
  }
  return euler_phi(n);
}

PrimeModulus::PrimeModulus(std::uint64_t p) {
  if (p <= 5 || p >= (1ULL << 31) || !is_prime(p)) {
    throw std::invalid_argument("characteristic must be a prime in (5, 2^31), got " + std::to_string(p));
  }
  p_ = static_cast<std::uint32_t>(p);
}

}  // namespace hgf
