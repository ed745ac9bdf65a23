#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

// Dense polynomials over Z/p, coefficients low degree first, no trailing zeros.
namespace hgf::fp {

using Poly = std::vector<std::uint32_t>;

struct Factor {
  Poly poly;
  unsigned multiplicity;
};

void trim(Poly& f);
int degree(const Poly& f);
Poly from_signed(const std::vector<std::int64_t>& coeffs, std::uint32_t p);

Poly add(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly scale(const Poly& a, std::uint32_t c, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint32_t p);
Poly rem(const Poly& a, const Poly& b, std::uint32_t p);
Poly monic(const Poly& a, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
Poly derivative(const Poly& a, std::uint32_t p);
std::uint32_t eval(const Poly& a, std::uint32_t x, std::uint32_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p);
Poly powmod(const Poly& a, std::uint64_t e, const Poly& f, std::uint32_t p);
// Inverse of a modulo f; throws if gcd(a, f) != 1.
Poly invmod(const Poly& a, const Poly& f, std::uint32_t p);

// Column j holds x^(p*j) mod f, so h^p mod f equals the matrix applied to h.
std::vector<Poly> frobenius_columns(const Poly& f, std::uint32_t p);
Poly apply_columns(const std::vector<Poly>& cols, const Poly& h, std::size_t n, std::uint32_t p);

bool is_irreducible(const Poly& f, std::uint32_t p);
// Monic irreducible factors with multiplicity, sorted by degree then coefficients.
// Requires deg f < p.
std::vector<Factor> factor(const Poly& f, std::uint32_t p);
std::vector<unsigned> factor_degrees(const Poly& f, std::uint32_t p);

}  // namespace hgf::fp
