#include <map>
#include <random>

#include "doctest.h"
#include "hgf/field.hpp"
#include "hgf/poly.hpp"

using namespace hgf;

namespace {

bool is_square_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return true;
  std::uint64_t acc = 1, b = a, e = (p - 1) / 2;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return acc == 1;
}

// Least (c0, c1) with x^2 + c1 x + c0 irreducible, found via the discriminant.
std::pair<std::uint64_t, std::uint64_t> quadratic_oracle(std::uint64_t p) {
  for (std::uint64_t c0 = 1; c0 < p; ++c0) {
    for (std::uint64_t c1 = 0; c1 < p; ++c1) {
      std::uint64_t disc = (c1 * c1 + 4 * (p - c0)) % p;
      if (!is_square_mod(disc, p)) return {c0, c1};
    }
  }
  return {0, 0};
}

bool cubic_has_root(std::uint64_t p, std::uint64_t c0, std::uint64_t c1, std::uint64_t c2) {
  for (std::uint64_t x = 0; x < p; ++x) {
    if ((((x + c2) * x % p + c1) * x + c0) % p == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("canonical quadratic moduli match the discriminant oracle") {
  for (std::uint32_t p : {12037u, 12379u, 16001u, 7u, 11u, 13u}) {
    auto [c0, c1] = quadratic_oracle(p);
    auto m = canonical_modulus(p, 2);
    CHECK(m == fp::Poly{static_cast<std::uint32_t>(c0), static_cast<std::uint32_t>(c1), 1});
  }
  CHECK(canonical_modulus(12379, 2) == fp::Poly{1, 0, 1});
}

TEST_CASE("canonical cubic modulus matches brute force") {
  const std::uint64_t p = 101;
  std::vector<std::uint32_t> want;
  for (std::uint64_t c0 = 1; c0 < p && want.empty(); ++c0)
    for (std::uint64_t c1 = 0; c1 < p && want.empty(); ++c1)
      for (std::uint64_t c2 = 0; c2 < p && want.empty(); ++c2)
        if (!cubic_has_root(p, c0, c1, c2)) want = {static_cast<std::uint32_t>(c0), static_cast<std::uint32_t>(c1), static_cast<std::uint32_t>(c2), 1};
  CHECK(canonical_modulus(101, 3) == want);
}

TEST_CASE("prime field uses the modulus x") {
  auto F = ExtField::make(PrimeModulus(12037), 1);
  CHECK(F.descriptor() == "GF(12037^1):modulus=0,1");
}

TEST_CASE("field construction rejects bad parameters") {
  CHECK_THROWS(PrimeModulus(12));
  CHECK_THROWS(PrimeModulus(5));
  CHECK_THROWS(ExtField::make(PrimeModulus(12037), 0));
  CHECK_THROWS(ExtField::parse("GF(12037^2):modulus=0,0,1"));
  CHECK_THROWS(ExtField::parse("GF(12037^2):modulus=1,0"));
  CHECK_THROWS(ExtField::parse("nonsense"));
}

TEST_CASE("descriptors round-trip") {
  for (unsigned r : {1u, 2u, 3u, 4u, 6u, 12u}) {
    auto F = ExtField::make(PrimeModulus(16001), r);
    auto G = ExtField::parse(F.descriptor());
    CHECK(G == F);
    CHECK(G.descriptor() == F.descriptor());
    CHECK(ExtField::parse(F.short_name()) == F);
  }
  CHECK(ExtField::parse("GF(12379)") == ExtField::make(PrimeModulus(12379), 1));
  CHECK_THROWS_AS(ExtField::parse("GF(12379"), std::invalid_argument);
  CHECK_THROWS_AS(ExtField::parse("GF(12379^)"), std::invalid_argument);
  CHECK_THROWS_AS(ExtField::parse("GF(12378)"), std::invalid_argument);
}

TEST_CASE("field axioms hold on random elements") {
  std::mt19937_64 rng(3);
  for (unsigned r : {1u, 2u, 5u, 12u, 30u}) {
    auto F = ExtField::make(PrimeModulus(12037), r);
    for (int trial = 0; trial < 20; ++trial) {
      auto a = F.random(rng), b = F.random(rng), c = F.random(rng);
      CHECK(F.mul(a, b) == F.mul(b, a));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(F.sub(a, b), b) == a);
      if (!a.is_zero()) CHECK(F.mul(a, F.inv(a)) == F.one());
      CHECK(F.frobenius(a) == F.pow(a, F.p()));
      CHECK(F.frobenius(a, r) == a);
      CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
      CHECK(F.parse_element(F.format(a)) == a);
    }
  }
}

TEST_CASE("inverse of zero is an error") {
  auto F = ExtField::make(PrimeModulus(12037), 2);
  CHECK_THROWS(F.inv(F.zero()));
}

TEST_CASE("roots of split polynomials are recovered with multiplicity") {
  std::mt19937_64 rng(11);
  for (unsigned r : {1u, 2u, 4u}) {
    auto F = ExtField::make(PrimeModulus(12379), r);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<FieldElement> planted;
      for (int i = 0; i < 4; ++i) planted.push_back(F.random(rng));
      planted.push_back(planted[0]);
      poly::Poly f{F.one()};
      for (const auto& a : planted) f = poly::mul(F, f, poly::Poly{F.neg(a), F.one()});
      // an irreducible quadratic factor over F adds no roots
      auto roots = poly::roots_in_field(F, f);
      std::map<FieldElement, unsigned> want;
      for (const auto& a : planted) ++want[a];
      REQUIRE(roots.size() == want.size());
      std::size_t i = 0;
      for (const auto& [v, m] : want) {
        CHECK(roots[i].value == v);
        CHECK(roots[i].multiplicity == m);
        ++i;
      }
    }
  }
}

TEST_CASE("F_p shortcut agrees with the general root finder") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint32_t> coef(0, 12036);
  for (unsigned r : {2u, 3u, 6u}) {
    auto F = ExtField::make(PrimeModulus(12037), r);
    for (int trial = 0; trial < 8; ++trial) {
      fp::Poly g(7);
      for (auto& c : g) c = coef(rng);
      g.back() = 1;
      auto lifted = poly::lift(F, g);
      auto fast = poly::roots_in_field(F, lifted);
      auto slow = poly::roots_generic(F, lifted);
      CHECK(fast == slow);
      for (const auto& root : fast) CHECK(poly::eval(F, lifted, root.value).is_zero());
    }
  }
}

TEST_CASE("irreducible factors of degree dividing r contribute full Frobenius orbits") {
  const std::uint32_t p = 16001;
  for (unsigned r : {4u, 12u}) {
    auto F = ExtField::make(PrimeModulus(p), r);
    for (unsigned d : {1u, 2u, 3u, 4u}) {
      auto u = canonical_modulus(p, d);
      auto roots = poly::roots_of_irreducible(F, u);
      if (r % d) {
        CHECK(roots.empty());
        continue;
      }
      CHECK(roots.size() == d);
      for (const auto& a : roots) CHECK(poly::eval(F, poly::lift(F, u), a).is_zero());
    }
  }
}
