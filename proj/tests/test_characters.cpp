#include <numeric>

#include "doctest.h"
#include "hgf/characters.hpp"

using namespace hgf;

namespace {

// Brute-force generator search: least primitive root of each odd prime power, the 2-part
// as -1 (and 5), each found by scanning residues that are 1 on the complementary part.
std::vector<std::uint64_t> generators_oracle(std::uint64_t N) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;  // (prime power, target residue)
  std::uint64_t n = N;
  std::uint64_t two = 1;
  while (n % 2 == 0) n /= 2, two *= 2;
  if (two >= 4) parts.push_back({two, two - 1});
  if (two >= 8) parts.push_back({two, 5});
  for (std::uint64_t q = 3; q <= n; q += 2) {
    if (n % q) continue;
    std::uint64_t pp = 1;
    while (n % q == 0) n /= q, pp *= q;
    const std::uint64_t phi = pp / q * (q - 1);
    for (std::uint64_t g = 2;; ++g) {
      if (std::gcd(g, pp) != 1) continue;
      std::uint64_t x = 1, ord = 0;
      do {
        x = x * g % pp;
        ++ord;
      } while (x != 1);
      if (ord == phi) {
        parts.push_back({pp, g});
        break;
      }
    }
  }
  std::vector<std::uint64_t> out;
  for (auto [pp, target] : parts) {
    for (std::uint64_t x = 1; x < N; ++x) {
      if (x % pp == target % pp && (N / pp == 1 || x % (N / pp) == 1 % (N / pp))) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("unit group generators follow the Sage convention") {
  for (std::uint64_t N = 1; N <= 60; ++N) {
    CHECK_MESSAGE(unit_group(N)->generators() == generators_oracle(N), "N=" << N);
    CHECK(unit_group(N)->size() == euler_phi(N));
  }
  CHECK(unit_group(8)->generators() == std::vector<std::uint64_t>{7, 5});
  CHECK(unit_group(12)->generators() == std::vector<std::uint64_t>{7, 5});
  CHECK(unit_group(15)->generators() == std::vector<std::uint64_t>{11, 7});
  CHECK(unit_group(16)->generators() == std::vector<std::uint64_t>{15, 5});
  CHECK(unit_group(18)->generators() == std::vector<std::uint64_t>{11});
}

TEST_CASE("discrete logs reconstruct residues") {
  for (std::uint64_t N : {1u, 2u, 8u, 15u, 16u, 24u, 97u}) {
    auto G = unit_group(N);
    for (std::int64_t m = -30; m < 60; ++m) {
      if (!G->is_unit(m)) {
        CHECK_THROWS(G->log(m));
        continue;
      }
      auto e = G->log(m);
      std::uint64_t x = 1 % N;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::uint64_t k = 0; k < e[i]; ++k) x = x * G->generators()[i] % N;
      std::int64_t r = m % static_cast<std::int64_t>(N);
      if (r < 0) r += static_cast<std::int64_t>(N);
      CHECK(x == static_cast<std::uint64_t>(r));
    }
  }
}

TEST_CASE("basis characters evaluate as specified") {
  auto F = ExtField::make(PrimeModulus(12037), 1);
  auto b = basis_chars(7, F);
  REQUIRE(b.size() == 1);
  CHECK(b[0].chi.eval(3) == F.from_int(-1293));
  CHECK(b[0].chi.order() == 6);
  CHECK(b[0].chi.parity() == Parity::Odd);
  CHECK_THROWS(b[0].chi.eval(14));
  CHECK(b[0].chi.eval(-1) == F.from_int(-1));
}

TEST_CASE("basis characters need roots of unity") {
  CHECK_THROWS(basis_chars(5, ExtField::make(PrimeModulus(12379), 1)));
  CHECK_NOTHROW(basis_chars(5, ExtField::make(PrimeModulus(12379), 2)));
  CHECK_THROWS(basis_chars(19, ExtField::make(PrimeModulus(12379), 1)));
}

TEST_CASE("transport to another characteristic preserves orders and rational values") {
  auto F = ExtField::make(PrimeModulus(12379), 1);
  auto chi9 = basis_chars(9, F)[0].chi;
  CHECK(chi9.order() == 6);
  CHECK(chi9.pow(3).eval(2) == F.from_int(-1));
  auto chi16 = basis_chars(16, ExtField::make(PrimeModulus(12379), 2));
  CHECK(chi16[0].chi.order() == 2);
  CHECK(chi16[1].chi.order() == 4);
  CHECK(chi16[1].chi.parity() == Parity::Even);
}

TEST_CASE("conductors") {
  auto F = ExtField::make(PrimeModulus(12037), 1);
  CharacterGroup G15(15, F);
  auto chi15_0 = G15.parse_name("chi15_0");
  CHECK(chi15_0.conductor() == 3);
  CHECK(G15.parse_name("chi15_1").conductor() == 5);
  CHECK(G15.parse_name("chi15_1^2").conductor() == 5);
  CHECK(G15.parse_name("chi15_0*chi15_1").conductor() == 15);
  CHECK(G15.parse_name("1").conductor() == 1);
  CharacterGroup G8(8, F);
  CHECK(G8.parse_name("chi8_0").conductor() == 4);
  CHECK(G8.parse_name("chi8_1").conductor() == 8);
  CHECK(G8.parse_name("chi8_0*chi8_1").conductor() == 8);
}

TEST_CASE("character group names round-trip") {
  auto F = ExtField::make(PrimeModulus(12037), 1);
  for (std::uint64_t N : {1u, 3u, 7u, 8u, 13u, 15u}) {
    auto Fn = N == 3 ? ExtField::make(PrimeModulus(12379), 1) : F;
    CharacterGroup G(N, Fn);
    CHECK(G.elements().size() == euler_phi(N));
    for (const auto& chi : G.elements()) {
      CHECK(G.parse_name(G.name(chi)) == chi);
      CHECK(DirichletChar::parse(chi.serialize(), Fn) == chi);
    }
  }
  CharacterGroup G13(13, F);
  CHECK(G13.name(G13.parse_name("chi13^11")) == "chi13^11");
  CHECK(G13.name(G13.parse_name("chi13^-1")) == "chi13^11");
  CHECK_THROWS(G13.parse_name("chi7"));
}

TEST_CASE("serialisation in an extension field") {
  auto F = ExtField::make(PrimeModulus(16001), 2);
  CharacterGroup G(15, F);
  for (const auto& chi : G.elements()) CHECK(DirichletChar::parse(chi.serialize(), F) == chi);
  CHECK_THROWS(DirichletChar::parse("chi[15;11->1]", F));
  CHECK_THROWS(DirichletChar::parse("chi[15;7->(1,0),11->(1,0)]", F));
}

TEST_CASE("galois orbits and extension") {
  auto F = ExtField::make(PrimeModulus(12037), 1);
  auto chi13 = basis_chars(13, F)[0].chi;
  CHECK(chi13.galois_orbit().size() == 1);
  // over GF(12379^2) the order-12 characters mod 13 are not all rational
  auto K = ExtField::make(PrimeModulus(12379), 2);
  auto c = basis_chars(13, K)[0].chi;
  CHECK(12378 % 12 != 0);
  CHECK(c.galois_orbit().size() == 2);
  CHECK(c.frobenius(2) == c);
  auto lifted = basis_chars(3, ExtField::make(PrimeModulus(12379), 1))[0].chi.extend(15);
  CHECK(lifted.modulus() == 15);
  CHECK(lifted.conductor() == 3);
  CHECK(lifted.eval(2) == ExtField::make(PrimeModulus(12379), 1).from_int(-1));
}
