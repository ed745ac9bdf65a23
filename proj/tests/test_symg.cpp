#include <random>

#include "doctest.h"
#include "hgf/symg.hpp"
#include "spn.hpp"

using namespace hgf;
using testing::product;
using testing::random_spn;

namespace {

// Evaluate a coefficient vector as a polynomial at a point of F_p^4.
std::uint32_t evaluate(const MonomialBasis& B, const std::vector<FieldElement>& v, const std::array<std::uint32_t, 4>& x,
                       std::uint32_t p) {
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < B.size(); ++i) {
    std::uint32_t term = v[i][0];
    for (int k = 0; k < 4; ++k) term = mul_mod(term, pow_mod(x[k], B.exponents(i)[k], p), p);
    acc = add_mod(acc, term, p);
  }
  return acc;
}

}  // namespace

TEST_CASE("dimension is binomial(g+3, 3)") {
  for (unsigned g = 0; g <= 12; ++g) {
    std::uint64_t count = 0;
    for (unsigned a = 0; a <= g; ++a)
      for (unsigned b = 0; a + b <= g; ++b)
        for (unsigned c = 0; a + b + c <= g; ++c) ++count;
    CHECK(MonomialBasis(g).size() == count);
    CHECK(symg_dimension(g) == count);
  }
  CHECK(symg_dimension(2) == 10);
  CHECK(symg_dimension(12) == 455);
}

TEST_CASE("basis order is graded lex") {
  MonomialBasis B(2);
  CHECK(B.exponents(0) == std::array<unsigned, 4>{2, 0, 0, 0});
  CHECK(B.exponents(1) == std::array<unsigned, 4>{1, 1, 0, 0});
  CHECK(B.exponents(9) == std::array<unsigned, 4>{0, 0, 0, 2});
  for (std::size_t i = 0; i < B.size(); ++i) CHECK(B.index_of(B.exponents(i)) == i);
}

TEST_CASE("S_pN membership conditions") {
  IntMatrix4 id{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  CHECK_NOTHROW(validate_spn(id, 12037, 7));
  auto neg = id;
  neg[0][0] = -1;
  CHECK_THROWS_WITH(validate_spn(neg, 12037, 7), doctest::Contains("positive"));
  auto shared = id;
  shared[0][0] = 7;
  CHECK_THROWS_WITH(validate_spn(shared, 12037, 7), doctest::Contains("prime to pN"));
  auto bottom = id;
  bottom[3][0] = 1;
  CHECK_THROWS_WITH(validate_spn(bottom, 12037, 7), doctest::Contains("bottom row"));
}

TEST_CASE("action agrees with direct substitution") {
  auto F = ExtField::make(PrimeModulus(12037), 1);
  auto eta = basis_chars(7, F)[0].chi;
  std::mt19937_64 rng(31);
  for (unsigned g : {1u, 2u, 3u}) {
    SymGModule M(g, eta);
    auto s = random_spn(rng, F.p(), 7);
    std::vector<FieldElement> v(M.dimension());
    for (auto& c : v) c = F.random(rng);
    auto w = M.act(s, v);
    std::uniform_int_distribution<std::uint32_t> d(0, F.p() - 1);
    for (int t = 0; t < 3; ++t) {
      std::array<std::uint32_t, 4> x{d(rng), d(rng), d(rng), d(rng)};
      std::array<std::uint32_t, 4> sx{};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) sx[i] = add_mod(sx[i], mul_mod(reduce_signed(s[i][j], F.p()), x[j], F.p()), F.p());
      std::uint32_t want = mul_mod(eta.eval(s[3][3])[0], evaluate(M.basis(), v, sx, F.p()), F.p());
      CHECK(evaluate(M.basis(), w, x, F.p()) == want);
    }
  }
}

TEST_CASE("right action composes") {
  auto F = ExtField::make(PrimeModulus(12037), 2);
  CharacterGroup G(13, F);
  auto eta = G.parse_name("chi13^11");
  std::mt19937_64 rng(32);
  for (unsigned g = 0; g <= 4; ++g) {
    SymGModule M(g, eta);
    for (int t = 0; t < 20; ++t) {
      auto s = random_spn(rng, F.p(), 13), u = random_spn(rng, F.p(), 13);
      std::vector<FieldElement> v(M.dimension());
      for (auto& c : v) c = F.random(rng);
      CHECK(M.act(u, M.act(s, v)) == M.act(product(s, u), v));
    }
  }
}

TEST_CASE("scalar matrices act by eta(l) l^g") {
  auto F = ExtField::make(PrimeModulus(12037), 1);
  auto eta = basis_chars(13, F)[0].chi;
  std::mt19937_64 rng(33);
  for (unsigned g : {0u, 1u, 5u}) {
    SymGModule M(g, eta);
    std::vector<FieldElement> v(M.dimension());
    for (auto& c : v) c = F.random(rng);
    for (std::int64_t l : {2, 3, 5}) {
      IntMatrix4 s{{{l, 0, 0, 0}, {0, l, 0, 0}, {0, 0, l, 0}, {0, 0, 0, l}}};
      FieldElement k = F.mul(eta.eval(l), F.pow(F.from_int(l), g));
      auto w = M.act(s, v);
      for (std::size_t i = 0; i < v.size(); ++i) CHECK(w[i] == F.mul(k, v[i]));
    }
  }
}

TEST_CASE("coefficient vectors serialise") {
  auto F = ExtField::make(PrimeModulus(16001), 2);
  SymGModule M(2, DirichletChar::trivial(5, F));
  std::mt19937_64 rng(34);
  std::vector<FieldElement> v(M.dimension());
  for (auto& c : v) c = F.random(rng);
  CHECK(M.parse(M.serialize(v)) == v);
  CHECK_THROWS(SymGModule(3, DirichletChar::trivial(5, F)).parse(M.serialize(v)));
}
