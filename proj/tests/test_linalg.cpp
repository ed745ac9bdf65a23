#include <random>

#include "doctest.h"
#include "hgf/matrix.hpp"

using namespace hgf;

namespace {

Matrix random_matrix(const ExtField& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(r, c, F.zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = F.random(rng);
  return m;
}

}  // namespace

TEST_CASE("characteristic polynomial agrees with det(aI - A) at random points") {
  std::mt19937_64 rng(21);
  for (unsigned r : {1u, 2u}) {
    auto F = ExtField::make(PrimeModulus(12037), r);
    for (std::size_t n : {1u, 2u, 5u, 9u}) {
      Matrix a = random_matrix(F, n, n, rng);
      // sprinkle zeros so the Hessenberg pivot search has to swap
      if (n > 2) a.at(1, 0) = F.zero();
      auto cp = linalg::charpoly(F, a);
      CHECK(poly::degree(cp) == static_cast<int>(n));
      CHECK(cp.back() == F.one());
      for (int t = 0; t < 3; ++t) {
        auto x = F.random(rng);
        Matrix m = linalg::scale(F, linalg::identity(F, n), x);
        CHECK(poly::eval(F, cp, x) == linalg::determinant(F, linalg::sub(F, m, a)));
      }
    }
  }
}

TEST_CASE("kernel, rank and inverse") {
  std::mt19937_64 rng(22);
  auto F = ExtField::make(PrimeModulus(16001), 2);
  Matrix a = random_matrix(F, 6, 3, rng);
  Matrix b = random_matrix(F, 3, 6, rng);
  Matrix ab = linalg::mul(F, a, b);
  CHECK(linalg::rank(F, ab) == 3);
  Matrix k = linalg::kernel(F, ab);
  CHECK(k.cols() == 3);
  Matrix zero(6, 3, F.zero());
  CHECK(linalg::mul(F, ab, k) == zero);
  Matrix c = random_matrix(F, 5, 5, rng);
  CHECK(linalg::mul(F, c, linalg::inverse(F, c)) == linalg::identity(F, 5));
}

TEST_CASE("restriction to an invariant subspace") {
  std::mt19937_64 rng(23);
  auto F = ExtField::make(PrimeModulus(12379), 1);
  Matrix block = random_matrix(F, 4, 4, rng);
  Matrix a(4, 4, F.zero());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) a.at(i, j) = block.at(i, j);
  for (std::size_t i = 2; i < 4; ++i)
    for (std::size_t j = 2; j < 4; ++j) a.at(i, j) = block.at(i, j);
  Matrix basis(4, 2, F.zero());
  basis.at(0, 0) = F.one();
  basis.at(1, 1) = F.one();
  Matrix x = linalg::restrict_to(F, a, basis);
  CHECK(x.at(0, 0) == a.at(0, 0));
  CHECK(x.at(1, 0) == a.at(1, 0));
  Matrix bad(4, 1, F.zero());
  bad.at(2, 0) = F.one();
  CHECK_THROWS(linalg::restrict_to(F, a, bad));
}
