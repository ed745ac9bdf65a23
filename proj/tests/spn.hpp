#pragma once

#include <random>

#include "hgf/symg.hpp"

namespace hgf::testing {

inline IntMatrix4 random_spn(std::mt19937_64& rng, std::uint32_t p, std::uint64_t N) {
  std::uniform_int_distribution<std::int64_t> d(-4, 4);
  for (;;) {
    IntMatrix4 s{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) s[i][j] = d(rng);
    for (int j = 0; j < 3; ++j) s[3][j] = d(rng) * static_cast<std::int64_t>(N);
    s[3][3] = d(rng);
    try {
      validate_spn(s, p, N);
      return s;
    } catch (const std::invalid_argument&) {
    }
  }
}

inline IntMatrix4 product(const IntMatrix4& a, const IntMatrix4& b) {
  IntMatrix4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace hgf::testing
