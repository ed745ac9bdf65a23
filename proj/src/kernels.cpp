#include "hgf/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hgf::kernels {
namespace {

void axpy_scalar(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t a,
                 std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = static_cast<std::uint32_t>((y[i] + std::uint64_t{a} * x[i]) % p);
  }
}

std::uint32_t dot_scalar(const std::uint32_t* x, const std::uint32_t* y, std::size_t n,
                         std::uint32_t p) {
  const std::uint64_t pm = p - 1;
  const std::uint64_t chunk = ~std::uint64_t{0} / (pm * pm + 1);
  std::uint64_t acc = 0, pending = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += std::uint64_t{x[i]} * y[i];
    if (++pending == chunk) {
      acc %= p;
      pending = 1;
    }
  }
  return static_cast<std::uint32_t>(acc % p);
}

const Table kScalar{"scalar", axpy_scalar, dot_scalar};

const Table& choose() {
  const char* env = std::getenv("HGF_KERNELS");
  if (env && std::strcmp(env, "scalar") == 0) return kScalar;
  if (const Table* t = avx2()) return *t;
  return kScalar;
}

}  // namespace

const Table& scalar() { return kScalar; }

const Table* avx2() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const Table& active() {
  static const Table& t = choose();
  return t;
}

}  // namespace hgf::kernels
