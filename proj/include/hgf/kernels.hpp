#pragma once

#include <cstddef>
#include <cstdint>

// Vector kernels over Z/p with p < 2^31. Inputs must already be reduced.
namespace hgf::kernels {

// y[i] <- (y[i] + a * x[i]) mod p
using AxpyFn = void (*)(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t a,
                        std::uint32_t p);
// sum x[i] * y[i] mod p
using DotFn = std::uint32_t (*)(const std::uint32_t* x, const std::uint32_t* y, std::size_t n,
                                std::uint32_t p);

struct Table {
  const char* name;
  AxpyFn axpy;
  DotFn dot;
};

const Table& scalar();
// nullptr when the build has no AVX2 variant or the CPU lacks AVX2/FMA.
const Table* avx2();
// Chosen once at first use; HGF_KERNELS=scalar forces the reference path.
const Table& active();

inline void axpy(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t a,
                 std::uint32_t p) {
  active().axpy(y, x, n, a, p);
}

inline std::uint32_t dot(const std::uint32_t* x, const std::uint32_t* y, std::size_t n,
                         std::uint32_t p) {
  return active().dot(x, y, n, p);
}

namespace detail {
const Table* avx2_table();
}

}  // namespace hgf::kernels
