#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hgf/fp_poly.hpp"
#include "hgf/modarith.hpp"

namespace hgf {

// Coefficient vector of an element of GF(p^r) in the power basis of the field modulus.
// Elements carry no field pointer; every operation goes through an ExtField.
class FieldElement {
 public:
  static constexpr unsigned kCapacity = 64;

  FieldElement() = default;

  unsigned size() const { return n_; }
  std::uint32_t operator[](unsigned i) const { return c_[i]; }
  const std::uint32_t* data() const { return c_.data(); }
  bool is_zero() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

 private:
  friend class ExtField;
  std::array<std::uint32_t, kCapacity> c_{};
  std::uint8_t n_ = 0;
};

class ExtField {
 public:
  // Canonical field: lexicographically least monic irreducible modulus of degree r.
  static ExtField make(PrimeModulus p, unsigned r);
  static ExtField with_modulus(PrimeModulus p, const fp::Poly& modulus);
  // Inverse of descriptor(): "GF(p^r):modulus=c0,...,cr".
  static ExtField parse(std::string_view descriptor);

  std::uint32_t p() const { return impl_->p; }
  unsigned degree() const { return impl_->r; }
  const fp::Poly& modulus() const { return impl_->modulus; }
  std::string descriptor() const;
  std::string short_name() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_fp(std::uint32_t v) const;
  FieldElement from_poly(const fp::Poly& coeffs) const;
  FieldElement generator() const;
  fp::Poly to_poly(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement scale(const FieldElement& a, std::uint32_t c) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;
  FieldElement pow_signed(const FieldElement& a, std::int64_t e) const;
  // a^(p^times)
  FieldElement frobenius(const FieldElement& a, unsigned times = 1) const;

  bool in_prime_field(const FieldElement& a) const;
  // Smallest d dividing n with a^d = 1; throws if a^n != 1.
  std::uint64_t order_dividing(const FieldElement& a, std::uint64_t n) const;
  // True when the multiplicative group has an element of order n.
  bool has_roots_of_unity(std::uint64_t n) const;
  FieldElement random(std::mt19937_64& rng) const;

  std::string format(const FieldElement& a) const;
  FieldElement parse_element(std::string_view text) const;

  friend bool operator==(const ExtField& a, const ExtField& b);

 private:
  struct Impl {
    std::uint32_t p;
    unsigned r;
    fp::Poly modulus;
    // x^(r+i) mod modulus, r coefficients each
    std::vector<fp::Poly> fold;
    std::vector<fp::Poly> frob_cols;
  };

  explicit ExtField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static ExtField build(std::uint32_t p, fp::Poly modulus);
  FieldElement blank() const;

  std::shared_ptr<const Impl> impl_;
};

// Least monic irreducible of degree r, ordered by (c0, c1, ..., c_{r-1}).
fp::Poly canonical_modulus(std::uint32_t p, unsigned r);

}  // namespace hgf
