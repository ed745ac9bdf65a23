#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hgf/characters.hpp"
#include "hgf/newforms.hpp"
#include "hgf/poly.hpp"

namespace hgf {

// chi * e^w, or chi * e^w * sigma_f when form is set.
struct Constituent {
  DirichletChar chi;
  unsigned w = 0;
  std::shared_ptr<const ReducedNewform> form;

  unsigned dim() const { return form ? 2 : 1; }
};

// A four-dimensional sum of constituents in the context (N, g, eta).
class GaloisRep {
 public:
  GaloisRep(std::vector<Constituent> parts, unsigned g, DirichletChar eta);

  const std::vector<Constituent>& parts() const { return parts_; }
  unsigned g() const { return g_; }
  const DirichletChar& eta() const { return eta_; }
  const ExtField& field() const { return eta_.field(); }
  std::uint64_t level() const { return eta_.modulus(); }
  const Constituent* newform_part() const;

 private:
  std::vector<Constituent> parts_;
  unsigned g_;
  DirichletChar eta_;
};

// Coefficients of det(1 - rho(Frob_l) X), ascending in X.
poly::Poly frob_charpoly(const Constituent& c, std::uint32_t ell);
poly::Poly rep_charpoly(const GaloisRep& rho, std::uint32_t ell);
// a(l,0..4) with det(1 - rho(Frob_l) X) = sum (-1)^k l^{k(k-1)/2} a(l,k) X^k.
std::array<FieldElement, 5> hecke_from_rep(const GaloisRep& rho, std::uint32_t ell);

std::vector<int> hodge_tate(const GaloisRep& rho);
bool ht_check(const GaloisRep& rho);
// Eigenvalues of complex conjugation, sorted.
std::vector<int> oddness(const GaloisRep& rho);
bool odd_check(const GaloisRep& rho);
// X^4 coefficient equals eta(l) l^{g+6}.
bool det_check(const GaloisRep& rho, std::uint32_t ell);

enum class PatternType { Type1, Type2, Type3, Type4, Type5, Other };
const char* to_string(PatternType t);
PatternType classify_pattern(const GaloisRep& rho);

// Field-independent text form, e.g. "chi3*e^0 + e^1 + e^2 + e^4" or "e^0 + e^1 + e^2*s[3.8.a.a]".
struct ConstituentSpec {
  std::string chi = "1";
  unsigned w = 0;
  std::string form;
  friend bool operator==(const ConstituentSpec&, const ConstituentSpec&) = default;
};

struct RepSpec {
  std::vector<ConstituentSpec> parts;

  std::string format() const;
  static RepSpec parse(std::string_view text);
  friend bool operator==(const RepSpec&, const RepSpec&) = default;
};

// Characters by w, then the newform constituent; characters named through chars.
RepSpec describe(const GaloisRep& rho, const CharacterGroup& chars);

}  // namespace hgf
