#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hgf/characters.hpp"
#include "hgf/matrix.hpp"

namespace hgf {

using IntMatrix4 = std::array<std::array<std::int64_t, 4>, 4>;

std::uint64_t symg_dimension(unsigned g);

// Degree-g monomials in x1..x4, graded lexicographic (x1^g first).
class MonomialBasis {
 public:
  explicit MonomialBasis(unsigned g);

  unsigned degree() const { return g_; }
  std::size_t size() const { return exps_.size(); }
  const std::array<unsigned, 4>& exponents(std::size_t i) const { return exps_[i]; }
  std::size_t index_of(const std::array<unsigned, 4>& e) const;

 private:
  unsigned g_;
  std::vector<std::array<unsigned, 4>> exps_;
  std::vector<std::int64_t> lookup_;
};

__int128 determinant4(const IntMatrix4& s);
// Throws std::invalid_argument naming the violated condition.
void validate_spn(const IntMatrix4& s, std::uint32_t p, std::uint64_t N);

// Sym^g(F^4) twisted by eta, with the right action (P|s)(x) = eta(s44) P(s x).
class SymGModule {
 public:
  SymGModule(unsigned g, DirichletChar eta);

  unsigned g() const { return basis_.degree(); }
  std::size_t dimension() const { return basis_.size(); }
  const MonomialBasis& basis() const { return basis_; }
  const DirichletChar& eta() const { return eta_; }
  const ExtField& field() const { return eta_.field(); }

  // Row m holds the image of the m-th basis monomial.
  Matrix action_matrix(const IntMatrix4& s) const;
  std::vector<FieldElement> act(const IntMatrix4& s, const std::vector<FieldElement>& v) const;

  std::string serialize(const std::vector<FieldElement>& v) const;
  std::vector<FieldElement> parse(std::string_view text) const;

 private:
  MonomialBasis basis_;
  DirichletChar eta_;
};

}  // namespace hgf
