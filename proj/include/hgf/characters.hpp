#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hgf/field.hpp"

namespace hgf {

// (Z/N)^x with Sage's generator convention: the 2-part first (-1, then 5 when 8 | N),
// then the least primitive root of each odd prime power in ascending order, each lifted
// to be 1 modulo the rest of N.
class UnitGroup {
 public:
  explicit UnitGroup(std::uint64_t N);

  std::uint64_t modulus() const { return N_; }
  const std::vector<std::uint64_t>& generators() const { return gens_; }
  const std::vector<std::uint64_t>& orders() const { return orders_; }
  std::uint64_t exponent() const;
  std::uint64_t size() const;
  bool is_unit(std::int64_t m) const;
  // Exponents e with m = prod g_i^e_i mod N; throws when gcd(m, N) > 1.
  std::vector<std::uint64_t> log(std::int64_t m) const;

 private:
  std::uint64_t N_;
  std::vector<std::uint64_t> gens_, orders_;
  std::vector<std::int64_t> index_;  // residue -> position in exponent enumeration, -1 for non-units
};

std::shared_ptr<const UnitGroup> unit_group(std::uint64_t N);

enum class Parity { Even, Odd };
const char* to_string(Parity p);

class DirichletChar {
 public:
  DirichletChar(std::shared_ptr<const UnitGroup> group, ExtField field, std::vector<FieldElement> values);
  static DirichletChar trivial(std::uint64_t N, const ExtField& field);

  std::uint64_t modulus() const { return group_->modulus(); }
  const UnitGroup& group() const { return *group_; }
  const ExtField& field() const { return field_; }
  const std::vector<FieldElement>& values() const { return values_; }

  FieldElement eval(std::int64_t m) const;
  std::uint64_t order() const;
  Parity parity() const;
  bool is_trivial() const;
  std::uint64_t conductor() const;

  DirichletChar mul(const DirichletChar& other) const;
  DirichletChar pow(std::int64_t e) const;
  DirichletChar frobenius(unsigned times = 1) const;
  // The same character viewed modulo a multiple M of N.
  DirichletChar extend(std::uint64_t M) const;
  // Orbit under value-wise Frobenius, starting with this character.
  std::vector<DirichletChar> galois_orbit() const;

  // "chi[N;g1->v1,g2->v2]"; values with r > 1 are parenthesised coefficient lists.
  std::string serialize() const;
  static DirichletChar parse(std::string_view text, const ExtField& field);

  friend bool operator==(const DirichletChar& a, const DirichletChar& b);

 private:
  std::shared_ptr<const UnitGroup> group_;
  ExtField field_;
  std::vector<FieldElement> values_;
};

struct BasisEntry {
  std::string name;
  std::uint64_t modulus;
  std::uint32_t p;
  std::uint64_t order;
  Parity parity;
  std::vector<std::pair<std::uint64_t, std::int64_t>> values;  // generator, integer value mod p
};

class BasisTable {
 public:
  static BasisTable load(const std::string& path);
  // data/character_basis.txt, or $HGF_DATA_DIR/character_basis.txt when set.
  static const BasisTable& bundled();

  const std::vector<BasisEntry>& entries() const { return entries_; }
  std::vector<BasisEntry> for_modulus(std::uint64_t N) const;

 private:
  std::vector<BasisEntry> entries_;
};

// Least (in coefficient order) element of exact order n in F.
FieldElement least_primitive_root_of_unity(const ExtField& F, std::uint64_t n);

struct NamedChar {
  std::string name;
  DirichletChar chi;
};

// Basis characters for modulus N realised in F. When F has the table's characteristic the
// values are taken verbatim; otherwise v = z^j in F_p (z the least root of unity of the
// value's order) is sent to w^j with w the least such root in F.
std::vector<NamedChar> basis_chars(std::uint64_t N, const ExtField& F, const BasisTable& table = BasisTable::bundled());

// All characters mod N as products of basis characters, with their exponent vectors.
class CharacterGroup {
 public:
  CharacterGroup(std::uint64_t N, const ExtField& F, const BasisTable& table = BasisTable::bundled());

  std::uint64_t modulus() const { return N_; }
  const ExtField& field() const { return field_; }
  const std::vector<NamedChar>& basis() const { return basis_; }
  const std::vector<DirichletChar>& elements() const { return elements_; }
  const std::vector<std::vector<std::uint64_t>>& exponents() const { return exponents_; }
  std::size_t index_of(const DirichletChar& chi) const;

  // "1" for the trivial character, otherwise e.g. "chi13^11" or "chi15_0*chi15_1^2".
  std::string name(const DirichletChar& chi) const;
  DirichletChar parse_name(std::string_view text) const;

 private:
  std::uint64_t N_;
  ExtField field_;
  std::vector<NamedChar> basis_;
  std::vector<DirichletChar> elements_;
  std::vector<std::vector<std::uint64_t>> exponents_;
};

}  // namespace hgf
