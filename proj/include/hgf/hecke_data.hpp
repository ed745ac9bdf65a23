#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hgf/field.hpp"

namespace hgf {

// The Hecke operator T_{l,k}.
struct HeckeOp {
  std::uint32_t ell = 0;
  unsigned k = 0;
  friend auto operator<=>(const HeckeOp&, const HeckeOp&) = default;
};

std::string to_string(const HeckeOp& op);
// Accepts "T(l,k)" or "l:k".
HeckeOp parse_hecke_op(std::string_view text);

// The "Computed" set of a table: T_l stands for k in {1,2,3}, T_{l,1} for k = 1 only.
class OperatorSet {
 public:
  OperatorSet() = default;
  explicit OperatorSet(std::set<HeckeOp> ops) : ops_(std::move(ops)) {}
  static OperatorSet full(const std::vector<std::uint32_t>& primes);

  const std::set<HeckeOp>& ops() const { return ops_; }
  bool contains(const HeckeOp& op) const { return ops_.count(op) > 0; }
  std::vector<std::uint32_t> primes() const;
  // "T(2), T(5), T(7,1)"
  std::string format() const;
  static OperatorSet parse(std::string_view text);

 private:
  std::set<HeckeOp> ops_;
};

// Eigenvalues a(l,k) of one joint eigenspace, in the setting (N, g, eta).
struct HeckeData {
  ExtField field;
  std::uint64_t level = 0;
  unsigned g = 0;
  std::string eta;
  std::map<HeckeOp, FieldElement> values;

  OperatorSet operators() const;
  void write(std::ostream& os) const;
  static HeckeData read(std::istream& is);
};

}  // namespace hgf
