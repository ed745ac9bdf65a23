#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hgf/characters.hpp"
#include "hgf/field.hpp"

namespace hgf {

// One Galois orbit of newforms with coefficients in Q[w]/(field_poly). Integers are kept
// as decimal strings; ap and the nebentype values are numerators over a common
// denominator, in the power basis of w.
struct NewformRecord {
  std::string label;
  std::uint64_t level = 0;
  unsigned weight = 0;
  std::string char_orbit;
  std::uint64_t conrey = 1;
  std::vector<std::uint64_t> generators;
  std::vector<std::uint64_t> gen_values_order;
  std::vector<std::vector<std::string>> gen_values;
  std::vector<std::string> field_poly;  // ascending, monic
  std::string denominator = "1";
  std::map<std::uint32_t, std::vector<std::string>> ap;
  bool irreducibility_certified = false;

  unsigned degree() const { return static_cast<unsigned>(field_poly.size() - 1); }
};

struct NewformStore {
  std::string schema_version;
  std::string source_commit;
  std::uint32_t prime_bound = 0;
  std::vector<NewformRecord> records;

  const NewformRecord& find(const std::string& label) const;
  std::vector<const NewformRecord*> select(std::uint64_t level_divides, unsigned min_weight, unsigned max_weight) const;
};

NewformStore parse_newforms(const std::string& json_text);
NewformStore load_newforms(const std::string& path);
// data/newforms.json, or $HGF_DATA_DIR/newforms.json when set.
std::string bundled_newforms_path();

// Reduction of a record at a degree-one prime of its coefficient field over F.
struct ReducedNewform {
  std::string label;
  std::uint64_t level = 0;
  unsigned weight = 0;
  unsigned root_index = 0;
  FieldElement root;
  std::map<std::uint32_t, FieldElement> ap;
  DirichletChar nebentype;
};

// One entry per root of field_poly in F, in root order. Throws FieldTooSmall when there
// are none.
std::vector<ReducedNewform> reduce(const NewformRecord& record, const ExtField& F);
// Smallest r covering the character values mod N and at least one reduction of each record.
unsigned choose_r(std::uint32_t p, const std::vector<const NewformRecord*>& records, std::uint64_t N);
// Certificate by factor-degree patterns modulo small primes.
bool certify_irreducible(const std::vector<std::string>& field_poly);

}  // namespace hgf
