#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hgf/finder.hpp"
#include "hgf/galois_reps.hpp"
#include "hgf/hecke_data.hpp"
#include "hgf/newforms.hpp"

namespace hgf {

struct TableRow {
  unsigned galois_mult = 0;
  unsigned hecke_mult = 0;
  std::string rep;  // RepSpec text, "?" when unidentified
};

// One eigenspace table:
//   Level N = 3. Coeffs Sym^3(V) x chi3. Field GF(12379).
//   Computed T(2), T(5), T(7,1). Dim 2.
//   1 | 1 | e^0 + e^1 + chi3*e^2 + e^6
// An empty table has the single line "Dim 0." after the header. A trailing " [NEWv06]"
// on the Computed line is kept as an opaque tag.
struct Table {
  std::uint64_t level = 0;
  unsigned g = 0;
  std::string eta = "1";
  std::uint32_t p = 0;
  unsigned r = 1;
  OperatorSet computed;
  unsigned dim = 0;
  bool tagged = false;
  std::vector<TableRow> rows;

  std::string header() const;
  std::string format() const;
};

std::vector<Table> parse_tables(std::istream& in);
std::string format_tables(const std::vector<Table>& tables);
std::vector<Table> load_tables(const std::string& path);
std::string bundled_tables_path();

struct RowCheck {
  std::string rep;
  bool pass = false;
  std::string failure;
  std::size_t matches = 0;
  std::size_t twist_classes = 0;
  PatternType type = PatternType::Other;
  unsigned predicted_galois_mult = 0;
  bool ht = false, odd = false, det = false;
  std::vector<int> hodge_tate;
  std::vector<std::string> match_keys;
  double seconds = 0;
};

struct TableCheck {
  std::string header;
  // The context used eta^conjugation.
  std::uint64_t conjugation = 1;
  std::size_t candidates = 0;
  std::vector<RowCheck> rows;
  std::vector<std::string> warnings;
  double seconds = 0;

  bool pass() const;
};

// Empirical co-occurrence rules: type 4 comes with types 3 and 1, types 1, 2 and 5 come in
// pairs swapping the character between e^0 and e^2, and neither e^1 nor a newform is twisted.
// Violations are warnings only.
std::vector<std::string> pattern_warnings(const std::vector<TableRow>& rows, const std::vector<PatternType>& types);

// A table's finder context with every determinant-compatible realisation of each row.
struct PreparedTable {
  std::optional<FinderContext> ctx;  // empty when no conjugate of eta fits every row
  std::uint64_t conjugation = 1;
  std::vector<std::vector<Candidate>> realisations;
  std::vector<std::string> warnings;
};

PreparedTable prepare_table(const Table& table, const NewformStore& store);

struct VerifyOptions {
  bool det_prefilter = true;
};

// For each row: synthesize eigenvalues at exactly the computed operators, run the finder
// over all candidates and require the row to be the unique match.
TableCheck verify_table(const Table& table, const NewformStore& store, const VerifyOptions& options = {});

// Builds a table from joint eigenspaces: one row per Galois orbit, with the rep text of
// the unique match or "?" when the finder does not pin one down.
Table emit_table(const FinderContext& ctx, const Decomposition& decomposition, const OperatorSet& computed,
                 const std::vector<Candidate>& candidates);

}  // namespace hgf
