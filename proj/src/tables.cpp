#include "hgf/tables.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hgf {

std::string Table::header() const {
  std::string coeffs = g == 1 ? "V" : "Sym^" + std::to_string(g) + "(V)";
  if (eta != "1") coeffs += " x " + eta;
  std::string field = "GF(" + std::to_string(p) + (r > 1 ? "^" + std::to_string(r) : "") + ")";
  return "Level N = " + std::to_string(level) + ". Coeffs " + coeffs + ". Field " + field + ".";
}

std::string Table::format() const {
  std::string out = header() + "\n";
  if (computed.ops().empty()) {
    out += "Dim " + std::to_string(dim) + ".\n";
  } else {
    out += "Computed " + computed.format() + ". Dim " + std::to_string(dim) + "." + (tagged ? " [NEWv06]" : "") + "\n";
  }
  for (const auto& row : rows) {
    out += std::to_string(row.galois_mult) + " | " + std::to_string(row.hecke_mult) + " | " + row.rep + "\n";
  }
  return out;
}

std::vector<Table> parse_tables(std::istream& in) {
  static const std::regex header_re(
      R"(Level N = ([0-9]+)\. Coeffs (V|Sym\^([0-9]+)\(V\))( x (\S+))?\. Field GF\(([0-9]+)(\^([0-9]+))?\)\.)");
  static const std::regex computed_re(R"((Computed (.*)\. )?Dim ([0-9]+)\.( \[NEWv06\])?)");
  static const std::regex row_re(R"(([0-9]+) \| ([0-9]+) \| (.+))");
  std::vector<Table> out;
  std::string line;
  std::size_t lineno = 0;
  enum { Between, Computed, Rows } state = Between;
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("table line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch m;
    if (line.empty()) {
      if (state == Computed) throw fail("header without a Dim line");
      state = Between;
      continue;
    }
    if (state == Between) {
      if (!std::regex_match(line, m, header_re)) throw fail("expected a table header");
      Table t;
      t.level = std::stoull(m[1]);
      t.g = m[3].matched ? static_cast<unsigned>(std::stoul(m[3])) : 1;
      if (m[5].matched) t.eta = m[5];
      t.p = static_cast<std::uint32_t>(std::stoul(m[6]));
      t.r = m[8].matched ? static_cast<unsigned>(std::stoul(m[8])) : 1;
      out.push_back(std::move(t));
      state = Computed;
    } else if (state == Computed) {
      if (!std::regex_match(line, m, computed_re)) throw fail("expected 'Computed ... Dim d.'");
      Table& t = out.back();
      if (m[1].matched) t.computed = OperatorSet::parse(m[2].str());
      t.dim = static_cast<unsigned>(std::stoul(m[3]));
      t.tagged = m[4].matched;
      state = Rows;
    } else {
      if (!std::regex_match(line, m, row_re)) throw fail("expected 'gm | hm | rep'");
      out.back().rows.push_back({static_cast<unsigned>(std::stoul(m[1])), static_cast<unsigned>(std::stoul(m[2])), m[3]});
    }
  }
  if (state == Computed) throw fail("header without a Dim line");
  for (const auto& t : out) {
    unsigned total = 0;
    for (const auto& row : t.rows) total += row.galois_mult * row.hecke_mult;
    if (total != t.dim) throw std::invalid_argument(t.header() + " rows account for dimension " + std::to_string(total));
  }
  return out;
}

std::string format_tables(const std::vector<Table>& tables) {
  std::string out;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i) out += "\n";
    out += tables[i].format();
  }
  return out;
}

std::vector<Table> load_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table file " + path);
  return parse_tables(in);
}

std::string bundled_tables_path() {
  const char* env = std::getenv("HGF_DATA_DIR");
  return std::string(env ? env : HGF_DATA_DIR) + "/golden_tables.txt";
}

bool TableCheck::pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

namespace {

// Every way to realise a row in the context: one per reduction of its newform.
std::vector<Candidate> row_options(const RepSpec& spec, const FinderContext& ctx) {
  const auto& chars = ctx.chars();
  std::vector<Candidate> out;
  Candidate base;
  std::string form;
  unsigned form_w = 0;
  std::uint32_t form_chi = 0;
  for (const auto& part : spec.parts) {
    const auto chi = static_cast<std::uint32_t>(chars.index_of(chars.parse_name(part.chi)));
    if (!part.form.empty()) {
      if (!form.empty()) throw std::invalid_argument("more than one newform in '" + spec.format() + "'");
      form = part.form;
      form_w = part.w;
      form_chi = chi;
      continue;
    }
    if (base.size == 4) throw std::invalid_argument("too many summands in '" + spec.format() + "'");
    base.parts[base.size++] = {chi, part.w, -1};
  }
  if (form.empty()) {
    if (base.size == 4) out.push_back(base);
    return out;
  }
  for (std::size_t f = 0; f < ctx.forms().size(); ++f) {
    if (ctx.forms()[f]->label != form || base.size != 2) continue;
    Candidate c = base;
    c.parts[c.size++] = {form_chi, form_w, static_cast<std::int32_t>(f)};
    out.push_back(c);
  }
  return out;
}

bool det_everywhere(const FinderContext& ctx, const Candidate& c) {
  const ExtField& F = ctx.field();
  for (auto ell : ctx.probe_primes()) {
    FieldElement want = F.mul(ctx.eta().eval(ell), F.pow(F.from_int(ell), ctx.g() + 6));
    if (!(ctx.charpoly(c, ell)[4] == want)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> pattern_warnings(const std::vector<TableRow>& rows, const std::vector<PatternType>& types) {
  std::vector<std::string> out;
  std::set<std::string> present;
  for (const auto& row : rows) present.insert(row.rep);
  auto has = [&](PatternType t) { return std::find(types.begin(), types.end(), t) != types.end(); };
  if (has(PatternType::Type4) && !(has(PatternType::Type3) && has(PatternType::Type1)))
    out.push_back("type 4 occurs without both type 3 and type 1");
  for (std::size_t i = 0; i < rows.size() && i < types.size(); ++i) {
    RepSpec spec = RepSpec::parse(rows[i].rep);
    const auto t = types[i];
    if (t == PatternType::Type1 || t == PatternType::Type2 || t == PatternType::Type5) {
      ConstituentSpec* slot0 = nullptr;
      ConstituentSpec* slot2 = nullptr;
      for (auto& c : spec.parts) {
        if (!c.form.empty()) continue;
        if (c.w == 0) slot0 = &c;
        if (c.w == 2) slot2 = &c;
      }
      if (slot0 && slot2) {
        std::swap(slot0->chi, slot2->chi);
        if (!present.count(spec.format())) out.push_back(rows[i].rep + " (" + to_string(t) + ") has no partner " + spec.format());
        std::swap(slot0->chi, slot2->chi);
      }
    }
    for (const auto& c : spec.parts) {
      if (c.chi != "1" && (c.w == 1 || !c.form.empty())) {
        out.push_back(rows[i].rep + " twists " + (c.form.empty() ? "e^1" : c.form) + " by a nontrivial character");
      }
    }
  }
  return out;
}

PreparedTable prepare_table(const Table& table, const NewformStore& store) {
  const ExtField F = ExtField::make(PrimeModulus(table.p), table.r);
  CharacterGroup chars(table.level, F);
  const DirichletChar eta = chars.parse_name(table.eta);
  PreparedTable out;
  std::vector<std::string> skipped;
  auto forms = reduce_for_context(store, table.level, table.g, F, &skipped);
  for (const auto& s : skipped) out.warnings.push_back(s + " has no reduction in " + F.short_name());
  std::vector<RepSpec> specs;
  for (const auto& row : table.rows) specs.push_back(RepSpec::parse(row.rep));

  // Row characters may be named through a different embedding than eta: use the first
  // conjugate eta^a under which every row has a determinant-compatible realisation.
  const std::uint64_t e = std::max<std::uint64_t>(unit_group(table.level)->exponent(), 1);
  for (std::uint64_t a = 1; a <= e; ++a) {
    if (std::gcd(a, e) != 1) continue;
    FinderContext trial(table.g, chars, eta.pow(static_cast<std::int64_t>(a)), forms, store.prime_bound);
    std::vector<std::vector<Candidate>> found;
    for (const auto& spec : specs) {
      std::vector<Candidate> ok;
      for (const auto& c : row_options(spec, trial))
        if (det_everywhere(trial, c)) ok.push_back(c);
      if (ok.empty()) break;
      found.push_back(std::move(ok));
    }
    if (found.size() == specs.size()) {
      out.conjugation = a;
      out.ctx.emplace(std::move(trial));
      out.realisations = std::move(found);
      break;
    }
  }
  return out;
}

TableCheck verify_table(const Table& table, const NewformStore& store, const VerifyOptions& options) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  TableCheck check;
  check.header = table.header();
  if (table.rows.empty()) return check;

  PreparedTable prep = prepare_table(table, store);
  check.warnings = prep.warnings;
  if (!prep.ctx) {
    for (const auto& row : table.rows) {
      RowCheck rc;
      rc.rep = row.rep;
      rc.failure = "no conjugate of " + table.eta + " gives every row the right determinant";
      check.rows.push_back(std::move(rc));
    }
    return check;
  }
  check.conjugation = prep.conjugation;
  const FinderContext& ctx = *prep.ctx;
  const ExtField& F = ctx.field();
  const auto candidates = ctx.enumerate_candidates(FinderOptions{options.det_prefilter});
  check.candidates = candidates.size();
  const double setup = std::chrono::duration<double>(clock::now() - start).count() / static_cast<double>(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto row_start = clock::now();
    const auto& row = table.rows[i];
    RowCheck rc;
    rc.rep = row.rep;
    const Candidate& c = prep.realisations[i].front();
    const GaloisRep rho = ctx.instantiate(c);
    rc.hodge_tate = hodge_tate(rho);
    rc.ht = ht_check(rho);
    rc.odd = odd_check(rho);
    rc.det = true;
    for (auto ell : ctx.probe_primes()) rc.det = rc.det && det_check(rho, ell);
    rc.type = classify_pattern(rho);
    const HeckeData data = synthesize(ctx, c, table.computed);
    const MatchReport report = match(ctx, candidates, data);
    rc.matches = report.matches.size();
    rc.twist_classes = report.twist_classes;
    const std::string key = ctx.key(c);
    bool found = false;
    for (const auto& m : report.matches) {
      found = found || m.rep == key;
      rc.match_keys.push_back(m.rep);
    }
    // Each prime over p of the coefficient field gives its own conjugate eigensystem.
    std::set<std::string> conjugates;
    for (const auto& alt : prep.realisations[i]) {
      std::string sig;
      for (const auto& [op, v] : synthesize(ctx, alt, table.computed).values) sig += F.format(v) + ";";
      conjugates.insert(sig);
    }
    rc.predicted_galois_mult = static_cast<unsigned>(conjugates.size());
    // Oldform copies of a lower-level newform can inflate the listed count.
    const Constituent* nf = rho.newform_part();
    const bool old_form = nf && nf->form->level < table.level;
    if (!rc.ht || !rc.odd || !rc.det) {
      rc.failure = "fails a Hodge-Tate, oddness or determinant check";
    } else if (!found) {
      rc.failure = "not matched by its own eigenvalues";
    } else if (!report.unique) {
      rc.failure = std::to_string(report.twist_classes) + " inequivalent matches";
    } else if (old_form ? row.galois_mult % rc.predicted_galois_mult != 0 : row.galois_mult != rc.predicted_galois_mult) {
      rc.failure = "Galois multiplicity " + std::to_string(row.galois_mult) + " but " +
                   std::to_string(rc.predicted_galois_mult) + " conjugate eigensystems";
    } else {
      rc.pass = true;
    }
    rc.seconds = setup + std::chrono::duration<double>(clock::now() - row_start).count();
    check.rows.push_back(std::move(rc));
  }
  std::vector<PatternType> types;
  for (const auto& rc : check.rows) types.push_back(rc.type);
  for (auto& w : pattern_warnings(table.rows, types)) check.warnings.push_back(std::move(w));
  check.seconds = std::chrono::duration<double>(clock::now() - start).count();
  return check;
}

Table emit_table(const FinderContext& ctx, const Decomposition& decomposition, const OperatorSet& computed,
                 const std::vector<Candidate>& candidates) {
  const ExtField& F = ctx.field();
  Table t;
  t.level = ctx.level();
  t.g = ctx.g();
  t.eta = ctx.chars().name(ctx.eta());
  t.p = F.p();
  t.r = F.degree();
  t.computed = computed;
  for (const auto& s : decomposition.spaces) t.dim += s.hecke_mult;
  for (const auto& orbit : galois_orbits(F, decomposition.spaces, ctx.eta())) {
    const auto& space = decomposition.spaces[orbit.representative];
    HeckeData data{F, ctx.level(), ctx.g(), t.eta, {}};
    for (const auto& [op, v] : space.system) data.values.emplace(op, v);
    const MatchReport report = match(ctx, candidates, data);
    std::string rep = "?";
    if (report.unique) rep = describe(ctx.instantiate(report.matches.front().candidate), ctx.chars()).format();
    t.rows.push_back({static_cast<unsigned>(orbit.members.size()), space.hecke_mult, rep});
  }
  return t;
}

}  // namespace hgf
