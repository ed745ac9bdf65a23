#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hgf/characters.hpp"
#include "hgf/eigen.hpp"
#include "hgf/errors.hpp"
#include "hgf/finder.hpp"
#include "hgf/kernels.hpp"
#include "hgf/newforms.hpp"
#include "hgf/tables.hpp"

namespace {

using namespace hgf;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return in;
}

// Accepts a character name ("1", "chi7^3") or a serialized chi[...] value.
DirichletChar parse_eta(const std::string& text, const CharacterGroup& chars) {
  if (text.rfind("chi[", 0) == 0) return DirichletChar::parse(text, chars.field());
  return chars.parse_name(text);
}

int run_chars(std::uint64_t N, std::uint32_t p, unsigned r) {
  const ExtField F = ExtField::make(PrimeModulus(p), r);
  auto group = unit_group(N);
  std::cout << "(Z/" << N << ")^x order " << group->size() << " exponent " << group->exponent() << "\n";
  std::cout << "generators";
  for (std::size_t i = 0; i < group->generators().size(); ++i) {
    std::cout << " " << group->generators()[i] << " (order " << group->orders()[i] << ")";
  }
  std::cout << "\nfield " << F.short_name() << "\n";
  CharacterGroup chars(N, F);
  for (const auto& b : chars.basis()) {
    std::cout << b.name << " order " << b.chi.order() << " " << to_string(b.chi.parity()) << " conductor "
              << b.chi.conductor() << " " << b.chi.serialize() << "\n";
  }
  std::cout << chars.elements().size() << " characters\n";
  return kPass;
}

int run_reduce(const std::string& forms, std::uint32_t p, unsigned r, const std::string& label) {
  const ExtField F = ExtField::make(PrimeModulus(p), r);
  const NewformStore store = load_newforms(forms);
  int status = kPass;
  for (const auto& rec : store.records) {
    if (!label.empty() && rec.label != label) continue;
    try {
      for (const auto& red : reduce(rec, F)) {
        std::cout << red.label << " root " << red.root_index << " = " << F.format(red.root);
        for (const auto& [l, a] : red.ap) std::cout << " a" << l << "=" << F.format(a);
        std::cout << "\n";
      }
    } catch (const FieldTooSmall& e) {
      std::cout << rec.label << ": " << e.what() << "\n";
      if (!label.empty()) status = kInputError;
    }
  }
  return status;
}

int run_eigen(const std::string& ops) {
  auto in = open_input(ops);
  const OperatorFile file = read_operator_file(in);
  const ExtField& F = file.field;
  const auto spaces = file.diagonalised ? file.systems : joint_eigenspaces(file.family).spaces;
  for (const auto& s : spaces) {
    std::cout << s.hecke_mult << (s.semisimple ? "" : " non-semisimple") << " | " << format_eigensystem(F, s.system) << "\n";
  }
  return kPass;
}

struct Setting {
  std::uint64_t level = 1;
  unsigned g = 0;
  std::string eta = "1";
  std::string forms;
  bool no_det = false;
};

FinderContext make_context(const Setting& s, const ExtField& F, const NewformStore& store) {
  CharacterGroup chars(s.level, F);
  DirichletChar eta = parse_eta(s.eta, chars);
  std::vector<std::string> skipped;
  auto forms = reduce_for_context(store, s.level, s.g, F, &skipped);
  for (const auto& label : skipped) std::cerr << "warning: " << label << " has no reduction in " << F.short_name() << "\n";
  return FinderContext(s.g, std::move(chars), std::move(eta), std::move(forms), store.prime_bound);
}

int run_find(const Setting& s, const std::string& data_path) {
  auto in = open_input(data_path);
  const HeckeData data = HeckeData::read(in);
  if (data.level != s.level) throw std::invalid_argument("data file is for level " + std::to_string(data.level));
  const NewformStore store = load_newforms(s.forms);
  const FinderContext ctx = make_context(s, data.field, store);
  const auto candidates = ctx.enumerate_candidates(FinderOptions{!s.no_det});
  const MatchReport report = match(ctx, candidates, data);
  std::cout << candidates.size() << " candidates, " << report.matches.size() << " matches in " << report.twist_classes
            << " classes\n";
  for (const auto& m : report.matches) {
    std::cout << "[" << m.twist_class << "] " << to_string(m.type) << " " << m.rep << "\n";
  }
  for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
  if (!report.caveat.empty()) std::cout << "note: " << report.caveat << "\n";
  std::cout << (report.unique ? "unique" : "not unique") << "\n";
  return report.unique ? kPass : kFail;
}

int run_verify(const std::string& tables_path, const std::string& forms, bool no_det, std::optional<std::uint64_t> level) {
  const auto tables = load_tables(tables_path);
  const NewformStore store = load_newforms(forms);
  std::size_t rows = 0, failed = 0;
  for (const auto& t : tables) {
    if (level && t.level != *level) continue;
    const TableCheck check = verify_table(t, store, VerifyOptions{!no_det});
    for (const auto& w : check.warnings) std::cout << "  warning: " << w << "\n";
    for (const auto& rc : check.rows) {
      ++rows;
      failed += !rc.pass;
      std::cout << (rc.pass ? "PASS " : "FAIL ") << check.header << " | " << rc.rep;
      if (!rc.pass) std::cout << " | " << rc.failure;
      std::cout << "\n";
    }
  }
  std::cout << rows - failed << "/" << rows << " rows verified\n";
  return failed ? kFail : kPass;
}

int run_emit(const Setting& s, const std::string& ops) {
  auto in = open_input(ops);
  const OperatorFile file = read_operator_file(in);
  Decomposition d;
  if (file.diagonalised) {
    d.spaces = file.systems;
  } else {
    d = joint_eigenspaces(file.family);
  }
  std::set<HeckeOp> labels;
  for (const auto& sp : d.spaces)
    for (const auto& [op, v] : sp.system) labels.insert(op);
  const NewformStore store = load_newforms(s.forms);
  const FinderContext ctx = make_context(s, file.field, store);
  const auto candidates = ctx.enumerate_candidates(FinderOptions{!s.no_det});
  std::cout << emit_table(ctx, d, OperatorSet(labels), candidates).format();
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois representations attached to Hecke eigenclasses"};
  app.require_subcommand(1);

  std::uint64_t modulus = 1;
  std::uint32_t p = 0;
  unsigned r = 1;
  auto* chars = app.add_subcommand("chars", "Unit group generators and basis characters");
  chars->add_option("--modulus", modulus)->required();
  chars->add_option("--p", p)->required();
  chars->add_option("--r", r);

  std::string forms = bundled_newforms_path();
  std::string label;
  auto* red = app.add_subcommand("reduce", "Reduce newforms into GF(p^r)");
  red->add_option("--forms", forms);
  red->add_option("--p", p)->required();
  red->add_option("--r", r);
  red->add_option("--label", label);

  std::string ops;
  auto* eigen = app.add_subcommand("eigen", "Joint eigenspaces of commuting operators");
  eigen->add_option("--ops", ops)->required();

  Setting setting;
  std::string data;
  auto add_setting = [&](CLI::App* sub) {
    sub->add_option("--level", setting.level)->required();
    sub->add_option("--g", setting.g)->required();
    sub->add_option("--eta", setting.eta, "character name or chi[...] serialization");
    sub->add_option("--forms", setting.forms);
    sub->add_flag("--no-det-prefilter", setting.no_det);
  };
  auto* find = app.add_subcommand("find", "Match Hecke eigenvalues against candidate representations");
  add_setting(find);
  find->add_option("--data", data)->required();

  std::string tables = bundled_tables_path();
  std::optional<std::uint64_t> only_level;
  bool no_det = false;
  auto* verify = app.add_subcommand("verify-tables", "Round-trip every row of a table file through the finder");
  verify->add_option("--tables", tables);
  verify->add_option("--forms", forms);
  verify->add_option("--level", only_level);
  verify->add_flag("--no-det-prefilter", no_det);

  auto* emit = app.add_subcommand("emit-table", "Decompose operators and print the identified table");
  add_setting(emit);
  emit->add_option("--ops", ops)->required();

  if (auto* env = std::getenv("HGF_KERNELS"); env && std::string(env) == "report") {
    std::cerr << "kernels: " << kernels::active().name << "\n";
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }
  if (setting.forms.empty()) setting.forms = forms;
  try {
    if (*chars) return run_chars(modulus, p, r);
    if (*red) return run_reduce(forms, p, r, label);
    if (*eigen) return run_eigen(ops);
    if (*find) return run_find(setting, data);
    if (*verify) return run_verify(tables, forms, no_det, only_level);
    if (*emit) return run_emit(setting, ops);
  } catch (const FieldTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
