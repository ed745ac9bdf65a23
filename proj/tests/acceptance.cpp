#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hgf/eigen.hpp"
#include "hgf/symg.hpp"
#include "hgf/tables.hpp"
#include "planted.hpp"
#include "spn.hpp"

using namespace hgf;

namespace {

constexpr double kCharTableSeconds = 1.0;
constexpr double kCharacterRowsSeconds = 60.0;
constexpr double kNewformRowSeconds = 30.0;
constexpr double kNewformRowsSeconds = 30.0 * 60.0;
constexpr double kEigenSeconds = 60.0;
constexpr int kPlantedInstances = 50;
constexpr std::size_t kPlantedMaxDim = 20;
constexpr int kCompositionPairs = 100;
constexpr unsigned kSymgMaxG = 12;
constexpr unsigned kCompositionMaxG = 4;
const std::set<unsigned> kGaloisMults{1, 2, 3, 4, 5, 6};
const std::set<unsigned> kHeckeMults{1, 3, 4, 6, 9};
const std::vector<std::uint32_t> kInvariantPrimes{2, 3, 5, 7, 11};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

bool has_newform(const std::string& rep) {
  for (const auto& part : RepSpec::parse(rep).parts)
    if (!part.form.empty()) return true;
  return false;
}

std::string first_failure(const std::vector<std::string>& problems) {
  if (problems.empty()) return "";
  return "; first: " + problems.front() + (problems.size() > 1 ? " (+" + std::to_string(problems.size() - 1) + " more)" : "");
}

void character_table() {
  const auto start = Clock::now();
  std::vector<std::string> problems;
  const auto& table = BasisTable::bundled();
  for (const auto& entry : table.entries()) {
    auto F = ExtField::make(PrimeModulus(entry.p), 1);
    bool seen = false;
    for (const auto& named : basis_chars(entry.modulus, F, table)) {
      if (named.name != entry.name) continue;
      seen = true;
      if (named.chi.order() != entry.order || named.chi.parity() != entry.parity) problems.push_back(entry.name);
    }
    if (!seen) problems.push_back(entry.name + " missing");
  }
  const double secs = since(start);
  const bool pass = problems.empty() && secs < kCharTableSeconds;
  report(1, "character table order and parity", pass,
         std::to_string(table.entries().size()) + " characters, " + std::to_string(problems.size()) + " mismatches, " +
             std::to_string(secs) + " s" + first_failure(problems));
}

struct GoldenRun {
  std::vector<Table> tables;
  std::vector<TableCheck> checks;
};

void golden_rows(const GoldenRun& run) {
  std::size_t char_rows = 0, form_rows = 0, slowest_row = 0;
  double char_secs = 0, form_secs = 0, slowest = 0;
  std::vector<std::string> char_fail, form_fail;
  for (std::size_t t = 0; t < run.tables.size(); ++t) {
    for (const auto& rc : run.checks[t].rows) {
      const std::string where = run.checks[t].header + " " + rc.rep;
      if (has_newform(rc.rep)) {
        ++form_rows;
        form_secs += rc.seconds;
        if (rc.seconds > slowest) slowest = rc.seconds, slowest_row = form_rows;
        if (!rc.pass) form_fail.push_back(where + ": " + rc.failure);
        if (rc.seconds >= kNewformRowSeconds) form_fail.push_back(where + ": too slow");
      } else {
        ++char_rows;
        char_secs += rc.seconds;
        if (!rc.pass) char_fail.push_back(where + ": " + rc.failure);
      }
    }
  }
  (void)slowest_row;
  report(2, "character-only rows match uniquely", char_fail.empty() && char_secs < kCharacterRowsSeconds,
         std::to_string(char_rows - char_fail.size()) + "/" + std::to_string(char_rows) + " rows, " +
             std::to_string(char_secs) + " s" + first_failure(char_fail));
  report(3, "newform rows match uniquely", form_fail.empty() && form_secs < kNewformRowsSeconds,
         std::to_string(form_rows - form_fail.size()) + "/" + std::to_string(form_rows) + " rows, " +
             std::to_string(form_secs) + " s total, slowest row " + std::to_string(slowest) + " s" +
             first_failure(form_fail));
}

void invariants(const GoldenRun& run, const NewformStore& store) {
  std::size_t reps = 0;
  std::vector<std::string> problems;
  for (const auto& table : run.tables) {
    if (table.rows.empty()) continue;
    PreparedTable prep = prepare_table(table, store);
    if (!prep.ctx) {
      problems.push_back(table.header() + ": no context");
      continue;
    }
    const FinderContext& ctx = *prep.ctx;
    const ExtField& F = ctx.field();
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      for (const auto& c : prep.realisations[i]) {
        ++reps;
        const GaloisRep rho = ctx.instantiate(c);
        const std::string where = table.header() + " " + table.rows[i].rep;
        const std::vector<int> want_ht{0, 1, 2, static_cast<int>(table.g) + 3};
        if (hodge_tate(rho) != want_ht) problems.push_back(where + ": Hodge-Tate");
        if (oddness(rho) != std::vector<int>{-1, -1, 1, 1}) problems.push_back(where + ": complex conjugation");
        for (auto ell : kInvariantPrimes) {
          if (ell == F.p() || table.level % ell == 0) continue;
          const FieldElement l = F.from_int(ell);
          const FieldElement eta = ctx.eta().eval(ell);
          const auto poly = rep_charpoly(rho, ell);
          const auto a = hecke_from_rep(rho, ell);
          if (poly[4] != F.mul(eta, F.pow(l, table.g + 6))) problems.push_back(where + ": X^4 at " + std::to_string(ell));
          if (a[0] != F.one()) problems.push_back(where + ": a(l,0) at " + std::to_string(ell));
          if (a[4] != F.mul(eta, F.pow(l, table.g))) problems.push_back(where + ": a(l,4) at " + std::to_string(ell));
        }
      }
    }
  }
  report(4, "Hodge-Tate, determinant, oddness and a(l,0), a(l,4) invariants", problems.empty(),
         std::to_string(reps) + " realisations, " + std::to_string(problems.size()) + " exceptions" + first_failure(problems));
}

void eigen_engine() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20240611);
  int recovered = 0, semisimple = 0;
  for (int i = 0; i < kPlantedInstances; ++i) {
    auto F = ExtField::make(PrimeModulus(i % 2 ? 12037 : 16001), i % 4 < 2 ? 1 : 2);
    const std::size_t dim = 1 + rng() % kPlantedMaxDim;
    const std::size_t ops = 2 + rng() % 3;
    auto inst = testing::planted_instance(F, dim, ops, rng);
    auto d = joint_eigenspaces(inst.family);
    recovered += testing::recovered(d) == inst.systems;
    semisimple += d.semisimple;
  }
  auto F = ExtField::make(PrimeModulus(12379), 1);
  Matrix J(4, 4, F.zero());
  J.at(0, 0) = J.at(1, 1) = F.from_int(3);
  J.at(0, 1) = F.one();
  J.at(2, 2) = J.at(3, 3) = F.from_int(8);
  OperatorFamily jordan{F, 4, {{HeckeOp{2, 1}, J}}};
  const bool flagged = !joint_eigenspaces(jordan).semisimple;
  const double secs = since(start);
  report(5, "eigen engine on planted instances", recovered == kPlantedInstances && semisimple == kPlantedInstances && flagged &&
                                                     secs < kEigenSeconds,
         std::to_string(recovered) + "/" + std::to_string(kPlantedInstances) + " recovered, Jordan block " +
             (flagged ? "flagged" : "missed") + ", " + std::to_string(secs) + " s");
}

void symg_module() {
  std::vector<std::string> problems;
  for (unsigned g = 0; g <= kSymgMaxG; ++g) {
    const std::uint64_t want = (g + 3) * (g + 2) * (g + 1) / 6;
    if (symg_dimension(g) != want || MonomialBasis(g).size() != want) problems.push_back("dimension g=" + std::to_string(g));
  }
  auto F = ExtField::make(PrimeModulus(12037), 2);
  CharacterGroup chars(13, F);
  const auto eta = chars.parse_name("chi13^11");
  std::mt19937_64 rng(77);
  int pairs = 0;
  for (int t = 0; t < kCompositionPairs; ++t) {
    SymGModule M(t % (kCompositionMaxG + 1), eta);
    const auto s = testing::random_spn(rng, F.p(), 13), u = testing::random_spn(rng, F.p(), 13);
    std::vector<FieldElement> v(M.dimension());
    for (auto& c : v) c = F.random(rng);
    if (M.act(u, M.act(s, v)) != M.act(testing::product(s, u), v)) problems.push_back("composition g=" + std::to_string(M.g()));
    ++pairs;
  }
  for (unsigned g : {0u, 1u, 3u, 6u}) {
    SymGModule M(g, eta);
    std::vector<FieldElement> v(M.dimension());
    for (auto& c : v) c = F.random(rng);
    for (std::int64_t l : {2, 3, 5, 7}) {
      IntMatrix4 s{{{l, 0, 0, 0}, {0, l, 0, 0}, {0, 0, l, 0}, {0, 0, 0, l}}};
      const FieldElement k = F.mul(eta.eval(l), F.pow(F.from_int(l), g));
      const auto w = M.act(s, v);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (w[i] != F.mul(k, v[i])) {
          problems.push_back("scalar " + std::to_string(l) + " g=" + std::to_string(g));
          break;
        }
    }
  }
  report(6, "Sym^g dimension, composition and scalar action", problems.empty(),
         "g <= " + std::to_string(kSymgMaxG) + ", " + std::to_string(pairs) + " pairs" + first_failure(problems));
}

void negative_controls(const GoldenRun& run, const NewformStore& store) {
  std::size_t perturbations = 0;
  std::vector<std::string> problems;
  for (const auto& table : run.tables) {
    if (table.rows.empty()) continue;
    PreparedTable prep = prepare_table(table, store);
    if (!prep.ctx) continue;
    const FinderContext& ctx = *prep.ctx;
    const ExtField& F = ctx.field();
    const auto candidates = ctx.enumerate_candidates();
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      const HeckeData data = synthesize(ctx, prep.realisations[i].front(), table.computed);
      for (const auto& [op, v] : data.values) {
        HeckeData bad = data;
        bad.values[op] = F.add(v, F.one());
        ++perturbations;
        if (!match(ctx, candidates, bad).matches.empty())
          problems.push_back(table.header() + " " + table.rows[i].rep + " at " + to_string(op));
      }
    }
  }
  std::size_t compared = 0;
  for (const auto& table : run.tables) {
    if (table.rows.empty()) continue;
    const TableCheck loose = verify_table(table, store, VerifyOptions{false});
    const TableCheck& strict = run.checks[&table - run.tables.data()];
    for (std::size_t i = 0; i < loose.rows.size() && i < strict.rows.size(); ++i) {
      ++compared;
      if (loose.rows[i].match_keys != strict.rows[i].match_keys)
        problems.push_back(table.header() + " " + table.rows[i].rep + ": prefilter changes the match set");
    }
  }
  report(7, "negative controls", problems.empty(),
         std::to_string(perturbations) + " perturbations, " + std::to_string(compared) + " match sets compared" +
             first_failure(problems));
}

void multiplicity_audit(const GoldenRun& run) {
  std::set<unsigned> gm, hm;
  for (const auto& t : run.tables)
    for (const auto& row : t.rows) gm.insert(row.galois_mult), hm.insert(row.hecke_mult);
  bool pass = true;
  for (auto m : gm) pass = pass && kGaloisMults.count(m);
  for (auto m : hm) pass = pass && kHeckeMults.count(m);
  auto join = [](const std::set<unsigned>& s) {
    std::string out;
    for (auto v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
    return "{" + out + "}";
  };
  report(8, "multiplicity audit", pass, "Galois " + join(gm) + ", Hecke " + join(hm));
}

}  // namespace

int main() {
  try {
    character_table();
    GoldenRun run;
    run.tables = load_tables(bundled_tables_path());
    const NewformStore store = load_newforms(bundled_newforms_path());
    for (const auto& t : run.tables) run.checks.push_back(verify_table(t, store));
    golden_rows(run);
    invariants(run, store);
    eigen_engine();
    symg_module();
    negative_controls(run, store);
    multiplicity_audit(run);
  } catch (const std::exception& e) {
    std::cerr << "acceptance aborted: " << e.what() << "\n";
    return 2;
  }
  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
