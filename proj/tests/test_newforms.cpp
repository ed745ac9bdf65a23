#include <set>

#include "doctest.h"
#include "hgf/errors.hpp"
#include "hgf/newforms.hpp"
#include "hgf/tables.hpp"

using namespace hgf;

namespace {

std::string fixture(const std::string& records) {
  return R"({"schema_version":"newforms/1","source_commit":"test","prime_bound":5,"records":[)" + records + "]}";
}

// Level 1 weight 12, rational.
const char* kDelta =
    R"({"label":"1.12.a.a","level":1,"weight":12,"char":{"modulus":1,"orbit":"a","conrey":1,"generators":[],
        "gen_values_order":[],"gen_values":[]},"field_poly":[0,1],"ap":{"2":[-24],"3":[252],"5":[4830]}})";

// Coefficients in Q(sqrt 5) with denominator 2; a_2 = (1 + w)/2 is the golden ratio.
const char* kGolden =
    R"({"label":"5.4.a.a","level":5,"weight":4,"char":{"modulus":5,"orbit":"a","conrey":1,"generators":[2],
        "gen_values_order":[1],"gen_values":[[2,0]]},"field_poly":[-5,0,1],"denominator":2,
        "ap":{"2":[1,1],"3":["123456789012345678901234567890",0]}})";

// Nebentype of order 4 mod 5 in Q(i).
const char* kQuartic =
    R"({"label":"5.3.c.a","level":5,"weight":3,"char":{"modulus":5,"orbit":"c","conrey":2,"generators":[2],
        "gen_values_order":[4],"gen_values":[[0,1]]},"field_poly":[1,0,1],"ap":{"2":[0,3],"3":[2,-1]}})";

std::uint32_t decimal_mod(const std::string& digits, std::uint32_t p) {
  std::uint64_t v = 0;
  for (char c : digits) v = (v * 10 + static_cast<std::uint64_t>(c - '0')) % p;
  return static_cast<std::uint32_t>(v);
}

}  // namespace

TEST_CASE("fixtures load and validate") {
  auto store = parse_newforms(fixture(std::string(kDelta) + "," + kGolden + "," + kQuartic));
  REQUIRE(store.records.size() == 3);
  CHECK(store.prime_bound == 5);
  const auto& delta = store.find("1.12.a.a");
  CHECK(delta.weight == 12);
  CHECK(delta.ap.at(2) == std::vector<std::string>{"-24"});
  CHECK(store.find("5.4.a.a").denominator == "2");
  CHECK(store.find("5.4.a.a").ap.at(3)[0] == "123456789012345678901234567890");
  CHECK(parse_newforms(fixture("")).records.empty());
  CHECK(store.select(10, 3, 12).size() == 3);
  CHECK(store.select(5, 4, 4).size() == 1);
}

TEST_CASE("schema violations name the record") {
  auto throws_with = [](const std::string& text, const std::string& needle) {
    try {
      parse_newforms(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
  };
  std::string missing = kDelta;
  missing.replace(missing.find(R"(,"3":[252])"), 10, "");
  CHECK(throws_with(fixture(missing), "1.12.a.a"));
  CHECK(throws_with(fixture(missing), "a_3"));
  CHECK(throws_with(fixture(std::string(kDelta) + "," + kDelta), "duplicate"));
  std::string wrong_level = kDelta;
  wrong_level.replace(wrong_level.find(R"("level":1)"), 9, R"("level":2)");
  CHECK(throws_with(fixture(wrong_level), "label"));
  std::string non_monic = kDelta;
  non_monic.replace(non_monic.find("[0,1]"), 5, "[0,2]");
  CHECK(throws_with(fixture(non_monic), "monic"));
  CHECK(throws_with("{", "JSON"));
  CHECK(throws_with(R"({"records":[]})", "schema_version"));
}

TEST_CASE("reduction of rational coefficients is the residue") {
  auto store = parse_newforms(fixture(kDelta));
  for (unsigned r : {1u, 3u}) {
    auto F = ExtField::make(PrimeModulus(12379), r);
    auto red = reduce(store.records[0], F);
    REQUIRE(red.size() == 1);
    CHECK(red[0].ap.at(2) == F.from_int(-24));
    CHECK(red[0].ap.at(5) == F.from_int(4830));
    CHECK(red[0].nebentype.is_trivial());
  }
}

TEST_CASE("denominators and big integers") {
  auto store = parse_newforms(fixture(kGolden));
  const std::uint32_t p = 12379;  // 5 is a square mod p
  auto F = ExtField::make(PrimeModulus(p), 1);
  auto red = reduce(store.records[0], F);
  REQUIRE(red.size() == 2);
  for (const auto& r : red) {
    const FieldElement phi = r.ap.at(2);
    CHECK(F.sub(F.sub(F.mul(phi, phi), phi), F.one()).is_zero());
    CHECK(r.ap.at(3) == F.div(F.from_fp(decimal_mod("123456789012345678901234567890", p)), F.from_int(2)));
  }
  CHECK_FALSE(red[0].ap.at(2) == red[1].ap.at(2));
  // 5 is not a square mod 12037.
  CHECK_THROWS_AS(reduce(store.records[0], ExtField::make(PrimeModulus(12037), 1)), FieldTooSmall);
}

TEST_CASE("an inert prime needs r even and yields conjugate reductions") {
  auto store = parse_newforms(fixture(kQuartic));
  const auto& rec = store.records[0];
  // 12379 = 3 mod 4, so x^2 + 1 is irreducible.
  auto F1 = ExtField::make(PrimeModulus(12379), 1);
  try {
    reduce(rec, F1);
    FAIL("expected FieldTooSmall");
  } catch (const FieldTooSmall& e) {
    CHECK(e.factor_degrees() == std::vector<unsigned>{2});
  }
  auto F2 = ExtField::make(PrimeModulus(12379), 2);
  auto red = reduce(rec, F2);
  REQUIRE(red.size() == 2);
  for (auto l : {2u, 3u}) CHECK(red[1].ap.at(l) == F2.frobenius(red[0].ap.at(l)));
  CHECK(red[0].nebentype.order() == 4);
  CHECK(red[1].nebentype == red[0].nebentype.pow(-1));
  // Ring homomorphism: a_2 a_3 = (3i)(2 - i) = 3 + 6i.
  for (const auto& r : red) {
    CHECK(F2.mul(r.ap.at(2), r.ap.at(3)) == F2.add(F2.from_int(3), F2.scale(r.root, 6)));
  }
}

TEST_CASE("nebentype values must have the stated order") {
  std::string bad = kQuartic;
  bad.replace(bad.find(R"("gen_values":[[0,1]])"), 20, R"("gen_values":[[1,0]])");
  auto store = parse_newforms(fixture(bad));
  CHECK_THROWS_AS(reduce(store.records[0], ExtField::make(PrimeModulus(12379), 2)), std::invalid_argument);
}

TEST_CASE("choose_r covers characters and one prime of each coefficient field") {
  auto store = parse_newforms(fixture(std::string(kDelta) + "," + kGolden + "," + kQuartic));
  const auto& delta = store.find("1.12.a.a");
  const auto& golden = store.find("5.4.a.a");
  const auto& quartic = store.find("5.3.c.a");
  CHECK(choose_r(12379, {&delta}, 1) == 1);
  CHECK(choose_r(12379, {&delta, &golden}, 1) == 1);
  CHECK(choose_r(12379, {&delta, &quartic}, 1) == 2);
  // (Z/5)^x has exponent 4 and 12379 = 3 mod 4.
  CHECK(choose_r(12379, {}, 5) == 2);
  CHECK(choose_r(12037, {}, 5) == 1);
  // Monotone in the record set.
  CHECK(choose_r(12037, {&delta}, 1) <= choose_r(12037, {&delta, &quartic}, 1));
}

TEST_CASE("irreducibility certificates") {
  CHECK(certify_irreducible({"1", "0", "1"}));
  CHECK(certify_irreducible({"-5", "0", "1"}));
  CHECK(certify_irreducible({"-2", "0", "0", "1"}));
  CHECK_FALSE(certify_irreducible({"2", "0", "3", "0", "1"}));  // (x^2+1)(x^2+2)
  // Reducible modulo every prime, so these need the exact factor search.
  CHECK(certify_irreducible({"1", "0", "0", "0", "1"}));
  CHECK(certify_irreducible({"2500", "0", "101", "0", "1"}));
  CHECK(certify_irreducible({"4", "0", "2", "0", "1"}));
  CHECK_FALSE(certify_irreducible({"6", "0", "-5", "0", "1"}));  // (x^2-2)(x^2-3)
  CHECK_FALSE(certify_irreducible({"-10", "3", "1", "-3", "-2", "0", "1"}));  // (x^3-x-5)(x^3-x+2)
}

TEST_CASE("bundled fixture covers the tables") {
  const auto store = load_newforms(bundled_newforms_path());
  const auto& delta = store.find("1.12.a.a");
  CHECK(delta.ap.at(2) == std::vector<std::string>{"-24"});
  CHECK(store.prime_bound == 11);
  std::set<std::string> labels;
  for (const auto& t : load_tables(bundled_tables_path())) {
    for (const auto& row : t.rows) {
      for (const auto& part : RepSpec::parse(row.rep).parts)
        if (!part.form.empty()) labels.insert(part.form);
    }
  }
  CHECK(labels.size() > 100);
  for (const auto& l : labels) {
    CAPTURE(l);
    CHECK(store.find(l).irreducibility_certified);
  }
  CHECK(choose_r(12379, {&delta}, 1) == 1);
  // The minimal degree divides the one each table was computed in.
  for (const auto& t : load_tables(bundled_tables_path())) {
    std::vector<const NewformRecord*> forms;
    for (const auto& row : t.rows)
      for (const auto& part : RepSpec::parse(row.rep).parts)
        if (!part.form.empty()) forms.push_back(&store.find(part.form));
    CAPTURE(t.header());
    CHECK(t.r % choose_r(t.p, forms, t.level) == 0);
  }
}
