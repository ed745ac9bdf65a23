#include "hgf/newforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "hgf/errors.hpp"
#include "hgf/poly.hpp"
#include "json.hpp"

namespace hgf {

namespace {

using nlohmann::json;

std::string integer_text(const json& v, const std::string& where) {
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    static const std::regex re("-?[0-9]+");
    if (std::regex_match(s, re)) return s;
  }
  throw std::invalid_argument(where + ": expected an integer");
}

std::vector<std::string> integer_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw std::invalid_argument(where + ": expected a list");
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(integer_text(x, where));
  return out;
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw std::invalid_argument(where + ": missing '" + key + "'");
  return obj.at(key);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 2; n <= bound; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

NewformRecord parse_record(const json& r, std::uint32_t prime_bound) {
  NewformRecord rec;
  if (!r.is_object() || !r.contains("label") || !r.at("label").is_string()) throw std::invalid_argument("record without a label");
  rec.label = r.at("label").get<std::string>();
  const std::string where = "record " + rec.label;
  static const std::regex label_re("([0-9]+)\\.([0-9]+)\\.([a-z]+)\\.([a-z]+)");
  std::smatch m;
  if (!std::regex_match(rec.label, m, label_re)) throw std::invalid_argument(where + ": malformed label");
  rec.level = field(r, "level", where).get<std::uint64_t>();
  rec.weight = field(r, "weight", where).get<unsigned>();
  if (std::to_string(rec.level) != m[1] || std::to_string(rec.weight) != m[2]) {
    throw std::invalid_argument(where + ": level or weight disagrees with the label");
  }
  if (rec.weight < 2) throw std::invalid_argument(where + ": weight must be at least 2");
  const json& ch = field(r, "char", where);
  rec.char_orbit = field(ch, "orbit", where).get<std::string>();
  if (rec.char_orbit != m[3]) throw std::invalid_argument(where + ": character orbit disagrees with the label");
  if (field(ch, "modulus", where).get<std::uint64_t>() != rec.level) throw std::invalid_argument(where + ": character modulus differs from level");
  rec.conrey = field(ch, "conrey", where).get<std::uint64_t>();
  rec.generators = field(ch, "generators", where).get<std::vector<std::uint64_t>>();
  rec.gen_values_order = field(ch, "gen_values_order", where).get<std::vector<std::uint64_t>>();
  if (rec.generators != unit_group(rec.level)->generators()) {
    throw std::invalid_argument(where + ": character generators differ from the unit group convention");
  }
  rec.field_poly = integer_list(field(r, "field_poly", where), where + " field_poly");
  if (rec.field_poly.size() < 2 || rec.field_poly.back() != "1") throw std::invalid_argument(where + ": field_poly must be monic of positive degree");
  const std::size_t deg = rec.field_poly.size() - 1;
  for (const auto& v : field(ch, "gen_values", where)) {
    rec.gen_values.push_back(integer_list(v, where + " gen_values"));
    if (rec.gen_values.back().size() != deg) throw std::invalid_argument(where + ": character value has the wrong length");
  }
  if (rec.gen_values.size() != rec.generators.size() || rec.gen_values_order.size() != rec.generators.size()) {
    throw std::invalid_argument(where + ": one character value per generator expected");
  }
  rec.denominator = r.contains("denominator") ? integer_text(r.at("denominator"), where + " denominator") : "1";
  if (rec.denominator.empty() || rec.denominator[0] == '-' || rec.denominator == "0") {
    throw std::invalid_argument(where + ": denominator must be positive");
  }
  const json& ap = field(r, "ap", where);
  if (!ap.is_object()) throw std::invalid_argument(where + ": ap must be an object");
  for (const auto& [key, val] : ap.items()) {
    std::uint32_t l = 0;
    try {
      l = static_cast<std::uint32_t>(std::stoul(key));
    } catch (const std::logic_error&) {
      throw std::invalid_argument(where + ": bad prime '" + key + "'");
    }
    if (!is_prime(l) || rec.level % l == 0) throw std::invalid_argument(where + ": ap key " + key + " is not a good prime");
    rec.ap[l] = integer_list(val, where + " ap");
    if (rec.ap[l].size() != deg) throw std::invalid_argument(where + ": a_" + key + " has the wrong length");
  }
  for (auto l : primes_up_to(prime_bound)) {
    if (rec.level % l != 0 && !rec.ap.count(l)) throw std::invalid_argument(where + ": missing a_" + std::to_string(l));
  }
  rec.irreducibility_certified = certify_irreducible(rec.field_poly);
  return rec;
}

std::uint32_t residue(const std::string& s, std::uint32_t p) { return reduce_decimal(s, p); }

fp::Poly reduce_poly(const std::vector<std::string>& coeffs, std::uint32_t p) {
  fp::Poly out;
  for (const auto& c : coeffs) out.push_back(residue(c, p));
  fp::trim(out);
  return out;
}

using i128 = __int128;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  for (; e; e >>= 1, b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % m))
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % m);
  return r;
}

void subset_products(const std::vector<fp::Factor>& fs, std::size_t i, unsigned want, const fp::Poly& acc,
                     std::uint32_t q, std::vector<fp::Poly>& out, std::size_t cap) {
  if (out.size() > cap) return;
  if (want == 0) {
    out.push_back(acc);
    return;
  }
  if (i == fs.size()) return;
  const auto d = static_cast<unsigned>(fp::degree(fs[i].poly));
  if (d <= want) subset_products(fs, i + 1, want - d, fp::mul(acc, fs[i].poly, q), q, out, cap);
  subset_products(fs, i + 1, want, acc, q, out, cap);
}

enum class FactorSearch { None, Found, Unknown };

// Search for a monic integer factor of degree s: CRT-lift products of factors mod large
// primes, keep lifts inside the Mignotte bound, then test them modulo the unused primes.
// A lift that survives every test is reported as Found, which only costs the certificate.
FactorSearch factor_of_degree(const std::vector<std::string>& f, unsigned s) {
  double norm = 0;
  for (const auto& c : f) norm += std::stod(c) * std::stod(c);
  norm = std::sqrt(norm);
  double binom = 1;
  for (unsigned i = 1; i <= s / 2; ++i) binom = binom * (s - i + 1) / i;
  const double bound = binom * norm;
  if (bound > std::ldexp(1.0, 88)) return FactorSearch::Unknown;

  struct Option {
    std::uint32_t q;
    fp::Poly f;
    std::vector<fp::Poly> lifts;
  };
  constexpr std::size_t kCap = 4096;
  std::vector<Option> options;
  for (std::uint32_t q = (1u << 30) - 1; options.size() < 10 && q > (1u << 29); q -= 2) {
    if (!is_prime(q)) continue;
    fp::Poly fq = reduce_poly(f, q);
    if (fp::degree(fp::gcd(fq, fp::derivative(fq, q), q)) > 0) continue;
    Option o{q, fq, {}};
    subset_products(fp::factor(fq, q), 0, s, fp::Poly{1}, q, o.lifts, kCap);
    if (o.lifts.empty()) return FactorSearch::None;
    options.push_back(std::move(o));
  }
  std::sort(options.begin(), options.end(), [](const Option& a, const Option& b) { return a.lifts.size() < b.lifts.size(); });
  std::size_t used = 0;
  double modulus = 1;
  std::size_t combos = 1;
  while (used < options.size() && modulus <= 2 * bound + 1) {
    modulus *= options[used].q;
    combos *= options[used].lifts.size();
    ++used;
  }
  if (modulus <= 2 * bound + 1 || used > 3 || used + 2 > options.size() || combos > 1u << 16) return FactorSearch::Unknown;

  const i128 ibound = static_cast<i128>(bound) + 1;
  std::vector<std::size_t> pick(used, 0);
  for (std::size_t n = 0; n < combos; ++n) {
    std::size_t rest = n;
    for (std::size_t k = 0; k < used; ++k) {
      pick[k] = rest % options[k].lifts.size();
      rest /= options[k].lifts.size();
    }
    std::vector<i128> g(s + 1);
    bool in_range = true;
    for (unsigned j = 0; j <= s && in_range; ++j) {
      i128 x = 0, m = 1;
      for (std::size_t k = 0; k < used; ++k) {
        const std::uint64_t q = options[k].q;
        const auto& lift = options[k].lifts[pick[k]];
        const std::uint64_t target = j < lift.size() ? lift[j] : 0;
        const auto xq = static_cast<std::uint64_t>(x % static_cast<i128>(q));
        const auto minv = pow_mod(static_cast<std::uint64_t>(m % static_cast<i128>(q)), q - 2, q);
        const auto t = static_cast<std::uint64_t>(static_cast<unsigned __int128>((target + q - xq) % q) * minv % q);
        x += m * static_cast<i128>(t);
        m *= static_cast<i128>(q);
      }
      if (x > m / 2) x -= m;
      if (x > ibound || -x > ibound) in_range = false;
      g[j] = x;
    }
    if (!in_range) continue;
    bool survives = true;
    for (std::size_t k = used; k < options.size() && survives; ++k) {
      const i128 q = options[k].q;
      fp::Poly gq(s + 1);
      for (unsigned j = 0; j <= s; ++j) gq[j] = static_cast<std::uint32_t>(((g[j] % q) + q) % q);
      survives = fp::degree(fp::rem(options[k].f, gq, options[k].q)) < 0;
    }
    if (survives) return FactorSearch::Found;
  }
  return FactorSearch::None;
}

}  // namespace

bool certify_irreducible(const std::vector<std::string>& field_poly) {
  const std::size_t d = field_poly.size() - 1;
  if (d == 1) return true;
  // Degrees a factor over Q could have, intersected over the primes tried.
  std::vector<bool> possible(d, true);
  possible[0] = false;
  int usable = 0;
  for (std::uint32_t q = 7; q < 2000 && usable < 40; q += 2) {
    if (!is_prime(q) || q <= d) continue;
    fp::Poly f = reduce_poly(field_poly, q);
    if (fp::degree(fp::gcd(f, fp::derivative(f, q), q)) > 0) continue;
    ++usable;
    std::vector<bool> sums(d + 1, false);
    sums[0] = true;
    for (auto deg : fp::factor_degrees(f, q)) {
      for (std::size_t s = d; s >= deg; --s)
        if (sums[s - deg]) sums[s] = true;
    }
    bool any = false;
    for (std::size_t s = 1; s < d; ++s) {
      possible[s] = possible[s] && sums[s];
      any = any || possible[s];
    }
    if (!any) return true;
  }
  for (std::size_t s = 1; 2 * s <= d; ++s) {
    if (!possible[s] && !possible[d - s]) continue;
    if (factor_of_degree(field_poly, static_cast<unsigned>(s)) != FactorSearch::None) return false;
  }
  return true;
}

const NewformRecord& NewformStore::find(const std::string& label) const {
  for (const auto& r : records)
    if (r.label == label) return r;
  throw std::invalid_argument("newform " + label + " is not in the fixture");
}

std::vector<const NewformRecord*> NewformStore::select(std::uint64_t level_divides, unsigned min_weight, unsigned max_weight) const {
  std::vector<const NewformRecord*> out;
  for (const auto& r : records) {
    if (level_divides % r.level == 0 && r.weight >= min_weight && r.weight <= max_weight) out.push_back(&r);
  }
  return out;
}

NewformStore parse_newforms(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("newform fixture is not valid JSON: ") + e.what());
  }
  NewformStore store;
  try {
    store.schema_version = field(doc, "schema_version", "fixture").get<std::string>();
    if (store.schema_version.rfind("newforms/", 0) != 0) throw std::invalid_argument("unsupported schema_version " + store.schema_version);
    store.source_commit = field(doc, "source_commit", "fixture").get<std::string>();
    store.prime_bound = field(doc, "prime_bound", "fixture").get<std::uint32_t>();
    for (const auto& r : field(doc, "records", "fixture")) store.records.push_back(parse_record(r, store.prime_bound));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("newform fixture has a malformed field: ") + e.what());
  }
  std::vector<std::string> labels;
  for (const auto& r : store.records) labels.push_back(r.label);
  std::sort(labels.begin(), labels.end());
  auto dup = std::adjacent_find(labels.begin(), labels.end());
  if (dup != labels.end()) throw std::invalid_argument("duplicate newform label " + *dup);
  return store;
}

NewformStore load_newforms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open newform fixture " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_newforms(ss.str());
}

std::string bundled_newforms_path() {
  const char* env = std::getenv("HGF_DATA_DIR");
  return std::string(env ? env : HGF_DATA_DIR) + "/newforms.json";
}

std::vector<ReducedNewform> reduce(const NewformRecord& rec, const ExtField& F) {
  const std::uint32_t p = F.p();
  const std::uint32_t den = residue(rec.denominator, p);
  if (den == 0) throw std::invalid_argument(rec.label + ": p divides the coefficient denominator");
  fp::Poly f = reduce_poly(rec.field_poly, p);
  auto roots = poly::roots_in_field(F, poly::lift(F, f));
  if (roots.empty()) {
    auto degrees = fp::factor_degrees(f, p);
    throw FieldTooSmall(enlarge_message("coefficient field of " + rec.label, F.degree(), degrees), degrees);
  }
  const FieldElement den_inv = F.inv(F.from_fp(den));
  auto group = unit_group(rec.level);
  std::vector<ReducedNewform> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const FieldElement& rho = roots[i].value;
    auto eval = [&](const std::vector<std::string>& coeffs) {
      return F.mul(poly::eval(F, poly::lift(F, reduce_poly(coeffs, p)), rho), den_inv);
    };
    std::map<std::uint32_t, FieldElement> ap;
    for (const auto& [l, coeffs] : rec.ap) ap.emplace(l, eval(coeffs));
    std::vector<FieldElement> values;
    for (std::size_t g = 0; g < rec.gen_values.size(); ++g) {
      FieldElement v = eval(rec.gen_values[g]);
      const std::uint64_t n = rec.gen_values_order[g];
      if (v.is_zero() || F.pow(v, n) != F.one() || F.order_dividing(v, n) != n) {
        throw std::invalid_argument(rec.label + ": reduced nebentype value at generator " + std::to_string(rec.generators[g]) +
                                    " does not have order " + std::to_string(n));
      }
      values.push_back(v);
    }
    out.push_back(ReducedNewform{rec.label, rec.level, rec.weight, static_cast<unsigned>(i), rho, std::move(ap),
                                 DirichletChar(group, F, std::move(values))});
  }
  return out;
}

unsigned choose_r(std::uint32_t p, const std::vector<const NewformRecord*>& records, std::uint64_t N) {
  const std::uint64_t e = unit_group(N)->exponent();
  std::uint64_t r = e % p == 0 ? 1 : multiplicative_order(p % e, e);
  for (const auto* rec : records) {
    auto degrees = fp::factor_degrees(reduce_poly(rec->field_poly, p), p);
    r = std::lcm<std::uint64_t>(r, degrees.front());
  }
  return static_cast<unsigned>(r);
}

}  // namespace hgf
