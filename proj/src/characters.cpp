#include "hgf/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hgf/poly.hpp"

namespace hgf {

namespace {

std::uint64_t mod_of(std::int64_t m, std::uint64_t N) {
  std::int64_t r = m % static_cast<std::int64_t>(N);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(N) : r);
}

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t crt_lift(std::uint64_t g, std::uint64_t part, std::uint64_t N) {
  // x = g mod part, x = 1 mod N / part
  const std::uint64_t rest = N / part;
  if (rest == 1) return g % N;
  const std::uint64_t inv = inv_mod(static_cast<std::uint32_t>(rest % part), static_cast<std::uint32_t>(part));
  const std::uint64_t t = mulmod64((g + part - 1) % part, inv, part);
  return (1 + rest * t) % N;
}

std::string trim_ws(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

UnitGroup::UnitGroup(std::uint64_t N) : N_(N) {
  if (N == 0) throw std::invalid_argument("modulus must be positive");
  if (N > 1000000) throw std::invalid_argument("modulus " + std::to_string(N) + " too large for the unit group table");
  auto fac = factorize(N);
  for (auto [q, e] : fac) {
    if (q != 2) continue;
    std::uint64_t part = 1ULL << e;
    if (e >= 2) {
      gens_.push_back(crt_lift(part - 1, part, N));
      orders_.push_back(2);
    }
    if (e >= 3) {
      gens_.push_back(crt_lift(5, part, N));
      orders_.push_back(part / 4);
    }
  }
  for (auto [q, e] : fac) {
    if (q == 2) continue;
    std::uint64_t part = 1;
    for (unsigned i = 0; i < e; ++i) part *= q;
    const std::uint64_t phi = part / q * (q - 1);
    std::uint64_t g = 2;
    while (std::gcd(g, q) != 1 || multiplicative_order(g, part) != phi) ++g;
    gens_.push_back(crt_lift(g, part, N));
    orders_.push_back(phi);
  }
  index_.assign(N, -1);
  std::vector<std::uint64_t> e(gens_.size(), 0);
  for (std::int64_t pos = 0;; ++pos) {
    std::uint64_t x = 1 % N;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      for (std::uint64_t k = 0; k < e[i]; ++k) x = mulmod64(x, gens_[i], N);
    }
    if (index_[x] != -1) throw std::logic_error("unit group generators are dependent");
    index_[x] = pos;
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == orders_[i]) e[i++] = 0;
    if (i == e.size()) break;
  }
}

std::uint64_t UnitGroup::exponent() const {
  std::uint64_t e = 1;
  for (auto o : orders_) e = std::lcm(e, o);
  return e;
}

std::uint64_t UnitGroup::size() const {
  std::uint64_t s = 1;
  for (auto o : orders_) s *= o;
  return s;
}

bool UnitGroup::is_unit(std::int64_t m) const { return index_[mod_of(m, N_)] >= 0; }

std::vector<std::uint64_t> UnitGroup::log(std::int64_t m) const {
  std::int64_t pos = index_[mod_of(m, N_)];
  if (pos < 0) throw std::domain_error(std::to_string(m) + " is not a unit modulo " + std::to_string(N_));
  std::vector<std::uint64_t> e(gens_.size());
  auto rest = static_cast<std::uint64_t>(pos);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    e[i] = rest % orders_[i];
    rest /= orders_[i];
  }
  return e;
}

std::shared_ptr<const UnitGroup> unit_group(std::uint64_t N) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const UnitGroup>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[N];
  if (!slot) slot = std::make_shared<const UnitGroup>(N);
  return slot;
}

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

DirichletChar::DirichletChar(std::shared_ptr<const UnitGroup> group, ExtField field, std::vector<FieldElement> values)
    : group_(std::move(group)), field_(std::move(field)), values_(std::move(values)) {
  if (values_.size() != group_->generators().size()) {
    throw std::invalid_argument("character mod " + std::to_string(group_->modulus()) + " needs " +
                                std::to_string(group_->generators().size()) + " generator values");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].size() != field_.degree()) throw std::invalid_argument("character value from a different field");
    if (field_.pow(values_[i], group_->orders()[i]) != field_.one()) {
      throw std::invalid_argument("value at generator " + std::to_string(group_->generators()[i]) +
                                  " has order not dividing " + std::to_string(group_->orders()[i]));
    }
  }
}

DirichletChar DirichletChar::trivial(std::uint64_t N, const ExtField& field) {
  auto g = unit_group(N);
  return DirichletChar(g, field, std::vector<FieldElement>(g->generators().size(), field.one()));
}

FieldElement DirichletChar::eval(std::int64_t m) const {
  auto e = group_->log(m);
  FieldElement acc = field_.one();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i]) acc = field_.mul(acc, field_.pow(values_[i], e[i]));
  }
  return acc;
}

std::uint64_t DirichletChar::order() const {
  std::uint64_t o = 1;
  for (std::size_t i = 0; i < values_.size(); ++i) o = std::lcm(o, field_.order_dividing(values_[i], group_->orders()[i]));
  return o;
}

Parity DirichletChar::parity() const { return eval(-1) == field_.one() ? Parity::Even : Parity::Odd; }

bool DirichletChar::is_trivial() const {
  return std::all_of(values_.begin(), values_.end(), [&](const FieldElement& v) { return v == field_.one(); });
}

std::uint64_t DirichletChar::conductor() const {
  const std::uint64_t N = modulus();
  if (N == 1) return 1;
  for (std::uint64_t M : divisors(N)) {
    bool factors = true;
    for (std::uint64_t a = 1; a < N && factors; a += M) {
      const auto m = static_cast<std::int64_t>(a);
      factors = !group_->is_unit(m) || eval(m) == field_.one();
    }
    if (factors) return M;
  }
  return N;
}

DirichletChar DirichletChar::mul(const DirichletChar& other) const {
  if (other.modulus() != modulus()) throw std::invalid_argument("product of characters with different moduli");
  std::vector<FieldElement> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.mul(values_[i], other.values_[i]);
  return DirichletChar(group_, field_, std::move(v));
}

DirichletChar DirichletChar::pow(std::int64_t e) const {
  std::vector<FieldElement> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.pow_signed(values_[i], e);
  return DirichletChar(group_, field_, std::move(v));
}

DirichletChar DirichletChar::frobenius(unsigned times) const {
  std::vector<FieldElement> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.frobenius(values_[i], times);
  return DirichletChar(group_, field_, std::move(v));
}

DirichletChar DirichletChar::extend(std::uint64_t M) const {
  if (M % modulus() != 0) throw std::invalid_argument("cannot extend a character mod " + std::to_string(modulus()) + " to modulus " + std::to_string(M));
  auto g = unit_group(M);
  std::vector<FieldElement> v;
  for (auto gen : g->generators()) v.push_back(eval(static_cast<std::int64_t>(gen)));
  return DirichletChar(g, field_, std::move(v));
}

std::vector<DirichletChar> DirichletChar::galois_orbit() const {
  std::vector<DirichletChar> orbit{*this};
  for (;;) {
    DirichletChar next = orbit.back().frobenius();
    if (next == *this) return orbit;
    orbit.push_back(std::move(next));
  }
}

std::string DirichletChar::serialize() const {
  std::ostringstream os;
  os << "chi[" << modulus() << ';';
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ',';
    os << group_->generators()[i] << "->";
    if (field_.degree() > 1) {
      os << '(' << field_.format(values_[i]) << ')';
    } else {
      os << field_.format(values_[i]);
    }
  }
  os << ']';
  return os.str();
}

DirichletChar DirichletChar::parse(std::string_view text, const ExtField& field) {
  auto fail = [&] { return std::invalid_argument("malformed character '" + std::string(text) + "'"); };
  if (text.substr(0, 4) != "chi[" || text.back() != ']') throw fail();
  std::string_view body = text.substr(4, text.size() - 5);
  auto semi = body.find(';');
  if (semi == std::string_view::npos) throw fail();
  std::uint64_t N = 0;
  try {
    N = std::stoull(std::string(body.substr(0, semi)));
  } catch (const std::exception&) {
    throw fail();
  }
  auto g = unit_group(N);
  std::vector<FieldElement> values;
  std::string_view rest = body.substr(semi + 1);
  std::size_t gi = 0;
  while (!rest.empty()) {
    auto arrow = rest.find("->");
    if (arrow == std::string_view::npos || gi >= g->generators().size()) throw fail();
    if (std::to_string(g->generators()[gi]) != rest.substr(0, arrow)) {
      throw std::invalid_argument("character generator mismatch in '" + std::string(text) + "'");
    }
    rest.remove_prefix(arrow + 2);
    std::string_view val;
    if (!rest.empty() && rest.front() == '(') {
      auto close = rest.find(')');
      if (close == std::string_view::npos) throw fail();
      val = rest.substr(1, close - 1);
      rest.remove_prefix(close + 1);
    } else {
      auto comma = rest.find(',');
      val = rest.substr(0, comma);
      rest.remove_prefix(comma == std::string_view::npos ? rest.size() : comma);
    }
    values.push_back(field.parse_element(val));
    if (!rest.empty()) {
      if (rest.front() != ',') throw fail();
      rest.remove_prefix(1);
    }
    ++gi;
  }
  return DirichletChar(g, field, std::move(values));
}

bool operator==(const DirichletChar& a, const DirichletChar& b) {
  return a.modulus() == b.modulus() && a.values_ == b.values_;
}

BasisTable BasisTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open character basis table " + path);
  BasisTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim_ws(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    BasisEntry e;
    std::string parity;
    if (!(ls >> e.name >> e.modulus >> e.p >> e.order >> parity) || (parity != "even" && parity != "odd")) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": malformed basis entry");
    }
    e.parity = parity == "even" ? Parity::Even : Parity::Odd;
    std::string kv;
    while (ls >> kv) {
      auto colon = kv.find(':');
      if (colon == std::string::npos) throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected generator:value");
      e.values.emplace_back(std::stoull(kv.substr(0, colon)), std::stoll(kv.substr(colon + 1)));
    }
    t.entries_.push_back(std::move(e));
  }
  return t;
}

const BasisTable& BasisTable::bundled() {
  static const BasisTable table = [] {
    const char* env = std::getenv("HGF_DATA_DIR");
    std::string dir = env ? env : HGF_DATA_DIR;
    return load(dir + "/character_basis.txt");
  }();
  return table;
}

std::vector<BasisEntry> BasisTable::for_modulus(std::uint64_t N) const {
  std::vector<BasisEntry> out;
  for (const auto& e : entries_) {
    if (e.modulus == N) out.push_back(e);
  }
  return out;
}

FieldElement least_primitive_root_of_unity(const ExtField& F, std::uint64_t n) {
  if (!F.has_roots_of_unity(n)) {
    throw std::domain_error(F.short_name() + " has no primitive " + std::to_string(n) + "-th root of unity");
  }
  if (n == 1) return F.one();
  const std::uint32_t p = F.p();
  // cyclotomic polynomial by dividing x^n - 1 by x^d - 1 and the Phi_d in between
  std::map<std::uint64_t, fp::Poly> phi;
  for (std::uint64_t d : divisors(n)) {
    fp::Poly f(d + 1, 0);
    f[0] = p - 1;
    f[d] = 1;
    for (auto& [e, pe] : phi) {
      if (d % e == 0) f = fp::divrem(f, pe, p).first;
    }
    phi[d] = f;
  }
  auto roots = poly::roots_in_field(F, poly::lift(F, phi[n]));
  if (roots.empty()) throw std::logic_error("cyclotomic polynomial has no roots");
  return roots.front().value;
}

std::vector<NamedChar> basis_chars(std::uint64_t N, const ExtField& F, const BasisTable& table) {
  auto entries = table.for_modulus(N);
  if (entries.empty()) throw std::invalid_argument("no bundled character basis for modulus " + std::to_string(N));
  auto group = unit_group(N);
  if (!F.has_roots_of_unity(group->exponent())) {
    throw std::invalid_argument("exponent " + std::to_string(group->exponent()) + " of (Z/" + std::to_string(N) +
                                ")^x does not divide the order of the multiplicative group of " + F.short_name() +
                                " (p = " + std::to_string(F.p()) + ")");
  }
  std::vector<NamedChar> out;
  for (const auto& e : entries) {
    std::vector<FieldElement> values;
    if (e.values.size() != group->generators().size()) {
      throw std::invalid_argument("basis entry " + e.name + " does not match the generators of (Z/" + std::to_string(N) + ")^x");
    }
    for (std::size_t i = 0; i < e.values.size(); ++i) {
      auto [gen, v] = e.values[i];
      if (gen != group->generators()[i]) {
        throw std::invalid_argument("basis entry " + e.name + " uses generator " + std::to_string(gen) + ", expected " +
                                    std::to_string(group->generators()[i]));
      }
      const std::uint32_t vt = reduce_signed(v, e.p);
      if (F.p() == e.p) {
        values.push_back(F.from_fp(vt));
        continue;
      }
      const std::uint64_t o = multiplicative_order(vt, e.p);
      const auto Ft = ExtField::make(PrimeModulus(e.p), 1);
      const std::uint32_t zt = least_primitive_root_of_unity(Ft, o)[0];
      std::uint64_t j = 0;
      for (std::uint32_t acc = 1 % e.p; acc != vt; acc = mul_mod(acc, zt, e.p)) ++j;
      values.push_back(F.pow(least_primitive_root_of_unity(F, o), j));
    }
    out.push_back({e.name, DirichletChar(group, F, std::move(values))});
  }
  return out;
}

CharacterGroup::CharacterGroup(std::uint64_t N, const ExtField& F, const BasisTable& table)
    : N_(N), field_(F), basis_(basis_chars(N, F, table)) {
  std::vector<std::uint64_t> orders;
  for (const auto& b : basis_) orders.push_back(b.chi.order());
  std::vector<std::uint64_t> e(basis_.size(), 0);
  for (;;) {
    DirichletChar chi = DirichletChar::trivial(N, F);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) chi = chi.mul(basis_[i].chi.pow(static_cast<std::int64_t>(e[i])));
    }
    elements_.push_back(std::move(chi));
    exponents_.push_back(e);
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == orders[i]) e[i++] = 0;
    if (i == e.size()) break;
  }
  if (elements_.size() != unit_group(N)->size()) {
    throw std::invalid_argument("bundled characters for modulus " + std::to_string(N) + " do not form a basis");
  }
}

std::size_t CharacterGroup::index_of(const DirichletChar& chi) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == chi) return i;
  }
  throw std::invalid_argument("character " + chi.serialize() + " is not a character modulo " + std::to_string(N_));
}

std::string CharacterGroup::name(const DirichletChar& chi) const {
  const auto& e = exponents_[index_of(chi.modulus() == N_ ? chi : chi.extend(N_))];
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!out.empty()) out += '*';
    out += basis_[i].name;
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

DirichletChar CharacterGroup::parse_name(std::string_view text) const {
  if (text == "1") return DirichletChar::trivial(N_, field_);
  if (text.substr(0, 4) == "chi[") {
    auto chi = DirichletChar::parse(text, field_);
    return chi.modulus() == N_ ? chi : chi.extend(N_);
  }
  DirichletChar acc = DirichletChar::trivial(N_, field_);
  std::size_t start = 0;
  while (start <= text.size()) {
    auto star = text.find('*', start);
    std::string_view tok = text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
    std::int64_t e = 1;
    auto caret = tok.find('^');
    std::string_view nm = tok.substr(0, caret);
    if (caret != std::string_view::npos) {
      try {
        e = std::stoll(std::string(tok.substr(caret + 1)));
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed character exponent in '" + std::string(text) + "'");
      }
    }
    auto it = std::find_if(basis_.begin(), basis_.end(), [&](const NamedChar& b) { return b.name == nm; });
    if (it == basis_.end()) {
      throw std::invalid_argument("unknown character '" + std::string(nm) + "' for modulus " + std::to_string(N_));
    }
    acc = acc.mul(it->chi.pow(e));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return acc;
}

}  // namespace hgf
