#include "hgf/galois_reps.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace hgf {

namespace {

FieldElement ell_power(const ExtField& F, std::uint32_t ell, std::uint64_t e) {
  return F.pow(F.from_int(ell), e);
}

void require_good_prime(const ExtField& F, std::uint64_t N, std::uint32_t ell) {
  if (!is_prime(ell) || ell == F.p() || N % ell == 0) {
    throw std::invalid_argument("T(" + std::to_string(ell) + ") is not a good prime for level " + std::to_string(N) +
                                " and characteristic " + std::to_string(F.p()));
  }
}

bool is_trivial_twist(const Constituent& c) { return c.chi.is_trivial(); }

}  // namespace

GaloisRep::GaloisRep(std::vector<Constituent> parts, unsigned g, DirichletChar eta)
    : parts_(std::move(parts)), g_(g), eta_(std::move(eta)) {
  unsigned dim = 0, forms = 0;
  for (const auto& c : parts_) {
    dim += c.dim();
    if (c.form) {
      ++forms;
      if (eta_.modulus() % c.form->level != 0) throw std::invalid_argument("newform level does not divide N");
      if (c.form->weight < 2 || c.form->weight > g_ + 4) throw std::invalid_argument("newform weight outside 2..g+4");
    }
    if (c.w > g_ + 3) throw std::invalid_argument("cyclotomic exponent outside 0..g+3");
    if (c.chi.modulus() != eta_.modulus() || !(c.chi.field() == eta_.field())) {
      throw std::invalid_argument("constituent character lives in a different context");
    }
  }
  if (dim != 4) throw std::invalid_argument("constituent dimensions must sum to 4");
  if (forms > 1) throw std::invalid_argument("at most one newform constituent");
}

const Constituent* GaloisRep::newform_part() const {
  for (const auto& c : parts_)
    if (c.form) return &c;
  return nullptr;
}

poly::Poly frob_charpoly(const Constituent& c, std::uint32_t ell) {
  const ExtField& F = c.chi.field();
  require_good_prime(F, c.chi.modulus(), ell);
  // alpha = chi(l) l^w
  const FieldElement alpha = F.mul(c.chi.eval(ell), ell_power(F, ell, c.w));
  if (!c.form) return {F.one(), F.neg(alpha)};
  auto it = c.form->ap.find(ell);
  if (it == c.form->ap.end()) throw std::invalid_argument("no a_" + std::to_string(ell) + " for " + c.form->label);
  const FieldElement det = F.mul(F.mul(F.mul(alpha, alpha), c.form->nebentype.eval(ell)), ell_power(F, ell, c.form->weight - 1));
  return {F.one(), F.neg(F.mul(alpha, it->second)), det};
}

poly::Poly rep_charpoly(const GaloisRep& rho, std::uint32_t ell) {
  const ExtField& F = rho.field();
  poly::Poly out{F.one()};
  for (const auto& c : rho.parts()) out = poly::mul(F, out, frob_charpoly(c, ell));
  out.resize(5, F.zero());
  return out;
}

std::array<FieldElement, 5> hecke_from_rep(const GaloisRep& rho, std::uint32_t ell) {
  const ExtField& F = rho.field();
  poly::Poly e = rep_charpoly(rho, ell);
  std::array<FieldElement, 5> a;
  for (unsigned k = 0; k <= 4; ++k) {
    FieldElement v = F.mul(e[k], F.inv(ell_power(F, ell, k * (k - 1) / 2)));
    a[k] = k % 2 ? F.neg(v) : v;
  }
  return a;
}

std::vector<int> hodge_tate(const GaloisRep& rho) {
  std::vector<int> out;
  for (const auto& c : rho.parts()) {
    out.push_back(static_cast<int>(c.w));
    if (c.form) out.push_back(static_cast<int>(c.w + c.form->weight - 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ht_check(const GaloisRep& rho) {
  const int g = static_cast<int>(rho.g());
  return hodge_tate(rho) == std::vector<int>{0, 1, 2, g + 3};
}

std::vector<int> oddness(const GaloisRep& rho) {
  std::vector<int> out;
  for (const auto& c : rho.parts()) {
    int t = c.chi.parity() == Parity::Odd ? -1 : 1;
    if (c.w % 2) t = -t;
    out.push_back(t);
    if (c.form) out.push_back(-t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool odd_check(const GaloisRep& rho) { return oddness(rho) == std::vector<int>{-1, -1, 1, 1}; }

bool det_check(const GaloisRep& rho, std::uint32_t ell) {
  const ExtField& F = rho.field();
  return rep_charpoly(rho, ell)[4] == F.mul(rho.eta().eval(ell), ell_power(F, ell, rho.g() + 6));
}

const char* to_string(PatternType t) {
  switch (t) {
    case PatternType::Type1: return "type1";
    case PatternType::Type2: return "type2";
    case PatternType::Type3: return "type3";
    case PatternType::Type4: return "type4";
    case PatternType::Type5: return "type5";
    case PatternType::Other: break;
  }
  return "other";
}

PatternType classify_pattern(const GaloisRep& rho) {
  const unsigned g = rho.g();
  std::vector<const Constituent*> chars;
  const Constituent* form = nullptr;
  for (const auto& c : rho.parts()) {
    if (c.form) form = &c;
    else chars.push_back(&c);
  }
  std::sort(chars.begin(), chars.end(), [](auto* a, auto* b) { return a->w < b->w; });
  auto ws = [&] {
    std::vector<unsigned> out;
    for (auto* c : chars) out.push_back(c->w);
    return out;
  }();
  auto trivial = [](const Constituent* c) { return is_trivial_twist(*c); };
  if (!form) {
    if (ws != std::vector<unsigned>{0, 1, 2, g + 3} || !trivial(chars[1])) return PatternType::Other;
    if (trivial(chars[0]) == trivial(chars[2])) return PatternType::Other;
    return trivial(chars[3]) ? PatternType::Type1 : PatternType::Type2;
  }
  if (!trivial(form)) return PatternType::Other;
  const unsigned k = form->form->weight;
  if (form->w == 2 && k == g + 2 && ws == std::vector<unsigned>{0, 1} && trivial(chars[0]) && trivial(chars[1])) {
    return PatternType::Type3;
  }
  if (form->w == 0 && k == 3 && ws == std::vector<unsigned>{1, g + 3} && trivial(chars[0]) && trivial(chars[1])) {
    return PatternType::Type4;
  }
  if (form->w == 1 && k == g + 3 && ws == std::vector<unsigned>{0, 2} && trivial(chars[0]) != trivial(chars[1])) {
    return PatternType::Type5;
  }
  return PatternType::Other;
}

std::string RepSpec::format() const {
  std::string out;
  for (const auto& c : parts) {
    if (!out.empty()) out += " + ";
    if (c.chi != "1") out += c.chi + "*";
    out += "e^" + std::to_string(c.w);
    if (!c.form.empty()) out += "*s[" + c.form + "]";
  }
  return out;
}

RepSpec RepSpec::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("bad representation '" + std::string(text) + "': " + why);
  };
  RepSpec spec;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(pos, end - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (part.empty()) throw fail("empty summand");
    ConstituentSpec c;
    std::size_t e = part.find("e^");
    if (e == std::string_view::npos) throw fail("summand without e^w");
    if (e > 0) {
      if (part[e - 1] != '*') throw fail("expected '*' before e^w");
      c.chi = std::string(part.substr(0, e - 1));
      if (c.chi.empty()) throw fail("empty character");
    }
    std::string_view rest = part.substr(e + 2);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), c.w);
    if (ec != std::errc() || ptr == rest.data()) throw fail("bad exponent");
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    if (!rest.empty()) {
      if (rest.substr(0, 3) != "*s[" || rest.back() != ']') throw fail("expected *s[label]");
      c.form = std::string(rest.substr(3, rest.size() - 4));
      if (c.form.empty()) throw fail("empty newform label");
    }
    spec.parts.push_back(std::move(c));
    pos = end + 1;
  }
  return spec;
}

RepSpec describe(const GaloisRep& rho, const CharacterGroup& chars) {
  std::vector<const Constituent*> order;
  for (const auto& c : rho.parts()) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    if ((a->form != nullptr) != (b->form != nullptr)) return b->form != nullptr;
    return a->w < b->w;
  });
  RepSpec spec;
  for (auto* c : order) spec.parts.push_back({chars.name(c->chi), c->w, c->form ? c->form->label : std::string()});
  return spec;
}

}  // namespace hgf
