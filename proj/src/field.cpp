#include "hgf/field.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hgf/kernels.hpp"

namespace hgf {

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + n_, [](std::uint32_t v) { return v == 0; });
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.n_ == b.n_ && std::equal(a.c_.begin(), a.c_.begin() + a.n_, b.c_.begin());
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (unsigned i = 0; i < a.n_; ++i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
  }
  return std::strong_ordering::equal;
}

fp::Poly canonical_modulus(std::uint32_t p, unsigned r) {
  if (r == 0) throw std::invalid_argument("extension degree must be positive");
  if (r == 1) return {0, 1};
  fp::Poly f(r + 1, 0);
  f[r] = 1;
  f[0] = 1;
  for (;;) {
    if (fp::is_irreducible(f, p)) return f;
    // Odometer with c_{r-1} fastest so candidates come out in increasing (c0, ..., c_{r-1}).
    unsigned i = r;
    while (i-- > 0) {
      if (++f[i] < p) break;
      f[i] = 0;
    }
    if (f[0] == 0) throw std::logic_error("no irreducible polynomial found");
  }
}

ExtField ExtField::build(std::uint32_t p, fp::Poly modulus) {
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->r = static_cast<unsigned>(fp::degree(modulus));
  const unsigned r = impl->r;
  impl->modulus = modulus;
  for (unsigned i = 0; i + 1 < r; ++i) {
    fp::Poly mono(r + i + 1, 0);
    mono[r + i] = 1;
    fp::Poly red = fp::rem(mono, modulus, p);
    red.resize(r, 0);
    impl->fold.push_back(std::move(red));
  }
  impl->frob_cols = fp::frobenius_columns(modulus, p);
  return ExtField(std::move(impl));
}

ExtField ExtField::make(PrimeModulus p, unsigned r) {
  if (r == 0 || r > FieldElement::kCapacity) {
    throw std::invalid_argument("extension degree must be in [1, " + std::to_string(FieldElement::kCapacity) + "]");
  }
  return build(p.value(), canonical_modulus(p.value(), r));
}

ExtField ExtField::with_modulus(PrimeModulus p, const fp::Poly& modulus) {
  const int r = fp::degree(modulus);
  if (r < 1 || r > static_cast<int>(FieldElement::kCapacity)) {
    throw std::invalid_argument("modulus degree out of range");
  }
  for (auto c : modulus) {
    if (c >= p.value()) throw std::invalid_argument("modulus coefficient not reduced");
  }
  if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
  if (!fp::is_irreducible(modulus, p.value())) throw std::invalid_argument("modulus is not irreducible");
  return build(p.value(), modulus);
}

namespace {

std::uint64_t parse_uint(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument(std::string("malformed ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

ExtField ExtField::parse(std::string_view text) {
  constexpr std::string_view head = "GF(";
  auto close = text.find("):modulus=");
  const bool short_form = close == std::string_view::npos && !text.empty() && text.back() == ')';
  if (short_form) close = text.size() - 1;
  if (text.substr(0, head.size()) != head || close == std::string_view::npos) {
    throw std::invalid_argument("malformed field descriptor '" + std::string(text) + "'");
  }
  std::string_view pr = text.substr(head.size(), close - head.size());
  const auto caret = pr.find('^');
  if (caret == std::string_view::npos && !short_form) throw std::invalid_argument("field descriptor lacks degree");
  PrimeModulus p(parse_uint(pr.substr(0, caret), "characteristic"));
  const auto r = caret == std::string_view::npos ? 1 : parse_uint(pr.substr(caret + 1), "degree");
  // GF(p) and GF(p^r) name the canonical modulus.
  if (short_form) return make(p, static_cast<unsigned>(r));
  fp::Poly mod;
  for (auto part : split(text.substr(close + 10), ',')) {
    mod.push_back(static_cast<std::uint32_t>(parse_uint(part, "modulus coefficient")));
  }
  if (mod.size() != r + 1) throw std::invalid_argument("modulus degree does not match descriptor");
  return with_modulus(p, mod);
}

std::string ExtField::descriptor() const {
  std::ostringstream os;
  os << "GF(" << p() << '^' << degree() << "):modulus=";
  for (std::size_t i = 0; i < modulus().size(); ++i) os << (i ? "," : "") << modulus()[i];
  return os.str();
}

std::string ExtField::short_name() const {
  return "GF(" + std::to_string(p()) + (degree() > 1 ? "^" + std::to_string(degree()) : "") + ")";
}

FieldElement ExtField::blank() const {
  FieldElement e;
  e.n_ = static_cast<std::uint8_t>(degree());
  return e;
}

FieldElement ExtField::zero() const { return blank(); }

FieldElement ExtField::one() const { return from_fp(1); }

FieldElement ExtField::from_fp(std::uint32_t v) const {
  FieldElement e = blank();
  e.c_[0] = v % p();
  return e;
}

FieldElement ExtField::from_int(std::int64_t v) const { return from_fp(reduce_signed(v, p())); }

FieldElement ExtField::from_poly(const fp::Poly& coeffs) const {
  fp::Poly red = coeffs.size() > degree() ? fp::rem(coeffs, modulus(), p()) : coeffs;
  FieldElement e = blank();
  for (std::size_t i = 0; i < red.size(); ++i) e.c_[i] = red[i] % p();
  return e;
}

FieldElement ExtField::generator() const { return from_poly({0, 1}); }

fp::Poly ExtField::to_poly(const FieldElement& a) const {
  fp::Poly out(a.data(), a.data() + a.size());
  fp::trim(out);
  return out;
}

FieldElement ExtField::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement e = blank();
  for (unsigned i = 0; i < degree(); ++i) e.c_[i] = add_mod(a.c_[i], b.c_[i], p());
  return e;
}

FieldElement ExtField::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement e = blank();
  for (unsigned i = 0; i < degree(); ++i) e.c_[i] = sub_mod(a.c_[i], b.c_[i], p());
  return e;
}

FieldElement ExtField::neg(const FieldElement& a) const {
  FieldElement e = blank();
  for (unsigned i = 0; i < degree(); ++i) e.c_[i] = neg_mod(a.c_[i], p());
  return e;
}

FieldElement ExtField::scale(const FieldElement& a, std::uint32_t c) const {
  FieldElement e = blank();
  for (unsigned i = 0; i < degree(); ++i) e.c_[i] = mul_mod(a.c_[i], c, p());
  return e;
}

FieldElement ExtField::mul(const FieldElement& a, const FieldElement& b) const {
  const unsigned r = degree();
  const std::uint32_t q = p();
  FieldElement e = blank();
  if (r == 1) {
    e.c_[0] = mul_mod(a.c_[0], b.c_[0], q);
    return e;
  }
  std::array<std::uint32_t, FieldElement::kCapacity> rb;
  for (unsigned j = 0; j < r; ++j) rb[j] = b.c_[r - 1 - j];
  std::array<std::uint32_t, 2 * FieldElement::kCapacity> prod;
  for (unsigned k = 0; k + 1 < 2 * r; ++k) {
    const unsigned lo = k >= r ? k - r + 1 : 0;
    const unsigned hi = std::min(k, r - 1);
    prod[k] = kernels::dot(a.c_.data() + lo, rb.data() + (r - 1 - k + lo), hi - lo + 1, q);
  }
  std::copy(prod.begin(), prod.begin() + r, e.c_.begin());
  for (unsigned i = 0; i + 1 < r; ++i) {
    if (prod[r + i]) kernels::axpy(e.c_.data(), impl_->fold[i].data(), r, prod[r + i], q);
  }
  return e;
}

FieldElement ExtField::inv(const FieldElement& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero in " + short_name());
  if (degree() == 1) return from_fp(inv_mod(a.c_[0], p()));
  return from_poly(fp::invmod(to_poly(a), modulus(), p()));
}

FieldElement ExtField::div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

FieldElement ExtField::pow(const FieldElement& a, std::uint64_t e) const {
  FieldElement base = a, acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

FieldElement ExtField::pow_signed(const FieldElement& a, std::int64_t e) const {
  if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
  return pow(inv(a), static_cast<std::uint64_t>(-e));
}

FieldElement ExtField::frobenius(const FieldElement& a, unsigned times) const {
  const unsigned r = degree();
  times %= r;
  FieldElement cur = a;
  for (unsigned t = 0; t < times; ++t) {
    FieldElement next = blank();
    for (unsigned j = 0; j < r; ++j) {
      if (cur.c_[j]) kernels::axpy(next.c_.data(), impl_->frob_cols[j].data(), r, cur.c_[j], p());
    }
    cur = next;
  }
  return cur;
}

bool ExtField::in_prime_field(const FieldElement& a) const {
  for (unsigned i = 1; i < degree(); ++i) {
    if (a.c_[i]) return false;
  }
  return true;
}

std::uint64_t ExtField::order_dividing(const FieldElement& a, std::uint64_t n) const {
  if (pow(a, n) != one()) throw std::domain_error("element order does not divide " + std::to_string(n));
  for (std::uint64_t d : divisors(n)) {
    if (pow(a, d) == one()) return d;
  }
  return n;
}

bool ExtField::has_roots_of_unity(std::uint64_t n) const {
  // n divides p^r - 1 iff the order of p modulo n divides r.
  if (n == 0) return false;
  if (n == 1) return true;
  if (p() % n == 0 || std::gcd<std::uint64_t, std::uint64_t>(p(), n) != 1) return false;
  return degree() % multiplicative_order(p() % n, n) == 0;
}

FieldElement ExtField::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> coeff(0, p() - 1);
  FieldElement e = blank();
  for (unsigned i = 0; i < degree(); ++i) e.c_[i] = coeff(rng);
  return e;
}

std::string ExtField::format(const FieldElement& a) const {
  std::string out;
  for (unsigned i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a.c_[i]);
  }
  return out;
}

FieldElement ExtField::parse_element(std::string_view text) const {
  auto parts = split(text, ',');
  if (parts.size() != degree()) {
    throw std::invalid_argument("element '" + std::string(text) + "' needs " + std::to_string(degree()) + " coefficients");
  }
  FieldElement e = blank();
  for (unsigned i = 0; i < degree(); ++i) {
    auto v = parse_uint(parts[i], "coefficient");
    if (v >= p()) throw std::invalid_argument("coefficient " + std::to_string(v) + " not reduced mod " + std::to_string(p()));
    e.c_[i] = static_cast<std::uint32_t>(v);
  }
  return e;
}

bool operator==(const ExtField& a, const ExtField& b) {
  return a.impl_ == b.impl_ || (a.p() == b.p() && a.modulus() == b.modulus());
}

}  // namespace hgf
