#include "hgf/poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hgf::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly lift(const ExtField& F, const fp::Poly& f) {
  Poly out;
  out.reserve(f.size());
  for (auto c : f) out.push_back(F.from_fp(c));
  trim(out);
  return out;
}

bool in_prime_field(const ExtField& F, const Poly& f) {
  return std::all_of(f.begin(), f.end(), [&](const FieldElement& c) { return F.in_prime_field(c); });
}

fp::Poly restrict_to_prime(const ExtField& F, const Poly& f) {
  fp::Poly out;
  for (const auto& c : f) {
    if (!F.in_prime_field(c)) throw std::invalid_argument("polynomial has coefficients outside F_p");
    out.push_back(c[0]);
  }
  fp::trim(out);
  return out;
}

Poly add(const ExtField& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = F.add(out[i], b[i]);
  trim(out);
  return out;
}

Poly sub(const ExtField& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = F.sub(out[i], b[i]);
  trim(out);
  return out;
}

Poly mul(const ExtField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    const bool scalar = F.in_prime_field(a[i]);
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = F.add(out[i + j], scalar ? F.scale(b[j], a[i][0]) : F.mul(a[i], b[j]));
    }
  }
  trim(out);
  return out;
}

Poly scale(const ExtField& F, const Poly& a, const FieldElement& c) {
  if (c.is_zero()) return {};
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], c);
  return out;
}

std::pair<Poly, Poly> divrem(const ExtField& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly r = a, q(a.size() - b.size() + 1, F.zero());
  const FieldElement lead_inv = F.inv(b.back());
  const bool b_monic = b.back() == F.one();
  const std::size_t db = b.size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].is_zero()) continue;
    FieldElement c = b_monic ? r[i] : F.mul(r[i], lead_inv);
    q[i - db] = c;
    for (std::size_t j = 0; j < db; ++j) {
      if (!b[j].is_zero()) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
    }
    r[i] = F.zero();
  }
  trim(r);
  trim(q);
  return {q, r};
}

Poly rem(const ExtField& F, const Poly& a, const Poly& b) { return divrem(F, a, b).second; }

Poly monic(const ExtField& F, const Poly& a) {
  if (a.empty() || a.back() == F.one()) return a;
  return scale(F, a, F.inv(a.back()));
}

Poly gcd(const ExtField& F, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

FieldElement eval(const ExtField& F, const Poly& a, const FieldElement& x) {
  FieldElement acc = F.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
  return acc;
}

namespace {

// Arithmetic in F[x]/(g) with a precomputed table x^(p*i) mod g, so that h -> h^p is a
// coefficientwise Frobenius followed by one matrix product.
class QuotientRing {
 public:
  QuotientRing(const ExtField& F, Poly g) : F_(F), g_(std::move(g)) {
    const std::size_t d = g_.size() - 1;
    prime_table_ = in_prime_field(F_, g_);
    if (prime_table_) {
      const auto cols = fp::frobenius_columns(restrict_to_prime(F_, g_), F_.p());
      for (const auto& c : cols) table_.push_back(lift(F_, c));
    } else {
      Poly xp = pow_plain(Poly{F_.zero(), F_.one()}, F_.p());
      Poly cur = rem(F_, Poly{F_.one()}, g_);
      for (std::size_t i = 0; i < d; ++i) {
        table_.push_back(cur);
        cur = mulmod(cur, xp);
      }
    }
  }

  const Poly& modulus() const { return g_; }

  Poly mulmod(const Poly& a, const Poly& b) const { return rem(F_, mul(F_, a, b), g_); }

  Poly pow_plain(const Poly& a, std::uint64_t e) const {
    Poly base = rem(F_, a, g_), acc = rem(F_, Poly{F_.one()}, g_);
    while (e) {
      if (e & 1) acc = mulmod(acc, base);
      e >>= 1;
      if (e) base = mulmod(base, base);
    }
    return acc;
  }

  Poly frobenius(const Poly& h, unsigned times = 1) const {
    Poly cur = h;
    const std::size_t d = g_.size() - 1;
    for (unsigned t = 0; t < times; ++t) {
      Poly next(d, F_.zero());
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (cur[i].is_zero()) continue;
        const FieldElement c = F_.frobenius(cur[i]);
        const bool scalar = F_.in_prime_field(c);
        const Poly& col = table_[i];
        for (std::size_t j = 0; j < col.size(); ++j) {
          if (col[j].is_zero()) continue;
          FieldElement term = prime_table_ ? F_.scale(c, col[j][0]) : (scalar ? F_.scale(col[j], c[0]) : F_.mul(c, col[j]));
          next[j] = F_.add(next[j], term);
        }
      }
      trim(next);
      cur = std::move(next);
    }
    return cur;
  }

  // a^(1 + p + ... + p^(r-1)) by the Itoh-Tsujii chain.
  Poly norm_power(const Poly& a) const {
    const unsigned r = F_.degree();
    Poly acc = rem(F_, a, g_);
    unsigned k = 1;
    for (int bit = std::bit_width(r) - 2; bit >= 0; --bit) {
      acc = mulmod(acc, frobenius(acc, k));
      k *= 2;
      if ((r >> bit) & 1) {
        acc = mulmod(frobenius(acc), rem(F_, a, g_));
        ++k;
      }
    }
    return acc;
  }

  Poly half_power(const Poly& a) const { return pow_plain(norm_power(a), (F_.p() - 1) / 2); }

 private:
  const ExtField& F_;
  Poly g_;
  bool prime_table_ = false;
  std::vector<Poly> table_;
};

Poly random_poly(const ExtField& F, std::size_t n, std::mt19937_64& rng) {
  Poly a(n);
  for (auto& c : a) c = F.random(rng);
  trim(a);
  return a;
}

// Splits g, a monic divisor of ring.modulus() that is a product of distinct linear factors.
void split_linear(const QuotientRing& ring, const ExtField& F, const Poly& g, std::mt19937_64& rng,
                  std::vector<FieldElement>& out, bool first_only) {
  const int n = degree(g);
  if (n <= 0) return;
  if (n == 1) {
    out.push_back(F.neg(g[0]));
    return;
  }
  const Poly one{F.one()};
  const std::size_t width = ring.modulus().size() - 1;
  for (;;) {
    Poly a = random_poly(F, width, rng);
    if (degree(a) <= 0) continue;
    Poly b = rem(F, ring.half_power(a), g);
    Poly h = gcd(F, g, sub(F, b, one));
    if (degree(h) <= 0 || degree(h) >= n) continue;
    Poly other = divrem(F, g, h).first;
    if (first_only) {
      split_linear(ring, F, degree(h) <= degree(other) ? h : monic(F, other), rng, out, true);
    } else {
      split_linear(ring, F, h, rng, out, false);
      split_linear(ring, F, monic(F, other), rng, out, false);
    }
    return;
  }
}

unsigned multiplicity(const ExtField& F, Poly f, const FieldElement& a) {
  unsigned m = 0;
  const Poly lin{F.neg(a), F.one()};
  for (;;) {
    auto [q, r] = divrem(F, f, lin);
    if (!r.empty()) return m;
    ++m;
    f = std::move(q);
  }
}

}  // namespace

std::vector<FieldElement> roots_of_irreducible(const ExtField& F, const fp::Poly& u) {
  const int d = fp::degree(u);
  if (d < 1) throw std::invalid_argument("roots_of_irreducible: constant polynomial");
  if (F.degree() % static_cast<unsigned>(d) != 0) return {};
  const std::uint32_t p = F.p();
  std::vector<FieldElement> out;
  if (d == 1) {
    out.push_back(F.from_fp(neg_mod(mul_mod(u[0], inv_mod(u[1], p), p), p)));
    return out;
  }
  std::mt19937_64 rng(0xc0ffee + static_cast<unsigned>(d));
  Poly g = lift(F, fp::monic(u, p));
  QuotientRing ring(F, g);
  std::vector<FieldElement> first;
  split_linear(ring, F, g, rng, first, true);
  FieldElement a = first.front();
  for (int j = 0; j < d; ++j) {
    out.push_back(a);
    a = F.frobenius(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Root> roots_generic(const ExtField& F, const Poly& f_in) {
  if (f_in.empty()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Root> out;
  if (degree(f_in) == 0) return out;
  Poly f = monic(F, f_in);
  QuotientRing ring(F, f);
  Poly x{F.zero(), F.one()};
  Poly xq = ring.frobenius(rem(F, x, f), F.degree());
  Poly g = gcd(F, f, sub(F, xq, x));
  if (degree(g) <= 0) return out;
  std::mt19937_64 rng(0xfeed);
  std::vector<FieldElement> roots;
  QuotientRing gring(F, g);
  split_linear(gring, F, g, rng, roots, false);
  std::sort(roots.begin(), roots.end());
  for (const auto& a : roots) out.push_back({a, multiplicity(F, f, a)});
  return out;
}

std::vector<Root> roots_in_field(const ExtField& F, const Poly& f) {
  if (f.empty()) throw std::invalid_argument("roots of the zero polynomial");
  if (F.degree() == 1 || !in_prime_field(F, f)) return roots_generic(F, f);
  std::vector<Root> out;
  if (degree(f) == 0) return out;
  const fp::Poly g = restrict_to_prime(F, f);
  if (static_cast<std::uint64_t>(fp::degree(g)) >= F.p()) return roots_generic(F, f);
  for (const auto& fac : fp::factor(g, F.p())) {
    for (const auto& a : roots_of_irreducible(F, fac.poly)) out.push_back({a, fac.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
  return out;
}

}  // namespace hgf::poly
