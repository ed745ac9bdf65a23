#include "hgf/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "hgf/kernels.hpp"
#include "hgf/modarith.hpp"

namespace hgf::fp {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly from_signed(const std::vector<std::int64_t>& coeffs, std::uint32_t p) {
  Poly out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = reduce_signed(coeffs[i], p);
  trim(out);
  return out;
}

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = add_mod(out[i], b[i], p);
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = sub_mod(out[i], b[i], p);
  trim(out);
  return out;
}

Poly scale(const Poly& a, std::uint32_t c, std::uint32_t p) {
  if (c == 0) return {};
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul_mod(a[i], c, p);
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i]) kernels::axpy(out.data() + i, b.data(), b.size(), a[i], p);
  }
  trim(out);
  return out;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint32_t p) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly r = a, q(a.size() - b.size() + 1, 0);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    std::uint32_t c = mul_mod(r[i], lead_inv, p);
    q[i - db] = c;
    if (c) kernels::axpy(r.data() + (i - db), b.data(), db, p - c, p);
    r[i] = 0;
  }
  trim(r);
  trim(q);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, std::uint32_t p) { return divrem(a, b, p).second; }

Poly monic(const Poly& a, std::uint32_t p) {
  if (a.empty()) return a;
  return scale(a, inv_mod(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly derivative(const Poly& a, std::uint32_t p) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mul_mod(a[i], static_cast<std::uint32_t>(i % p), p);
  trim(out);
  return out;
}

std::uint32_t eval(const Poly& a, std::uint32_t x, std::uint32_t p) {
  std::uint32_t acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, p), a[i], p);
  return acc;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  return rem(mul(a, b, p), f, p);
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly base = rem(a, f, p), acc = rem(Poly{1}, f, p);
  while (e) {
    if (e & 1) acc = mulmod(acc, base, f, p);
    e >>= 1;
    if (e) base = mulmod(base, base, f, p);
  }
  return acc;
}

Poly invmod(const Poly& a, const Poly& f, std::uint32_t p) {
  Poly r0 = f, r1 = rem(a, f, p), s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, p);
    Poly s = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw std::domain_error("polynomial not invertible modulo f");
  return scale(s0, inv_mod(r0[0], p), p);
}

std::vector<Poly> frobenius_columns(const Poly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  std::vector<Poly> cols(n);
  Poly xp = powmod(Poly{0, 1}, p, f, p);
  Poly cur = rem(Poly{1}, f, p);
  for (std::size_t j = 0; j < n; ++j) {
    cols[j] = cur;
    cols[j].resize(n, 0);
    cur = mulmod(cur, xp, f, p);
  }
  return cols;
}

Poly apply_columns(const std::vector<Poly>& cols, const Poly& h, std::size_t n, std::uint32_t p) {
  Poly out(n, 0);
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (h[j]) kernels::axpy(out.data(), cols[j].data(), n, h[j], p);
  }
  trim(out);
  return out;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int d = degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  const auto cols = frobenius_columns(f, p);
  const Poly x{0, 1};
  Poly h = rem(x, f, p);
  for (int i = 1; i <= d / 2; ++i) {
    h = apply_columns(cols, h, static_cast<std::size_t>(d), p);
    if (degree(gcd(f, sub(h, x, p), p)) > 0) return false;
  }
  return true;
}

namespace {

// f monic squarefree; returns (product of irreducible factors of degree d, d).
std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f, std::uint32_t p) {
  std::vector<std::pair<Poly, unsigned>> out;
  const Poly x{0, 1};
  Poly h = rem(x, f, p);
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(degree(f)); ++d) {
    h = powmod(h, p, f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = divrem(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, static_cast<unsigned>(degree(f)));
  return out;
}

void equal_degree(const Poly& f, unsigned d, std::uint32_t p, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
  const int n = degree(f);
  if (n == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  // (p^d - 1) / 2 = (1 + p + ... + p^(d-1)) * (p - 1) / 2
  for (;;) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) <= 0) continue;
    Poly norm = a, cur = a;
    for (unsigned i = 1; i < d; ++i) {
      cur = powmod(cur, p, f, p);
      norm = mulmod(norm, cur, f, p);
    }
    Poly b = powmod(norm, (p - 1) / 2, f, p);
    Poly g = gcd(f, sub(b, Poly{1}, p), p);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divrem(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> factor(const Poly& f, std::uint32_t p) {
  if (degree(f) < 1) throw std::invalid_argument("factor: polynomial must be nonconstant");
  if (static_cast<std::uint64_t>(degree(f)) >= p) throw std::invalid_argument("factor: degree must be below p");
  std::vector<Factor> out;
  std::mt19937_64 rng(0x5eed);
  // Yun's squarefree decomposition; valid because deg f < p.
  Poly a = monic(f, p);
  Poly b = derivative(a, p);
  Poly c = gcd(a, b, p);
  Poly w = divrem(a, c, p).first;
  unsigned mult = 1;
  while (degree(w) > 0) {
    Poly y = gcd(w, c, p);
    Poly z = divrem(w, y, p).first;
    if (degree(z) > 0) {
      for (auto& [part, d] : distinct_degree(z, p)) {
        std::vector<Poly> pieces;
        equal_degree(part, d, p, rng, pieces);
        for (auto& piece : pieces) out.push_back({monic(piece, p), mult});
      }
    }
    w = y;
    c = divrem(c, y, p).first;
    ++mult;
  }
  std::sort(out.begin(), out.end(), [](const Factor& l, const Factor& r) {
    if (l.poly.size() != r.poly.size()) return l.poly.size() < r.poly.size();
    return l.poly < r.poly;
  });
  return out;
}

std::vector<unsigned> factor_degrees(const Poly& f, std::uint32_t p) {
  std::vector<unsigned> out;
  for (const auto& fac : factor(f, p)) {
    for (unsigned i = 0; i < fac.multiplicity; ++i) out.push_back(static_cast<unsigned>(degree(fac.poly)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hgf::fp
