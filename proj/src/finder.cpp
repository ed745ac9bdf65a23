#include "hgf/finder.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hgf/errors.hpp"

namespace hgf {

const char* const kAttachmentCaveat =
    "Only the supplied operators were compared; another representation agreeing on all of them cannot be ruled out.";

namespace {

std::vector<unsigned> ht_target(unsigned g) { return {0, 1, 2, g + 3}; }

// Weights k for which some pair of Hodge-Tate numbers is [w, w + k - 1].
std::set<unsigned> allowed_weights(unsigned g) {
  std::set<unsigned> out;
  auto t = ht_target(g);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      unsigned k = t[j] - t[i] + 1;
      if (k >= 2 && k <= g + 4) out.insert(k);
    }
  return out;
}

using Poly5 = std::array<FieldElement, 5>;

// p *= (1 - a X), p of degree < 4
void mul_linear(const ExtField& F, Poly5& p, unsigned deg, const FieldElement& a) {
  for (unsigned i = deg + 1; i >= 1; --i) p[i] = F.sub(p[i], F.mul(a, p[i - 1]));
}

// p *= (1 + b X + c X^2)
void mul_quadratic(const ExtField& F, Poly5& p, unsigned deg, const FieldElement& b, const FieldElement& c) {
  for (unsigned i = deg + 2; i >= 1; --i) {
    FieldElement v = F.add(p[i], F.mul(b, p[i - 1]));
    if (i >= 2) v = F.add(v, F.mul(c, p[i - 2]));
    p[i] = v;
  }
}

}  // namespace

std::vector<std::shared_ptr<const ReducedNewform>> reduce_for_context(const NewformStore& store, std::uint64_t N, unsigned g,
                                                                      const ExtField& F, std::vector<std::string>* skipped) {
  std::vector<std::shared_ptr<const ReducedNewform>> out;
  const auto weights = allowed_weights(g);
  for (const auto& rec : store.records) {
    if (N % rec.level != 0 || !weights.count(rec.weight)) continue;
    try {
      for (auto& r : reduce(rec, F)) out.push_back(std::make_shared<const ReducedNewform>(std::move(r)));
    } catch (const FieldTooSmall&) {
      if (skipped) skipped->push_back(rec.label);
    }
  }
  return out;
}

FinderContext::FinderContext(unsigned g, CharacterGroup chars, DirichletChar eta,
                             std::vector<std::shared_ptr<const ReducedNewform>> forms, std::uint32_t prime_bound)
    : g_(g), chars_(std::move(chars)), eta_(std::move(eta)), forms_(std::move(forms)) {
  const ExtField& F = field();
  const std::uint64_t N = level();
  if (eta_.modulus() != N || !(eta_.field() == F)) throw std::invalid_argument("nebentype does not match the character group");
  for (std::uint32_t l = 2; l <= prime_bound; ++l) {
    if (is_prime(l) && l != F.p() && N % l != 0) primes_.push_back(l);
  }
  const auto& elems = chars_.elements();
  chi_at_.resize(elems.size());
  for (std::size_t c = 0; c < elems.size(); ++c) {
    for (auto l : primes_) chi_at_[c].push_back(elems[c].eval(l));
    chi_odd_.push_back(elems[c].parity() == Parity::Odd);
  }
  for (auto l : primes_) {
    std::vector<FieldElement> pw{F.one()};
    for (unsigned w = 1; w <= g_ + 6; ++w) pw.push_back(F.mul(pw.back(), F.from_int(l)));
    ell_pow_.push_back(std::move(pw));
  }
  for (const auto& f : forms_) {
    if (!(f->nebentype.field() == F)) throw std::invalid_argument(f->label + " was reduced in a different field");
    std::vector<FieldElement> ap, det;
    for (auto l : primes_) {
      auto it = f->ap.find(l);
      if (it == f->ap.end()) throw std::invalid_argument("no a_" + std::to_string(l) + " for " + f->label);
      ap.push_back(it->second);
      det.push_back(F.mul(f->nebentype.eval(static_cast<std::int64_t>(l)), F.pow(F.from_int(l), f->weight - 1)));
    }
    form_ap_.push_back(std::move(ap));
    form_det_.push_back(std::move(det));
  }
  const std::size_t n = elems.size();
  mul_table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul_table_[a * n + b] = static_cast<std::uint32_t>(chars_.index_of(elems[a].mul(elems[b])));
  eta_index_ = static_cast<std::uint32_t>(chars_.index_of(eta_));
  for (const auto& f : forms_) form_neb_.push_back(static_cast<std::uint32_t>(chars_.index_of(f->nebentype.extend(N))));
  const std::size_t nw = g_ + 4;
  alpha_.resize(elems.size() * primes_.size() * nw);
  for (std::size_t c = 0; c < elems.size(); ++c)
    for (std::size_t li = 0; li < primes_.size(); ++li)
      for (unsigned w = 0; w < nw; ++w) alpha_[(c * primes_.size() + li) * nw + w] = F.mul(chi_at_[c][li], ell_pow_[li][w]);
}

const FieldElement& FinderContext::alpha(std::uint32_t chi, std::size_t li, unsigned w) const {
  return alpha_[(chi * primes_.size() + li) * (g_ + 4) + w];
}

FieldElement FinderContext::trace(const Candidate& c, std::uint32_t ell) const {
  const ExtField& F = field();
  const std::size_t li = prime_index(ell);
  FieldElement t = F.zero();
  for (unsigned i = 0; i < c.size; ++i) {
    const auto& part = c.parts[i];
    const FieldElement& a = alpha(part.chi, li, part.w);
    t = F.add(t, part.form < 0 ? a : F.mul(a, form_ap_[static_cast<std::size_t>(part.form)][li]));
  }
  return t;
}

std::size_t FinderContext::prime_index(std::uint32_t ell) const {
  auto it = std::find(primes_.begin(), primes_.end(), ell);
  if (it == primes_.end()) {
    throw std::invalid_argument("T(" + std::to_string(ell) + ") is not a usable prime: it divides pN or exceeds the newform data bound");
  }
  return static_cast<std::size_t>(it - primes_.begin());
}

std::array<FieldElement, 5> FinderContext::charpoly(const Candidate& c, std::uint32_t ell) const {
  const ExtField& F = field();
  const std::size_t li = prime_index(ell);
  Poly5 p{F.one(), F.zero(), F.zero(), F.zero(), F.zero()};
  unsigned deg = 0;
  for (unsigned i = 0; i < c.size; ++i) {
    const auto& part = c.parts[i];
    const FieldElement& a = alpha(part.chi, li, part.w);
    if (part.form < 0) {
      mul_linear(F, p, deg, a);
      deg += 1;
    } else {
      const auto f = static_cast<std::size_t>(part.form);
      const FieldElement b = F.neg(F.mul(a, form_ap_[f][li]));
      const FieldElement cc = F.mul(F.mul(a, a), form_det_[f][li]);
      mul_quadratic(F, p, deg, b, cc);
      deg += 2;
    }
  }
  return p;
}

std::vector<Candidate> FinderContext::enumerate_candidates(const FinderOptions& options) const {
  const auto T = ht_target(g_);
  const std::size_t nchars = chars_.elements().size();
  auto sign = [&](std::uint32_t chi, unsigned w) { return (chi_odd_[chi] ? -1 : 1) * (w % 2 ? -1 : 1); };
  // The powers of l always total g + 6, so det rho = eta eps^(g+6) reduces to a character identity.
  auto times = [&](std::uint32_t a, std::uint32_t b) { return mul_table_[a * nchars + b]; };
  const bool det = options.det_prefilter;

  std::vector<Candidate> out;
  Candidate c;
  // Four characters, one per Hodge-Tate number.
  c.size = 4;
  for (std::uint32_t a = 0; a < nchars; ++a)
    for (std::uint32_t b = 0; b < nchars; ++b)
      for (std::uint32_t d = 0; d < nchars; ++d)
        for (std::uint32_t e = 0; e < nchars; ++e) {
          const std::uint32_t ch[4] = {a, b, d, e};
          int odd = 0;
          for (int i = 0; i < 4; ++i) {
            c.parts[static_cast<std::size_t>(i)] = {ch[i], T[static_cast<std::size_t>(i)], -1};
            odd += sign(ch[i], T[static_cast<std::size_t>(i)]) < 0;
          }
          if (odd == 2 && (!det || times(times(a, b), times(d, e)) == eta_index_)) out.push_back(c);
        }
  // Two characters and a twisted newform occupying [w, w + k - 1].
  c.size = 3;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const unsigned k = T[j] - T[i] + 1;
      std::vector<unsigned> rest;
      for (std::size_t m = 0; m < 4; ++m)
        if (m != i && m != j) rest.push_back(T[m]);
      for (std::size_t f = 0; f < forms_.size(); ++f) {
        if (forms_[f]->weight != k) continue;
        for (std::uint32_t t = 0; t < nchars; ++t)
          for (std::uint32_t a = 0; a < nchars; ++a)
            for (std::uint32_t b = 0; b < nchars; ++b) {
              if (sign(a, rest[0]) == sign(b, rest[1])) continue;
              if (det && times(times(a, b), times(times(t, t), form_neb_[f])) != eta_index_) continue;
              c.parts[0] = {a, rest[0], -1};
              c.parts[1] = {b, rest[1], -1};
              c.parts[2] = {t, T[i], static_cast<std::int32_t>(f)};
              out.push_back(c);
            }
      }
    }
  return out;
}

GaloisRep FinderContext::instantiate(const Candidate& c) const {
  std::vector<Constituent> parts;
  for (unsigned i = 0; i < c.size; ++i) {
    const auto& part = c.parts[i];
    parts.push_back({chars_.elements()[part.chi], part.w,
                     part.form < 0 ? nullptr : forms_[static_cast<std::size_t>(part.form)]});
  }
  return GaloisRep(std::move(parts), g_, eta_);
}

std::string FinderContext::key(const Candidate& c) const {
  std::string out = describe(instantiate(c), chars_).format();
  for (unsigned i = 0; i < c.size; ++i) {
    if (c.parts[i].form >= 0) out += " @" + std::to_string(forms_[static_cast<std::size_t>(c.parts[i].form)]->root_index);
  }
  return out;
}

MatchReport match(const FinderContext& ctx, const std::vector<Candidate>& candidates, const HeckeData& data) {
  const ExtField& F = ctx.field();
  if (!(data.field == F)) throw std::invalid_argument("Hecke data lives in a different field");
  if (data.level != ctx.level()) throw std::invalid_argument("Hecke data has a different level");
  // Expected coefficients (-1)^k l^{k(k-1)/2} a(l,k), grouped by prime.
  std::map<std::uint32_t, std::vector<std::pair<unsigned, FieldElement>>> expected;
  for (const auto& [op, value] : data.values) {
    if (op.k > 4) throw std::invalid_argument("T(" + std::to_string(op.ell) + "," + std::to_string(op.k) + ") has k > 4");
    if (op.ell == F.p() || ctx.level() % op.ell == 0 || !is_prime(op.ell)) {
      throw std::invalid_argument(to_string(op) + " is not a good operator for p = " + std::to_string(F.p()) +
                                  " and N = " + std::to_string(ctx.level()));
    }
    FieldElement e = F.mul(value, F.pow(F.from_int(op.ell), op.k * (op.k - 1) / 2));
    if (op.k % 2) e = F.neg(e);
    expected[op.ell].emplace_back(op.k, e);
  }
  // The trace is a cheap screen before the full polynomial.
  std::vector<std::pair<std::uint32_t, FieldElement>> traces;
  for (const auto& [op, value] : data.values)
    if (op.k == 1) traces.emplace_back(op.ell, value);
  MatchReport report;
  for (const auto& c : candidates) {
    bool ok = true;
    for (const auto& [ell, a] : traces) {
      if (!(ctx.trace(c, ell) == a)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (const auto& [ell, want] : expected) {
      auto poly = ctx.charpoly(c, ell);
      for (const auto& [k, e] : want) {
        if (!(poly[k] == e)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) continue;
    Match m;
    m.candidate = c;
    m.rep = ctx.key(c);
    m.type = classify_pattern(ctx.instantiate(c));
    report.matches.push_back(std::move(m));
  }
  std::sort(report.matches.begin(), report.matches.end(), [](const Match& a, const Match& b) { return a.rep < b.rep; });
  std::map<std::string, std::size_t> classes;
  for (auto& m : report.matches) {
    std::string sig;
    for (auto ell : ctx.probe_primes()) {
      for (const auto& v : ctx.charpoly(m.candidate, ell)) sig += F.format(v) + ";";
    }
    auto it = classes.emplace(sig, classes.size()).first;
    m.twist_class = it->second;
  }
  report.twist_classes = classes.size();
  report.unique = report.twist_classes == 1;
  if (report.matches.empty()) report.warnings.push_back("no candidate matches the supplied eigenvalues");
  if (report.unique) report.caveat = kAttachmentCaveat;
  return report;
}

HeckeData synthesize(const FinderContext& ctx, const Candidate& c, const OperatorSet& ops) {
  const ExtField& F = ctx.field();
  HeckeData data{F, ctx.level(), ctx.g(), ctx.chars().name(ctx.eta()), {}};
  for (const auto& op : ops.ops()) {
    auto poly = ctx.charpoly(c, op.ell);
    FieldElement a = F.div(poly[op.k], F.pow(F.from_int(op.ell), op.k * (op.k - 1) / 2));
    data.values.emplace(op, op.k % 2 ? F.neg(a) : a);
  }
  return data;
}

unsigned galois_orbit_size(const ExtField& F, const Eigensystem& system, const DirichletChar& eta) {
  const auto step = static_cast<unsigned>(eta.galois_orbit().size());
  Eigensystem cur = system;
  unsigned n = 0;
  do {
    for (auto& [op, v] : cur) v = F.frobenius(v, step);
    ++n;
  } while (cur != system);
  return n;
}

}  // namespace hgf
