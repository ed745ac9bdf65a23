#include "hgf/symg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hgf {

std::uint64_t symg_dimension(unsigned g) {
  const std::uint64_t n = g;
  return (n + 3) * (n + 2) * (n + 1) / 6;
}

MonomialBasis::MonomialBasis(unsigned g) : g_(g) {
  for (unsigned a = g + 1; a-- > 0;)
    for (unsigned b = g - a + 1; b-- > 0;)
      for (unsigned c = g - a - b + 1; c-- > 0;) exps_.push_back({a, b, c, g - a - b - c});
  const std::size_t w = g + 1;
  lookup_.assign(w * w * w, -1);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const auto& e = exps_[i];
    lookup_[(e[0] * w + e[1]) * w + e[2]] = static_cast<std::int64_t>(i);
  }
}

std::size_t MonomialBasis::index_of(const std::array<unsigned, 4>& e) const {
  const std::size_t w = g_ + 1;
  if (e[0] + e[1] + e[2] + e[3] != g_) throw std::invalid_argument("monomial of the wrong degree");
  return static_cast<std::size_t>(lookup_[(e[0] * w + e[1]) * w + e[2]]);
}

__int128 determinant4(const IntMatrix4& s) {
  // Laplace expansion along the first row with 3x3 minors.
  auto minor3 = [&](int skip) {
    int cols[3], k = 0;
    for (int j = 0; j < 4; ++j)
      if (j != skip) cols[k++] = j;
    auto m = [&](int i, int j) { return static_cast<__int128>(s[i][cols[j]]); };
    return m(1, 0) * (m(2, 1) * m(3, 2) - m(2, 2) * m(3, 1)) - m(1, 1) * (m(2, 0) * m(3, 2) - m(2, 2) * m(3, 0)) +
           m(1, 2) * (m(2, 0) * m(3, 1) - m(2, 1) * m(3, 0));
  };
  __int128 det = 0;
  for (int j = 0; j < 4; ++j) {
    __int128 term = static_cast<__int128>(s[0][j]) * minor3(j);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

void validate_spn(const IntMatrix4& s, std::uint32_t p, std::uint64_t N) {
  const __int128 det = determinant4(s);
  if (det <= 0) throw std::invalid_argument("matrix not in S_pN: determinant must be positive");
  const auto pN = static_cast<__int128>(p) * N;
  __int128 a = det, b = pN;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a != 1) throw std::invalid_argument("matrix not in S_pN: determinant must be prime to pN");
  for (int j = 0; j < 3; ++j) {
    if (s[3][j] % static_cast<std::int64_t>(N) != 0) {
      throw std::invalid_argument("matrix not in S_pN: bottom row must be congruent to (0,0,0,*) mod N");
    }
  }
}

SymGModule::SymGModule(unsigned g, DirichletChar eta) : basis_(g), eta_(std::move(eta)) {}

Matrix SymGModule::action_matrix(const IntMatrix4& s) const {
  const ExtField& F = field();
  const std::uint32_t p = F.p();
  validate_spn(s, p, eta_.modulus());
  const unsigned g = basis_.degree();
  std::vector<MonomialBasis> by_degree;
  for (unsigned d = 0; d <= std::max(g, 1u); ++d) by_degree.emplace_back(d);

  using Hom = std::vector<std::uint32_t>;
  auto product = [&](const Hom& a, unsigned da, const Hom& b, unsigned db) {
    Hom out(by_degree[da + db].size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      const auto& ea = by_degree[da].exponents(i);
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (!b[j]) continue;
        const auto& eb = by_degree[db].exponents(j);
        std::size_t k = by_degree[da + db].index_of({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]});
        out[k] = add_mod(out[k], mul_mod(a[i], b[j], p), p);
      }
    }
    return out;
  };

  // powers[i][k] = (sum_j s_ij x_j)^k
  std::vector<std::vector<Hom>> powers(4);
  for (int i = 0; i < 4; ++i) {
    Hom lin(4);
    for (int j = 0; j < 4; ++j) lin[by_degree[1].index_of({j == 0, j == 1, j == 2, j == 3})] = reduce_signed(s[i][j], p);
    powers[i].push_back(Hom{1});
    for (unsigned k = 1; k <= g; ++k) powers[i].push_back(product(powers[i][k - 1], k - 1, lin, 1));
  }

  const FieldElement twist = eta_.eval(s[3][3]);
  Matrix out(dimension(), dimension(), F.zero());
  for (std::size_t m = 0; m < dimension(); ++m) {
    const auto& e = basis_.exponents(m);
    Hom acc{1};
    unsigned deg = 0;
    for (int i = 0; i < 4; ++i) {
      acc = product(acc, deg, powers[i][e[i]], e[i]);
      deg += e[i];
    }
    for (std::size_t n = 0; n < acc.size(); ++n) {
      if (acc[n]) out.at(m, n) = F.scale(twist, acc[n]);
    }
  }
  return out;
}

std::vector<FieldElement> SymGModule::act(const IntMatrix4& s, const std::vector<FieldElement>& v) const {
  if (v.size() != dimension()) throw std::invalid_argument("coefficient vector has the wrong length");
  const ExtField& F = field();
  Matrix m = action_matrix(s);
  std::vector<FieldElement> out(dimension(), F.zero());
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < dimension(); ++j) {
      if (!m.at(i, j).is_zero()) out[j] = F.add(out[j], F.mul(v[i], m.at(i, j)));
    }
  }
  return out;
}

std::string SymGModule::serialize(const std::vector<FieldElement>& v) const {
  std::ostringstream os;
  os << "symg g=" << g() << " field=" << field().descriptor() << " coeffs=";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ";" : "") << field().format(v[i]);
  return os.str();
}

std::vector<FieldElement> SymGModule::parse(std::string_view text) const {
  std::istringstream is{std::string(text)};
  std::string tag, gpart, fpart, cpart;
  if (!(is >> tag >> gpart >> fpart >> cpart) || tag != "symg" || gpart.rfind("g=", 0) != 0 ||
      fpart.rfind("field=", 0) != 0 || cpart.rfind("coeffs=", 0) != 0) {
    throw std::invalid_argument("malformed Sym^g vector");
  }
  if (std::stoul(gpart.substr(2)) != g()) throw std::invalid_argument("Sym^g vector has a different g");
  if (!(ExtField::parse(fpart.substr(6)) == field())) throw std::invalid_argument("Sym^g vector over a different field");
  std::vector<FieldElement> out;
  std::string body = cpart.substr(7);
  std::size_t start = 0;
  while (start <= body.size()) {
    auto semi = body.find(';', start);
    out.push_back(field().parse_element(body.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (out.size() != dimension()) throw std::invalid_argument("Sym^g vector has the wrong length");
  return out;
}

}  // namespace hgf
