#include "hgf/matrix.hpp"

#include <stdexcept>
#include <string>

namespace hgf {

Matrix Matrix::column(std::size_t j) const {
  Matrix out(rows_, 1, FieldElement{});
  for (std::size_t i = 0; i < rows_; ++i) out.at(i, 0) = at(i, j);
  return out;
}

namespace linalg {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

}  // namespace

Matrix identity(const ExtField& F, std::size_t n) {
  Matrix m(n, n, F.zero());
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F.one();
  return m;
}

Matrix mul(const ExtField& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(a.rows(), b.cols(), F.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      const bool scalar = F.in_prime_field(aik);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const FieldElement& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) = F.add(out.at(i, j), scalar ? F.scale(bkj, aik[0]) : F.mul(aik, bkj));
      }
    }
  }
  return out;
}

Matrix sub(const ExtField& F, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix difference");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = F.sub(a.at(i, j), b.at(i, j));
  return out;
}

Matrix scale(const ExtField& F, const Matrix& a, const FieldElement& c) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = F.mul(a.at(i, j), c);
  return out;
}

Matrix shift(const ExtField& F, const Matrix& a, const FieldElement& c) {
  if (a.rows() != a.cols()) throw std::invalid_argument("shift of a non-square matrix");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) out.at(i, i) = F.sub(a.at(i, i), c);
  return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols(), FieldElement{});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

Echelon rref(const ExtField& F, Matrix a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(row, j));
    }
    const FieldElement inv = F.inv(a.at(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) = F.mul(a.at(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      const FieldElement f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (!a.at(row, j).is_zero()) a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const ExtField& F, const Matrix& a) { return rref(F, a).pivots.size(); }

Matrix kernel(const ExtField& F, const Matrix& a) {
  auto [form, pivots] = rref(F, a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix out(n, free.size(), F.zero());
  for (std::size_t k = 0; k < free.size(); ++k) {
    out.at(free[k], k) = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) out.at(pivots[r], k) = F.neg(form.at(r, free[k]));
  }
  return out;
}

FieldElement determinant(const ExtField& F, Matrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  FieldElement det = F.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a.at(sel, col).is_zero()) ++sel;
    if (sel == n) return F.zero();
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(col, j));
      det = F.neg(det);
    }
    det = F.mul(det, a.at(col, col));
    const FieldElement inv = F.inv(a.at(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a.at(i, col).is_zero()) continue;
      const FieldElement f = F.mul(a.at(i, col), inv);
      for (std::size_t j = col; j < n; ++j) a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(col, j)));
    }
  }
  return det;
}

Matrix inverse(const ExtField& F, const Matrix& a) {
  const std::size_t n = a.rows();
  auto [form, pivots] = rref(F, hconcat(a, identity(F, n)));
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  Matrix out(n, n, F.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = form.at(i, n + j);
  return out;
}

Matrix restrict_to(const ExtField& F, const Matrix& a, const Matrix& basis) {
  const std::size_t m = basis.cols();
  Matrix image = mul(F, a, basis);
  // Solve basis * X = image using the echelon form of [basis | image].
  auto [form, pivots] = rref(F, hconcat(basis, image));
  if (pivots.size() < m || (m > 0 && pivots[m - 1] != m - 1)) throw std::invalid_argument("basis columns are dependent");
  if (pivots.size() > m) throw std::invalid_argument("subspace is not invariant under the operator");
  Matrix x(m, image.cols(), F.zero());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < image.cols(); ++j) x.at(i, j) = form.at(i, m + j);
  return x;
}

poly::Poly charpoly(const ExtField& F, const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix h = a;
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h.at(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(i, j), h.at(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(j, i), h.at(j, m));
    }
    const FieldElement t = F.inv(h.at(m, m - 1));
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h.at(r, m - 1).is_zero()) continue;
      const FieldElement u = F.mul(h.at(r, m - 1), t);
      for (std::size_t j = 0; j < n; ++j) h.at(r, j) = F.sub(h.at(r, j), F.mul(u, h.at(m, j)));
      for (std::size_t j = 0; j < n; ++j) h.at(j, m) = F.add(h.at(j, m), F.mul(u, h.at(j, r)));
    }
  }
  std::vector<poly::Poly> p(n + 1);
  p[0] = {F.one()};
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = poly::mul(F, {F.neg(h.at(m - 1, m - 1)), F.one()}, p[m - 1]);
    FieldElement t = F.one();
    for (std::size_t i = 1; i < m; ++i) {
      t = F.mul(t, h.at(m - i, m - i - 1));
      const FieldElement c = F.mul(t, h.at(m - i - 1, m - 1));
      p[m] = poly::sub(F, p[m], poly::scale(F, p[m - i - 1], c));
    }
  }
  return p[n];
}

Matrix pow(const ExtField& F, const Matrix& a, unsigned e) {
  Matrix acc = identity(F, a.rows()), base = a;
  while (e) {
    if (e & 1) acc = mul(F, acc, base);
    e >>= 1;
    if (e) base = mul(F, base, base);
  }
  return acc;
}

}  // namespace linalg
}  // namespace hgf
