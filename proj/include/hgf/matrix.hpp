#pragma once

#include <cstddef>
#include <vector>

#include "hgf/field.hpp"
#include "hgf/poly.hpp"

namespace hgf {

// Dense row-major matrix over an ExtField.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const FieldElement& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElement& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Matrix column(std::size_t j) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> data_;
};

namespace linalg {

Matrix identity(const ExtField& F, std::size_t n);
Matrix mul(const ExtField& F, const Matrix& a, const Matrix& b);
Matrix sub(const ExtField& F, const Matrix& a, const Matrix& b);
Matrix scale(const ExtField& F, const Matrix& a, const FieldElement& c);
// a - c * I
Matrix shift(const ExtField& F, const Matrix& a, const FieldElement& c);
Matrix hconcat(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix form;
  std::vector<std::size_t> pivots;
};

Echelon rref(const ExtField& F, Matrix a);
std::size_t rank(const ExtField& F, const Matrix& a);
// Columns form a basis of the right kernel, in echelon order of the free variables.
Matrix kernel(const ExtField& F, const Matrix& a);
FieldElement determinant(const ExtField& F, Matrix a);
Matrix inverse(const ExtField& F, const Matrix& a);
// Matrix X with a * basis = basis * X, for basis with independent columns spanning an
// a-invariant subspace; throws if the subspace is not invariant.
Matrix restrict_to(const ExtField& F, const Matrix& a, const Matrix& basis);
// Monic characteristic polynomial det(xI - a) via Hessenberg reduction.
poly::Poly charpoly(const ExtField& F, const Matrix& a);
Matrix pow(const ExtField& F, const Matrix& a, unsigned e);

}  // namespace linalg
}  // namespace hgf
