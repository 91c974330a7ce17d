#pragma once

#include <cstddef>
#include <vector>

#include "udt/field.hpp"

namespace udt {

// Square matrix over Q(1/sqrt2, i), row-major.
class ExactMatrix {
 public:
  explicit ExactMatrix(std::size_t dim);
  static ExactMatrix identity(std::size_t dim);
  static ExactMatrix scalar(std::size_t dim, const FieldElem& v);

  std::size_t dim() const noexcept { return dim_; }
  FieldElem& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const FieldElem& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  bool is_hermitian() const;
  // Submatrix on the given (sorted, distinct) row/column indices.
  ExactMatrix principal(const std::vector<std::size_t>& indices) const;

  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
  friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y);
  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) = default;

 private:
  std::size_t dim_;
  std::vector<FieldElem> entries_;
};

// Gaussian elimination with first-nonzero pivoting (lowest row index).
FieldElem det(const ExactMatrix& m);

// Positive definite iff every leading principal minor is positive.
// Throws NotHermitian.
bool sylvester_pd(const ExactMatrix& m);

// Positive semi-definite iff every one of the 2^dim - 1 principal minors is
// non-negative. Throws NotHermitian, DimensionCap when dim > psd_dim_cap.
bool sylvester_psd(const ExactMatrix& m, std::size_t psd_dim_cap = 16);

}  // namespace udt
