#include "udt/matrix.hpp"

#include <string>

#include "udt/errors.hpp"

namespace udt {

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be >= 1");
}

ExactMatrix ExactMatrix::identity(std::size_t dim) { return scalar(dim, FieldElem::one()); }

ExactMatrix ExactMatrix::scalar(std::size_t dim, const FieldElem& v) {
  ExactMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = v;
  return m;
}

bool ExactMatrix::is_hermitian() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      if (!((*this)(r, c) == (*this)(c, r).conj())) return false;
  return true;
}

ExactMatrix ExactMatrix::principal(const std::vector<std::size_t>& indices) const {
  ExactMatrix out(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t c = 0; c < indices.size(); ++c) out(r, c) = (*this)(indices[r], indices[c]);
  return out;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.dim_ != y.dim_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  ExactMatrix out(x.dim_);
  for (std::size_t r = 0; r < x.dim_; ++r)
    for (std::size_t k = 0; k < x.dim_; ++k) {
      const FieldElem& xv = x(r, k);
      if (xv.is_zero()) continue;
      for (std::size_t c = 0; c < x.dim_; ++c) out(r, c) += xv * y(k, c);
    }
  return out;
}

ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.dim_ != y.dim_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  ExactMatrix out = x;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= y.entries_[k];
  return out;
}

FieldElem det(const ExactMatrix& m) {
  const std::size_t n = m.dim();
  ExactMatrix a = m;
  FieldElem result = FieldElem::one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return FieldElem::zero();
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      result = -result;
    }
    result *= a(col, col);
    FieldElem inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      FieldElem factor = a(r, col) * inv;
      for (std::size_t c = col + 1; c < n; ++c) a(r, c) -= factor * a(col, c);
      a(r, col) = FieldElem::zero();
    }
  }
  return result;
}

namespace {

void require_hermitian(const ExactMatrix& m) {
  if (!m.is_hermitian())
    throw Error(ErrorKind::NotHermitian, "matrix of dimension " + std::to_string(m.dim()));
}

}  // namespace

bool sylvester_pd(const ExactMatrix& m) {
  require_hermitian(m);
  std::vector<std::size_t> lead;
  for (std::size_t k = 0; k < m.dim(); ++k) {
    lead.push_back(k);
    if (real_sign(det(m.principal(lead))) <= 0) return false;
  }
  return true;
}

bool sylvester_psd(const ExactMatrix& m, std::size_t psd_dim_cap) {
  require_hermitian(m);
  const std::size_t n = m.dim();
  if (n > psd_dim_cap || n >= 64)
    throw Error(ErrorKind::DimensionCap, "principal-minor enumeration for dimension " + std::to_string(n));
  std::vector<std::size_t> idx;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    idx.clear();
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1u) idx.push_back(k);
    if (real_sign(det(m.principal(idx))) < 0) return false;
  }
  return true;
}

}  // namespace udt
