#include "entbound/matrix.hpp"

#include <cmath>

namespace entbound {

void ToleranceConfig::validate() const {
  for (double t : {rank_rel_tol, hermiticity_tol, psd_tol, trace_tol}) {
    if (!(t > 0.0 && t < 1.0)) {
      throw ValidationError("ToleranceConfig: tolerances must lie strictly in (0, 1)");
    }
  }
}

ComplexDenseMatrix ComplexDenseMatrix::identity(std::size_t n) {
  ComplexDenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexDenseMatrix ComplexDenseMatrix::transpose() const {
  ComplexDenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ComplexDenseMatrix ComplexDenseMatrix::conjugate() const {
  ComplexDenseMatrix c = *this;
  for (auto& e : c.entries_) e = std::conj(e);
  return c;
}

ComplexDenseMatrix ComplexDenseMatrix::adjoint() const {
  ComplexDenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

ComplexDenseMatrix ComplexDenseMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                             std::size_t nc) const {
  ComplexDenseMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

std::vector<Cplx> ComplexDenseMatrix::column(std::size_t j) const {
  std::vector<Cplx> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void ComplexDenseMatrix::set_column(std::size_t j, std::span<const Cplx> v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Cplx ComplexDenseMatrix::trace() const {
  Cplx t = 0.0;
  const std::size_t n = rows_ < cols_ ? rows_ : cols_;
  for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
  return t;
}

double ComplexDenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

double ComplexDenseMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

bool ComplexDenseMatrix::all_finite() const {
  for (const auto& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  }
  return true;
}

ComplexDenseMatrix& ComplexDenseMatrix::operator+=(const ComplexDenseMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("DimMismatch: matrix add");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexDenseMatrix& ComplexDenseMatrix::operator-=(const ComplexDenseMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("DimMismatch: matrix sub");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ComplexDenseMatrix& ComplexDenseMatrix::operator*=(Cplx s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

ComplexDenseMatrix operator*(const ComplexDenseMatrix& a, const ComplexDenseMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("DimMismatch: matrix multiply");
  ComplexDenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Cplx aik = a(i, k);
      if (aik == Cplx(0.0)) continue;
      const Cplx* brow = b.row_ptr(k);
      Cplx* crow = c.row_ptr(i);
      for (std::size_t j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

std::vector<Cplx> matvec(const ComplexDenseMatrix& m, std::span<const Cplx> x) {
  if (x.size() != m.cols()) throw DimensionError("LengthMismatch: matvec");
  std::vector<Cplx> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Cplx* row = m.row_ptr(i);
    Cplx s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += row[j] * x[j];
    y[i] = s;
  }
  return y;
}

double hermiticity_defect(const ComplexDenseMatrix& m) {
  double d = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

double max_abs_diff(const ComplexDenseMatrix& a, const ComplexDenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("DimMismatch: max_abs_diff");
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

ComplexDenseMatrix outer(std::span<const Cplx> x, std::span<const Cplx> y) {
  ComplexDenseMatrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * std::conj(y[j]);
  return m;
}

}  // namespace entbound
