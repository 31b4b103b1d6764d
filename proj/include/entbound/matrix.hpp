#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "entbound/types.hpp"

namespace entbound {

// Dense complex matrix, row-major storage, value semantics. Sized for desk
// scale (dimensions up to a few hundred); no sparse storage.
class ComplexDenseMatrix {
 public:
  ComplexDenseMatrix() = default;
  ComplexDenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ComplexDenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Cplx* data() { return entries_.data(); }
  const Cplx* data() const { return entries_.data(); }
  Cplx* row_ptr(std::size_t i) { return entries_.data() + i * cols_; }
  const Cplx* row_ptr(std::size_t i) const { return entries_.data() + i * cols_; }

  ComplexDenseMatrix transpose() const;
  ComplexDenseMatrix conjugate() const;
  ComplexDenseMatrix adjoint() const;
  ComplexDenseMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  std::vector<Cplx> column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const Cplx> v);

  Cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  ComplexDenseMatrix& operator+=(const ComplexDenseMatrix& rhs);
  ComplexDenseMatrix& operator-=(const ComplexDenseMatrix& rhs);
  ComplexDenseMatrix& operator*=(Cplx s);

  friend ComplexDenseMatrix operator+(ComplexDenseMatrix lhs, const ComplexDenseMatrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexDenseMatrix operator-(ComplexDenseMatrix lhs, const ComplexDenseMatrix& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexDenseMatrix operator*(Cplx s, ComplexDenseMatrix m) {
    m *= s;
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cplx> entries_;
};

ComplexDenseMatrix operator*(const ComplexDenseMatrix& a, const ComplexDenseMatrix& b);

std::vector<Cplx> matvec(const ComplexDenseMatrix& m, std::span<const Cplx> x);

// max |M - M†| over all entries; 0 for a 0x0 matrix.
double hermiticity_defect(const ComplexDenseMatrix& m);

// max |A - B| over all entries; matrices must share shape.
double max_abs_diff(const ComplexDenseMatrix& a, const ComplexDenseMatrix& b);

// Outer product x y† as a matrix of shape (x.size, y.size).
ComplexDenseMatrix outer(std::span<const Cplx> x, std::span<const Cplx> y);

}  // namespace entbound
