#pragma once

#include <gmpxx.h>

#include <string>

#include "entbound/types.hpp"

namespace entbound {

// Exact complex number with arbitrary-precision rational parts. GMP keeps
// denominators positive and in lowest terms after canonicalize().
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  GaussianRational(long re_num, long re_den, long im_num, long im_den);
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  // Accepts "3", "-2/5", "i", "-3i", "1/2+3/4i", "1/2-3/4i", ...
  static GaussianRational parse(const std::string& text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::string str() const;
  Cplx to_complex() const { return {re_.get_d(), im_.get_d()}; }

 private:
  mpq_class re_;
  mpq_class im_;
};

// Dense matrix of Gaussian rationals, row-major.
class ExactDenseMatrix {
 public:
  ExactDenseMatrix() = default;
  ExactDenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussianRational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  ComplexDenseMatrix to_complex() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> entries_;
};

// Rank by exact Gaussian elimination.
std::size_t exact_rank(ExactDenseMatrix m);

// Indices of a maximal set of linearly independent columns, in order.
std::vector<std::size_t> exact_pivot_columns(ExactDenseMatrix m);

}  // namespace entbound
