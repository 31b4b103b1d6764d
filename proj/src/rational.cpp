#include "entbound/rational.hpp"

#include <cctype>
#include <vector>

namespace entbound {

GaussianRational::GaussianRational(long re_num, long re_den, long im_num, long im_den)
    : re_(re_num, re_den), im_(im_num, im_den) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  const mpq_class re = re_ * o.re_ - im_ * o.im_;
  const mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = re;
  im_ = im;
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw ValidationError("GaussianRational: division by zero");
  const mpq_class n = o.norm();
  const mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  const mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = re;
  im_ = im;
  return *this;
}

namespace {

mpq_class parse_rational(const std::string& text, const std::string& whole) {
  try {
    mpq_class q(text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + text + "' in '" + whole + "'");
  }
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty Gaussian rational");

  bool have_re = false, have_im = false;
  mpq_class re(0), im(0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t start = pos;
    if (s[pos] == '+' || s[pos] == '-') ++pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) {
      ++pos;
    }
    bool imag = false;
    if (pos < s.size() && s[pos] == 'i') {
      imag = true;
      ++pos;
    }
    std::string numeral = s.substr(start, pos - start - (imag ? 1 : 0));
    if (numeral.empty() || numeral == "+" || numeral == "-") {
      if (!imag) throw ParseError("bad Gaussian rational '" + raw + "'");
      numeral += "1";  // bare i / -i
    }
    if (imag) {
      if (have_im) throw ParseError("duplicate imaginary part in '" + raw + "'");
      im = parse_rational(numeral, raw);
      have_im = true;
    } else {
      if (have_re) throw ParseError("duplicate real part in '" + raw + "'");
      re = parse_rational(numeral, raw);
      have_re = true;
    }
  }
  if (!have_re && !have_im) throw ParseError("bad Gaussian rational '" + raw + "'");
  return {re, im};
}

std::string GaussianRational::str() const {
  if (im_ == 0) return re_.get_str();
  std::string out;
  if (re_ != 0) out = re_.get_str();
  if (im_ > 0 && !out.empty()) out += "+";
  out += im_.get_str() + "i";
  return out;
}

ComplexDenseMatrix ExactDenseMatrix::to_complex() const {
  ComplexDenseMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).to_complex();
  return m;
}

std::size_t exact_rank(ExactDenseMatrix m) {
  return exact_pivot_columns(std::move(m)).size();
}

std::vector<std::size_t> exact_pivot_columns(ExactDenseMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
    }
    const GaussianRational inv_lead = GaussianRational(1) / m(row, col);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const GaussianRational factor = m(i, col) * inv_lead;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace entbound
