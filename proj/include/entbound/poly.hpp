#pragma once

#include <cstdint>
#include <vector>

#include "entbound/rational.hpp"

namespace entbound {

// Exponent vector; index w is the power of parameter r_{w+1}.
using Monomial = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Monomial& m);

// Graded reverse lexicographic order with r_1 > ... > r_m.
// Returns +1 if a > b, 0 if equal, -1 if a < b.
int degrevlex_compare(const Monomial& a, const Monomial& b);

bool monomial_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& a, const Monomial& b);  // a / b, requires b | a
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  GaussianRational coeff;
};

// Polynomial over the Gaussian rationals; terms sorted descending in
// degrevlex, no zero coefficients stored.
class MultivariatePoly {
 public:
  MultivariatePoly() = default;
  explicit MultivariatePoly(std::size_t nvars) : nvars_(nvars) {}

  static MultivariatePoly constant(std::size_t nvars, GaussianRational c);
  static MultivariatePoly variable(std::size_t nvars, std::size_t index);
  static MultivariatePoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const;

  std::uint32_t degree() const;  // max total degree; 0 for the zero polynomial
  bool is_homogeneous() const;

  MultivariatePoly operator-() const;
  MultivariatePoly& operator+=(const MultivariatePoly& o);
  MultivariatePoly& operator-=(const MultivariatePoly& o);
  friend MultivariatePoly operator+(MultivariatePoly a, const MultivariatePoly& b) { return a += b; }
  friend MultivariatePoly operator-(MultivariatePoly a, const MultivariatePoly& b) { return a -= b; }
  friend MultivariatePoly operator*(const MultivariatePoly& a, const MultivariatePoly& b);

  // this * (coeff * mono)
  MultivariatePoly times_term(const Monomial& mono, const GaussianRational& coeff) const;

  // Multiply so the leading coefficient becomes 1; no-op on zero.
  void make_monic();

  friend bool operator==(const MultivariatePoly& a, const MultivariatePoly& b);

  std::string str() const;  // human-readable, variables named r1..rm

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace entbound
