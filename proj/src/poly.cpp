#include "entbound/poly.hpp"

#include <algorithm>
#include <sstream>

namespace entbound {

std::uint32_t total_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

int degrevlex_compare(const Monomial& a, const Monomial& b) {
  const std::uint32_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: the rightmost differing exponent decides, smaller wins.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

MultivariatePoly MultivariatePoly::constant(std::size_t nvars, GaussianRational c) {
  MultivariatePoly p(nvars);
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial(nvars, 0), std::move(c)});
  return p;
}

MultivariatePoly MultivariatePoly::variable(std::size_t nvars, std::size_t index) {
  MultivariatePoly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.terms_.push_back(Term{std::move(m), GaussianRational(1)});
  return p;
}

MultivariatePoly MultivariatePoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return degrevlex_compare(a.mono, b.mono) > 0; });
  MultivariatePoly p(nvars);
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& MultivariatePoly::leading_term() const {
  if (terms_.empty()) throw Error("leading_term of the zero polynomial");
  return terms_.front();
}

std::uint32_t MultivariatePoly::degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
  return d;
}

bool MultivariatePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::uint32_t d = total_degree(terms_.front().mono);
  for (const auto& t : terms_) {
    if (total_degree(t.mono) != d) return false;
  }
  return true;
}

MultivariatePoly MultivariatePoly::operator-() const {
  MultivariatePoly p(nvars_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.mono, -t.coeff});
  return p;
}

namespace {

// Merge two descending term lists, combining equal monomials.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) {
      cmp = -1;
    } else if (j == b.size()) {
      cmp = 1;
    } else {
      cmp = degrevlex_compare(a[i].mono, b[j].mono);
    }
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      Term t = b[j++];
      if (negate_b) t.coeff = -t.coeff;
      out.push_back(std::move(t));
    } else {
      GaussianRational c = a[i].coeff;
      if (negate_b) {
        c -= b[j].coeff;
      } else {
        c += b[j].coeff;
      }
      if (!c.is_zero()) out.push_back(Term{a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultivariatePoly& MultivariatePoly::operator+=(const MultivariatePoly& o) {
  terms_ = merge_terms(terms_, o.terms_, /*negate_b=*/false);
  return *this;
}

MultivariatePoly& MultivariatePoly::operator-=(const MultivariatePoly& o) {
  terms_ = merge_terms(terms_, o.terms_, /*negate_b=*/true);
  return *this;
}

MultivariatePoly MultivariatePoly::times_term(const Monomial& mono,
                                              const GaussianRational& coeff) const {
  MultivariatePoly p(nvars_);
  if (coeff.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  // Monomial multiplication preserves the term order.
  for (const auto& t : terms_) p.terms_.push_back(Term{monomial_mul(t.mono, mono), t.coeff * coeff});
  return p;
}

MultivariatePoly operator*(const MultivariatePoly& a, const MultivariatePoly& b) {
  MultivariatePoly acc(a.nvars());
  for (const auto& t : b.terms()) acc += a.times_term(t.mono, t.coeff);
  return acc;
}

void MultivariatePoly::make_monic() {
  if (terms_.empty()) return;
  const GaussianRational lead = terms_.front().coeff;
  if (lead == GaussianRational(1)) return;
  for (auto& t : terms_) t.coeff /= lead;
}

bool operator==(const MultivariatePoly& a, const MultivariatePoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string MultivariatePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff.str() << ")";
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      os << "*r" << (i + 1);
      if (t.mono[i] > 1) os << "^" << t.mono[i];
    }
  }
  return os.str();
}

}  // namespace entbound
