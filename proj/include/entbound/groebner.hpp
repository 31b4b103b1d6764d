#pragma once

#include <span>

#include "entbound/poly.hpp"

namespace entbound {

struct GroebnerLimits {
  std::size_t max_basis_size = 10000;
  std::uint32_t max_total_degree = 30;
};

// Reduced Groebner basis under degrevlex: monic generators, every
// S-polynomial reduces to zero, no generator term is divisible by another
// generator's leading term.
struct GroebnerBasis {
  std::size_t nvars = 0;
  std::vector<MultivariatePoly> generators;
};

// Remainder of f on division by the (not necessarily Groebner) family g.
MultivariatePoly normal_form(MultivariatePoly f, std::span<const MultivariatePoly> g);

MultivariatePoly s_polynomial(const MultivariatePoly& f, const MultivariatePoly& g);

// Buchberger with the normal selection strategy (lowest lcm degree first)
// and the product/chain pruning criteria. Throws EngineOverflow past the
// limits, Error (EmptyInput) when no nonzero generator is supplied.
GroebnerBasis buchberger(std::vector<MultivariatePoly> polys, const GroebnerLimits& limits = {});

// Emptiness of the projective zero locus of a homogeneous ideal: the affine
// cone is {0} iff every variable has a pure power among the leading
// monomials. Throws ValidationError (NotHomogeneous) on inhomogeneous input.
bool projective_empty(const GroebnerBasis& basis);

// Test hooks: Buchberger's criterion (all S-polynomials reduce to zero) and
// full reducedness of the generator set.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);
bool is_reduced_basis(const GroebnerBasis& basis);

}  // namespace entbound
