#pragma once

#include <optional>

#include "entbound/groebner.hpp"
#include "entbound/variety_numeric.hpp"

namespace entbound {

// Exact-arithmetic variant of MatrixPencil, for the certifying engine.
struct ExactMatrixPencil {
  Side side = Side::A;
  std::size_t num_params = 0;
  std::vector<ExactDenseMatrix> blocks;

  std::size_t block_rows() const { return blocks.empty() ? 0 : blocks.front().rows(); }
  std::size_t s() const { return blocks.empty() ? 0 : blocks.front().cols(); }
  std::size_t max_level() const { return std::min(block_rows(), s()); }
};

// Exact payload of an input file flagged "exact": either a density matrix or
// the ensemble's coefficient matrices (kept unnormalized; column scaling
// does not move the rank-deficiency loci).
struct ExactStateInput {
  std::size_t m = 0, n = 0;
  std::optional<ExactDenseMatrix> density;        // mn x mn
  std::vector<ExactDenseMatrix> ensemble_coeffs;  // each m x n
};

// Pencil from exact input. Ensembles contribute their vectors as columns;
// densities contribute an exact range basis (pivot columns found by exact
// elimination — the range of a PSD matrix is its column space).
ExactMatrixPencil build_exact_pencil(const ExactStateInput& input, Side side);

// Exact rank of the state: column rank of the stacked ensemble coordinates,
// or of the density matrix itself.
std::size_t exact_state_rank(const ExactStateInput& input);

MatrixPencil to_float(const ExactMatrixPencil& p);

// All determinants of order x order submatrices of sum_w r_w block_w, as
// homogeneous polynomials of degree `order` in the parameters.
std::vector<MultivariatePoly> minors(const ExactMatrixPencil& p, std::size_t order);

bool exact_empty_level0(const ExactMatrixPencil& p);

// Certified emptiness decision. EmptyCertified when the minor ideal's
// projective locus is provably empty; otherwise the verdict carries
// certified_nonempty with no witness (the numeric engine hunts for one).
// Throws EngineOverflow past the Groebner limits.
VarietyVerdict check_emptiness_exact(const ExactMatrixPencil& p, std::size_t k,
                                     const GroebnerLimits& limits = {});

}  // namespace entbound
