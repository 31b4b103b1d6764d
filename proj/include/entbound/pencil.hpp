#pragma once

#include <span>
#include <vector>

#include "entbound/state.hpp"

namespace entbound {

enum class Side { A, B };

inline const char* side_name(Side s) { return s == Side::A ? "A" : "B"; }

// Linear pencil M(r) = sum_w r_w * block_w. For side A there are m blocks of
// shape n x s; for side B, n blocks of shape m x s. The rank-<=k locus of
// M(r) over nonzero r is the level-k degeneracy set of the source state.
struct MatrixPencil {
  Side side = Side::A;
  std::size_t num_params = 0;
  std::vector<ComplexDenseMatrix> blocks;

  std::size_t block_rows() const { return blocks.empty() ? 0 : blocks.front().rows(); }
  std::size_t s() const { return blocks.empty() ? 0 : blocks.front().cols(); }
  // Levels k with a nontrivial emptiness question: 0 <= k < max_level().
  std::size_t max_level() const { return std::min(block_rows(), s()); }
};

// Orthonormal eigenvectors of rho with eigenvalue above the rank threshold,
// as the columns of an mn x s matrix; s equals numerical_rank(rho).
ComplexDenseMatrix range_basis(const DensityMatrix& rho, const ToleranceConfig& tol = {});

// Pencil from the range basis of a density matrix.
MatrixPencil build_pencil(const DensityMatrix& rho, Side side, const ToleranceConfig& tol = {});

// Pencil whose columns are the ensemble's state vectors, kept as supplied
// (unweighted, not reduced to an independent subset). Rank profiles agree
// with the range-basis pencil because the column spans agree pointwise.
MatrixPencil pencil_from_ensemble(const Ensemble& e, Side side);

// Same construction from raw coefficient matrices (no weight/norm checks);
// used for unnormalized exact fixtures.
MatrixPencil pencil_from_coefficients(const std::vector<ComplexDenseMatrix>& coeffs, Side side);

ComplexDenseMatrix evaluate(const MatrixPencil& p, std::span<const Cplx> r);

// The Hermitian form the pencil linearizes: side A gives the n x n matrix
// sum_{i1,i2} r_{i1} conj(r_{i2}) rho_block(i1,i2); side B the m x m
// analogue. rank(form) == rank(evaluate(pencil, r)) for every r.
ComplexDenseMatrix hermitian_form(const DensityMatrix& rho, Side side, std::span<const Cplx> r);

}  // namespace entbound
