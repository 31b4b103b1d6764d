#pragma once

#include <vector>

#include "entbound/matrix.hpp"

namespace entbound {

struct EigResult {
  std::vector<double> eigenvalues;   // descending
  ComplexDenseMatrix eigenvectors;   // unitary, columns match eigenvalues
};

// M = V diag(lambda) V† for Hermitian M. Cyclic complex Jacobi; the contract
// is the reconstruction residual (<= 1e-10 ||M||), which the tests check
// directly. Throws DimensionError (NotSquare) / ValidationError (NotHermitian).
EigResult hermitian_eigendecomposition(const ComplexDenseMatrix& m,
                                       const ToleranceConfig& tol = {});

struct SvdResult {
  std::vector<double> singular_values;  // descending, length min(rows, cols)
  // Thin left vectors: rows x min(rows, cols). Columns for singular values
  // below roundoff are zero (direction undefined).
  ComplexDenseMatrix u;
  // Full right vectors: cols x cols, unitary. Tail columns span the kernel.
  ComplexDenseMatrix v;
};

// One-sided Jacobi on the columns of M; M = U diag(s) V† with V square.
SvdResult svd(const ComplexDenseMatrix& m, bool want_vectors = true);

std::vector<double> singular_values(const ComplexDenseMatrix& m);

// Count of singular values above rank_rel_tol * sigma_max * max(rows, cols).
std::size_t numerical_rank(const ComplexDenseMatrix& m, const ToleranceConfig& tol = {});

// Orthonormal columns spanning the numerical kernel; column count is
// cols - numerical_rank(m) by construction.
ComplexDenseMatrix kernel_basis(const ComplexDenseMatrix& m, const ToleranceConfig& tol = {});

}  // namespace entbound
