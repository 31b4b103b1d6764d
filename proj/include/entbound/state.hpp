#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "entbound/linalg.hpp"
#include "entbound/matrix.hpp"

namespace entbound {

// Bipartite basis ordering is fixed once for the whole library: the product
// basis index of (i, j) with i < m, j < n is i*n + j, i.e. row-major over
// (A index, B index). All block slicing depends on this convention.
inline std::size_t product_index(std::size_t i, std::size_t j, std::size_t n) {
  return i * n + j;
}

// Validated mn x mn density matrix: Hermitian, PSD, unit trace.
class DensityMatrix {
 public:
  static DensityMatrix validated(ComplexDenseMatrix matrix, std::size_t dim_a, std::size_t dim_b,
                                 const ToleranceConfig& tol = {});

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  const ComplexDenseMatrix& matrix() const { return matrix_; }

  // The n x n block of <i1 .|rho|i2 .> coordinates on system B.
  ComplexDenseMatrix block_ab(std::size_t i1, std::size_t i2) const;

 private:
  DensityMatrix(ComplexDenseMatrix m, std::size_t a, std::size_t b)
      : matrix_(std::move(m)), dim_a_(a), dim_b_(b) {}
  ComplexDenseMatrix matrix_;
  std::size_t dim_a_ = 0;
  std::size_t dim_b_ = 0;
};

// Unit vector in the product basis, stored as its m x n coefficient matrix.
class PureState {
 public:
  static PureState validated(ComplexDenseMatrix coefficients);
  // Scales to unit norm first; rejects the zero vector.
  static PureState normalized(ComplexDenseMatrix coefficients);

  std::size_t dim_a() const { return coefficients_.rows(); }
  std::size_t dim_b() const { return coefficients_.cols(); }
  const ComplexDenseMatrix& coefficients() const { return coefficients_; }

  // Coordinates in the product basis as a length m*n vector.
  std::vector<Cplx> amplitudes() const;

 private:
  explicit PureState(ComplexDenseMatrix c) : coefficients_(std::move(c)) {}
  ComplexDenseMatrix coefficients_;
};

// Convex mixture of pure states: strictly positive weights summing to one.
struct Ensemble {
  std::vector<double> weights;
  std::vector<PureState> states;

  static Ensemble validated(std::vector<double> weights, std::vector<PureState> states,
                            const ToleranceConfig& tol = {});
  std::size_t dim_a() const { return states.front().dim_a(); }
  std::size_t dim_b() const { return states.front().dim_b(); }
};

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // descending, all above the rank threshold
  ComplexDenseMatrix left_basis;     // m x d, orthonormal columns
  ComplexDenseMatrix right_basis;    // n x d, orthonormal columns
};

DensityMatrix from_ensemble(const Ensemble& e, const ToleranceConfig& tol = {});

SchmidtDecomposition schmidt_decomposition(const PureState& v, const ToleranceConfig& tol = {});

std::size_t schmidt_rank(const PureState& v, const ToleranceConfig& tol = {});

// Transpose on the B factor: entry ((i,j),(k,l)) of the result is
// rho((i,l),(k,j)). Hermitian and trace preserving by construction.
ComplexDenseMatrix partial_transpose(const DensityMatrix& rho);

struct PptResult {
  bool is_ppt = false;
  double min_eigenvalue = 0.0;
};

PptResult ppt_check(const DensityMatrix& rho, const ToleranceConfig& tol = {});

// Exchange the two subsystems; the result lives on an n x m system.
DensityMatrix swap_subsystems(const DensityMatrix& rho, const ToleranceConfig& tol = {});

// Portable Gaussian sampling (Box-Muller over the raw engine stream), so a
// fixed seed reproduces states bit-identically across standard libraries.
double uniform01(std::mt19937_64& gen);
Cplx complex_gaussian(std::mt19937_64& gen);

PureState random_pure(std::size_t m, std::size_t n, std::uint64_t seed);

// Ginibre construction G G† / tr with G an mn x r complex Gaussian matrix.
DensityMatrix random_mixed(std::size_t m, std::size_t n, std::size_t r, std::uint64_t seed);

// Haar-ish random unitary via Gram-Schmidt of a Ginibre matrix.
ComplexDenseMatrix random_unitary(std::size_t n, std::mt19937_64& gen);

// Substream derivation for seeded parallel work (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

}  // namespace entbound
