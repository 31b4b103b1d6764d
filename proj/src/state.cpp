#include "entbound/state.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "entbound/kernels.hpp"

namespace entbound {

DensityMatrix DensityMatrix::validated(ComplexDenseMatrix matrix, std::size_t dim_a,
                                       std::size_t dim_b, const ToleranceConfig& tol) {
  tol.validate();
  if (dim_a < 2 || dim_b < 2) {
    throw ValidationError("DimMismatch: both local dimensions must be at least 2");
  }
  const std::size_t mn = dim_a * dim_b;
  if (matrix.rows() != mn || matrix.cols() != mn) {
    std::ostringstream os;
    os << "DimMismatch: expected " << mn << "x" << mn << " matrix for dims (" << dim_a << ","
       << dim_b << "), got " << matrix.rows() << "x" << matrix.cols();
    throw ValidationError(os.str());
  }
  if (!matrix.all_finite()) throw ValidationError("NotFinite: density matrix has NaN/Inf entries");

  // Collect every violated invariant with its measured magnitude.
  std::ostringstream bad;
  const double scale = std::max(matrix.max_abs(), 1e-300);
  const double herm = hermiticity_defect(matrix);
  const bool hermitian_ok = herm <= tol.hermiticity_tol * scale;
  if (!hermitian_ok) bad << " NotHermitian(max |M - M†| = " << herm << ");";

  const Cplx tr = matrix.trace();
  const double trace_dev = std::abs(tr - Cplx(1.0));
  if (trace_dev > tol.trace_tol) bad << " TraceNotOne(|tr - 1| = " << trace_dev << ");";

  // PSD is judged on the Hermitian part so a diagnosis is still produced
  // when Hermiticity itself failed.
  ComplexDenseMatrix herm_part(mn, mn);
  for (std::size_t i = 0; i < mn; ++i)
    for (std::size_t j = 0; j < mn; ++j)
      herm_part(i, j) = 0.5 * (matrix(i, j) + std::conj(matrix(j, i)));
  const auto eig = hermitian_eigendecomposition(herm_part, tol);
  const double min_eig = eig.eigenvalues.back();
  if (min_eig < -tol.psd_tol) bad << " NotPSD(min eigenvalue = " << min_eig << ");";

  const std::string msg = bad.str();
  if (!msg.empty()) throw ValidationError("density matrix invalid:" + msg);
  return DensityMatrix(std::move(matrix), dim_a, dim_b);
}

ComplexDenseMatrix DensityMatrix::block_ab(std::size_t i1, std::size_t i2) const {
  return matrix_.block(i1 * dim_b_, i2 * dim_b_, dim_b_, dim_b_);
}

PureState PureState::validated(ComplexDenseMatrix coefficients) {
  if (coefficients.rows() < 2 || coefficients.cols() < 2) {
    throw ValidationError("DimMismatch: pure state needs local dimensions of at least 2");
  }
  if (!coefficients.all_finite()) throw ValidationError("NotFinite: pure state coefficients");
  const double norm = coefficients.frobenius_norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw ValidationError("NotNormalized: pure state norm deviates by " +
                          std::to_string(std::abs(norm - 1.0)));
  }
  return PureState(std::move(coefficients));
}

PureState PureState::normalized(ComplexDenseMatrix coefficients) {
  const double norm = coefficients.frobenius_norm();
  if (norm == 0.0) throw ValidationError("ZeroVector: cannot normalize the zero state");
  coefficients *= Cplx(1.0 / norm);
  return validated(std::move(coefficients));
}

std::vector<Cplx> PureState::amplitudes() const {
  const std::size_t m = dim_a(), n = dim_b();
  std::vector<Cplx> v(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) v[product_index(i, j, n)] = coefficients_(i, j);
  return v;
}

Ensemble Ensemble::validated(std::vector<double> weights, std::vector<PureState> states,
                             const ToleranceConfig& tol) {
  if (weights.size() != states.size() || states.empty()) {
    throw ValidationError("DimMismatch: ensemble needs matching, nonempty weight/state lists");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0)) {
      throw ValidationError("NegativeWeight: ensemble weight " + std::to_string(i) + " is " +
                            std::to_string(weights[i]) + " (must be > 0)");
    }
    sum += weights[i];
  }
  if (std::abs(sum - 1.0) > tol.trace_tol) {
    throw ValidationError("WeightSumNotOne: ensemble weights sum to " + std::to_string(sum));
  }
  const std::size_t m = states.front().dim_a(), n = states.front().dim_b();
  for (const auto& s : states) {
    if (s.dim_a() != m || s.dim_b() != n) {
      throw ValidationError("DimMismatch: ensemble states have differing dimensions");
    }
  }
  return Ensemble{std::move(weights), std::move(states)};
}

DensityMatrix from_ensemble(const Ensemble& e, const ToleranceConfig& tol) {
  const std::size_t mn = e.dim_a() * e.dim_b();
  ComplexDenseMatrix rho(mn, mn);
  for (std::size_t l = 0; l < e.states.size(); ++l) {
    const auto amp = e.states[l].amplitudes();
    const double p = e.weights[l];
    for (std::size_t i = 0; i < mn; ++i) {
      const Cplx pi = p * amp[i];
      Cplx* row = rho.row_ptr(i);
      for (std::size_t j = 0; j < mn; ++j) row[j] += pi * std::conj(amp[j]);
    }
  }
  return DensityMatrix::validated(std::move(rho), e.dim_a(), e.dim_b(), tol);
}

SchmidtDecomposition schmidt_decomposition(const PureState& v, const ToleranceConfig& tol) {
  const auto res = svd(v.coefficients(), /*want_vectors=*/true);
  const std::size_t d = numerical_rank(v.coefficients(), tol);
  SchmidtDecomposition out;
  out.coefficients.assign(res.singular_values.begin(), res.singular_values.begin() + d);
  out.left_basis = ComplexDenseMatrix(v.dim_a(), d);
  out.right_basis = ComplexDenseMatrix(v.dim_b(), d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < v.dim_a(); ++i) out.left_basis(i, k) = res.u(i, k);
    // A = U S V†, so the B-side Schmidt vectors are the conjugated columns of V.
    for (std::size_t j = 0; j < v.dim_b(); ++j) out.right_basis(j, k) = std::conj(res.v(j, k));
  }
  return out;
}

std::size_t schmidt_rank(const PureState& v, const ToleranceConfig& tol) {
  return numerical_rank(v.coefficients(), tol);
}

ComplexDenseMatrix partial_transpose(const DensityMatrix& rho) {
  const std::size_t m = rho.dim_a(), n = rho.dim_b(), mn = m * n;
  const auto& src = rho.matrix();
  ComplexDenseMatrix pt(mn, mn);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
          pt(product_index(i, j, n), product_index(k, l, n)) =
              src(product_index(i, l, n), product_index(k, j, n));
  return pt;
}

PptResult ppt_check(const DensityMatrix& rho, const ToleranceConfig& tol) {
  const auto eig = hermitian_eigendecomposition(partial_transpose(rho), tol);
  const double min_eig = eig.eigenvalues.back();
  return PptResult{min_eig >= -tol.psd_tol, min_eig};
}

DensityMatrix swap_subsystems(const DensityMatrix& rho, const ToleranceConfig& tol) {
  const std::size_t m = rho.dim_a(), n = rho.dim_b(), mn = m * n;
  const auto& src = rho.matrix();
  ComplexDenseMatrix sw(mn, mn);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < n; ++l)
          sw(product_index(j, i, m), product_index(l, k, m)) =
              src(product_index(i, j, n), product_index(k, l, n));
  return DensityMatrix::validated(std::move(sw), n, m, tol);
}

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

Cplx complex_gaussian(std::mt19937_64& gen) {
  const double u1 = 1.0 - uniform01(gen);  // (0, 1]
  const double u2 = uniform01(gen);
  const double rad = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * std::numbers::pi * u2;
  return {rad * std::cos(ang), rad * std::sin(ang)};
}

PureState random_pure(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (m < 2 || n < 2) throw ValidationError("DimMismatch: random_pure needs dims >= 2");
  std::mt19937_64 gen(seed);
  ComplexDenseMatrix c(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = complex_gaussian(gen);
  return PureState::normalized(std::move(c));
}

DensityMatrix random_mixed(std::size_t m, std::size_t n, std::size_t r, std::uint64_t seed) {
  const std::size_t mn = m * n;
  if (r < 1 || r > mn) {
    throw ValidationError("InvalidRank: r must lie in [1, " + std::to_string(mn) + "]");
  }
  std::mt19937_64 gen(seed);
  ComplexDenseMatrix g(mn, r);
  for (std::size_t i = 0; i < mn; ++i)
    for (std::size_t j = 0; j < r; ++j) g(i, j) = complex_gaussian(gen);

  ComplexDenseMatrix rho(mn, mn);
  for (std::size_t i = 0; i < mn; ++i)
    for (std::size_t j = 0; j < mn; ++j)
      rho(i, j) = kernels::dotc(g.row_ptr(j), g.row_ptr(i), r);  // (G G†)_{ij} = row_i · conj(row_j)
  const Cplx tr = rho.trace();
  rho *= Cplx(1.0 / tr.real());

  auto state = DensityMatrix::validated(std::move(rho), m, n, ToleranceConfig{});
  const std::size_t got = numerical_rank(state.matrix());
  if (got != r) {
    throw Error("random_mixed: sampled state has numerical rank " + std::to_string(got) +
                ", expected " + std::to_string(r));
  }
  return state;
}

ComplexDenseMatrix random_unitary(std::size_t n, std::mt19937_64& gen) {
  ComplexDenseMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = complex_gaussian(gen);
  // Modified Gram-Schmidt on columns, one reorthogonalization pass.
  for (std::size_t j = 0; j < n; ++j) {
    auto col = g.column(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        const auto ck = g.column(k);
        const Cplx proj = kernels::dotc(ck.data(), col.data(), n);
        kernels::axpy(-proj, ck.data(), col.data(), n);
      }
    }
    const double norm = std::sqrt(kernels::norm_sq(col.data(), n));
    for (auto& e : col) e /= norm;
    g.set_column(j, col);
  }
  return g;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1) + 0xbf58476d1ce4e5b9ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace entbound
