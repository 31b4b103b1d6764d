#include "entbound/pencil.hpp"

#include "entbound/kernels.hpp"

namespace entbound {

namespace {

// Slice an mn x s column matrix into the side's blocks. Side A takes row
// ranges [w*n, (w+1)*n); side B gathers the strided rows w, n+w, ..., i.e.
// the |1w>,...,|mw> coordinates.
std::vector<ComplexDenseMatrix> slice_blocks(const ComplexDenseMatrix& basis, std::size_t m,
                                             std::size_t n, Side side) {
  const std::size_t s = basis.cols();
  std::vector<ComplexDenseMatrix> blocks;
  if (side == Side::A) {
    blocks.reserve(m);
    for (std::size_t w = 0; w < m; ++w) blocks.push_back(basis.block(w * n, 0, n, s));
  } else {
    blocks.reserve(n);
    for (std::size_t w = 0; w < n; ++w) {
      ComplexDenseMatrix b(m, s);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < s; ++c) b(i, c) = basis(i * n + w, c);
      blocks.push_back(std::move(b));
    }
  }
  return blocks;
}

}  // namespace

ComplexDenseMatrix range_basis(const DensityMatrix& rho, const ToleranceConfig& tol) {
  const auto eig = hermitian_eigendecomposition(rho.matrix(), tol);
  const std::size_t mn = rho.matrix().rows();
  const double lmax = eig.eigenvalues.front();
  const double thresh = tol.rank_rel_tol * lmax * static_cast<double>(mn);
  std::size_t s = 0;
  while (s < mn && eig.eigenvalues[s] > thresh) ++s;
  ComplexDenseMatrix basis(mn, s);
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < mn; ++i) basis(i, j) = eig.eigenvectors(i, j);
  return basis;
}

MatrixPencil build_pencil(const DensityMatrix& rho, Side side, const ToleranceConfig& tol) {
  const auto basis = range_basis(rho, tol);
  MatrixPencil p;
  p.side = side;
  p.num_params = side == Side::A ? rho.dim_a() : rho.dim_b();
  p.blocks = slice_blocks(basis, rho.dim_a(), rho.dim_b(), side);
  return p;
}

MatrixPencil pencil_from_coefficients(const std::vector<ComplexDenseMatrix>& coeffs, Side side) {
  if (coeffs.empty()) throw DimensionError("DimMismatch: pencil needs at least one state");
  const std::size_t m = coeffs.front().rows(), n = coeffs.front().cols();
  const std::size_t t = coeffs.size();
  ComplexDenseMatrix stacked(m * n, t);
  for (std::size_t l = 0; l < t; ++l) {
    if (coeffs[l].rows() != m || coeffs[l].cols() != n) {
      throw DimensionError("DimMismatch: pencil states have differing dimensions");
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(product_index(i, j, n), l) = coeffs[l](i, j);
  }
  MatrixPencil p;
  p.side = side;
  p.num_params = side == Side::A ? m : n;
  p.blocks = slice_blocks(stacked, m, n, side);
  return p;
}

MatrixPencil pencil_from_ensemble(const Ensemble& e, Side side) {
  std::vector<ComplexDenseMatrix> coeffs;
  coeffs.reserve(e.states.size());
  for (const auto& s : e.states) coeffs.push_back(s.coefficients());
  return pencil_from_coefficients(coeffs, side);
}

ComplexDenseMatrix evaluate(const MatrixPencil& p, std::span<const Cplx> r) {
  if (r.size() != p.num_params) {
    throw DimensionError("LengthMismatch: pencil expects " + std::to_string(p.num_params) +
                         " parameters, got " + std::to_string(r.size()));
  }
  ComplexDenseMatrix out(p.block_rows(), p.s());
  for (std::size_t w = 0; w < p.num_params; ++w) {
    kernels::axpy(r[w], p.blocks[w].data(), out.data(), out.size());
  }
  return out;
}

ComplexDenseMatrix hermitian_form(const DensityMatrix& rho, Side side, std::span<const Cplx> r) {
  const std::size_t m = rho.dim_a(), n = rho.dim_b();
  const auto& src = rho.matrix();
  if (side == Side::A) {
    if (r.size() != m) throw DimensionError("LengthMismatch: hermitian_form side A");
    ComplexDenseMatrix form(n, n);
    for (std::size_t i1 = 0; i1 < m; ++i1)
      for (std::size_t i2 = 0; i2 < m; ++i2) {
        const Cplx w = r[i1] * std::conj(r[i2]);
        if (w == Cplx(0.0)) continue;
        for (std::size_t j1 = 0; j1 < n; ++j1)
          for (std::size_t j2 = 0; j2 < n; ++j2)
            form(j1, j2) += w * src(product_index(i1, j1, n), product_index(i2, j2, n));
      }
    return form;
  }
  if (r.size() != n) throw DimensionError("LengthMismatch: hermitian_form side B");
  ComplexDenseMatrix form(m, m);
  for (std::size_t j1 = 0; j1 < n; ++j1)
    for (std::size_t j2 = 0; j2 < n; ++j2) {
      const Cplx w = r[j1] * std::conj(r[j2]);
      if (w == Cplx(0.0)) continue;
      for (std::size_t i1 = 0; i1 < m; ++i1)
        for (std::size_t i2 = 0; i2 < m; ++i2)
          form(i1, i2) += w * src(product_index(i1, j1, n), product_index(i2, j2, n));
    }
  return form;
}

}  // namespace entbound
