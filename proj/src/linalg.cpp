#include "entbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entbound/kernels.hpp"

namespace entbound {

namespace {

constexpr int kMaxSweeps = 64;

std::vector<std::size_t> argsort_descending(const std::vector<double>& vals) {
  std::vector<std::size_t> order(vals.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
  return order;
}

// tan of the Jacobi angle for the 2x2 symmetric problem [[a, g],[g, b]],
// g > 0, choosing |theta| <= pi/4.
double jacobi_tangent(double a, double b, double g) {
  const double tau = (b - a) / (2.0 * g);
  return std::copysign(1.0, tau) / (std::abs(tau) + std::hypot(1.0, tau));
}

}  // namespace

SvdResult svd(const ComplexDenseMatrix& m, bool want_vectors) {
  if (!m.all_finite()) throw ValidationError("svd: input has non-finite entries");
  const std::size_t p = m.rows(), q = m.cols();

  // Work on the plain transpose so the columns being orthogonalized are
  // contiguous rows; the same rotations accumulate V^T.
  ComplexDenseMatrix t = m.transpose();
  ComplexDenseMatrix vt;
  if (want_vectors) vt = ComplexDenseMatrix::identity(q);

  std::vector<double> norms(q);
  const double eps = 1e-15;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    for (std::size_t i = 0; i < q; ++i) norms[i] = kernels::norm_sq(t.row_ptr(i), p);
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < q; ++i) {
      for (std::size_t j = i + 1; j < q; ++j) {
        const Cplx g = kernels::dotc(t.row_ptr(i), t.row_ptr(j), p);
        const double mag = std::abs(g);
        if (mag * mag <= eps * eps * norms[i] * norms[j] || mag == 0.0) continue;
        rotated = true;
        const Cplx phase = g / mag;
        const double tn = jacobi_tangent(norms[i], norms[j], mag);
        const double cs = 1.0 / std::sqrt(1.0 + tn * tn);
        const double sn = cs * tn;
        const Cplx b = -sn * std::conj(phase);
        const Cplx d = cs * std::conj(phase);
        kernels::rot2(Cplx(cs), b, Cplx(sn), d, t.row_ptr(i), t.row_ptr(j), p);
        if (want_vectors) kernels::rot2(Cplx(cs), b, Cplx(sn), d, vt.row_ptr(i), vt.row_ptr(j), q);
        const double shift = 2.0 * cs * sn * mag;
        const double ni = cs * cs * norms[i] + sn * sn * norms[j] - shift;
        const double nj = sn * sn * norms[i] + cs * cs * norms[j] + shift;
        norms[i] = ni;
        norms[j] = nj;
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sig(q);
  for (std::size_t i = 0; i < q; ++i) sig[i] = std::sqrt(kernels::norm_sq(t.row_ptr(i), p));
  const auto order = argsort_descending(sig);

  const std::size_t nsv = std::min(p, q);
  SvdResult out;
  out.singular_values.resize(nsv);
  for (std::size_t k = 0; k < nsv; ++k) out.singular_values[k] = sig[order[k]];

  if (want_vectors) {
    out.u = ComplexDenseMatrix(p, nsv);
    out.v = ComplexDenseMatrix(q, q);
    for (std::size_t k = 0; k < nsv; ++k) {
      const double s = sig[order[k]];
      if (s > 0.0) {
        const Cplx* row = t.row_ptr(order[k]);
        for (std::size_t i = 0; i < p; ++i) out.u(i, k) = row[i] / s;
      }
    }
    for (std::size_t k = 0; k < q; ++k) {
      const Cplx* row = vt.row_ptr(order[k]);
      for (std::size_t i = 0; i < q; ++i) out.v(i, k) = row[i];
    }
  }
  return out;
}

std::vector<double> singular_values(const ComplexDenseMatrix& m) {
  return svd(m, /*want_vectors=*/false).singular_values;
}

std::size_t numerical_rank(const ComplexDenseMatrix& m, const ToleranceConfig& tol) {
  if (m.size() == 0) return 0;
  const auto sig = singular_values(m);
  if (sig.empty() || sig[0] == 0.0) return 0;
  const double thresh =
      tol.rank_rel_tol * sig[0] * static_cast<double>(std::max(m.rows(), m.cols()));
  std::size_t r = 0;
  while (r < sig.size() && sig[r] > thresh) ++r;
  return r;
}

ComplexDenseMatrix kernel_basis(const ComplexDenseMatrix& m, const ToleranceConfig& tol) {
  const std::size_t q = m.cols();
  const auto res = svd(m, /*want_vectors=*/true);

  // Per-column sigma for all q right vectors; columns beyond min(p, q) carry
  // sigma 0 by construction, so reuse the sorted values padded with zeros.
  std::vector<double> sig(q, 0.0);
  std::copy(res.singular_values.begin(), res.singular_values.end(), sig.begin());

  std::size_t rank = 0;
  if (!sig.empty() && sig[0] > 0.0) {
    const double thresh =
        tol.rank_rel_tol * sig[0] * static_cast<double>(std::max(m.rows(), m.cols()));
    while (rank < q && sig[rank] > thresh) ++rank;
  }

  ComplexDenseMatrix kern(q, q - rank);
  for (std::size_t k = rank; k < q; ++k)
    for (std::size_t i = 0; i < q; ++i) kern(i, k - rank) = res.v(i, k);
  return kern;
}

EigResult hermitian_eigendecomposition(const ComplexDenseMatrix& m, const ToleranceConfig& tol) {
  if (m.rows() != m.cols()) throw DimensionError("NotSquare: hermitian_eigendecomposition");
  if (!m.all_finite()) throw ValidationError("hermitian_eigendecomposition: non-finite entries");
  const std::size_t n = m.rows();
  const double scale = m.max_abs();
  const double defect = hermiticity_defect(m);
  if (defect > tol.hermiticity_tol * std::max(scale, 1e-300)) {
    throw ValidationError("NotHermitian: max |M - M†| entry = " + std::to_string(defect));
  }

  // Symmetrize roundoff, then run cyclic complex Jacobi with row-only
  // updates: after rotating rows i and j, columns i and j of the remaining
  // rows are restored from conjugate symmetry.
  ComplexDenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  ComplexDenseMatrix vh = ComplexDenseMatrix::identity(n);
  const double fscale = a.frobenius_norm();
  if (fscale > 0.0) {
    const double skip = 1e-16 * fscale;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      bool rotated = false;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const Cplx beta = a(i, j);
          const double mag = std::abs(beta);
          if (mag <= skip) continue;
          rotated = true;
          const Cplx phase = beta / mag;
          const double tn = jacobi_tangent(a(i, i).real(), a(j, j).real(), mag);
          const double c = 1.0 / std::sqrt(1.0 + tn * tn);
          const double s = c * tn;
          const Cplx sc = s * phase;

          kernels::rot2(Cplx(c), -sc, std::conj(sc), Cplx(c), a.row_ptr(i), a.row_ptr(j), n);
          const Cplx bii = a(i, i), bij = a(i, j), bji = a(j, i), bjj = a(j, j);
          a(i, i) = Cplx((c * bii - std::conj(sc) * bij).real());
          a(j, j) = Cplx((sc * bji + c * bjj).real());
          a(i, j) = 0.0;
          a(j, i) = 0.0;
          for (std::size_t k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            a(k, i) = std::conj(a(i, k));
            a(k, j) = std::conj(a(j, k));
          }
          kernels::rot2(Cplx(c), -sc, std::conj(sc), Cplx(c), vh.row_ptr(i), vh.row_ptr(j), n);
        }
      }
      if (!rotated) break;
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  const auto order = argsort_descending(eig);

  EigResult out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexDenseMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = eig[order[k]];
    const Cplx* row = vh.row_ptr(order[k]);
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = std::conj(row[i]);
  }
  return out;
}

}  // namespace entbound
