#include "entbound/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

// Complex doubles are interleaved [re0, im0, re1, im1, ...]; one __m256d
// holds two complex values. a*v uses the fmaddsub pattern: with vs the
// re/im-swapped vector, fmaddsub(ar, v, ai*vs) yields
// [ar*vr - ai*vi, ar*vi + ai*vr] per value.

namespace entbound::kernels::avx2 {

namespace {

inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d v) {
  const __m256d vs = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, vs));
}

}  // namespace

Cplx dotc(const Cplx* x, const Cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d acc_d = _mm256_setzero_pd();  // [xr*yr, xi*yi, ...]
  __m256d acc_c = _mm256_setzero_pd();  // [xr*yi, xi*yr, ...]
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_d = _mm256_fmadd_pd(xv, yv, acc_d);
    acc_c = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), acc_c);
  }
  alignas(32) double d[4], c[4];
  _mm256_store_pd(d, acc_d);
  _mm256_store_pd(c, acc_c);
  double re = (d[0] + d[1]) + (d[2] + d[3]);
  double im = (c[0] - c[1]) + (c[2] - c[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double norm_sq(const Cplx* x, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  alignas(32) double a[4];
  _mm256_store_pd(a, acc);
  double s = (a[0] + a[1]) + (a[2] + a[3]);
  for (; i < n; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

void axpy(Cplx a, const Cplx* x, Cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_bcast(ar, ai, xv)));
  }
  if (i < n) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += Cplx(a.real() * xr - a.imag() * xi, a.real() * xi + a.imag() * xr);
  }
}

void rot2(Cplx a, Cplx b, Cplx c, Cplx d, Cplx* x, Cplx* y, std::size_t n) {
  double* xd = reinterpret_cast<double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
  const __m256d br = _mm256_set1_pd(b.real()), bi = _mm256_set1_pd(b.imag());
  const __m256d cr = _mm256_set1_pd(c.real()), ci = _mm256_set1_pd(c.imag());
  const __m256d dr = _mm256_set1_pd(d.real()), di = _mm256_set1_pd(d.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    const __m256d xn = _mm256_add_pd(cmul_bcast(ar, ai, xv), cmul_bcast(br, bi, yv));
    const __m256d yn = _mm256_add_pd(cmul_bcast(cr, ci, xv), cmul_bcast(dr, di, yv));
    _mm256_storeu_pd(xd + 2 * i, xn);
    _mm256_storeu_pd(yd + 2 * i, yn);
  }
  for (; i < n; ++i) {
    const Cplx xi = x[i], yi = y[i];
    x[i] = a * xi + b * yi;
    y[i] = c * xi + d * yi;
  }
}

}  // namespace entbound::kernels::avx2

#endif  // x86-64
