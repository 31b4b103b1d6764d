#include "entbound/kernels.hpp"

namespace entbound::kernels::scalar {

Cplx dotc(const Cplx* x, const Cplx* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double norm_sq(const Cplx* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

void axpy(Cplx a, const Cplx* x, Cplx* y, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += Cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

void rot2(Cplx a, Cplx b, Cplx c, Cplx d, Cplx* x, Cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const Cplx xi = x[i], yi = y[i];
    x[i] = a * xi + b * yi;
    y[i] = c * xi + d * yi;
  }
}

}  // namespace entbound::kernels::scalar
