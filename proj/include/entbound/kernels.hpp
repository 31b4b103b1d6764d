#pragma once

#include <cstddef>

#include "entbound/types.hpp"

// Arithmetic inner loops shared by the Jacobi eigensolver, the one-sided
// Jacobi SVD and pencil evaluation. Each kernel has a scalar reference
// implementation and, on x86-64, an AVX2+FMA variant selected at runtime.
// The dispatched entry points must agree with the scalar reference up to
// floating-point reassociation; tests/test_kernels.cpp enforces this.

namespace entbound::kernels {

namespace scalar {
// sum_i conj(x[i]) * y[i]
Cplx dotc(const Cplx* x, const Cplx* y, std::size_t n);
// sum_i |x[i]|^2
double norm_sq(const Cplx* x, std::size_t n);
// y[i] += a * x[i]
void axpy(Cplx a, const Cplx* x, Cplx* y, std::size_t n);
// (x[i], y[i]) <- (a*x[i] + b*y[i], c*x[i] + d*y[i])
void rot2(Cplx a, Cplx b, Cplx c, Cplx d, Cplx* x, Cplx* y, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
Cplx dotc(const Cplx* x, const Cplx* y, std::size_t n);
double norm_sq(const Cplx* x, std::size_t n);
void axpy(Cplx a, const Cplx* x, Cplx* y, std::size_t n);
void rot2(Cplx a, Cplx b, Cplx c, Cplx d, Cplx* x, Cplx* y, std::size_t n);
}  // namespace avx2
#endif

// Runtime-dispatched entry points.
Cplx dotc(const Cplx* x, const Cplx* y, std::size_t n);
double norm_sq(const Cplx* x, std::size_t n);
void axpy(Cplx a, const Cplx* x, Cplx* y, std::size_t n);
void rot2(Cplx a, Cplx b, Cplx c, Cplx d, Cplx* x, Cplx* y, std::size_t n);

// Name of the backend the dispatcher picked: "avx2" or "scalar".
const char* active_backend();

}  // namespace entbound::kernels
