#include "entbound/kernels.hpp"

namespace entbound::kernels {

namespace {

struct Table {
  Cplx (*dotc)(const Cplx*, const Cplx*, std::size_t);
  double (*norm_sq)(const Cplx*, std::size_t);
  void (*axpy)(Cplx, const Cplx*, Cplx*, std::size_t);
  void (*rot2)(Cplx, Cplx, Cplx, Cplx, Cplx*, Cplx*, std::size_t);
  const char* name;
};

const Table& table() {
  static const Table t = [] {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
      return Table{avx2::dotc, avx2::norm_sq, avx2::axpy, avx2::rot2, "avx2"};
    }
#endif
    return Table{scalar::dotc, scalar::norm_sq, scalar::axpy, scalar::rot2, "scalar"};
  }();
  return t;
}

}  // namespace

Cplx dotc(const Cplx* x, const Cplx* y, std::size_t n) { return table().dotc(x, y, n); }
double norm_sq(const Cplx* x, std::size_t n) { return table().norm_sq(x, n); }
void axpy(Cplx a, const Cplx* x, Cplx* y, std::size_t n) { table().axpy(a, x, y, n); }
void rot2(Cplx a, Cplx b, Cplx c, Cplx d, Cplx* x, Cplx* y, std::size_t n) {
  table().rot2(a, b, c, d, x, y, n);
}
const char* active_backend() { return table().name; }

}  // namespace entbound::kernels
