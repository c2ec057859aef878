#include "entangle/kernels.hpp"

namespace entangle::kernels {
namespace {

cplx dotc_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double br = b[k].real(), bi = b[k].imag();
    re += ar * br + ai * bi;
    im += ai * br - ar * bi;
  }
  return {re, im};
}

cplx dotu_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double br = b[k].real(), bi = b[k].imag();
    re += ar * br - ai * bi;
    im += ar * bi + ai * br;
  }
  return {re, im};
}

double norm_sq_scalar(const cplx* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    acc += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
  }
  return acc;
}

}  // namespace

namespace detail {
const KernelTable kScalarTable{Isa::Scalar, "scalar", &dotc_scalar, &dotu_scalar, &norm_sq_scalar};
}  // namespace detail

}  // namespace entangle::kernels
