// Compiled with -mavx2 -mfma. Nothing in here may run before the dispatcher
// has confirmed the CPU supports both.

#include "entangle/kernels.hpp"

#include <immintrin.h>

namespace entangle::kernels {
namespace {

// std::complex<double> is layout-compatible with double[2], so a __m256d
// holds two consecutive complex numbers as [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }

inline double hsum_even(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return t[0] + t[2];
}

inline double hsum_odd(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return t[1] + t[3];
}

cplx dotc_avx2(const cplx* a, const cplx* b, std::size_t n) {
  __m256d same0 = _mm256_setzero_pd(), same1 = _mm256_setzero_pd();
  __m256d swap0 = _mm256_setzero_pd(), swap1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d a0 = load2(a + k), a1 = load2(a + k + 2);
    const __m256d b0 = load2(b + k), b1 = load2(b + k + 2);
    same0 = _mm256_fmadd_pd(a0, b0, same0);
    same1 = _mm256_fmadd_pd(a1, b1, same1);
    swap0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), swap0);
    swap1 = _mm256_fmadd_pd(a1, _mm256_permute_pd(b1, 0b0101), swap1);
  }
  for (; k + 2 <= n; k += 2) {
    const __m256d a0 = load2(a + k), b0 = load2(b + k);
    same0 = _mm256_fmadd_pd(a0, b0, same0);
    swap0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), swap0);
  }
  const __m256d same = _mm256_add_pd(same0, same1);
  const __m256d swap = _mm256_add_pd(swap0, swap1);
  // same = [ar*br, ai*bi, ...], swap = [ar*bi, ai*br, ...]
  double re = hsum_even(same) + hsum_odd(same);
  double im = hsum_odd(swap) - hsum_even(swap);
  if (k < n) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double br = b[k].real(), bi = b[k].imag();
    re += ar * br + ai * bi;
    im += ai * br - ar * bi;
  }
  return {re, im};
}

cplx dotu_avx2(const cplx* a, const cplx* b, std::size_t n) {
  __m256d same0 = _mm256_setzero_pd(), same1 = _mm256_setzero_pd();
  __m256d swap0 = _mm256_setzero_pd(), swap1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d a0 = load2(a + k), a1 = load2(a + k + 2);
    const __m256d b0 = load2(b + k), b1 = load2(b + k + 2);
    same0 = _mm256_fmadd_pd(a0, b0, same0);
    same1 = _mm256_fmadd_pd(a1, b1, same1);
    swap0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), swap0);
    swap1 = _mm256_fmadd_pd(a1, _mm256_permute_pd(b1, 0b0101), swap1);
  }
  for (; k + 2 <= n; k += 2) {
    const __m256d a0 = load2(a + k), b0 = load2(b + k);
    same0 = _mm256_fmadd_pd(a0, b0, same0);
    swap0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), swap0);
  }
  const __m256d same = _mm256_add_pd(same0, same1);
  const __m256d swap = _mm256_add_pd(swap0, swap1);
  double re = hsum_even(same) - hsum_odd(same);
  double im = hsum_even(swap) + hsum_odd(swap);
  if (k < n) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double br = b[k].real(), bi = b[k].imag();
    re += ar * br - ai * bi;
    im += ar * bi + ai * br;
  }
  return {re, im};
}

double norm_sq_avx2(const cplx* a, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d a0 = load2(a + k), a1 = load2(a + k + 2);
    acc0 = _mm256_fmadd_pd(a0, a0, acc0);
    acc1 = _mm256_fmadd_pd(a1, a1, acc1);
  }
  for (; k + 2 <= n; k += 2) {
    const __m256d a0 = load2(a + k);
    acc0 = _mm256_fmadd_pd(a0, a0, acc0);
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  double total = hsum_even(acc) + hsum_odd(acc);
  if (k < n) total += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
  return total;
}

}  // namespace

namespace detail {
const KernelTable kAvx2Table{Isa::Avx2, "avx2", &dotc_avx2, &dotu_avx2, &norm_sq_avx2};
}  // namespace detail

}  // namespace entangle::kernels
