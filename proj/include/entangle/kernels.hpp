#pragma once

// Inner-loop arithmetic on contiguous complex arrays.
//
// Each kernel has a scalar reference implementation and, on x86-64 builds,
// an AVX2/FMA variant. The variant is chosen once at runtime from the CPU
// feature bits and can be overridden with the ENTANGLE_KERNELS environment
// variable ("scalar", "avx2" or "auto") or with select_isa().

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace entangle::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  const char* name;
  // sum_k a[k] * conj(b[k])
  cplx (*dotc)(const cplx* a, const cplx* b, std::size_t n);
  // sum_k a[k] * b[k]
  cplx (*dotu)(const cplx* a, const cplx* b, std::size_t n);
  // sum_k |a[k]|^2
  double (*norm_sq)(const cplx* a, std::size_t n);
};

const KernelTable& scalar_table() noexcept;

// nullptr when the variant was not compiled in or the CPU lacks the features.
const KernelTable* avx2_table() noexcept;

bool isa_available(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name) noexcept;

// The table used by the library. Selection is process-wide and thread-safe.
const KernelTable& active() noexcept;

// Returns false (and leaves the selection untouched) if isa is unavailable.
bool select_isa(Isa isa) noexcept;
void select_best() noexcept;

inline cplx dotc(std::span<const cplx> a, std::span<const cplx> b) {
  return active().dotc(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline cplx dotu(std::span<const cplx> a, std::span<const cplx> b) {
  return active().dotu(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline double norm_sq(std::span<const cplx> a) { return active().norm_sq(a.data(), a.size()); }

namespace detail {
extern const KernelTable kScalarTable;
#if defined(ENTANGLE_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
}  // namespace detail

}  // namespace entangle::kernels
