#include "qsdl/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>

namespace qsdl::kernels {

namespace scalar {

void gather_u32(const std::uint32_t *table, const std::uint32_t *idx, std::uint32_t *out,
                std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = table[idx[i]];
}

std::uint64_t popcount_and(const std::uint64_t *a, const std::uint64_t *b, std::size_t n) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

}  // namespace scalar

#if !defined(QSDL_HAVE_AVX2)
// Non-x86 builds: the avx2 entry points exist so tests link, but forward to
// the reference code and avx2_supported() reports false.
namespace avx2 {
void gather_u32(const std::uint32_t *table, const std::uint32_t *idx, std::uint32_t *out,
                std::size_t n) {
  scalar::gather_u32(table, idx, out, n);
}
std::uint64_t popcount_and(const std::uint64_t *a, const std::uint64_t *b, std::size_t n) {
  return scalar::popcount_and(a, b, n);
}
}  // namespace avx2
#endif

bool avx2_supported() {
#if defined(QSDL_HAVE_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

namespace {

Isa detect() {
  if (const char *env = std::getenv("QSDL_SIMD"); env && std::strcmp(env, "scalar") == 0)
    return Isa::scalar;
  return avx2_supported() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa> &current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

bool set_isa(Isa isa) {
  if (isa == Isa::avx2 && !avx2_supported()) return false;
  current().store(isa, std::memory_order_relaxed);
  return true;
}

const char *isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void gather_u32(const std::uint32_t *table, const std::uint32_t *idx, std::uint32_t *out,
                std::size_t n) {
  if (active_isa() == Isa::avx2) avx2::gather_u32(table, idx, out, n);
  else scalar::gather_u32(table, idx, out, n);
}

std::uint64_t popcount_and(const std::uint64_t *a, const std::uint64_t *b, std::size_t n) {
  if (active_isa() == Isa::avx2) return avx2::popcount_and(a, b, n);
  return scalar::popcount_and(a, b, n);
}

}  // namespace qsdl::kernels
