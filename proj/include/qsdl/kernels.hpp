#pragma once
// Two inner loops shared by the group engine and the design checks, with a
// portable reference version and an AVX2 version picked at run time.
// QSDL_SIMD=scalar in the environment forces the reference path.

#include <cstddef>
#include <cstdint>

namespace qsdl::kernels {

enum class Isa { scalar, avx2 };

bool avx2_supported();
Isa active_isa();
// Tests use this to pin a path; requesting avx2 on a machine without it is
// ignored and returns false.
bool set_isa(Isa isa);
const char *isa_name(Isa isa);

// out[i] = table[idx[i]] for i < n. out must not alias idx.
void gather_u32(const std::uint32_t *table, const std::uint32_t *idx, std::uint32_t *out,
                std::size_t n);

// Number of set bits in a[i] & b[i] summed over i < n.
std::uint64_t popcount_and(const std::uint64_t *a, const std::uint64_t *b, std::size_t n);

namespace scalar {
void gather_u32(const std::uint32_t *table, const std::uint32_t *idx, std::uint32_t *out,
                std::size_t n);
std::uint64_t popcount_and(const std::uint64_t *a, const std::uint64_t *b, std::size_t n);
}  // namespace scalar

namespace avx2 {
void gather_u32(const std::uint32_t *table, const std::uint32_t *idx, std::uint32_t *out,
                std::size_t n);
std::uint64_t popcount_and(const std::uint64_t *a, const std::uint64_t *b, std::size_t n);
}  // namespace avx2

}  // namespace qsdl::kernels
