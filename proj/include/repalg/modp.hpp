#pragma once

#include "repalg/qlinalg.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

// Dense elimination modulo the Mersenne prime 2^31 - 1. Used only as a fast
// full-rank certificate ahead of exact rational elimination.
namespace repalg::modp {

inline constexpr std::uint32_t kPrime = 2147483647u;

enum class Kernel { Scalar, Avx2 };

bool avx2_available();
Kernel active_kernel();
/// Overrides runtime dispatch (tests). Throws if the kernel is unsupported here.
void set_kernel(Kernel k);
void reset_kernel();

/// dst[i] = (dst[i] + factor * src[i]) mod p for i < n; inputs reduced mod p.
void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n);
void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n);
void axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n);

std::uint32_t mul(std::uint32_t a, std::uint32_t b);
std::uint32_t inv(std::uint32_t a);

/// Rank of a row-major rows x cols matrix with entries in [0, p).
std::size_t rank_dense(std::vector<std::uint32_t> data, std::size_t rows, std::size_t cols, Kernel k);

/// Rank of the reduction mod p; nullopt if some denominator vanishes mod p.
std::optional<std::size_t> rank(const qla::QMatrix& m);

}  // namespace repalg::modp
