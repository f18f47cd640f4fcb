#include "repalg/modp.hpp"

#include <atomic>
#include <stdexcept>
#include <utility>

namespace repalg::modp {
namespace {

std::uint32_t fold(std::uint64_t x) {
  x = (x & kPrime) + (x >> 31);
  x = (x & kPrime) + (x >> 31);
  return static_cast<std::uint32_t>(x >= kPrime ? x - kPrime : x);
}

Kernel detect() { return avx2_available() ? Kernel::Avx2 : Kernel::Scalar; }

std::atomic<Kernel>& current() {
  static std::atomic<Kernel> k{detect()};
  return k;
}

}  // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Kernel active_kernel() { return current().load(std::memory_order_relaxed); }

void set_kernel(Kernel k) {
  if (k == Kernel::Avx2 && !avx2_available()) throw std::runtime_error("modp: AVX2 not supported on this CPU");
  current().store(k, std::memory_order_relaxed);
}

void reset_kernel() { current().store(detect(), std::memory_order_relaxed); }

std::uint32_t mul(std::uint32_t a, std::uint32_t b) { return fold(static_cast<std::uint64_t>(a) * b); }

std::uint32_t inv(std::uint32_t a) {
  if (a == 0) throw std::domain_error("modp: zero has no inverse");
  std::uint32_t r = 1;
  std::uint32_t base = a;
  for (std::uint32_t e = kPrime - 2; e != 0; e >>= 1) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
  }
  return r;
}

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = fold(static_cast<std::uint64_t>(factor) * src[i] + dst[i]);
}

void axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n) {
  if (active_kernel() == Kernel::Avx2)
    axpy_avx2(dst, src, factor, n);
  else
    axpy_scalar(dst, src, factor, n);
}

std::size_t rank_dense(std::vector<std::uint32_t> a, std::size_t rows, std::size_t cols, Kernel k) {
  if (a.size() != rows * cols) throw std::invalid_argument("modp::rank_dense: size mismatch");
  auto kernel = k == Kernel::Avx2 ? &axpy_avx2 : &axpy_scalar;
  if (k == Kernel::Avx2 && !avx2_available()) throw std::runtime_error("modp: AVX2 not supported on this CPU");
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
    std::uint32_t* prow = &a[r * cols];
    std::uint32_t pinv = inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = mul(prow[j], pinv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint32_t e = a[i * cols + c];
      if (e == 0) continue;
      kernel(&a[i * cols + c], prow + c, kPrime - e, cols - c);
    }
    ++r;
  }
  return r;
}

std::optional<std::size_t> rank(const qla::QMatrix& m) {
  std::vector<std::uint32_t> data(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::uint64_t v;
      if (!m.at(i, j).reduce_mod(kPrime, v)) return std::nullopt;
      data[i * m.cols() + j] = static_cast<std::uint32_t>(v);
    }
  return rank_dense(std::move(data), m.rows(), m.cols(), active_kernel());
}

}  // namespace repalg::modp
