#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace repalg {

/// Exact rational number in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are kept
/// inline; results that overflow spill into a GMP rational and are demoted
/// again as soon as they fit. The representation is canonical: a value is
/// stored in GMP form only if it does not fit the inline form.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT: implicit by design
  Rational(int value) noexcept : num_(value) {}           // NOLINT
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  /// Parses "a", "-a", "a/b"; arbitrary size.
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const noexcept;
  bool is_inline() const noexcept { return !big_; }

  mpq_class to_mpq() const;
  std::string to_string() const;
  std::size_t hash() const;

  /// Numerator and denominator reduced modulo p (p prime, < 2^62). Returns
  /// false when p divides the denominator.
  bool reduce_mod(std::uint64_t p, std::uint64_t& out) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;

  void assign_mpq(const mpq_class& q);
  void assign_wide(__int128 num, __int128 den);
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace repalg

template <>
struct std::hash<repalg::Rational> {
  std::size_t operator()(const repalg::Rational& q) const { return q.hash(); }
};
