#pragma once

#include "repalg/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace repalg::poly {

inline constexpr int kMaxCap = 8;
inline constexpr int kInfiniteDegree = std::numeric_limits<int>::max();

enum class Namespace : std::uint8_t { Algebra, Jet };

/// The ambient truncated ring: variable namespace, number of variables, cap.
struct PolySpace {
  Namespace ns = Namespace::Algebra;
  std::uint32_t nvars = 0;
  int cap = 1;
  friend bool operator==(const PolySpace&, const PolySpace&) = default;
};

/// Variable identity. Algebra variables are s_ij(x_l) with (i,j) != (m,m);
/// jet variables use l as the parameter index and i = j = 0.
struct VarId {
  Namespace ns = Namespace::Algebra;
  int i = 0;
  int j = 0;
  int l = 0;
  friend bool operator==(const VarId&, const VarId&) = default;
};

/// Index of s_ij(x_l) in the (l, i, j) ordering with (m,m) skipped.
std::uint32_t algebra_index(int i, int j, int l, int m);
VarId algebra_var(std::uint32_t index, int m);
std::string var_name(const VarId& v);

/// Commutative monomial stored as its sorted multiset of variable indices.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(std::uint32_t v);
  static Monomial from_vars(std::span<const std::uint32_t> vars);

  int degree() const noexcept { return deg_; }
  std::span<const std::uint16_t> vars() const noexcept { return {v_.data(), static_cast<std::size_t>(deg_)}; }
  int exponent(std::uint32_t v) const noexcept;
  /// Product; throws std::length_error beyond kMaxCap factors.
  Monomial times(const Monomial& other) const;
  /// Drops the last (largest) factor.
  Monomial without_last() const;
  std::uint16_t last() const { return v_[static_cast<std::size_t>(deg_ - 1)]; }
  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.deg_ == b.deg_ && a.v_ == b.v_;
  }
  /// Graded order: degree first, then lexicographic on the sorted factors.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.deg_ <=> b.deg_; c != 0) return c;
    return a.v_ <=> b.v_;
  }

 private:
  std::array<std::uint16_t, kMaxCap> v_{};
  std::uint8_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
  Monomial mono;
  Rational coef;
  friend bool operator==(const Term&, const Term&) = default;
};

using VarNamer = std::function<std::string(std::uint32_t)>;

/// Sparse polynomial over Q truncated above total degree cap. Terms are kept
/// sorted in the monomial order with nonzero coefficients.
class TruncPoly {
 public:
  TruncPoly() = default;
  explicit TruncPoly(PolySpace space);

  static TruncPoly constant(PolySpace space, const Rational& c);
  static TruncPoly variable(PolySpace space, std::uint32_t v);
  static TruncPoly monomial(PolySpace space, const Monomial& m, const Rational& c);
  /// Merges duplicates, drops zeros and monomials above cap.
  static TruncPoly from_terms(PolySpace space, std::vector<Term> terms);

  const PolySpace& space() const noexcept { return space_; }
  int cap() const noexcept { return space_.cap; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  int min_degree() const noexcept;
  int max_degree() const noexcept;

  /// Same polynomial viewed in a space with a different cap (truncating).
  TruncPoly with_cap(int cap) const;

  TruncPoly operator-() const;
  TruncPoly& operator+=(const TruncPoly& g);
  TruncPoly& operator-=(const TruncPoly& g);
  TruncPoly& operator*=(const TruncPoly& g);
  friend TruncPoly operator+(TruncPoly f, const TruncPoly& g) { return f += g; }
  friend TruncPoly operator-(TruncPoly f, const TruncPoly& g) { return f -= g; }
  friend TruncPoly operator*(const TruncPoly& f, const TruncPoly& g);
  friend TruncPoly operator*(const Rational& c, const TruncPoly& f);
  friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

  /// Canonical text, e.g. "-1 s(1,1;x1) + 1 s(1,2;x1)*s(2,1;x1)"; zero prints "0".
  std::string to_string(const VarNamer& namer) const;

 private:
  PolySpace space_;
  std::vector<Term> terms_;

  friend class Accumulator;
};

/// Hash-based sum of scaled polynomials, finalized into canonical form.
class Accumulator {
 public:
  explicit Accumulator(PolySpace space) : space_(space) {}
  void add(const Monomial& m, const Rational& c);
  void add_scaled(const TruncPoly& f, const Rational& c);
  /// Adds c * f * g without materializing f * g.
  void add_product(const TruncPoly& f, const TruncPoly& g, const Rational& c);
  TruncPoly finish();

 private:
  PolySpace space_;
  std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

TruncPoly add(const TruncPoly& f, const TruncPoly& g);
TruncPoly scale(const Rational& c, const TruncPoly& f);
TruncPoly mul(const TruncPoly& f, const TruncPoly& g);
int min_degree(const TruncPoly& f);
TruncPoly graded_part(const TruncPoly& f, int k);
/// Throws std::domain_error on a zero constant term.
TruncPoly inverse_of_unit(const TruncPoly& f);

/// Replaces variable v by images[v] (one image per variable of f's space).
/// All images share one target space, which determines the result's cap.
/// Throws std::domain_error if an image has a nonzero constant term.
TruncPoly substitute(const TruncPoly& f, std::span<const TruncPoly> images);
/// Partial substitution inside f's own space; unmapped variables are kept.
TruncPoly substitute(const TruncPoly& f, const std::map<std::uint32_t, TruncPoly>& images);

/// Namer for algebra variables of SL(m): "s(i,j;xl)".
VarNamer algebra_namer(int m);
/// Namer for jet parameters: "z<index+1>".
VarNamer jet_namer();

}  // namespace repalg::poly
