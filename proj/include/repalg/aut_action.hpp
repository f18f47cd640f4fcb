#pragma once

#include "repalg/qlinalg.hpp"
#include "repalg/rep_algebra.hpp"
#include "repalg/words.hpp"

#include <vector>

namespace repalg::action {

using algebra::AlgebraContext;
using poly::TruncPoly;

/// Substitution table of an endomorphism: s_ij(x_l) -> s_entry(x_l^e, i, j).
class AlgebraAction {
 public:
  AlgebraAction(const AlgebraContext& ctx, const words::Endo& e);
  const std::vector<TruncPoly>& images() const noexcept { return images_; }
  TruncPoly apply(const TruncPoly& f) const;

 private:
  std::vector<TruncPoly> images_;
};

/// f -> f^e
TruncPoly act_right(const AlgebraContext& ctx, const words::Endo& e, const TruncPoly& f);
/// sigma . f = f^{sigma^-1}
TruncPoly act_left(const AlgebraContext& ctx, const words::AutPair& a, const TruncPoly& f);
/// f^e - f; throws std::domain_error when f has a nonzero constant term.
TruncPoly s_sigma(const AlgebraContext& ctx, const words::Endo& e, const TruncPoly& f);

/// Algebra automorphism of J/J^k given by the images of the degree-1
/// generators, each truncated to degrees below k.
class QuotientAuto {
 public:
  QuotientAuto(int k, std::vector<TruncPoly> images);
  static QuotientAuto identity(const AlgebraContext& ctx, int k);

  int k() const noexcept { return k_; }
  const std::vector<TruncPoly>& images() const noexcept { return images_; }
  /// Image of f (which must lie in J), truncated below degree k.
  TruncPoly apply(const TruncPoly& f) const;

  friend bool operator==(const QuotientAuto&, const QuotientAuto&) = default;

 private:
  int k_;
  std::vector<TruncPoly> images_;
};

/// Drops every term of degree >= k.
TruncPoly truncate_below(const TruncPoly& f, int k);

/// Left action on J/J^k; a group homomorphism: rho_k(a*b) = rho_k(a) o rho_k(b).
QuotientAuto rho_k(const AlgebraContext& ctx, const words::AutPair& a, int k);
/// (a o b)(v) = a(b(v))
QuotientAuto compose(const QuotientAuto& a, const QuotientAuto& b);
/// Degree-1 block as a |T_1| x |T_1| matrix; column v holds the image of v.
qla::QMatrix linear_part(const AlgebraContext& ctx, const QuotientAuto& q);

}  // namespace repalg::action
