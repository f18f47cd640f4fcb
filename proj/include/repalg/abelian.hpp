#pragma once

#include "repalg/crossed.hpp"
#include "repalg/qlinalg.hpp"
#include "repalg/rep_algebra.hpp"
#include "repalg/words.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace repalg::abelian {

using algebra::AlgebraContext;
using crossed::Gr12Map;
using poly::TruncPoly;

/// t_{ij,hk}(p,q), u_{ij,hk}(p,q) or v_ij(p,q); for v only (i,j) is used.
struct YElement {
  enum class Kind { T, U, V };
  Kind kind = Kind::V;
  int i = 1, j = 1, h = 1, k = 1;
  int p = 1, q = 1;

  /// "t(1,2,2,1;1,2)", "u(1,1,1,2;1,1)", "v(1,1;1,2)"
  std::string label() const;
  friend bool operator==(const YElement&, const YElement&) = default;
};

/// Ordered pairs (i,j) <lex (h,k), both != (m,m).
std::vector<std::array<int, 4>> index_set_I(int m);
/// I without (1,j,i,1), (1,1,i,1), (1,1,1,j) for i,j != 1.
std::vector<std::array<int, 4>> index_set_J(int m);

/// |Y| = m^2(m^2-1)/2 * n(n+1)/2 + (m^2-1)(m^2-4)/2 * n(n-1)/2
std::uint64_t gr2H_dim_formula(int m, int n);
/// Multiplicity of Lambda^2 H in gr^2 obtained by counting Y.
std::uint64_t lambda_multiplicity_counted(int m);
/// The alternative multiplicity (m^2-1)^2 (m^2-4) / 2, kept for the report.
std::uint64_t lambda_multiplicity_alternative(int m);

/// Degree <= 2 model of J_H/J_H^3: gr^2 is gr^2 of the free case modulo the
/// span of the relations R_ij(p,q). Elements are stored through the free
/// context; degree-2 parts are kept in canonical form (lifted from Y).
class HAlgebraContext {
 public:
  HAlgebraContext(int m, int n, int cap = 3);

  const AlgebraContext& free() const noexcept { return ctx_; }
  int m() const noexcept { return ctx_.m(); }
  int n() const noexcept { return ctx_.n(); }

  /// Degree-1 generators s_ij(x_l), as variable indices of the free context.
  std::vector<std::uint32_t> gr1H_basis() const;
  std::size_t gr1H_dim() const noexcept { return ctx_.nvars(); }

  const std::vector<YElement>& basis_Y() const noexcept { return y_; }
  const std::vector<TruncPoly>& y_polys() const noexcept { return y_polys_; }
  std::size_t gr2H_dim() const noexcept { return y_.size(); }
  /// Throws std::out_of_range for an element that is not in Y.
  std::size_t y_position(const YElement& e) const;

  /// One relation per (i,j) and p<q, ordered by (p,q) then (i,j).
  const std::vector<TruncPoly>& relations_R() const noexcept { return relations_; }
  std::size_t relation_rank() const noexcept { return relation_rank_; }

  /// Y coordinates of the class of a homogeneous degree-2 element.
  qla::QVector reduce_to_Y(const TruncPoly& degree2) const;
  TruncPoly lift(const qla::QVector& y) const;
  /// lift(reduce_to_Y(.)): a fixed representative of the class.
  TruncPoly canonical(const TruncPoly& degree2) const;
  Gr12Map canonical(const Gr12Map& phi) const;

  /// Left action of a on J_H/J_H^3 through Aut H; degree-2 parts canonical.
  action::QuotientAuto rho3(const words::AutPair& a) const;

  std::string name(const qla::QVector& y) const;

 private:
  AlgebraContext ctx_;
  std::vector<YElement> y_;
  std::vector<TruncPoly> y_polys_;
  std::vector<TruncPoly> relations_;
  std::size_t relation_rank_ = 0;
  algebra::BasisIndex t2_;
  qla::QMatrix reduce_;  // |Y| x |T_2|
};

/// Matrix of the unit s_ij(w) + delta_ij for a word w with abelianization c,
/// computed from (1 + S_l)^c = 1 + c S_l + binom(c,2) S_l^2 mod J^3.
algebra::PolyMatrix abelian_word_matrix(const AlgebraContext& ctx, const words::AbelianVector& c);

/// Crossed homomorphism on J_H/J_H^3; columns canonical.
Gr12Map theta_H(const HAlgebraContext& hctx, const words::AutPair& a);
Gr12Map act_on_hom_H(const HAlgebraContext& hctx, const words::AutPair& a, const Gr12Map& phi);
/// Rows indexed by Y, columns by gr1H_basis.
qla::QMatrix to_Y_matrix(const HAlgebraContext& hctx, const Gr12Map& phi);

/// p'_4 o p'_3 o p'_2 o p'_1: Y coordinates of v_11(i,j) in the images of
/// s_11(x_l), symmetrized and contracted against x_l*.
crossed::HQVec project_fH(const HAlgebraContext& hctx, const Gr12Map& phi,
                          crossed::SquareConvention conv = crossed::SquareConvention::Divided);

/// f_H on a word in P, Q, S, U: generator values by projection of theta_H,
/// extended by the cocycle recursion on H.
crossed::HQVec fH_value(const HAlgebraContext& hctx, const words::AutWord& w);

}  // namespace repalg::abelian
