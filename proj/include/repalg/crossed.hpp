#pragma once

#include "repalg/aut_action.hpp"
#include "repalg/qlinalg.hpp"
#include "repalg/rep_algebra.hpp"
#include "repalg/words.hpp"

#include <functional>
#include <vector>

namespace repalg::crossed {

using algebra::AlgebraContext;
using poly::TruncPoly;

/// Element of Hom(gr^1, gr^2): column v is the homogeneous degree-2 image of
/// the degree-1 generator v.
struct Gr12Map {
  std::vector<TruncPoly> columns;

  static Gr12Map zero(const AlgebraContext& ctx);
  bool is_zero() const;
  /// Rows indexed by basis_Tk(2), columns by basis_Tk(1).
  qla::QMatrix to_matrix(const AlgebraContext& ctx) const;
  friend bool operator==(const Gr12Map&, const Gr12Map&) = default;
};

Gr12Map operator+(const Gr12Map& a, const Gr12Map& b);
Gr12Map operator-(const Gr12Map& a, const Gr12Map& b);
Gr12Map operator-(const Gr12Map& a);

/// Automorphism of J/J^3 given by generator images (degree 1 plus degree 2);
/// the action on degree 2 is induced multiplicatively.
using J3Auto = action::QuotientAuto;

qla::QMatrix degree1_block(const AlgebraContext& ctx, const J3Auto& a);
/// Quadratic parts of the generator images.
Gr12Map degree2_part(const J3Auto& a);
/// Induced map on gr^2 in T_2 coordinates (products of degree-1 images).
qla::QMatrix degree2_block(const AlgebraContext& ctx, const J3Auto& a);
/// Linear automorphism v -> sum_u beta[u][v] u with zero quadratic part.
/// Throws std::domain_error when beta is singular.
J3Auto section(const AlgebraContext& ctx, const qla::QMatrix& beta);
J3Auto inverse(const AlgebraContext& ctx, const J3Auto& a);

/// degree-2 part of rho_3(a) o section(rho_2(a))^-1, left action.
Gr12Map theta(const AlgebraContext& ctx, const words::AutPair& a);

/// (sigma . phi)(v) = sigma . phi(sigma^-1 . v), with sigma acting on gr^1 and
/// gr^2 through rho_2.
Gr12Map act_on_hom(const AlgebraContext& ctx, const words::AutPair& a, const Gr12Map& phi);
/// Same, with the degree-1 parts of the images of sigma and sigma^-1 given.
Gr12Map act_on_hom(const AlgebraContext& ctx, const J3Auto& beta, const J3Auto& beta_inv, const Gr12Map& phi);

/// Vector in H_Q = Q^n.
struct HQVec {
  std::vector<Rational> c;

  static HQVec zero(int n) { return HQVec{std::vector<Rational>(static_cast<std::size_t>(n))}; }
  static HQVec basis(int n, int i);
  friend bool operator==(const HQVec&, const HQVec&) = default;
};
HQVec operator+(const HQVec& a, const HQVec& b);
HQVec operator-(const HQVec& a, const HQVec& b);
HQVec operator-(const HQVec& a);
std::string to_string(const HQVec& v);

/// Element of H* (x) Lambda^2 H: rows x_p ^ x_q (p < q), columns x_l*.
struct LambdaMap {
  int n = 0;
  qla::QMatrix mat;

  static LambdaMap zero(int n);
  friend bool operator==(const LambdaMap&, const LambdaMap&) = default;
};
LambdaMap operator+(const LambdaMap& a, const LambdaMap& b);
LambdaMap operator-(const LambdaMap& a, const LambdaMap& b);
LambdaMap operator-(const LambdaMap& a);
std::string to_string(const LambdaMap& f);

/// Matrix of the left action on H: column l is the abelianization of a^-1(x_l).
qla::QMatrix h_action(const words::AutPair& a);
HQVec act(const words::AutPair& a, const HQVec& v);
/// phi -> Lambda^2(A) o phi o A^-1
LambdaMap act(const words::AutPair& a, const LambdaMap& f);

/// Convention for squares in the f_2 projection.
enum class SquareConvention {
  Divided,  // x_i^2 -> x_i (x) x_i
  Doubled,  // x_i^2 -> 2 x_i (x) x_i
};

/// p_3 o p_2 o p_1: coefficients of s_12(x_i) s_21(x_j) in the images of
/// s_11(x_l), sent to x_i ^ x_j.
LambdaMap project_f1(const AlgebraContext& ctx, const Gr12Map& t);
/// q_4 o q_3 o q_2 o p_1: coefficients of s_11(x_i) s_11(x_j) (i <= j) in the
/// images of s_11(x_l), symmetrized and contracted against x_l*.
HQVec project_f2(const AlgebraContext& ctx, const Gr12Map& t, SquareConvention conv = SquareConvention::Divided);

/// Extends generator values to a word by f(g w) = f(g) + g.f(w) and
/// f(g^-1) = -g^-1.f(g).
template <class V>
V cocycle_extend(const words::AutWord& w, int n, const std::function<V(const words::AutToken&)>& generator_value,
                 const std::function<V(const words::AutPair&, const V&)>& action, const V& zero) {
  V acc = zero;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    words::AutToken g = *it;
    const int reps = g.power < 0 ? -g.power : g.power;
    const bool inverse = g.power < 0;
    g.power = 1;
    const words::AutPair ga = words::to_aut(g, n);
    const V fg = generator_value(g);
    for (int r = 0; r < reps; ++r) {
      if (inverse) {
        const words::AutPair gi = ga.inverse();
        acc = action(gi, acc) - action(gi, fg);
      } else {
        acc = fg + action(ga, acc);
      }
    }
  }
  return acc;
}

/// f_K: U -> -x_1* (x) x_1 ^ x_2, zero on P, Q, S. Throws
/// std::invalid_argument for symbols other than P, Q, S, U.
LambdaMap fK_value(const words::AutWord& w, int n);
/// f_M: S -> -x_1, zero on P, Q, U.
HQVec fM_value(const words::AutWord& w, int n);
/// delta_x(sigma) = sigma.x - x with x = x_1 + ... + x_n.
HQVec delta_x(const words::AutPair& a);

/// f(s t) == f(s) + s.f(t)
template <class V>
bool verify_cocycle(const std::function<V(const words::AutWord&)>& f, const words::AutWord& s,
                    const words::AutWord& t, const std::function<V(const words::AutPair&, const V&)>& action, int n) {
  return f(words::concat(s, t)) == f(s) + action(words::to_aut(s, n), f(t));
}

}  // namespace repalg::crossed
