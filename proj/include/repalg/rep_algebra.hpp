#pragma once

#include "repalg/qlinalg.hpp"
#include "repalg/trunc_poly.hpp"
#include "repalg/words.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace repalg::algebra {

using poly::Monomial;
using poly::PolySpace;
using poly::TruncPoly;

/// Square matrix of truncated polynomials; indices are 1-based.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int m, PolySpace space);
  static PolyMatrix identity(int m, PolySpace space);

  int size() const noexcept { return m_; }
  const PolySpace& space() const noexcept { return space_; }
  TruncPoly& at(int i, int j) { return e_[index(i, j)]; }
  const TruncPoly& at(int i, int j) const { return e_[index(i, j)]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  int m_ = 0;
  PolySpace space_;
  std::vector<TruncPoly> e_;

  std::size_t index(int i, int j) const;
};

/// Laplace expansion; used for m <= 3.
TruncPoly det_cofactor(const PolyMatrix& a);
PolyMatrix adjugate_cofactor(const PolyMatrix& a);
/// Elimination with pivots whose constant term is invertible; used for m >= 4.
/// Throws std::domain_error when the matrix is singular modulo the ideal.
TruncPoly det_elimination(const PolyMatrix& a);
PolyMatrix adjugate_elimination(const PolyMatrix& a);
TruncPoly det(const PolyMatrix& a);
PolyMatrix adjugate(const PolyMatrix& a);

/// A product of variables s_ij(x_l) in which (m,m) may occur; the elements of
/// the alternative basis T_k' are of this form.
using FactorProduct = std::vector<poly::VarId>;

/// Homogeneous degree-k element in normal-form coordinates.
struct GradedVec {
  int degree = 0;
  TruncPoly part;
  friend bool operator==(const GradedVec&, const GradedVec&) = default;
};

/// Position lookup for an ordered monomial basis.
class BasisIndex {
 public:
  BasisIndex() = default;
  explicit BasisIndex(std::vector<Monomial> basis);
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  /// Throws std::out_of_range for a monomial not in the basis.
  std::size_t position(const Monomial& m) const;
  qla::QVector dense(const TruncPoly& homogeneous) const;
  TruncPoly sparse(const qla::QVector& v, PolySpace space) const;

 private:
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, poly::MonomialHash> pos_;
};

/// Truncated SL(m) representation algebra of F_n in normal form: the free
/// variables are s_ij(x_l) with (i,j) != (m,m), and s_mm(x_l) is the
/// polynomial forced by det = 1.
class AlgebraContext {
 public:
  AlgebraContext(int m, int n, int cap);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int cap() const noexcept { return cap_; }
  int vars_per_generator() const noexcept { return m_ * m_ - 1; }
  std::uint32_t nvars() const noexcept { return space_.nvars; }
  const PolySpace& space() const noexcept { return space_; }

  std::uint32_t var(int i, int j, int l) const { return poly::algebra_index(i, j, l, m_); }
  /// s_ij(x_l) as a polynomial; (m,m) yields the eliminated polynomial.
  TruncPoly s(int i, int j, int l) const;
  TruncPoly zero() const { return TruncPoly(space_); }
  TruncPoly one() const { return TruncPoly::constant(space_, 1); }

  const TruncPoly& smm_polynomial(int l) const;
  const PolyMatrix& generator_matrix(int l) const;
  const PolyMatrix& generator_inverse(int l) const;

  PolyMatrix word_matrix(const words::Word& w) const;
  TruncPoly s_entry(const words::Word& w, int i, int j) const;

  std::vector<Monomial> basis_Tk(int k) const;
  std::vector<FactorProduct> basis_Tk_prime(int k) const;
  TruncPoly expand(const FactorProduct& t) const;

  GradedVec coords(const TruncPoly& f, int k) const;
  bool in_Jk(const TruncPoly& f, int k) const { return f.min_degree() >= k; }

  poly::VarNamer namer() const { return poly::algebra_namer(m_); }
  std::string name(const Monomial& mono) const;
  std::string name(const FactorProduct& t) const;
  std::string format(const TruncPoly& f) const { return f.to_string(namer()); }

  void check_word(const words::Word& w) const;

 private:
  int m_;
  int n_;
  int cap_;
  PolySpace space_;
  std::vector<TruncPoly> smm_;
  std::vector<PolyMatrix> gens_;
  std::vector<PolyMatrix> gen_invs_;
};

std::uint64_t binomial(std::uint64_t a, std::uint64_t b);
/// binom((m^2-1) n + k - 1, k)
std::uint64_t dim_Tk(int m, int n, int k);
/// Dimension of the direct sum over compositions (e_1..e_{m^2-1}) of k of the
/// tensor products of symmetric powers S^{e_r}(Q^n).
std::uint64_t dim_symmetric_sum(int m, int n, int k);

/// Change-of-basis matrix: column c holds the T_k coordinates of the c-th
/// element of T_k'.
qla::QMatrix tk_prime_change_of_basis(const AlgebraContext& ctx, int k);

}  // namespace repalg::algebra
