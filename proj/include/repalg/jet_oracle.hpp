#pragma once

#include "repalg/abelian.hpp"
#include "repalg/rep_algebra.hpp"
#include "repalg/trunc_poly.hpp"
#include "repalg/words.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace repalg::jet {

using algebra::AlgebraContext;
using algebra::PolyMatrix;
using poly::TruncPoly;

/// SL(m) matrices over a truncated power-series ring in jet parameters, one
/// per generator of F_n, each congruent to the identity.
struct JetRep {
  int m = 0;
  int n = 0;
  poly::PolySpace space;
  std::vector<PolyMatrix> mats;  // mats[l-1] is the image of x_l

  const PolyMatrix& image(int l) const { return mats.at(static_cast<std::size_t>(l - 1)); }
  friend bool operator==(const JetRep&, const JetRep&) = default;
};

/// All parameters zero: the trivial representation.
JetRep trivial_jet_rep(const AlgebraContext& ctx, std::uint32_t nparams, int cap);

/// x_l -> prod_{i != j} (1 + L_ij F_ij) * diag(1 + L_1, ..., 1 + L_{m-1}, d_m)
/// with random integer linear forms in the parameters of generator l and d_m
/// chosen so that the determinant is 1.
JetRep random_jet_rep(const AlgebraContext& ctx, std::uint64_t seed, int params_per_generator, int cap);

/// x_l -> B diag(1 + y_{l,1}, ..., 1 + y_{l,m-1}, d_l) B^-1 with one random
/// unimodular integer matrix B shared by all generators.
JetRep commuting_jet_rep(const AlgebraContext& ctx, std::uint64_t seed, int cap);

/// Inverse of a matrix congruent to the identity, by the finite geometric series.
PolyMatrix unipotent_inverse(const PolyMatrix& a);
PolyMatrix jet_word_product(const JetRep& rho, const words::Word& w);

/// Image of f under s_ij(x_l) -> rho(x_l)_ij - delta_ij; the result is
/// truncated at the smaller of the two caps. Throws std::invalid_argument
/// when f does not belong to an algebra space matching rho.
TruncPoly evaluate(const TruncPoly& f, const JetRep& rho);
/// The substitution table used by evaluate.
std::vector<TruncPoly> evaluation_images(const JetRep& rho, int cap);

struct RankReport {
  std::size_t rank = 0;
  std::size_t expected = 0;
  std::size_t rows = 0;
  int attempts = 0;
  bool full() const noexcept { return rank == expected; }
};

/// Column rank of the degree-k jet parts of the T_k monomials over several
/// random representations; up to three seeds are tried.
RankReport tk_independence(const AlgebraContext& ctx, int k, std::uint64_t seed, int params_per_generator = 1);
/// Same for T_1 (degree 1) and Y (degree 2) under commuting representations.
RankReport t1bar_independence(const abelian::HAlgebraContext& hctx, std::uint64_t seed);
RankReport y_independence(const abelian::HAlgebraContext& hctx, std::uint64_t seed);

/// Column rank of the degree-k jet parts of fs over reps drawn from make_rep
/// until at least min_rows rows are collected.
std::size_t stacked_rank(const std::vector<TruncPoly>& fs, int k, std::size_t min_rows,
                         const std::function<JetRep(std::uint64_t)>& make_rep, std::uint64_t seed,
                         std::size_t* rows_out = nullptr);

}  // namespace repalg::jet
