#include "repalg/aut_action.hpp"

#include <stdexcept>

namespace repalg::action {

AlgebraAction::AlgebraAction(const AlgebraContext& ctx, const words::Endo& e) {
  if (e.rank() != ctx.n()) throw std::invalid_argument("AlgebraAction: endomorphism rank differs from context n");
  images_.assign(ctx.nvars(), ctx.zero());
  const int m = ctx.m();
  for (int l = 1; l <= ctx.n(); ++l) {
    algebra::PolyMatrix wm = ctx.word_matrix(e.image(l));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        if (i == m && j == m) continue;
        TruncPoly s = wm.at(i, j);
        if (i == j) s -= ctx.one();
        images_[ctx.var(i, j, l)] = std::move(s);
      }
  }
}

TruncPoly AlgebraAction::apply(const TruncPoly& f) const { return poly::substitute(f, images_); }

TruncPoly act_right(const AlgebraContext& ctx, const words::Endo& e, const TruncPoly& f) {
  if (!(f.space() == ctx.space())) throw std::invalid_argument("act_right: polynomial from another context");
  return AlgebraAction(ctx, e).apply(f);
}

TruncPoly act_left(const AlgebraContext& ctx, const words::AutPair& a, const TruncPoly& f) {
  return act_right(ctx, a.bwd(), f);
}

TruncPoly s_sigma(const AlgebraContext& ctx, const words::Endo& e, const TruncPoly& f) {
  if (!f.constant_term().is_zero()) throw std::domain_error("s_sigma: argument is not in J");
  return act_right(ctx, e, f) - f;
}

TruncPoly truncate_below(const TruncPoly& f, int k) {
  std::vector<poly::Term> ts;
  for (const poly::Term& t : f.terms())
    if (t.mono.degree() < k) ts.push_back(t);
  return TruncPoly::from_terms(f.space(), std::move(ts));
}

QuotientAuto::QuotientAuto(int k, std::vector<TruncPoly> images) : k_(k), images_(std::move(images)) {
  for (TruncPoly& g : images_) {
    if (!g.constant_term().is_zero()) throw std::domain_error("QuotientAuto: image is not in J");
    g = truncate_below(g, k_);
  }
}

QuotientAuto QuotientAuto::identity(const AlgebraContext& ctx, int k) {
  std::vector<TruncPoly> im;
  for (std::uint32_t v = 0; v < ctx.nvars(); ++v) im.push_back(TruncPoly::variable(ctx.space(), v));
  return QuotientAuto(k, std::move(im));
}

TruncPoly QuotientAuto::apply(const TruncPoly& f) const {
  if (!f.constant_term().is_zero()) throw std::domain_error("QuotientAuto::apply: argument is not in J");
  return truncate_below(poly::substitute(f, images_), k_);
}

QuotientAuto rho_k(const AlgebraContext& ctx, const words::AutPair& a, int k) {
  if (k < 1 || k > ctx.cap() + 1) throw std::invalid_argument("rho_k: k must satisfy 1 <= k <= cap + 1");
  return QuotientAuto(k, AlgebraAction(ctx, a.bwd()).images());
}

QuotientAuto compose(const QuotientAuto& a, const QuotientAuto& b) {
  if (a.k() != b.k()) throw std::invalid_argument("compose: quotient degrees differ");
  std::vector<TruncPoly> im;
  for (const TruncPoly& g : b.images()) im.push_back(a.apply(g));
  return QuotientAuto(a.k(), std::move(im));
}

qla::QMatrix linear_part(const AlgebraContext& ctx, const QuotientAuto& q) {
  const std::uint32_t nv = ctx.nvars();
  qla::QMatrix mat(nv, nv);
  for (std::uint32_t c = 0; c < nv; ++c)
    for (const poly::Term& t : q.images()[c].terms())
      if (t.mono.degree() == 1) mat.at(t.mono.last(), c) = t.coef;
  return mat;
}

}  // namespace repalg::action
