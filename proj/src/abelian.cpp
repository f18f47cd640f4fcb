#include "repalg/abelian.hpp"

#include "repalg/aut_action.hpp"

#include <map>
#include <stdexcept>

namespace repalg::abelian {

using crossed::HQVec;
using poly::Monomial;
using YKind = YElement::Kind;

std::string YElement::label() const {
  auto s = [](int x) { return std::to_string(x); };
  const std::string pq = s(p) + "," + s(q) + ")";
  switch (kind) {
    case Kind::T:
      return "t(" + s(i) + "," + s(j) + "," + s(h) + "," + s(k) + ";" + pq;
    case Kind::U:
      return "u(" + s(i) + "," + s(j) + "," + s(h) + "," + s(k) + ";" + pq;
    case Kind::V:
      break;
  }
  return "v(" + s(i) + "," + s(j) + ";" + pq;
}

std::vector<std::array<int, 4>> index_set_I(int m) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i != m || j != m) cells.emplace_back(i, j);
  std::vector<std::array<int, 4>> out;
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a + 1; b < cells.size(); ++b)
      out.push_back({cells[a].first, cells[a].second, cells[b].first, cells[b].second});
  return out;
}

std::vector<std::array<int, 4>> index_set_J(int m) {
  std::vector<std::array<int, 4>> out;
  for (const auto& e : index_set_I(m)) {
    const auto [i, j, h, k] = e;
    const bool drop = (i == 1 && j != 1 && h != 1 && k == 1)    // (1,j,i,1)
                      || (i == 1 && j == 1 && h != 1 && k == 1)  // (1,1,i,1)
                      || (i == 1 && j == 1 && h == 1 && k != 1);  // (1,1,1,j)
    if (!drop) out.push_back(e);
  }
  return out;
}

std::uint64_t lambda_multiplicity_counted(int m) {
  const std::uint64_t a = static_cast<std::uint64_t>(m) * m;
  return (a - 1) * (a - 4) / 2;
}

std::uint64_t lambda_multiplicity_alternative(int m) {
  const std::uint64_t a = static_cast<std::uint64_t>(m) * m;
  return (a - 1) * (a - 1) * (a - 4) / 2;
}

std::uint64_t gr2H_dim_formula(int m, int n) {
  const std::uint64_t a = static_cast<std::uint64_t>(m) * m;
  const std::uint64_t nn = static_cast<std::uint64_t>(n);
  return a * (a - 1) / 2 * (nn * (nn + 1) / 2) + lambda_multiplicity_counted(m) * (nn * (nn - 1) / 2);
}

HAlgebraContext::HAlgebraContext(int m, int n, int cap) : ctx_(m, n, cap) {
  if (cap < 2 || cap > 3) throw std::invalid_argument("HAlgebraContext: cap must be 2 or 3");
  const poly::PolySpace& sp = ctx_.space();
  auto prod = [&](int i, int j, int p, int h, int k, int q) {
    std::uint32_t vs[2] = {ctx_.var(i, j, p), ctx_.var(h, k, q)};
    return TruncPoly::monomial(sp, Monomial::from_vars(vs), 1);
  };

  for (const auto& [i, j, h, k] : index_set_J(m))
    for (int p = 1; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q) {
        y_.push_back({YKind::T, i, j, h, k, p, q});
        y_polys_.push_back(prod(i, j, p, h, k, q) - prod(i, j, q, h, k, p));
      }
  for (const auto& [i, j, h, k] : index_set_I(m))
    for (int p = 1; p <= n; ++p)
      for (int q = p; q <= n; ++q) {
        y_.push_back({YKind::U, i, j, h, k, p, q});
        y_polys_.push_back(p == q ? prod(i, j, p, h, k, p) : prod(i, j, p, h, k, q) + prod(i, j, q, h, k, p));
      }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      if (i == m && j == m) continue;
      for (int p = 1; p <= n; ++p)
        for (int q = p; q <= n; ++q) {
          y_.push_back({YKind::V, i, j, i, j, p, q});
          y_polys_.push_back(prod(i, j, p, i, j, q));
        }
    }

  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
          TruncPoly r = ctx_.zero();
          for (int k = 1; k <= m; ++k)
            r += ctx_.s(i, k, p) * ctx_.s(k, j, q) - ctx_.s(i, k, q) * ctx_.s(k, j, p);
          relations_.push_back(poly::graded_part(r, 2));
        }

  t2_ = algebra::BasisIndex(ctx_.basis_Tk(2));
  const std::size_t dim = t2_.size();
  qla::QMatrix rel(dim, relations_.size());
  for (std::size_t c = 0; c < relations_.size(); ++c) rel.set_column(c, t2_.dense(relations_[c]));
  const std::vector<std::size_t> indep = qla::rref(rel).pivots;
  relation_rank_ = indep.size();
  if (relation_rank_ + y_.size() != dim)
    throw std::logic_error("HAlgebraContext: |Y| + rank(R) differs from |T_2|");

  qla::QMatrix b(dim, dim);
  for (std::size_t c = 0; c < y_.size(); ++c) b.set_column(c, t2_.dense(y_polys_[c]));
  for (std::size_t c = 0; c < indep.size(); ++c) b.set_column(y_.size() + c, rel.column(indep[c]));
  qla::QMatrix binv;
  try {
    binv = qla::inverse(b);
  } catch (const std::domain_error&) {
    throw std::logic_error("HAlgebraContext: Y is not complementary to the relation span");
  }
  reduce_ = qla::QMatrix(y_.size(), dim);
  for (std::size_t r = 0; r < y_.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) reduce_.at(r, c) = binv.at(r, c);
}

std::vector<std::uint32_t> HAlgebraContext::gr1H_basis() const {
  std::vector<std::uint32_t> out(ctx_.nvars());
  for (std::uint32_t v = 0; v < ctx_.nvars(); ++v) out[v] = v;
  return out;
}

std::size_t HAlgebraContext::y_position(const YElement& e) const {
  for (std::size_t k = 0; k < y_.size(); ++k)
    if (y_[k] == e) return k;
  throw std::out_of_range("y_position: " + e.label() + " is not in Y");
}

qla::QVector HAlgebraContext::reduce_to_Y(const TruncPoly& degree2) const {
  qla::QVector out(y_.size());
  for (const poly::Term& t : degree2.terms()) {
    if (t.mono.degree() != 2) continue;
    const std::size_t c = t2_.position(t.mono);
    for (std::size_t r = 0; r < y_.size(); ++r) {
      const Rational& e = reduce_.at(r, c);
      if (!e.is_zero()) out[r] += e * t.coef;
    }
  }
  return out;
}

TruncPoly HAlgebraContext::lift(const qla::QVector& y) const {
  if (y.size() != y_.size()) throw std::invalid_argument("lift: wrong number of coordinates");
  poly::Accumulator acc(ctx_.space());
  for (std::size_t k = 0; k < y.size(); ++k)
    if (!y[k].is_zero()) acc.add_scaled(y_polys_[k], y[k]);
  return acc.finish();
}

TruncPoly HAlgebraContext::canonical(const TruncPoly& degree2) const { return lift(reduce_to_Y(degree2)); }

Gr12Map HAlgebraContext::canonical(const Gr12Map& phi) const {
  Gr12Map out;
  for (const TruncPoly& c : phi.columns) out.columns.push_back(canonical(c));
  return out;
}

action::QuotientAuto HAlgebraContext::rho3(const words::AutPair& a) const {
  const int m = ctx_.m();
  const int n = ctx_.n();
  if (a.rank() != n) throw std::invalid_argument("rho3: rank mismatch");
  std::vector<algebra::PolyMatrix> mats;
  for (int l = 1; l <= n; ++l) mats.push_back(abelian_word_matrix(ctx_, words::abelianize(a.bwd().image(l), n)));
  std::vector<TruncPoly> images;
  for (std::uint32_t v = 0; v < ctx_.nvars(); ++v) {
    const poly::VarId id = poly::algebra_var(v, m);
    TruncPoly e = mats[static_cast<std::size_t>(id.l - 1)].at(id.i, id.j);
    if (id.i == id.j) e -= ctx_.one();
    e = action::truncate_below(e, 3);
    images.push_back(poly::graded_part(e, 1) + canonical(poly::graded_part(e, 2)));
  }
  return action::QuotientAuto(3, std::move(images));
}

std::string HAlgebraContext::name(const qla::QVector& y) const {
  std::string s;
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (y[k].is_zero()) continue;
    if (s.empty())
      s = y[k].to_string() + " " + y_[k].label();
    else if (y[k].sign() < 0)
      s += " - " + (-y[k]).to_string() + " " + y_[k].label();
    else
      s += " + " + y[k].to_string() + " " + y_[k].label();
  }
  return s.empty() ? "0" : s;
}

algebra::PolyMatrix abelian_word_matrix(const AlgebraContext& ctx, const words::AbelianVector& c) {
  const int m = ctx.m();
  const poly::PolySpace& sp = ctx.space();
  algebra::PolyMatrix out = algebra::PolyMatrix::identity(m, sp);
  for (int l = 1; l <= ctx.n(); ++l) {
    const long long e = c.at(static_cast<std::size_t>(l - 1));
    if (e == 0) continue;
    algebra::PolyMatrix s(m, sp);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) s.at(i, j) = action::truncate_below(ctx.s(i, j, l), 3);
    const algebra::PolyMatrix s2 = s * s;
    const Rational ce(static_cast<std::int64_t>(e));
    const Rational c2(static_cast<std::int64_t>(e * (e - 1) / 2));
    algebra::PolyMatrix f = algebra::PolyMatrix::identity(m, sp);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) f.at(i, j) += ce * s.at(i, j) + c2 * action::truncate_below(s2.at(i, j), 3);
    out = out * f;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) out.at(i, j) = action::truncate_below(out.at(i, j), 3);
  }
  return out;
}

Gr12Map theta_H(const HAlgebraContext& hctx, const words::AutPair& a) {
  const AlgebraContext& ctx = hctx.free();
  const action::QuotientAuto r3 = hctx.rho3(a);
  const crossed::J3Auto s = crossed::section(ctx, crossed::degree1_block(ctx, r3));
  return hctx.canonical(crossed::degree2_part(action::compose(r3, crossed::inverse(ctx, s))));
}

Gr12Map act_on_hom_H(const HAlgebraContext& hctx, const words::AutPair& a, const Gr12Map& phi) {
  return hctx.canonical(crossed::act_on_hom(hctx.free(), hctx.rho3(a), hctx.rho3(a.inverse()), phi));
}

qla::QMatrix to_Y_matrix(const HAlgebraContext& hctx, const Gr12Map& phi) {
  qla::QMatrix out(hctx.gr2H_dim(), phi.columns.size());
  for (std::size_t c = 0; c < phi.columns.size(); ++c) out.set_column(c, hctx.reduce_to_Y(phi.columns[c]));
  return out;
}

HQVec project_fH(const HAlgebraContext& hctx, const Gr12Map& phi, crossed::SquareConvention conv) {
  const int n = hctx.n();
  HQVec out = HQVec::zero(n);
  for (int l = 1; l <= n; ++l) {
    const qla::QVector y = hctx.reduce_to_Y(phi.columns.at(hctx.free().var(1, 1, l)));
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        const Rational& c = y[hctx.y_position({YKind::V, 1, 1, 1, 1, i, j})];
        if (c.is_zero()) continue;
        if (i < j) {
          if (l == i) out.c[static_cast<std::size_t>(j - 1)] += c;
          if (l == j) out.c[static_cast<std::size_t>(i - 1)] += c;
        } else if (l == i) {
          out.c[static_cast<std::size_t>(i - 1)] += conv == crossed::SquareConvention::Doubled ? c * 2 : c;
        }
      }
  }
  return out;
}

HQVec fH_value(const HAlgebraContext& hctx, const words::AutWord& w) {
  const int n = hctx.n();
  std::map<char, HQVec> cache;
  std::function<HQVec(const words::AutToken&)> gen = [&](const words::AutToken& g) {
    if (g.symbol != 'P' && g.symbol != 'Q' && g.symbol != 'S' && g.symbol != 'U')
      throw std::invalid_argument(std::string("fH_value: unknown generator symbol '") + g.symbol + "'");
    auto it = cache.find(g.symbol);
    if (it == cache.end())
      it = cache.emplace(g.symbol, project_fH(hctx, theta_H(hctx, words::to_aut(g, n)))).first;
    return it->second;
  };
  std::function<HQVec(const words::AutPair&, const HQVec&)> action = [](const words::AutPair& a, const HQVec& v) {
    return crossed::act(a, v);
  };
  return crossed::cocycle_extend<HQVec>(w, n, gen, action, HQVec::zero(n));
}

}  // namespace repalg::abelian
