#include "repalg/crossed.hpp"

#include "repalg/filtration.hpp"

#include <stdexcept>

namespace repalg::crossed {

using action::QuotientAuto;
using poly::Monomial;

Gr12Map Gr12Map::zero(const AlgebraContext& ctx) { return Gr12Map{std::vector<TruncPoly>(ctx.nvars(), ctx.zero())}; }

bool Gr12Map::is_zero() const {
  for (const TruncPoly& c : columns)
    if (!c.is_zero()) return false;
  return true;
}

qla::QMatrix Gr12Map::to_matrix(const AlgebraContext& ctx) const {
  algebra::BasisIndex rows(ctx.basis_Tk(2));
  qla::QMatrix mat(rows.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) mat.set_column(c, rows.dense(columns[c]));
  return mat;
}

Gr12Map operator+(const Gr12Map& a, const Gr12Map& b) {
  if (a.columns.size() != b.columns.size()) throw std::invalid_argument("Gr12Map: size mismatch");
  Gr12Map r = a;
  for (std::size_t k = 0; k < r.columns.size(); ++k) r.columns[k] += b.columns[k];
  return r;
}

Gr12Map operator-(const Gr12Map& a) {
  Gr12Map r = a;
  for (TruncPoly& c : r.columns) c = -c;
  return r;
}

Gr12Map operator-(const Gr12Map& a, const Gr12Map& b) { return a + (-b); }

qla::QMatrix degree1_block(const AlgebraContext& ctx, const J3Auto& a) {
  const std::uint32_t nv = ctx.nvars();
  qla::QMatrix mat(nv, nv);
  for (std::uint32_t c = 0; c < nv; ++c)
    for (const poly::Term& t : a.images()[c].terms())
      if (t.mono.degree() == 1) mat.at(t.mono.last(), c) = t.coef;
  return mat;
}

Gr12Map degree2_part(const J3Auto& a) {
  Gr12Map g;
  for (const TruncPoly& im : a.images()) g.columns.push_back(poly::graded_part(im, 2));
  return g;
}

qla::QMatrix degree2_block(const AlgebraContext& ctx, const J3Auto& a) {
  algebra::BasisIndex idx(ctx.basis_Tk(2));
  std::vector<TruncPoly> lin;
  for (const TruncPoly& im : a.images()) lin.push_back(poly::graded_part(im, 1));
  qla::QMatrix mat(idx.size(), idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    auto vs = idx.basis()[c].vars();
    mat.set_column(c, idx.dense(poly::graded_part(lin[vs[0]] * lin[vs[1]], 2)));
  }
  return mat;
}

namespace {

J3Auto linear_auto(const AlgebraContext& ctx, const qla::QMatrix& beta) {
  std::vector<TruncPoly> im;
  for (std::uint32_t v = 0; v < ctx.nvars(); ++v) {
    std::vector<poly::Term> ts;
    for (std::uint32_t u = 0; u < ctx.nvars(); ++u)
      if (!beta.at(u, v).is_zero()) ts.push_back({Monomial::var(u), beta.at(u, v)});
    im.push_back(TruncPoly::from_terms(ctx.space(), std::move(ts)));
  }
  return J3Auto(3, std::move(im));
}

}  // namespace

J3Auto section(const AlgebraContext& ctx, const qla::QMatrix& beta) {
  if (beta.rows() != ctx.nvars() || beta.cols() != ctx.nvars())
    throw std::invalid_argument("section: beta must be |T_1| x |T_1|");
  if (qla::rank_certified(beta) != ctx.nvars()) throw std::domain_error("section: beta is singular");
  return linear_auto(ctx, beta);
}

J3Auto inverse(const AlgebraContext& ctx, const J3Auto& a) {
  if (a.k() != 3) throw std::invalid_argument("inverse: expected an automorphism of J/J^3");
  J3Auto lin_inv = linear_auto(ctx, qla::inverse(degree1_block(ctx, a)));
  // a o lin_inv = id + D with D quadratic, whose inverse mod J^3 is id - D.
  J3Auto unip = action::compose(a, lin_inv);
  std::vector<TruncPoly> corr;
  for (std::uint32_t v = 0; v < ctx.nvars(); ++v)
    corr.push_back(TruncPoly::variable(ctx.space(), v) - poly::graded_part(unip.images()[v], 2));
  return action::compose(lin_inv, J3Auto(3, std::move(corr)));
}

Gr12Map theta(const AlgebraContext& ctx, const words::AutPair& a) {
  if (ctx.cap() < 2) throw std::invalid_argument("theta: cap must be at least 2");
  J3Auto rho3 = action::rho_k(ctx, a, 3);
  J3Auto s = section(ctx, degree1_block(ctx, rho3));
  return degree2_part(action::compose(rho3, inverse(ctx, s)));
}

Gr12Map act_on_hom(const AlgebraContext& ctx, const words::AutPair& a, const Gr12Map& phi) {
  return act_on_hom(ctx, action::rho_k(ctx, a, 2), action::rho_k(ctx, a.inverse(), 2), phi);
}

Gr12Map act_on_hom(const AlgebraContext& ctx, const J3Auto& beta, const J3Auto& beta_inv, const Gr12Map& phi) {
  if (phi.columns.size() != ctx.nvars()) throw std::invalid_argument("act_on_hom: map has the wrong size");
  std::vector<TruncPoly> lin;
  for (const TruncPoly& im : beta.images()) lin.push_back(action::truncate_below(im, 2));
  J3Auto b(3, std::move(lin));
  Gr12Map out;
  for (std::uint32_t v = 0; v < ctx.nvars(); ++v) {
    poly::Accumulator acc(ctx.space());
    for (const poly::Term& t : beta_inv.images()[v].terms())
      if (t.mono.degree() == 1) acc.add_scaled(phi.columns[t.mono.last()], t.coef);
    out.columns.push_back(poly::graded_part(b.apply(acc.finish()), 2));
  }
  return out;
}

HQVec HQVec::basis(int n, int i) {
  HQVec v = zero(n);
  v.c.at(static_cast<std::size_t>(i - 1)) = 1;
  return v;
}

HQVec operator+(const HQVec& a, const HQVec& b) {
  if (a.c.size() != b.c.size()) throw std::invalid_argument("HQVec: size mismatch");
  HQVec r = a;
  for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] += b.c[k];
  return r;
}

HQVec operator-(const HQVec& a) {
  HQVec r = a;
  for (Rational& x : r.c) x = -x;
  return r;
}

HQVec operator-(const HQVec& a, const HQVec& b) { return a + (-b); }

namespace {

std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [c, name] : terms) {
    if (s.empty())
      s = c.to_string() + " " + name;
    else if (c.sign() < 0)
      s += " - " + (-c).to_string() + " " + name;
    else
      s += " + " + c.to_string() + " " + name;
  }
  return s;
}

}  // namespace

std::string to_string(const HQVec& v) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (std::size_t k = 0; k < v.c.size(); ++k)
    if (!v.c[k].is_zero()) terms.emplace_back(v.c[k], "x" + std::to_string(k + 1));
  return join_terms(terms);
}

LambdaMap LambdaMap::zero(int n) {
  LambdaMap f;
  f.n = n;
  f.mat = qla::QMatrix(static_cast<std::size_t>(n * (n - 1) / 2), static_cast<std::size_t>(n));
  return f;
}

LambdaMap operator+(const LambdaMap& a, const LambdaMap& b) {
  if (a.n != b.n) throw std::invalid_argument("LambdaMap: size mismatch");
  LambdaMap r = a;
  r.mat = a.mat + b.mat;
  return r;
}

LambdaMap operator-(const LambdaMap& a) {
  LambdaMap r = a;
  r.mat = -a.mat;
  return r;
}

LambdaMap operator-(const LambdaMap& a, const LambdaMap& b) { return a + (-b); }

std::string to_string(const LambdaMap& f) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (int l = 1; l <= f.n; ++l)
    for (int p = 1; p <= f.n; ++p)
      for (int q = p + 1; q <= f.n; ++q) {
        const Rational& c = f.mat.at(filtration::wedge_index(p, q, f.n), static_cast<std::size_t>(l - 1));
        if (!c.is_zero())
          terms.emplace_back(c, "x" + std::to_string(l) + "*(x)x" + std::to_string(p) + "^x" + std::to_string(q));
      }
  return join_terms(terms);
}

qla::QMatrix h_action(const words::AutPair& a) {
  const int n = a.rank();
  qla::QMatrix mat(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l) {
    words::AbelianVector v = words::abelianize(a.bwd().image(l), n);
    for (int r = 0; r < n; ++r) mat.at(static_cast<std::size_t>(r), static_cast<std::size_t>(l - 1)) = Rational(static_cast<std::int64_t>(v[static_cast<std::size_t>(r)]));
  }
  return mat;
}

HQVec act(const words::AutPair& a, const HQVec& v) { return HQVec{h_action(a) * v.c}; }

LambdaMap act(const words::AutPair& a, const LambdaMap& f) {
  const int n = a.rank();
  if (f.n != n) throw std::invalid_argument("act: rank mismatch");
  qla::QMatrix A = h_action(a);
  qla::QMatrix Ainv = h_action(a.inverse());
  const std::size_t w = static_cast<std::size_t>(n * (n - 1) / 2);
  qla::QMatrix L(w, w);
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s) {
          auto at = [&](int i, int j) -> const Rational& {
            return A.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
          };
          L.at(filtration::wedge_index(r, s, n), filtration::wedge_index(p, q, n)) =
              at(r, p) * at(s, q) - at(s, p) * at(r, q);
        }
  LambdaMap out;
  out.n = n;
  out.mat = L * f.mat * Ainv;
  return out;
}

LambdaMap project_f1(const AlgebraContext& ctx, const Gr12Map& t) {
  const int n = ctx.n();
  LambdaMap f = LambdaMap::zero(n);
  for (int l = 1; l <= n; ++l) {
    const TruncPoly& col = t.columns.at(ctx.var(1, 1, l));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        std::uint32_t vs[2] = {ctx.var(1, 2, i), ctx.var(2, 1, j)};
        Rational c = col.coefficient(Monomial::from_vars(vs));
        if (c.is_zero()) continue;
        Rational& slot = f.mat.at(filtration::wedge_index(std::min(i, j), std::max(i, j), n), static_cast<std::size_t>(l - 1));
        if (i < j)
          slot += c;
        else
          slot -= c;
      }
  }
  return f;
}

HQVec project_f2(const AlgebraContext& ctx, const Gr12Map& t, SquareConvention conv) {
  const int n = ctx.n();
  HQVec out = HQVec::zero(n);
  for (int l = 1; l <= n; ++l) {
    const TruncPoly& col = t.columns.at(ctx.var(1, 1, l));
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        std::uint32_t vs[2] = {ctx.var(1, 1, i), ctx.var(1, 1, j)};
        Rational c = col.coefficient(Monomial::from_vars(vs));
        if (c.is_zero()) continue;
        if (i < j) {
          // x_i x_j -> x_i (x) x_j + x_j (x) x_i, contracted against x_l*.
          if (l == i) out.c[static_cast<std::size_t>(j - 1)] += c;
          if (l == j) out.c[static_cast<std::size_t>(i - 1)] += c;
        } else if (l == i) {
          out.c[static_cast<std::size_t>(i - 1)] += conv == SquareConvention::Doubled ? c * 2 : c;
        }
      }
  }
  return out;
}

LambdaMap fK_value(const words::AutWord& w, int n) {
  if (n < 2) throw std::invalid_argument("fK_value: needs n >= 2");
  std::function<LambdaMap(const words::AutToken&)> gen = [n](const words::AutToken& g) {
    LambdaMap f = LambdaMap::zero(n);
    switch (g.symbol) {
      case 'U':
        f.mat.at(filtration::wedge_index(1, 2, n), 0) = -1;
        break;
      case 'P':
      case 'Q':
      case 'S':
        break;
      default:
        throw std::invalid_argument(std::string("fK_value: unknown generator symbol '") + g.symbol + "'");
    }
    return f;
  };
  std::function<LambdaMap(const words::AutPair&, const LambdaMap&)> action = [](const words::AutPair& a,
                                                                                   const LambdaMap& f) {
    return act(a, f);
  };
  return cocycle_extend<LambdaMap>(w, n, gen, action, LambdaMap::zero(n));
}

HQVec fM_value(const words::AutWord& w, int n) {
  std::function<HQVec(const words::AutToken&)> gen = [n](const words::AutToken& g) {
    switch (g.symbol) {
      case 'S':
        return -HQVec::basis(n, 1);
      case 'P':
      case 'Q':
      case 'U':
        return HQVec::zero(n);
      default:
        throw std::invalid_argument(std::string("fM_value: unknown generator symbol '") + g.symbol + "'");
    }
  };
  std::function<HQVec(const words::AutPair&, const HQVec&)> action = [](const words::AutPair& a, const HQVec& v) {
    return act(a, v);
  };
  return cocycle_extend<HQVec>(w, n, gen, action, HQVec::zero(n));
}

HQVec delta_x(const words::AutPair& a) {
  const int n = a.rank();
  HQVec x{std::vector<Rational>(static_cast<std::size_t>(n), Rational(1))};
  return act(a, x) - x;
}

}  // namespace repalg::crossed
