#include "repalg/jet_oracle.hpp"

#include "repalg/modp.hpp"
#include "repalg/qlinalg.hpp"

#include <stdexcept>
#include <unordered_map>

namespace repalg::jet {

namespace {

poly::PolySpace jet_space(std::uint32_t nparams, int cap) {
  if (cap < 1 || cap > poly::kMaxCap) throw std::invalid_argument("jet: cap out of range");
  return poly::PolySpace{poly::Namespace::Jet, nparams, cap};
}

TruncPoly random_linear(words::Rng& rng, const poly::PolySpace& sp, std::uint32_t first, std::uint32_t count) {
  std::vector<poly::Term> ts;
  for (std::uint32_t r = 0; r < count; ++r) {
    const long c = rng.uniform(-3, 3);
    if (c != 0) ts.push_back({poly::Monomial::var(first + r), Rational(static_cast<std::int64_t>(c))});
  }
  return TruncPoly::from_terms(sp, std::move(ts));
}

PolyMatrix diagonal(const std::vector<TruncPoly>& d, const poly::PolySpace& sp) {
  PolyMatrix a(static_cast<int>(d.size()), sp);
  for (std::size_t r = 0; r < d.size(); ++r) a.at(static_cast<int>(r + 1), static_cast<int>(r + 1)) = d[r];
  return a;
}

// Diagonal with entries 1 + lin[r] for r < m and the last entry fixing det = 1.
PolyMatrix unit_diagonal(const std::vector<TruncPoly>& lin, const poly::PolySpace& sp) {
  std::vector<TruncPoly> d;
  TruncPoly prod = TruncPoly::constant(sp, 1);
  for (const TruncPoly& f : lin) {
    d.push_back(TruncPoly::constant(sp, 1) + f);
    prod *= d.back();
  }
  d.push_back(poly::inverse_of_unit(prod));
  return diagonal(d, sp);
}

// Elementary 1 + c F_ij with a constant entry.
PolyMatrix elementary(int m, int i, int j, const Rational& c, const poly::PolySpace& sp) {
  PolyMatrix a = PolyMatrix::identity(m, sp);
  a.at(i, j) = TruncPoly::constant(sp, c);
  return a;
}

}  // namespace

JetRep trivial_jet_rep(const AlgebraContext& ctx, std::uint32_t nparams, int cap) {
  JetRep rho{ctx.m(), ctx.n(), jet_space(nparams, cap), {}};
  for (int l = 1; l <= ctx.n(); ++l) rho.mats.push_back(PolyMatrix::identity(ctx.m(), rho.space));
  return rho;
}

JetRep random_jet_rep(const AlgebraContext& ctx, std::uint64_t seed, int params_per_generator, int cap) {
  if (params_per_generator < 1) throw std::invalid_argument("random_jet_rep: need at least one parameter");
  const int m = ctx.m();
  const auto ppg = static_cast<std::uint32_t>(params_per_generator);
  JetRep rho{m, ctx.n(), jet_space(ppg * static_cast<std::uint32_t>(ctx.n()), cap), {}};
  words::Rng rng(seed);
  for (int l = 1; l <= ctx.n(); ++l) {
    const std::uint32_t first = ppg * static_cast<std::uint32_t>(l - 1);
    PolyMatrix a = PolyMatrix::identity(m, rho.space);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        if (i == j) continue;
        PolyMatrix e = PolyMatrix::identity(m, rho.space);
        e.at(i, j) = random_linear(rng, rho.space, first, ppg);
        a = a * e;
      }
    std::vector<TruncPoly> lin;
    for (int r = 1; r < m; ++r) lin.push_back(random_linear(rng, rho.space, first, ppg));
    rho.mats.push_back(a * unit_diagonal(lin, rho.space));
  }
  return rho;
}

JetRep commuting_jet_rep(const AlgebraContext& ctx, std::uint64_t seed, int cap) {
  const int m = ctx.m();
  const auto per = static_cast<std::uint32_t>(m - 1);
  JetRep rho{m, ctx.n(), jet_space(per * static_cast<std::uint32_t>(ctx.n()), cap), {}};
  words::Rng rng(seed);
  PolyMatrix b = PolyMatrix::identity(m, rho.space);
  PolyMatrix binv = b;
  for (int round = 0; round < 2; ++round)
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        if (i == j) continue;
        const Rational c(static_cast<std::int64_t>(rng.uniform(-2, 2)));
        b = b * elementary(m, i, j, c, rho.space);
        binv = elementary(m, i, j, -c, rho.space) * binv;
      }
  for (int l = 1; l <= ctx.n(); ++l) {
    std::vector<TruncPoly> lin;
    for (std::uint32_t r = 0; r < per; ++r)
      lin.push_back(TruncPoly::variable(rho.space, per * static_cast<std::uint32_t>(l - 1) + r));
    rho.mats.push_back(b * unit_diagonal(lin, rho.space) * binv);
  }
  return rho;
}

PolyMatrix unipotent_inverse(const PolyMatrix& a) {
  const int m = a.size();
  const PolyMatrix id = PolyMatrix::identity(m, a.space());
  PolyMatrix neg = PolyMatrix(m, a.space());  // 1 - a
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      neg.at(i, j) = id.at(i, j) - a.at(i, j);
      if (!neg.at(i, j).constant_term().is_zero())
        throw std::domain_error("unipotent_inverse: matrix is not congruent to the identity");
    }
  PolyMatrix sum = id;
  PolyMatrix term = id;
  for (int k = 1; k <= a.space().cap; ++k) {
    term = term * neg;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) sum.at(i, j) += term.at(i, j);
  }
  return sum;
}

PolyMatrix jet_word_product(const JetRep& rho, const words::Word& w) {
  std::vector<PolyMatrix> inverses(rho.mats.size());
  PolyMatrix out = PolyMatrix::identity(rho.m, rho.space);
  for (const words::Letter& x : w.letters()) {
    const auto idx = static_cast<std::size_t>(x.gen - 1);
    if (x.gen < 1 || idx >= rho.mats.size()) throw std::out_of_range("jet_word_product: generator out of range");
    if (x.sign > 0) {
      out = out * rho.mats[idx];
    } else {
      if (inverses[idx].size() == 0) inverses[idx] = unipotent_inverse(rho.mats[idx]);
      out = out * inverses[idx];
    }
  }
  return out;
}

std::vector<TruncPoly> evaluation_images(const JetRep& rho, int cap) {
  const poly::PolySpace sp{poly::Namespace::Jet, rho.space.nvars, std::min(cap, rho.space.cap)};
  const std::uint32_t nvars = static_cast<std::uint32_t>((rho.m * rho.m - 1) * rho.n);
  std::vector<TruncPoly> images;
  images.reserve(nvars);
  for (std::uint32_t v = 0; v < nvars; ++v) {
    const poly::VarId id = poly::algebra_var(v, rho.m);
    TruncPoly e = rho.image(id.l).at(id.i, id.j);
    if (id.i == id.j) e -= TruncPoly::constant(rho.space, 1);
    images.push_back(e.with_cap(sp.cap));
  }
  return images;
}

TruncPoly evaluate(const TruncPoly& f, const JetRep& rho) {
  const poly::PolySpace& fs = f.space();
  if (fs.ns != poly::Namespace::Algebra || fs.nvars != static_cast<std::uint32_t>((rho.m * rho.m - 1) * rho.n))
    throw std::invalid_argument("evaluate: polynomial does not match the representation");
  const std::vector<TruncPoly> images = evaluation_images(rho, fs.cap);
  return poly::substitute(f, images);
}

std::size_t stacked_rank(const std::vector<TruncPoly>& fs, int k, std::size_t min_rows,
                         const std::function<JetRep(std::uint64_t)>& make_rep, std::uint64_t seed,
                         std::size_t* rows_out) {
  for (const TruncPoly& f : fs)
    if (f.space().cap < k) throw std::invalid_argument("stacked_rank: polynomial cap below k");
  std::vector<qla::QVector> rows;
  words::Rng rng(seed);
  auto add_rep = [&] {
    const JetRep rho = make_rep(rng.next());
    const std::vector<TruncPoly> images = evaluation_images(rho, k);
    std::unordered_map<poly::Monomial, std::size_t, poly::MonomialHash> row_of;
    const std::size_t base = rows.size();
    for (std::size_t c = 0; c < fs.size(); ++c) {
      const TruncPoly e = poly::graded_part(poly::substitute(fs[c].with_cap(k), images), k);
      for (const poly::Term& t : e.terms()) {
        auto [it, fresh] = row_of.emplace(t.mono, base + row_of.size());
        if (fresh) rows.emplace_back(fs.size());
        rows[it->second][c] = t.coef;
      }
    }
    if (row_of.empty() && !fs.empty()) throw std::logic_error("stacked_rank: representation gives no rows");
  };
  auto as_matrix = [&] {
    qla::QMatrix mat(rows.size(), fs.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < fs.size(); ++c) mat.at(r, c) = rows[r][c];
    return mat;
  };

  // Rows are added until the modular rank is full or the budget runs out;
  // only a full modular rank short-circuits the exact computation.
  const std::size_t max_rows = 8 * min_rows;
  while (rows.size() < min_rows) add_rep();
  for (;;) {
    const std::optional<std::size_t> r = modp::rank(as_matrix());
    if (r && *r == fs.size()) break;
    if (rows.size() >= max_rows) break;
    const std::size_t target = std::min(max_rows, rows.size() * 2);
    while (rows.size() < target) add_rep();
  }
  if (rows_out) *rows_out = rows.size();
  return qla::rank_certified(as_matrix());
}

namespace {

RankReport with_retries(const std::vector<TruncPoly>& fs, int k, std::uint64_t seed,
                        const std::function<JetRep(std::uint64_t)>& make_rep) {
  RankReport rep;
  rep.expected = fs.size();
  const std::size_t min_rows = fs.size() + fs.size() / 4 + 8;
  for (int attempt = 0; attempt < 3; ++attempt) {
    rep.attempts = attempt + 1;
    rep.rank = stacked_rank(fs, k, min_rows, make_rep, seed + static_cast<std::uint64_t>(attempt) * 0x9e3779b97f4a7c15ULL,
                            &rep.rows);
    if (rep.full()) break;
  }
  return rep;
}

}  // namespace

RankReport tk_independence(const AlgebraContext& ctx, int k, std::uint64_t seed, int params_per_generator) {
  if (k < 1 || k > ctx.cap()) throw std::invalid_argument("tk_independence: k out of range");
  std::vector<TruncPoly> fs;
  for (const poly::Monomial& mono : ctx.basis_Tk(k)) fs.push_back(TruncPoly::monomial(ctx.space(), mono, 1));
  return with_retries(fs, k, seed,
                      [&](std::uint64_t s) { return random_jet_rep(ctx, s, params_per_generator, k); });
}

RankReport t1bar_independence(const abelian::HAlgebraContext& hctx, std::uint64_t seed) {
  const AlgebraContext& ctx = hctx.free();
  std::vector<TruncPoly> fs;
  for (std::uint32_t v : hctx.gr1H_basis()) fs.push_back(TruncPoly::variable(ctx.space(), v));
  return with_retries(fs, 1, seed, [&](std::uint64_t s) { return commuting_jet_rep(ctx, s, 1); });
}

RankReport y_independence(const abelian::HAlgebraContext& hctx, std::uint64_t seed) {
  const AlgebraContext& ctx = hctx.free();
  return with_retries(hctx.y_polys(), 2, seed, [&](std::uint64_t s) { return commuting_jet_rep(ctx, s, 2); });
}

}  // namespace repalg::jet
