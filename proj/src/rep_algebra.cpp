#include "repalg/rep_algebra.hpp"

#include <functional>
#include <stdexcept>

namespace repalg::algebra {

using poly::VarId;

PolyMatrix::PolyMatrix(int m, PolySpace space) : m_(m), space_(space) {
  if (m < 1) throw std::invalid_argument("PolyMatrix: size must be positive");
  e_.assign(static_cast<std::size_t>(m * m), TruncPoly(space));
}

PolyMatrix PolyMatrix::identity(int m, PolySpace space) {
  PolyMatrix a(m, space);
  for (int i = 1; i <= m; ++i) a.at(i, i) = TruncPoly::constant(space, 1);
  return a;
}

std::size_t PolyMatrix::index(int i, int j) const {
  if (i < 1 || j < 1 || i > m_ || j > m_) throw std::out_of_range("PolyMatrix: index out of range");
  return static_cast<std::size_t>((i - 1) * m_ + (j - 1));
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.m_ != b.m_ || !(a.space_ == b.space_)) throw std::invalid_argument("PolyMatrix product: shape mismatch");
  PolyMatrix c(a.m_, a.space_);
  for (int i = 1; i <= a.m_; ++i)
    for (int j = 1; j <= a.m_; ++j) {
      poly::Accumulator acc(a.space_);
      for (int k = 1; k <= a.m_; ++k) acc.add_product(a.at(i, k), b.at(k, j), 1);
      c.at(i, j) = acc.finish();
    }
  return c;
}

namespace {

PolyMatrix minor_of(const PolyMatrix& a, int row, int col) {
  const int m = a.size();
  PolyMatrix r(m - 1, a.space());
  for (int i = 1, ri = 1; i <= m; ++i) {
    if (i == row) continue;
    for (int j = 1, rj = 1; j <= m; ++j) {
      if (j == col) continue;
      r.at(ri, rj) = a.at(i, j);
      ++rj;
    }
    ++ri;
  }
  return r;
}

}  // namespace

TruncPoly det_cofactor(const PolyMatrix& a) {
  const int m = a.size();
  if (m == 1) return a.at(1, 1);
  if (m == 2) return a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1);
  poly::Accumulator acc(a.space());
  for (int j = 1; j <= m; ++j) {
    if (a.at(1, j).is_zero()) continue;
    acc.add_product(a.at(1, j), det_cofactor(minor_of(a, 1, j)), (1 + j) % 2 == 0 ? 1 : -1);
  }
  return acc.finish();
}

PolyMatrix adjugate_cofactor(const PolyMatrix& a) {
  const int m = a.size();
  PolyMatrix adj(m, a.space());
  if (m == 1) {
    adj.at(1, 1) = TruncPoly::constant(a.space(), 1);
    return adj;
  }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      TruncPoly c = det_cofactor(minor_of(a, j, i));
      adj.at(i, j) = (i + j) % 2 == 0 ? c : -c;
    }
  return adj;
}

namespace {

// Gauss-Jordan over the truncated local ring. Returns det and, if requested,
// the inverse matrix.
TruncPoly eliminate(const PolyMatrix& a, PolyMatrix* inverse_out) {
  const int m = a.size();
  const PolySpace sp = a.space();
  PolyMatrix w = a;
  PolyMatrix inv = PolyMatrix::identity(m, sp);
  TruncPoly d = TruncPoly::constant(sp, 1);
  for (int c = 1; c <= m; ++c) {
    int p = 0;
    for (int r = c; r <= m; ++r)
      if (!w.at(r, c).constant_term().is_zero()) {
        p = r;
        break;
      }
    if (p == 0) throw std::domain_error("elimination: no invertible pivot");
    if (p != c) {
      for (int j = 1; j <= m; ++j) {
        std::swap(w.at(p, j), w.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
      d = -d;
    }
    TruncPoly piv = w.at(c, c);
    d = d * piv;
    TruncPoly pinv = poly::inverse_of_unit(piv);
    for (int j = 1; j <= m; ++j) {
      w.at(c, j) = w.at(c, j) * pinv;
      inv.at(c, j) = inv.at(c, j) * pinv;
    }
    for (int r = 1; r <= m; ++r) {
      if (r == c || w.at(r, c).is_zero()) continue;
      TruncPoly f = w.at(r, c);
      for (int j = 1; j <= m; ++j) {
        w.at(r, j) -= f * w.at(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  if (inverse_out) *inverse_out = inv;
  return d;
}

}  // namespace

TruncPoly det_elimination(const PolyMatrix& a) { return eliminate(a, nullptr); }

PolyMatrix adjugate_elimination(const PolyMatrix& a) {
  PolyMatrix inv;
  TruncPoly d = eliminate(a, &inv);
  for (int i = 1; i <= a.size(); ++i)
    for (int j = 1; j <= a.size(); ++j) inv.at(i, j) = d * inv.at(i, j);
  return inv;
}

TruncPoly det(const PolyMatrix& a) { return a.size() <= 3 ? det_cofactor(a) : det_elimination(a); }

PolyMatrix adjugate(const PolyMatrix& a) { return a.size() <= 3 ? adjugate_cofactor(a) : adjugate_elimination(a); }

BasisIndex::BasisIndex(std::vector<Monomial> basis) : basis_(std::move(basis)) {
  pos_.reserve(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) pos_.emplace(basis_[k], k);
}

std::size_t BasisIndex::position(const Monomial& m) const {
  auto it = pos_.find(m);
  if (it == pos_.end()) throw std::out_of_range("BasisIndex: monomial not in basis");
  return it->second;
}

qla::QVector BasisIndex::dense(const TruncPoly& f) const {
  qla::QVector v(basis_.size());
  for (const poly::Term& t : f.terms()) v[position(t.mono)] = t.coef;
  return v;
}

TruncPoly BasisIndex::sparse(const qla::QVector& v, PolySpace space) const {
  if (v.size() != basis_.size()) throw std::invalid_argument("BasisIndex::sparse: length mismatch");
  std::vector<poly::Term> ts;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) ts.push_back({basis_[k], v[k]});
  return TruncPoly::from_terms(space, std::move(ts));
}

AlgebraContext::AlgebraContext(int m, int n, int cap) : m_(m), n_(n), cap_(cap) {
  if (m < 2) throw std::invalid_argument("AlgebraContext: m must be at least 2");
  if (n < 1) throw std::invalid_argument("AlgebraContext: n must be at least 1");
  if (cap < 1 || cap > poly::kMaxCap) throw std::invalid_argument("AlgebraContext: cap out of range");
  const long nv = static_cast<long>(m * m - 1) * n;
  if (nv > 0xFFFF) throw std::invalid_argument("AlgebraContext: too many variables");
  space_ = PolySpace{poly::Namespace::Algebra, static_cast<std::uint32_t>(nv), cap};

  for (int l = 1; l <= n; ++l) {
    // A has entries delta_ij + s_ij(x_l) and a zero (m,m) entry, so that
    // det(A + (1+u) E_mm) = D + (1+u) C with D = det A and C the (m,m) cofactor.
    PolyMatrix a(m, space_);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        if (i == m && j == m) continue;
        TruncPoly e = TruncPoly::variable(space_, var(i, j, l));
        if (i == j) e += one();
        a.at(i, j) = e;
      }
    // Linearity in the (m,m) entry: D = det(A + E_mm) - C, and A + E_mm is
    // congruent to the identity, so elimination also works for m >= 4.
    TruncPoly cc = det(minor_of(a, m, m));
    a.at(m, m) = one();
    TruncPoly dd = det(a) - cc;
    TruncPoly u = (one() - dd) * poly::inverse_of_unit(cc) - one();
    smm_.push_back(u);
    a.at(m, m) = one() + u;
    gen_invs_.push_back(adjugate(a));
    gens_.push_back(std::move(a));
  }
}

TruncPoly AlgebraContext::s(int i, int j, int l) const {
  if (i == m_ && j == m_) return smm_polynomial(l);
  return TruncPoly::variable(space_, var(i, j, l));
}

const TruncPoly& AlgebraContext::smm_polynomial(int l) const {
  if (l < 1 || l > n_) throw std::out_of_range("smm_polynomial: generator index out of range");
  return smm_[static_cast<std::size_t>(l - 1)];
}

const PolyMatrix& AlgebraContext::generator_matrix(int l) const {
  if (l < 1 || l > n_) throw std::out_of_range("generator_matrix: generator index out of range");
  return gens_[static_cast<std::size_t>(l - 1)];
}

const PolyMatrix& AlgebraContext::generator_inverse(int l) const {
  if (l < 1 || l > n_) throw std::out_of_range("generator_inverse: generator index out of range");
  return gen_invs_[static_cast<std::size_t>(l - 1)];
}

void AlgebraContext::check_word(const words::Word& w) const {
  if (w.max_generator() > n_)
    throw std::invalid_argument("word uses x" + std::to_string(w.max_generator()) + " but n = " + std::to_string(n_));
}

PolyMatrix AlgebraContext::word_matrix(const words::Word& w) const {
  check_word(w);
  if (w.empty()) return PolyMatrix::identity(m_, space_);
  const auto& ls = w.letters();
  auto letter_matrix = [&](const words::Letter& x) -> const PolyMatrix& {
    return x.sign > 0 ? generator_matrix(x.gen) : generator_inverse(x.gen);
  };
  PolyMatrix acc = letter_matrix(ls[0]);
  for (std::size_t k = 1; k < ls.size(); ++k) acc = acc * letter_matrix(ls[k]);
  return acc;
}

TruncPoly AlgebraContext::s_entry(const words::Word& w, int i, int j) const {
  if (i < 1 || j < 1 || i > m_ || j > m_) throw std::out_of_range("s_entry: index out of range");
  TruncPoly e = word_matrix(w).at(i, j);
  if (i == j) e -= one();
  return e;
}

std::vector<Monomial> AlgebraContext::basis_Tk(int k) const {
  if (k < 0 || k > cap_) throw std::invalid_argument("basis_Tk: k must be between 0 and cap");
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(Monomial::from_vars(cur));
      return;
    }
    for (std::uint32_t v = from; v < space_.nvars; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<FactorProduct> AlgebraContext::basis_Tk_prime(int k) const {
  if (k < 0 || k > cap_) throw std::invalid_argument("basis_Tk_prime: k must be between 0 and cap");
  std::vector<VarId> vars;
  for (int l = 1; l <= n_; ++l)
    for (int i = 1; i <= m_; ++i)
      for (int j = 1; j <= m_; ++j)
        if (!(i == 1 && j == 1)) vars.push_back(VarId{poly::Namespace::Algebra, i, j, l});
  std::vector<FactorProduct> out;
  FactorProduct cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = from; v < vars.size(); ++v) {
      cur.push_back(vars[v]);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

TruncPoly AlgebraContext::expand(const FactorProduct& t) const {
  TruncPoly f = one();
  for (const VarId& v : t) f = f * s(v.i, v.j, v.l);
  return f;
}

GradedVec AlgebraContext::coords(const TruncPoly& f, int k) const {
  if (!(f.space() == space_)) throw std::invalid_argument("coords: polynomial from another context");
  if (f.min_degree() < k) throw std::domain_error("coords: polynomial is not in J^" + std::to_string(k));
  return GradedVec{k, poly::graded_part(f, k)};
}

std::string AlgebraContext::name(const Monomial& mono) const {
  if (mono.degree() == 0) return "1";
  return TruncPoly::monomial(space_, mono, 1).to_string(namer()).substr(2);
}

std::string AlgebraContext::name(const FactorProduct& t) const {
  if (t.empty()) return "1";
  std::string s;
  for (const VarId& v : t) s += (s.empty() ? "" : "*") + poly::var_name(v);
  return s;
}

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 r = 1;
  for (std::uint64_t k = 1; k <= b; ++k) {
    r = r * (a - b + k) / k;
    if (r > static_cast<unsigned __int128>(UINT64_MAX)) throw std::overflow_error("binomial: result too large");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t dim_Tk(int m, int n, int k) {
  const std::uint64_t nv = static_cast<std::uint64_t>(m * m - 1) * static_cast<std::uint64_t>(n);
  if (k == 0) return 1;
  return binomial(nv + static_cast<std::uint64_t>(k) - 1, static_cast<std::uint64_t>(k));
}

std::uint64_t dim_symmetric_sum(int m, int n, int k) {
  const int parts = m * m - 1;
  std::function<std::uint64_t(int, int)> rec = [&](int slot, int remaining) -> std::uint64_t {
    if (slot == parts - 1)
      return binomial(static_cast<std::uint64_t>(n + remaining - 1), static_cast<std::uint64_t>(remaining));
    std::uint64_t total = 0;
    for (int e = 0; e <= remaining; ++e)
      total += binomial(static_cast<std::uint64_t>(n + e - 1), static_cast<std::uint64_t>(e)) * rec(slot + 1, remaining - e);
    return total;
  };
  return rec(0, k);
}

qla::QMatrix tk_prime_change_of_basis(const AlgebraContext& ctx, int k) {
  BasisIndex idx(ctx.basis_Tk(k));
  auto primes = ctx.basis_Tk_prime(k);
  qla::QMatrix mat(idx.size(), primes.size());
  for (std::size_t c = 0; c < primes.size(); ++c) {
    GradedVec g = ctx.coords(ctx.expand(primes[c]), k);
    mat.set_column(c, idx.dense(g.part));
  }
  return mat;
}

}  // namespace repalg::algebra
