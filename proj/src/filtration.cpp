#include "repalg/filtration.hpp"

#include "repalg/aut_action.hpp"

#include <stdexcept>

namespace repalg::filtration {

bool EtaMatrix::is_zero() const {
  for (const TruncPoly& c : columns)
    if (!c.is_zero()) return false;
  return true;
}

qla::QMatrix EtaMatrix::to_matrix(const AlgebraContext& ctx) const {
  algebra::BasisIndex rows(ctx.basis_Tk(k + 1));
  qla::QMatrix mat(rows.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) mat.set_column(c, rows.dense(columns[c]));
  return mat;
}

EtaMatrix operator-(const EtaMatrix& a) {
  EtaMatrix r = a;
  for (TruncPoly& c : r.columns) c = -c;
  return r;
}

namespace {

void require_cap(const AlgebraContext& ctx, int k) {
  if (k < 1) throw std::invalid_argument("filtration: k must be positive");
  if (ctx.cap() < k + 1) throw std::invalid_argument("filtration: cap must be at least k + 1");
}

std::vector<TruncPoly> differences(const AlgebraContext& ctx, const words::AutPair& a) {
  action::AlgebraAction act(ctx, a.fwd());
  std::vector<TruncPoly> d;
  for (std::uint32_t v = 0; v < ctx.nvars(); ++v)
    d.push_back(act.images()[v] - TruncPoly::variable(ctx.space(), v));
  return d;
}

}  // namespace

bool is_in_D(const AlgebraContext& ctx, const words::AutPair& a, int k) {
  require_cap(ctx, k);
  for (const TruncPoly& d : differences(ctx, a))
    if (d.min_degree() < k + 1) return false;
  return true;
}

EtaMatrix eta_k(const AlgebraContext& ctx, const words::AutPair& a, int k) {
  require_cap(ctx, k);
  EtaMatrix e;
  e.k = k;
  for (const TruncPoly& d : differences(ctx, a)) {
    if (d.min_degree() < k + 1) throw std::domain_error("eta_k: automorphism is not in D(" + std::to_string(k) + ")");
    e.columns.push_back(poly::graded_part(d, k + 1));
  }
  return e;
}

EtaMatrix eta_k_left(const AlgebraContext& ctx, const words::AutPair& a, int k) { return eta_k(ctx, a.inverse(), k); }

std::size_t wedge_index(int p, int q, int n) {
  if (p < 1 || q > n || p >= q) throw std::out_of_range("wedge_index: need 1 <= p < q <= n");
  // Pairs (p,q) ordered lexicographically.
  std::size_t before = 0;
  for (int r = 1; r < p; ++r) before += static_cast<std::size_t>(n - r);
  return before + static_cast<std::size_t>(q - p - 1);
}

bool is_IA(const words::AutPair& a) {
  const int n = a.rank();
  for (int l = 1; l <= n; ++l) {
    words::AbelianVector v = words::abelianize(a.fwd().image(l), n);
    for (int r = 1; r <= n; ++r)
      if (v[static_cast<std::size_t>(r - 1)] != (r == l ? 1 : 0)) return false;
  }
  return true;
}

namespace {

// Truncated Magnus expansion 1 + sum_a c1[a] X_a + sum_{a,b} c2[a][b] X_a X_b.
struct Magnus2 {
  int n;
  std::vector<long long> c1;
  std::vector<long long> c2;

  explicit Magnus2(int n_) : n(n_), c1(static_cast<std::size_t>(n_), 0), c2(static_cast<std::size_t>(n_ * n_), 0) {}

  long long& at2(int a, int b) { return c2[static_cast<std::size_t>(a * n + b)]; }

  void times_letter(const words::Letter& x) {
    const int g = x.gen - 1;
    // (1 + A1 + A2)(1 + B1 + B2) = 1 + (A1 + B1) + (A2 + B2 + A1 B1)
    const long long b1 = x.sign;
    for (int a = 0; a < n; ++a) at2(a, g) += c1[static_cast<std::size_t>(a)] * b1;
    if (x.sign < 0) at2(g, g) += 1;
    c1[static_cast<std::size_t>(g)] += b1;
  }
};

}  // namespace

Tau1Value tau1(const words::AutPair& a) {
  if (!is_IA(a)) throw std::domain_error("tau1: automorphism is not in IA");
  const int n = a.rank();
  Tau1Value t;
  t.n = n;
  t.matrix = qla::QMatrix(static_cast<std::size_t>(n * (n - 1) / 2), static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l) {
    words::Word w = words::mul(words::Word::generator(l, -1), a.fwd().image(l));
    Magnus2 e(n);
    for (const words::Letter& x : w.letters()) e.times_letter(x);
    for (int p = 0; p < n; ++p) {
      if (e.c1[static_cast<std::size_t>(p)] != 0) throw std::logic_error("tau1: nonzero degree-1 term for an IA word");
      for (int q = p + 1; q < n; ++q) {
        const long long anti = e.at2(p, q) - e.at2(q, p);
        const long long sym = e.at2(p, q) + e.at2(q, p);
        if (sym != 0) throw std::logic_error("tau1: degree-2 part is not a Lie element");
        t.matrix.at(wedge_index(p + 1, q + 1, n), static_cast<std::size_t>(l - 1)) = Rational(anti, 2);
      }
    }
  }
  return t;
}

}  // namespace repalg::filtration
