#include "repalg/trunc_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace repalg::poly {

std::uint32_t algebra_index(int i, int j, int l, int m) {
  if (m < 2 || i < 1 || j < 1 || i > m || j > m || l < 1)
    throw std::out_of_range("algebra_index: index out of range");
  if (i == m && j == m) throw std::invalid_argument("algebra_index: s_mm is not a free variable");
  const int n_per = m * m - 1;
  return static_cast<std::uint32_t>((l - 1) * n_per + (i - 1) * m + (j - 1));
}

VarId algebra_var(std::uint32_t index, int m) {
  const std::uint32_t n_per = static_cast<std::uint32_t>(m * m - 1);
  const std::uint32_t r = index % n_per;
  return VarId{Namespace::Algebra, static_cast<int>(r / static_cast<std::uint32_t>(m)) + 1,
               static_cast<int>(r % static_cast<std::uint32_t>(m)) + 1, static_cast<int>(index / n_per) + 1};
}

std::string var_name(const VarId& v) {
  if (v.ns == Namespace::Jet) return "z" + std::to_string(v.l);
  return "s(" + std::to_string(v.i) + "," + std::to_string(v.j) + ";x" + std::to_string(v.l) + ")";
}

VarNamer algebra_namer(int m) {
  return [m](std::uint32_t v) { return var_name(algebra_var(v, m)); };
}

VarNamer jet_namer() {
  return [](std::uint32_t v) { return var_name(VarId{Namespace::Jet, 0, 0, static_cast<int>(v) + 1}); };
}

Monomial Monomial::var(std::uint32_t v) {
  if (v > 0xFFFF) throw std::out_of_range("Monomial: variable index too large");
  Monomial m;
  m.v_[0] = static_cast<std::uint16_t>(v);
  m.deg_ = 1;
  return m;
}

Monomial Monomial::from_vars(std::span<const std::uint32_t> vars) {
  if (vars.size() > static_cast<std::size_t>(kMaxCap)) throw std::length_error("Monomial: degree exceeds kMaxCap");
  Monomial m;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (vars[k] > 0xFFFF) throw std::out_of_range("Monomial: variable index too large");
    m.v_[k] = static_cast<std::uint16_t>(vars[k]);
  }
  m.deg_ = static_cast<std::uint8_t>(vars.size());
  std::sort(m.v_.begin(), m.v_.begin() + m.deg_);
  return m;
}

int Monomial::exponent(std::uint32_t v) const noexcept {
  return static_cast<int>(std::count(v_.begin(), v_.begin() + deg_, v));
}

Monomial Monomial::times(const Monomial& o) const {
  if (deg_ + o.deg_ > kMaxCap) throw std::length_error("Monomial: degree exceeds kMaxCap");
  Monomial r;
  std::merge(v_.begin(), v_.begin() + deg_, o.v_.begin(), o.v_.begin() + o.deg_, r.v_.begin());
  r.deg_ = static_cast<std::uint8_t>(deg_ + o.deg_);
  return r;
}

Monomial Monomial::without_last() const {
  Monomial r = *this;
  if (r.deg_ > 0) r.v_[--r.deg_] = 0;
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ deg_;
  for (int k = 0; k < deg_; ++k) {
    h ^= v_[static_cast<std::size_t>(k)];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

namespace {

void require_same(const PolySpace& a, const PolySpace& b) {
  if (!(a == b)) throw std::invalid_argument("TruncPoly: incompatible spaces (namespace, variable count or cap)");
}

bool term_less(const Term& a, const Term& b) { return a.mono < b.mono; }

}  // namespace

TruncPoly::TruncPoly(PolySpace space) : space_(space) {
  if (space.cap < 0 || space.cap > kMaxCap) throw std::invalid_argument("TruncPoly: cap out of range");
}

TruncPoly TruncPoly::constant(PolySpace space, const Rational& c) {
  TruncPoly f(space);
  if (!c.is_zero()) f.terms_.push_back({Monomial(), c});
  return f;
}

TruncPoly TruncPoly::variable(PolySpace space, std::uint32_t v) {
  if (v >= space.nvars) throw std::out_of_range("TruncPoly::variable: index out of range");
  return monomial(space, Monomial::var(v), 1);
}

TruncPoly TruncPoly::monomial(PolySpace space, const Monomial& m, const Rational& c) {
  TruncPoly f(space);
  if (!c.is_zero() && m.degree() <= space.cap) f.terms_.push_back({m, c});
  return f;
}

TruncPoly TruncPoly::from_terms(PolySpace space, std::vector<Term> terms) {
  Accumulator acc(space);
  for (const Term& t : terms) acc.add(t.mono, t.coef);
  return acc.finish();
}

Rational TruncPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().mono.degree() == 0) return terms_.front().coef;
  return Rational(0);
}

Rational TruncPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono < key; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return Rational(0);
}

int TruncPoly::min_degree() const noexcept { return terms_.empty() ? kInfiniteDegree : terms_.front().mono.degree(); }

int TruncPoly::max_degree() const noexcept { return terms_.empty() ? -1 : terms_.back().mono.degree(); }

TruncPoly TruncPoly::with_cap(int cap) const {
  PolySpace s = space_;
  s.cap = cap;
  TruncPoly f(s);
  for (const Term& t : terms_)
    if (t.mono.degree() <= cap) f.terms_.push_back(t);
  return f;
}

TruncPoly TruncPoly::operator-() const {
  TruncPoly f = *this;
  for (Term& t : f.terms_) t.coef = -t.coef;
  return f;
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& g) {
  require_same(space_, g.space_);
  if (g.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono < a->mono) {
      out.push_back(*b++);
    } else {
      Rational c = a->coef + b->coef;
      if (!c.is_zero()) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& g) { return *this += -g; }

TruncPoly& TruncPoly::operator*=(const TruncPoly& g) { return *this = *this * g; }

TruncPoly operator*(const TruncPoly& f, const TruncPoly& g) {
  require_same(f.space_, g.space_);
  Accumulator acc(f.space_);
  acc.add_product(f, g, 1);
  return acc.finish();
}

TruncPoly operator*(const Rational& c, const TruncPoly& f) {
  if (c.is_zero()) return TruncPoly(f.space_);
  TruncPoly r = f;
  if (!c.is_one())
    for (Term& t : r.terms_) t.coef *= c;
  return r;
}

std::string TruncPoly::to_string(const VarNamer& namer) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.coef;
    if (first) {
      s += c.to_string();
    } else if (c.sign() < 0) {
      s += " - " + (-c).to_string();
    } else {
      s += " + " + c.to_string();
    }
    first = false;
    auto vs = t.mono.vars();
    std::string mono;
    for (std::size_t k = 0; k < vs.size();) {
      std::size_t e = 1;
      while (k + e < vs.size() && vs[k + e] == vs[k]) ++e;
      if (!mono.empty()) mono += '*';
      mono += namer(vs[k]);
      if (e > 1) mono += "^" + std::to_string(e);
      k += e;
    }
    if (!mono.empty()) s += " " + mono;
  }
  return s;
}

void Accumulator::add(const Monomial& m, const Rational& c) {
  if (c.is_zero() || m.degree() > space_.cap) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void Accumulator::add_scaled(const TruncPoly& f, const Rational& c) {
  require_same(space_, f.space());
  if (c.is_one()) {
    for (const Term& t : f.terms()) add(t.mono, t.coef);
  } else {
    for (const Term& t : f.terms()) add(t.mono, t.coef * c);
  }
}

void Accumulator::add_product(const TruncPoly& f, const TruncPoly& g, const Rational& c) {
  require_same(space_, f.space());
  require_same(space_, g.space());
  if (f.is_zero() || g.is_zero() || c.is_zero()) return;
  const int cap = space_.cap;
  const int gmin = g.min_degree();
  const bool unit = c.is_one();
  for (const Term& a : f.terms()) {
    const int da = a.mono.degree();
    if (da + gmin > cap) break;
    Rational ca = unit ? a.coef : a.coef * c;
    for (const Term& b : g.terms()) {
      if (da + b.mono.degree() > cap) break;
      add(a.mono.times(b.mono), ca * b.coef);
    }
  }
}

TruncPoly Accumulator::finish() {
  TruncPoly f(space_);
  f.terms_.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (!c.is_zero()) f.terms_.push_back({m, std::move(c)});
  acc_.clear();
  std::sort(f.terms_.begin(), f.terms_.end(), term_less);
  return f;
}

TruncPoly add(const TruncPoly& f, const TruncPoly& g) { return f + g; }
TruncPoly scale(const Rational& c, const TruncPoly& f) { return c * f; }
TruncPoly mul(const TruncPoly& f, const TruncPoly& g) { return f * g; }
int min_degree(const TruncPoly& f) { return f.min_degree(); }

TruncPoly graded_part(const TruncPoly& f, int k) {
  std::vector<Term> ts;
  for (const Term& t : f.terms())
    if (t.mono.degree() == k) ts.push_back(t);
  return TruncPoly::from_terms(f.space(), std::move(ts));
}

TruncPoly inverse_of_unit(const TruncPoly& f) {
  Rational c0 = f.constant_term();
  if (c0.is_zero()) throw std::domain_error("inverse_of_unit: constant term is zero");
  Rational inv0 = Rational(1) / c0;
  const PolySpace sp = f.space();
  TruncPoly h = inv0 * f - TruncPoly::constant(sp, 1);
  TruncPoly neg_h = -h;
  TruncPoly power = TruncPoly::constant(sp, 1);
  TruncPoly sum = power;
  for (int k = 1; k <= sp.cap && !power.is_zero(); ++k) {
    power = power * neg_h;
    sum += power;
  }
  return inv0 * sum;
}

TruncPoly substitute(const TruncPoly& f, std::span<const TruncPoly> images) {
  if (images.size() != f.space().nvars) throw std::invalid_argument("substitute: need one image per variable");
  if (images.empty()) return f;
  const PolySpace target = images[0].space();
  int min_img = kInfiniteDegree;
  for (const TruncPoly& g : images) {
    require_same(target, g.space());
    if (!g.constant_term().is_zero()) throw std::domain_error("substitute: image has a nonzero constant term");
    if (!g.is_zero()) min_img = std::min(min_img, g.min_degree());
  }
  Accumulator acc(target);
  std::unordered_map<Monomial, TruncPoly, MonomialHash> memo;
  std::function<const TruncPoly&(const Monomial&)> product = [&](const Monomial& m) -> const TruncPoly& {
    if (m.degree() == 1) return images[m.last()];
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    const TruncPoly& head = product(m.without_last());
    return memo.emplace(m, head * images[m.last()]).first->second;
  };
  for (const Term& t : f.terms()) {
    const int d = t.mono.degree();
    if (d == 0) {
      acc.add(Monomial(), t.coef);
      continue;
    }
    if (min_img == kInfiniteDegree || static_cast<long>(d) * min_img > target.cap) continue;
    acc.add_scaled(product(t.mono), t.coef);
  }
  return acc.finish();
}

TruncPoly substitute(const TruncPoly& f, const std::map<std::uint32_t, TruncPoly>& images) {
  std::vector<TruncPoly> table;
  table.reserve(f.space().nvars);
  for (std::uint32_t v = 0; v < f.space().nvars; ++v) {
    auto it = images.find(v);
    if (it == images.end()) {
      table.push_back(TruncPoly::variable(f.space(), v));
    } else {
      require_same(f.space(), it->second.space());
      table.push_back(it->second);
    }
  }
  for (const auto& [v, g] : images)
    if (v >= f.space().nvars) throw std::out_of_range("substitute: variable index out of range");
  return substitute(f, std::span<const TruncPoly>(table));
}

}  // namespace repalg::poly
