#include "repalg/qlinalg.hpp"

#include "repalg/modp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace repalg::qla {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("QMatrix: ragged initializer");
    for (const auto& x : row) data_.push_back(x);
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void QMatrix::set_column(std::size_t c, const QVector& v) {
  if (v.size() != rows_) throw std::invalid_argument("QMatrix::set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q.is_zero(); });
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("QMatrix product: dimension mismatch");
  QMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& y = b.at(k, j);
        if (!y.is_zero()) p.at(i, j) += x * y;
      }
    }
  return p;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("QMatrix sum: dimension mismatch");
  QMatrix s = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s.at(i, j) += b.at(i, j);
  return s;
}

QMatrix operator-(const QMatrix& a) {
  QMatrix s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s.at(i, j) = -a.at(i, j);
  return s;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) { return a + (-b); }

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("QMatrix*vector: dimension mismatch");
  QVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a.at(i, k).is_zero() && !v[k].is_zero()) out[i] += a.at(i, k) * v[k];
  return out;
}

RrefResult rref(QMatrix m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m.at(i, c).is_zero()) continue;
      // Prefer a unit pivot; it keeps entries small.
      if (p == rows) p = i;
      if (m.at(i, c).is_one()) {
        p = i;
        break;
      }
    }
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    if (!m.at(r, c).is_one()) {
      Rational inv = Rational(1) / m.at(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
    }
    support.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (!m.at(r, j).is_zero()) support.push_back(j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (std::size_t j : support) m.at(i, j) -= f * m.at(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

std::size_t rank_certified(const QMatrix& m) {
  const std::size_t bound = std::min(m.rows(), m.cols());
  if (auto r = modp::rank(m); r && *r == bound) return bound;
  return rank(m);
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult rr = rref(std::move(aug));
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  QVector x(m.cols());
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) x[rr.pivots[k]] = rr.reduced.at(k, m.cols());
  return x;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.reduced.at(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return QMatrix();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult rr = rref(std::move(aug));
  if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) throw std::domain_error("inverse: matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.reduced.at(i, n + j);
  return inv;
}

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m.at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace repalg::qla
