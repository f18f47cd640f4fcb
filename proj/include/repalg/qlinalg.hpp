#pragma once

#include "repalg/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace repalg::qla {

using QVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector column(std::size_t c) const;
  void set_column(std::size_t c, const QVector& v);
  bool is_zero() const;
  QMatrix transpose() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a);
QVector operator*(const QMatrix& a, const QVector& v);

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(QMatrix m);
std::size_t rank(const QMatrix& m);

/// Rank with a modular shortcut: when the matrix has full rank modulo a large
/// prime that is already the exact rank; otherwise exact elimination decides.
std::size_t rank_certified(const QMatrix& m);

/// Solution x of m x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Throws std::domain_error when m is not square and invertible.
QMatrix inverse(const QMatrix& m);

std::string to_string(const QMatrix& m);

}  // namespace repalg::qla
