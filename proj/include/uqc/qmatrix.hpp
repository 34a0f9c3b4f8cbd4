#pragma once

#include "uqc/qrat.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace uqc {

/// Dense row-major matrix over Q(q).
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(const std::vector<QRat>& d);
  /// Matrix with a single entry `value` at (i, j).
  static QMatrix unit(std::size_t n, std::size_t i, std::size_t j, const QRat& value = QRat(1));

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  QRat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const QRat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const QRat& s);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const QRat& s) { return a *= s; }
  friend QMatrix operator*(const QRat& s, QMatrix a) { return a *= s; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);

  bool operator==(const QMatrix& o) const = default;

  bool is_zero() const;
  /// If the matrix is c·Id, returns c.
  std::optional<QRat> scalar_value() const;
  QMatrix transpose() const;
  QMatrix row(std::size_t i) const;
  QMatrix col(std::size_t j) const;
  /// Columns in the given order.
  QMatrix select_cols(const std::vector<std::size_t>& cols) const;
  QMatrix hstack(const QMatrix& o) const;
  /// Entrywise specialisation at q = q0.
  std::vector<std::vector<mpq_class>> eval(const mpq_class& q0) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QRat> data_;
};

/// Commutator ab - ba.
QMatrix commutator(const QMatrix& a, const QMatrix& b);
/// Kronecker product a ⊗ b in the standard index order.
QMatrix kron(const QMatrix& a, const QMatrix& b);

/// Result of exact Gauss-Jordan elimination.
struct Elimination {
  QMatrix reduced;                  ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Columns are processed left to right; within a column the pivot is the
/// structurally simplest nonzero entry (fewest monomials, then smallest
/// exponent spread, then lowest row index).
Elimination eliminate(QMatrix m);

std::size_t qmat_rank(const QMatrix& m);

/// Solves m·X = rhs. Returns std::nullopt when the system is inconsistent.
/// Rank-deficient systems get the particular solution whose non-pivot
/// (free) variables are zero.
std::optional<QMatrix> qmat_solve(const QMatrix& m, const QMatrix& rhs);

} // namespace uqc
