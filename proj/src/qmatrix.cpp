#include "uqc/qmatrix.hpp"

#include "uqc/error.hpp"

#include <utility>

namespace uqc {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = QRat(1);
  return m;
}

QMatrix QMatrix::diagonal(const std::vector<QRat>& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

QMatrix QMatrix::unit(std::size_t n, std::size_t i, std::size_t j, const QRat& value) {
  QMatrix m(n, n);
  m(i, j) = value;
  return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix dimension mismatch in addition");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero())
      data_[k] += o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix dimension mismatch in subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero())
      data_[k] -= o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(const QRat& s) {
  for (auto& x : data_)
    if (!x.is_zero())
      x *= s;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error("matrix dimension mismatch in product");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const QRat& x = a(i, k);
      if (x.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const QRat& y = b(k, j);
        if (!y.is_zero())
          c(i, j) += x * y;
      }
    }
  return c;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero())
      return false;
  return true;
}

std::optional<QRat> QMatrix::scalar_value() const {
  if (rows_ != cols_ || rows_ == 0)
    return std::nullopt;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !((*this)(i, j) == (*this)(0, 0)) : !(*this)(i, j).is_zero())
        return std::nullopt;
    }
  return (*this)(0, 0);
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::row(std::size_t i) const {
  QMatrix r(1, cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    r(0, j) = (*this)(i, j);
  return r;
}

QMatrix QMatrix::col(std::size_t j) const { return select_cols({j}); }

QMatrix QMatrix::select_cols(const std::vector<std::size_t>& cols) const {
  QMatrix r(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols.size(); ++k)
      r(i, k) = (*this)(i, cols[k]);
  return r;
}

QMatrix QMatrix::hstack(const QMatrix& o) const {
  if (rows_ != o.rows_)
    throw Error("row count mismatch in hstack");
  QMatrix r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j)
      r(i, cols_ + j) = o(i, j);
  }
  return r;
}

std::vector<std::vector<mpq_class>> QMatrix::eval(const mpq_class& q0) const {
  std::vector<std::vector<mpq_class>> out(rows_, std::vector<mpq_class>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out[i][j] = (*this)(i, j).eval(q0);
  return out;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero())
        continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (!b(r, c).is_zero())
            k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return k;
}

Elimination eliminate(QMatrix m) {
  Elimination out;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
    std::optional<std::size_t> best;
    for (std::size_t r = next_row; r < m.rows(); ++r) {
      const QRat& x = m(r, col);
      if (x.is_zero())
        continue;
      if (!best) {
        best = r;
        continue;
      }
      const QRat& y = m(*best, col);
      if (x.complexity() < y.complexity() ||
          (x.complexity() == y.complexity() && x.spread() < y.spread()))
        best = r;
    }
    if (!best)
      continue;
    const std::size_t p = next_row++;
    if (*best != p)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(p, j), m(*best, j));
    const QRat inv = m(p, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m(p, j).is_zero())
        m(p, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == p || m(r, col).is_zero())
        continue;
      const QRat factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(p, j).is_zero())
          m(r, j) -= factor * m(p, j);
    }
    out.pivots.push_back(col);
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t qmat_rank(const QMatrix& m) { return eliminate(m).rank(); }

std::optional<QMatrix> qmat_solve(const QMatrix& m, const QMatrix& rhs) {
  if (m.rows() != rhs.rows())
    throw Error("qmat_solve: row count mismatch");
  const std::size_t n = m.cols();
  Elimination e = eliminate(m.hstack(rhs));
  // A pivot in the augmented block means some row reads 0 = nonzero.
  for (std::size_t c : e.pivots)
    if (c >= n)
      return std::nullopt;
  QMatrix x(n, rhs.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      x(e.pivots[r], j) = e.reduced(r, n + j);
  return x;
}

} // namespace uqc
