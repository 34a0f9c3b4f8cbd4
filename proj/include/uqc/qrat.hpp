#pragma once

#include "uqc/laurent.hpp"

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace uqc {

/// Exact element of Q(q), stored as num/den in lowest terms.
///
/// Canonical form, restored after every operation:
///  - den has lowest exponent 0 and a positive leading coefficient;
///  - num and den are coprime in Q[q, q^-1] and jointly primitive over Z;
///  - zero is 0/1.
/// Two values are equal iff their (num, den) pairs are identical.
class QRat {
public:
  QRat() : den_(1) {}
  QRat(long c) : num_(c), den_(1) {}
  QRat(const LaurentPoly& p) : num_(p), den_(1) {}
  QRat(const LaurentPoly& num, const LaurentPoly& den);

  /// q^exp
  static QRat q(int exp = 1) { return QRat(LaurentPoly::q(exp)); }
  /// Parse the textual form produced by to_string(), or any rational
  /// expression in q built from integers, `q`, + - * / ^ and parentheses.
  static QRat parse(std::string_view text);

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const noexcept { return den_.is_one(); }
  /// Monomial count of num plus den; used as a pivot-simplicity measure.
  std::size_t complexity() const noexcept { return num_.size() + den_.size(); }
  /// Sum of exponent spreads of num and den.
  int spread() const;

  QRat operator-() const;
  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);
  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  /// Integer power; negative exponents invert (throws on zero).
  QRat pow(int n) const;
  QRat inverse() const;

  bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// Exact value at q = q0. Throws PoleError if q0 is a pole (or q0 = 0
  /// with negative powers present).
  mpq_class eval(const mpq_class& q0) const;

  /// `num` or `(num)/(den)` with both sides shifted to ordinary polynomials,
  /// monomials by descending exponent. Example: `(-q^4 + 1)/(q^2)`.
  std::string to_string() const;

private:
  struct Raw {};
  QRat(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// Parse a rational number `a` or `a/b`.
mpq_class parse_rational(std::string_view text);

} // namespace uqc
