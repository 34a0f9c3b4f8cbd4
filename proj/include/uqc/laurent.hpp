#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace uqc {

/// Element of Z[q, q^-1]. Terms are kept sorted by ascending exponent and
/// never hold a zero coefficient; the zero polynomial has no terms.
class LaurentPoly {
public:
  struct Term {
    int exp;
    mpz_class coeff;

    bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
  };

  LaurentPoly() = default;
  LaurentPoly(long c);
  explicit LaurentPoly(const mpz_class& c);

  static LaurentPoly monomial(const mpz_class& c, int exp);
  /// q^exp
  static LaurentPoly q(int exp = 1) { return monomial(1, exp); }
  /// coeffs[i] is the coefficient of q^(low + i); zeros are dropped.
  static LaurentPoly from_dense(int low, const std::vector<mpz_class>& coeffs);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept;
  bool is_constant() const noexcept;
  /// Lowest / highest exponent. Undefined on zero.
  int low_exp() const { return terms_.front().exp; }
  int high_exp() const { return terms_.back().exp; }
  const mpz_class& leading_coeff() const { return terms_.back().coeff; }
  const mpz_class& trailing_coeff() const { return terms_.front().coeff; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  mpz_class coeff(int exp) const;

  /// Multiply by q^k.
  LaurentPoly shifted(int k) const;
  /// Positive gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;
  /// Dense coefficient vector from low_exp() to high_exp().
  std::vector<mpz_class> dense() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  /// Exact division of every coefficient by an integer; throws if inexact.
  LaurentPoly& operator/=(const mpz_class& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  mpq_class eval(const mpq_class& q0) const;

  /// Monomials `c*q^e` by descending exponent, e.g. `-q^4 + 2*q - 1`.
  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

/// Primitive gcd in Q[q] of the q-power-free parts of a and b, normalised to a
/// positive leading coefficient and lowest exponent 0. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// a / b where b divides a exactly in Z[q, q^-1]; throws MathError otherwise.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

} // namespace uqc
