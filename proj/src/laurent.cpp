#include "uqc/laurent.hpp"

#include "uqc/error.hpp"

#include <algorithm>
#include <sstream>

namespace uqc {

namespace {

// Ordinary polynomials over Z, ascending coefficients, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1)
      break;
  }
  return g;
}

void make_primitive(ZPoly& p) {
  if (p.empty())
    return;
  mpz_class g = content(p);
  if (p.back() < 0)
    g = -g;
  if (g != 1)
    for (auto& c : p)
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (b nonzero).
ZPoly prem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const mpz_class la = a.back();
    for (auto& c : a)
      c *= lb;
    for (std::size_t i = 0; i <= db; ++i)
      a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

ZPoly to_zpoly(const LaurentPoly& p) {
  // Strip the q-power so the constant term is nonzero.
  return p.is_zero() ? ZPoly{} : p.dense();
}

} // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0)
    terms_.push_back({0, mpz_class(c)});
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0)
    terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int exp) {
  LaurentPoly p;
  if (c != 0)
    p.terms_.push_back({exp, c});
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, const std::vector<mpz_class>& coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0)
      p.terms_.push_back({low + static_cast<int>(i), coeffs[i]});
  return p;
}

bool LaurentPoly::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1;
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
}

mpz_class LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  return (it != terms_.end() && it->exp == exp) ? it->coeff : mpz_class(0);
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_)
    t.exp += k;
  return p;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
  return g;
}

std::vector<mpz_class> LaurentPoly::dense() const {
  if (terms_.empty())
    return {};
  std::vector<mpz_class> d(static_cast<std::size_t>(high_exp() - low_exp() + 1));
  for (const auto& t : terms_)
    d[static_cast<std::size_t>(t.exp - low_exp())] = t.coeff;
  return d;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_)
    t.coeff = -t.coeff;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty())
    return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.push_back(*b++);
    } else {
      mpz_class c = a->coeff + b->coeff;
      if (c != 0)
        out.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& m = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& p = a.terms_.size() == 1 ? b : a;
    LaurentPoly r;
    r.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms_)
      r.terms_.push_back({t.exp + m.exp, t.coeff * m.coeff});
    return r;
  }
  const int low = a.low_exp() + b.low_exp();
  std::vector<mpz_class> acc(static_cast<std::size_t>(a.high_exp() + b.high_exp() - low + 1));
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      auto& slot = acc[static_cast<std::size_t>(s.exp + t.exp - low)];
      mpz_addmul(slot.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
    }
  return LaurentPoly::from_dense(low, acc);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator/=(const mpz_class& c) {
  for (auto& t : terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t()))
      throw MathError("inexact integer division of a Laurent polynomial");
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  }
  return *this;
}

mpq_class LaurentPoly::eval(const mpq_class& q0) const {
  if (terms_.empty())
    return 0;
  if (q0 == 0 && low_exp() < 0)
    throw PoleError("negative power of q evaluated at q = 0");
  // Horner on the dense form, then apply q^low.
  mpq_class acc = 0;
  auto d = dense();
  for (auto it = d.rbegin(); it != d.rend(); ++it)
    acc = acc * q0 + mpq_class(*it);
  int low = low_exp();
  mpq_class base = low < 0 ? mpq_class(1) / q0 : q0;
  for (int i = 0; i < std::abs(low); ++i)
    acc *= base;
  acc.canonicalize();
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool neg = it->coeff < 0;
    mpz_class mag = abs(it->coeff);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (it->exp == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1)
      os << mag.get_str() << "*";
    os << "q";
    if (it->exp != 1)
      os << "^" << it->exp;
  }
  return os.str();
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  ZPoly x = to_zpoly(a);
  ZPoly y = to_zpoly(b);
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size())
    std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = prem(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  make_primitive(x);
  return LaurentPoly::from_dense(0, x);
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero())
    throw MathError("exact_div by zero");
  if (a.is_zero())
    return {};
  const int shift = a.low_exp() - b.low_exp();
  ZPoly num = a.dense();
  const ZPoly den = b.dense();
  if (num.size() < den.size())
    throw MathError("exact_div: divisor has higher degree");
  ZPoly quot(num.size() - den.size() + 1);
  const mpz_class& lead = den.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class& top = num[k + den.size() - 1];
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw MathError("exact_div: division is not exact");
    mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t i = 0; i < den.size(); ++i)
      num[k + i] -= quot[k] * den[i];
  }
  trim(num);
  if (!num.empty())
    throw MathError("exact_div: nonzero remainder");
  return LaurentPoly::from_dense(shift, quot);
}

} // namespace uqc
