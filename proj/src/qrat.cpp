#include "uqc/qrat.hpp"

#include "uqc/error.hpp"

#include <cctype>
#include <utility>

namespace uqc {

QRat::QRat(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  canonicalize();
}

int QRat::spread() const {
  int s = 0;
  if (!num_.is_zero())
    s += num_.high_exp() - num_.low_exp();
  s += den_.high_exp() - den_.low_exp();
  return s;
}

void QRat::canonicalize() {
  if (den_.is_zero())
    throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int shift = num_.low_exp() - den_.low_exp();
  LaurentPoly n = num_.shifted(-num_.low_exp());
  LaurentPoly d = den_.shifted(-den_.low_exp());
  if (!d.is_constant()) {
    LaurentPoly g = poly_gcd(n, d);
    if (!g.is_constant()) {
      n = exact_div(n, g);
      d = exact_div(d, g);
    }
  }
  mpz_class c = gcd(n.content(), d.content());
  if (d.leading_coeff() < 0)
    c = -c;
  if (c != 1) {
    n /= c;
    d /= c;
  }
  num_ = n.shifted(shift);
  den_ = std::move(d);
}

QRat QRat::operator-() const { return QRat(Raw{}, -num_, den_); }

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero())
    return *this;
  if (is_zero())
    return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.is_one()) {
      if (num_.is_zero())
        den_ = LaurentPoly(1);
      return *this;
    }
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero() || o.is_zero())
    return *this = QRat();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

QRat& QRat::operator/=(const QRat& o) {
  if (o.is_zero())
    throw DivisionByZero();
  return *this *= o.inverse();
}

QRat QRat::inverse() const {
  if (is_zero())
    throw DivisionByZero();
  return QRat(den_, num_);
}

QRat QRat::pow(int n) const {
  if (n < 0)
    return inverse().pow(-n);
  QRat result(1);
  QRat base = *this;
  while (n > 0) {
    if (n & 1)
      result *= base;
    n >>= 1;
    if (n)
      base *= base;
  }
  return result;
}

mpq_class QRat::eval(const mpq_class& q0) const {
  if (q0 == 0 && ((!num_.is_zero() && num_.low_exp() < 0) || den_.low_exp() < 0))
    throw PoleError("q = 0 is a pole");
  mpq_class d = den_.eval(q0);
  if (d == 0)
    throw PoleError("denominator vanishes at q = " + q0.get_str());
  mpq_class r = num_.eval(q0) / d;
  r.canonicalize();
  return r;
}

std::string QRat::to_string() const {
  if (num_.is_zero())
    return "0";
  int shift = num_.low_exp() < 0 ? -num_.low_exp() : 0;
  LaurentPoly n = num_.shifted(shift);
  LaurentPoly d = den_.shifted(shift);
  if (d.is_one())
    return n.to_string();
  return "(" + n.to_string() + ")/(" + d.to_string() + ")";
}

namespace {

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/') unary)*
// unary  := '-' unary | '+' unary | power
// power  := atom ('^' ['-'] integer)?
// atom   := integer | 'q' | '(' expr ')'
class ScalarParser {
public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  QRat parse_all() {
    QRat v = expr();
    skip();
    if (pos_ != s_.size())
      throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return v;
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool eat(char c) {
    if (!peek(c))
      return false;
    ++pos_;
    return true;
  }

  QRat expr() {
    QRat v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  QRat term() {
    QRat v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (peek('/')) {
        std::size_t at = pos_++;
        QRat d = unary();
        if (d.is_zero())
          throw ParseError("division by zero", at);
        v /= d;
      } else {
        return v;
      }
    }
  }

  QRat unary() {
    if (eat('-'))
      return -unary();
    if (eat('+'))
      return unary();
    return power();
  }

  QRat power() {
    std::size_t at = pos_;
    QRat base = atom();
    if (!eat('^'))
      return base;
    bool neg = eat('-');
    long e = integer();
    if (neg)
      e = -e;
    if (e < 0 && base.is_zero())
      throw ParseError("negative power of zero", at);
    return base.pow(static_cast<int>(e));
  }

  QRat atom() {
    skip();
    if (pos_ >= s_.size())
      throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QRat v = expr();
      if (!eat(')'))
        throw ParseError("expected ')'", pos_);
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return QRat::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return QRat(LaurentPoly(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      throw ParseError("expected integer exponent", pos_);
    if (pos_ - start > 6)
      throw ParseError("exponent too large", start);
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

QRat QRat::parse(std::string_view text) { return ScalarParser(text).parse_all(); }

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+'))
    ++i;
  bool slash = false;
  bool digits = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = true;
    } else if (s[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      throw ParseError("malformed rational number '" + s + "'", i);
    }
  }
  if (!digits)
    throw ParseError("malformed rational number '" + s + "'", s.size());
  if (s[0] == '+')
    s.erase(0, 1);
  mpq_class r;
  if (r.set_str(s, 10) != 0)
    throw ParseError("malformed rational number '" + s + "'", 0);
  if (r.get_den() == 0)
    throw ParseError("zero denominator in '" + s + "'", 0);
  r.canonicalize();
  return r;
}

} // namespace uqc
