#include "uqc/freealg.hpp"

#include "uqc/error.hpp"

#include <algorithm>
#include <functional>

namespace uqc {

const char* side_name(Side s) { return s == Side::plus ? "plus" : "minus"; }

Side parse_side(const std::string& name) {
  if (name == "plus")
    return Side::plus;
  if (name == "minus")
    return Side::minus;
  throw Error("unknown side '" + name + "'");
}

Weight root_sum(const Word& w) {
  Weight s;
  for (int c : w)
    s += simple_root(c);
  return s;
}

Weight weight_of(const GenWord& w) {
  Weight s = root_sum(w.letters);
  return w.side == Side::plus ? s : -s;
}

BorelElem BorelElem::scalar(Side side, const QRat& c) {
  BorelElem x(side);
  x.add_term(c, Monomial{});
  return x;
}

BorelElem BorelElem::generator(Side side, int i) {
  simple_root(i);
  return word(side, Word{i});
}

BorelElem BorelElem::k_elem(Side side, const Weight& k) { return word(side, {}, k); }

BorelElem BorelElem::word(Side side, const Word& w, const Weight& k) {
  for (int c : w)
    simple_root(c);
  BorelElem x(side);
  x.add_term(QRat(1), Monomial{w, k});
  return x;
}

std::vector<BorelTerm> BorelElem::term_list() const {
  std::vector<BorelTerm> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_)
    out.push_back({c, m.word, m.k});
  return out;
}

QRat BorelElem::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QRat() : it->second;
}

void BorelElem::add_term(const QRat& c, const Monomial& m) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

std::optional<Weight> BorelElem::homogeneous_weight() const {
  std::optional<Weight> w;
  for (const auto& [m, c] : terms_) {
    Weight here = weight_of(side_, m.word);
    if (w && *w != here)
      return std::nullopt;
    w = here;
  }
  return w;
}

bool BorelElem::word_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.word.empty(); });
}

BorelElem BorelElem::retagged(Side side) const {
  if (!word_free())
    throw Error("only word-free elements can change side");
  BorelElem x = *this;
  x.side_ = side;
  return x;
}

void BorelElem::check_side(const BorelElem& o) const {
  if (side_ != o.side_)
    throw Error("cannot combine elements of different Borel halves");
}

BorelElem BorelElem::operator-() const {
  BorelElem x = *this;
  for (auto& [m, c] : x.terms_)
    c = -c;
  return x;
}

BorelElem& BorelElem::operator+=(const BorelElem& o) {
  check_side(o);
  for (const auto& [m, c] : o.terms_)
    add_term(c, m);
  return *this;
}

BorelElem& BorelElem::operator-=(const BorelElem& o) { return *this += -o; }

BorelElem& BorelElem::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_)
    x *= c;
  return *this;
}

std::string word_to_string(Side side, const Word& w) {
  std::string s;
  const char letter = side == Side::plus ? 'e' : 'f';
  for (int c : w) {
    if (!s.empty())
      s += ' ';
    s += letter;
    s += std::to_string(c);
  }
  return s;
}

std::string BorelElem::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono = word_to_string(side_, m.word);
    if (m.k != Weight{}) {
      if (!mono.empty())
        mono += ' ';
      mono += "k(" + std::to_string(m.k.x1) + "," + std::to_string(m.k.x2) + ")";
    }
    std::string piece;
    if (mono.empty())
      piece = "(" + c.to_string() + ")";
    else if (c.is_one())
      piece = mono;
    else if ((-c).is_one())
      piece = "-" + mono;
    else
      piece = "(" + c.to_string() + ")*" + mono;
    if (!out.empty())
      out += piece.front() == '-' ? " - " + piece.substr(1) : " + " + piece;
    else
      out = piece;
  }
  return out;
}

MonomialProduct monomial_mul(const Monomial& a, const Monomial& b, Side side) {
  MonomialProduct p;
  // k_a · w = q^{(a, weight(w))} w · k_a, with weight negative on the minus side.
  p.qexp = inner(a.k, weight_of(side, b.word));
  p.mono.word = a.word;
  p.mono.word.insert(p.mono.word.end(), b.word.begin(), b.word.end());
  p.mono.k = a.k + b.k;
  return p;
}

BorelElem borel_mul(const BorelElem& a, const BorelElem& b) {
  Side side = a.side();
  const BorelElem* lhs = &a;
  const BorelElem* rhs = &b;
  BorelElem tmp;
  if (a.side() != b.side()) {
    if (a.word_free()) {
      tmp = a.retagged(b.side());
      lhs = &tmp;
      side = b.side();
    } else if (b.word_free()) {
      tmp = b.retagged(a.side());
      rhs = &tmp;
    } else {
      throw Error("borel_mul: operands live in different Borel halves");
    }
  }
  BorelElem out(side);
  for (const auto& [ma, ca] : lhs->terms())
    for (const auto& [mb, cb] : rhs->terms()) {
      MonomialProduct p = monomial_mul(ma, mb, side);
      QRat c = ca * cb;
      if (p.qexp != 0)
        c *= QRat::q(p.qexp);
      out.add_term(c, p.mono);
    }
  return out;
}

BorelElem omega(const BorelElem& x) {
  BorelElem out(opposite(x.side()));
  for (const auto& [m, c] : x.terms())
    out.add_term(c, Monomial{m.word, -m.k});
  return out;
}

BorelElem tau(const BorelElem& x) {
  // tau(w k_a) = k_{-a} rev(w) = q^{(-a, weight(rev w))} rev(w) k_{-a}
  BorelElem out(x.side());
  for (const auto& [m, c] : x.terms()) {
    Word rev(m.word.rbegin(), m.word.rend());
    int e = inner(-m.k, weight_of(x.side(), rev));
    out.add_term(e == 0 ? c : c * QRat::q(e), Monomial{rev, -m.k});
  }
  return out;
}

std::vector<BorelElem> serre_elements() {
  const QRat quad = QRat::q(2) + QRat::q(-2);
  const QRat cubic = QRat::q(2) + QRat(1) + QRat::q(-2);
  std::vector<BorelElem> out;
  for (Side side : {Side::plus, Side::minus}) {
    BorelElem s1(side);
    s1.add_term(1, {{2, 2, 1}, {}});
    s1.add_term(-quad, {{2, 1, 2}, {}});
    s1.add_term(1, {{1, 2, 2}, {}});
    BorelElem s2(side);
    s2.add_term(1, {{1, 1, 1, 2}, {}});
    s2.add_term(-cubic, {{1, 1, 2, 1}, {}});
    s2.add_term(cubic, {{1, 2, 1, 1}, {}});
    s2.add_term(-1, {{2, 1, 1, 1}, {}});
    out.push_back(std::move(s1));
    out.push_back(std::move(s2));
  }
  return out;
}

std::vector<Word> words_of_weight(const Weight& nu) {
  int a = 0, b = 0;
  if (!simple_root_coords(nu, a, b) || a < 0 || b < 0)
    throw Error("weight " + nu.to_string() + " is not a nonnegative combination of simple roots");
  Word w;
  w.insert(w.end(), static_cast<std::size_t>(a), 1);
  w.insert(w.end(), static_cast<std::size_t>(b), 2);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

} // namespace uqc
