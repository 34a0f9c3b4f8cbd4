#include "uqc/hopf.hpp"

#include "uqc/error.hpp"

namespace uqc {

std::vector<TensorTerm> TensorElem::term_list() const {
  std::vector<TensorTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_)
    out.push_back({c, key.first, key.second});
  return out;
}

void TensorElem::add_term(const QRat& c, const Monomial& left, const Monomial& right) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  if (side_ != o.side_)
    throw Error("cannot add tensors of different Borel halves");
  for (const auto& [key, c] : o.terms_)
    add_term(c, key.first, key.second);
  return *this;
}

namespace {

// Raw expansion terms carry the q-exponent separately so the 2^n products
// stay in integer arithmetic until they are merged.
struct RawTerm {
  int qexp;
  Monomial left;
  Monomial right;
};

void multiply_generator(std::vector<RawTerm>& acc, int letter, Side side) {
  const Weight alpha = simple_root(letter);
  const Monomial gen{{letter}, {}};
  // plus:  e⊗1 + k_alpha⊗e      minus: 1⊗f + f⊗k_{-alpha}
  const Monomial kgen{{}, side == Side::plus ? alpha : -alpha};
  const Monomial unit{};
  const std::pair<Monomial, Monomial> parts[2] = {
      side == Side::plus ? std::pair{gen, unit} : std::pair{unit, gen},
      side == Side::plus ? std::pair{kgen, gen} : std::pair{gen, kgen}};
  std::vector<RawTerm> next;
  next.reserve(acc.size() * 2);
  for (const auto& t : acc)
    for (const auto& [l, r] : parts) {
      MonomialProduct pl = monomial_mul(t.left, l, side);
      MonomialProduct pr = monomial_mul(t.right, r, side);
      next.push_back({t.qexp + pl.qexp + pr.qexp, std::move(pl.mono), std::move(pr.mono)});
    }
  acc = std::move(next);
}

} // namespace

TensorElem coproduct(const BorelElem& x) {
  TensorElem out(x.side());
  for (const auto& [m, c] : x.terms()) {
    std::vector<RawTerm> acc{{0, {}, {}}};
    for (int letter : m.word)
      multiply_generator(acc, letter, x.side());
    for (auto& t : acc) {
      t.left.k += m.k;
      t.right.k += m.k;
      out.add_term(t.qexp == 0 ? c : c * QRat::q(t.qexp), t.left, t.right);
    }
  }
  return out;
}

TensorElem select_by_weight(const TensorElem& t, const Weight& left_weight) {
  TensorElem out(t.side());
  for (const auto& [key, c] : t.terms())
    if (weight_of(t.side(), key.first.word) == left_weight)
      out.add_term(c, key.first, key.second);
  return out;
}

TensorElem tensor_mul(const TensorElem& a, const TensorElem& b) {
  if (a.side() != b.side())
    throw Error("tensor_mul: operands live in different Borel halves");
  TensorElem out(a.side());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      MonomialProduct l = monomial_mul(ka.first, kb.first, a.side());
      MonomialProduct r = monomial_mul(ka.second, kb.second, a.side());
      QRat c = ca * cb;
      if (l.qexp + r.qexp != 0)
        c *= QRat::q(l.qexp + r.qexp);
      out.add_term(c, l.mono, r.mono);
    }
  return out;
}

} // namespace uqc
