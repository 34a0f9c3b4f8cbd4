#include "uqc/pairing.hpp"

#include "uqc/error.hpp"

#include <algorithm>

namespace uqc {

QRat generator_pairing(int i) {
  const int e = i == 1 ? 1 : 2;  // q_1 = q, q_2 = q^2
  simple_root(i);
  return -(QRat::q(e) - QRat::q(-e)).inverse();
}

Pairing& default_pairing() {
  thread_local Pairing instance;
  return instance;
}

namespace {

// Pairings that the defining relations state directly.
QRat base_pair(const Monomial& y, const Monomial& x) {
  if (y.word.empty() && x.word.empty())
    return QRat::q(-inner(y.k, x.k));
  if (y.word.empty() || x.word.empty())
    return QRat();
  if (y.word.size() == 1 && x.word.size() == 1 && y.k == Weight{} && x.k == Weight{})
    return y.word[0] == x.word[0] ? generator_pairing(y.word[0]) : QRat();
  throw Error("base_pair called outside the base cases");
}

} // namespace

QRat Pairing::pair(const BorelElem& y, const BorelElem& x) {
  if (y.side() != Side::minus && !y.word_free())
    throw Error("pair: first argument must live in the minus half");
  if (x.side() != Side::plus && !x.word_free())
    throw Error("pair: second argument must live in the plus half");
  QRat total;
  for (const auto& [my, cy] : y.terms())
    for (const auto& [mx, cx] : x.terms()) {
      QRat v = pair(my, mx);
      if (!v.is_zero())
        total += cy * cx * v;
    }
  return total;
}

QRat Pairing::pair(const Monomial& y, const Monomial& x) {
  // Grading: the pairing vanishes unless the words carry the same root sum.
  if (y.word.size() != x.word.size() || root_sum(y.word) != root_sum(x.word))
    return QRat();
  if (y.word.empty())
    return base_pair(y, x);
  auto key = std::make_pair(y, x);
  if (auto it = cache_.find(key); it != cache_.end())
    return it->second;
  QRat v = compute(y, x);
  cache_.emplace(std::move(key), v);
  return v;
}

// <f_i y'', x> = <f_i ⊗ y'', Δ(x)>: only Δ-terms whose left factor has the
// weight of e_i survive.
QRat Pairing::compute(const Monomial& y, const Monomial& x) {
  const int i = y.word.front();
  const Monomial rest{Word(y.word.begin() + 1, y.word.end()), y.k};
  const TensorElem split =
      select_by_weight(coproduct(BorelElem::word(Side::plus, x.word, x.k)), simple_root(i));
  QRat total;
  for (const auto& [key, c] : split.terms()) {
    const auto& [left, right] = key;
    if (left.word != Word{i})
      continue;
    QRat head = pair_generator(i, left);
    if (head.is_zero())
      continue;
    QRat tail = pair(rest, right);
    if (!tail.is_zero())
      total += c * head * tail;
  }
  return total;
}

// <f_i, e_i k_g> = <Δ(f_i), k_g ⊗ e_i>, by the factor-swapping rule.
QRat Pairing::pair_generator(int i, const Monomial& x) {
  const Monomial k_part{{}, x.k};
  const Monomial e_part{x.word, {}};
  const TensorElem delta = coproduct(BorelElem::generator(Side::minus, i));
  QRat total;
  for (const auto& [key, c] : delta.terms()) {
    QRat a = base_pair(key.first, k_part);
    if (a.is_zero())
      continue;
    // key.second is f_i or k_{-alpha_i}; pairing a bare k with e_i is zero.
    QRat b = key.second.k == Weight{} ? base_pair(key.second, e_part) : QRat();
    total += c * a * b;
  }
  return total;
}

GramBlock Pairing::gram(const Weight& nu) {
  GramBlock g;
  g.nu = nu;
  g.plus_words = words_of_weight(nu);
  g.minus_words = g.plus_words;
  const std::size_t n = g.plus_words.size();
  g.matrix = QMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g.matrix(i, j) = pair(Monomial{g.minus_words[i], {}}, Monomial{g.plus_words[j], {}});
  g.rank = qmat_rank(g.matrix);
  return g;
}

std::size_t Pairing::weight_dim(const Weight& nu) { return gram(nu).rank; }

std::vector<BorelElem> Pairing::dual_basis(const Weight& nu, const std::vector<Word>& basis) {
  GramBlock g = gram(nu);
  const std::size_t n = g.plus_words.size();
  const std::size_t r = basis.size();
  std::vector<std::size_t> cols;
  for (const auto& w : basis) {
    auto it = std::find(g.plus_words.begin(), g.plus_words.end(), w);
    if (it == g.plus_words.end())
      throw MathError("basis word " + word_to_string(Side::plus, w) + " does not have weight " +
                      nu.to_string());
    cols.push_back(static_cast<std::size_t>(it - g.plus_words.begin()));
  }
  const QMatrix gb = g.matrix.select_cols(cols);
  if (qmat_rank(gb) != r)
    throw MathError("basis words are linearly dependent modulo the pairing radical");
  if (g.rank != r)
    throw MathError("basis has " + std::to_string(r) + " words but the weight space has dimension " +
                    std::to_string(g.rank));
  // Coordinates of every word in the chosen basis, modulo the radical.
  auto coords = qmat_solve(gb, g.matrix);
  if (!coords)
    throw MathError("weight-space words are not spanned by the basis (pairing inconsistency)");
  // Functional values t_i(w) = coords(i, w); solve c^T G = t_i over all words.
  auto sol = qmat_solve(g.matrix.transpose(), coords->transpose());
  if (!sol)
    throw MathError("dual-basis system is inconsistent (pairing inconsistency)");
  std::vector<BorelElem> out;
  for (std::size_t i = 0; i < r; ++i) {
    BorelElem d(Side::minus);
    for (std::size_t a = 0; a < n; ++a)
      d.add_term((*sol)(a, i), Monomial{g.minus_words[a], {}});
    out.push_back(std::move(d));
  }
  return out;
}

bool Pairing::radical_check(const BorelElem& x) {
  if (x.side() != Side::plus)
    throw Error("radical_check expects a plus-side element");
  return in_radical(x);
}

bool Pairing::in_radical(const BorelElem& x) {
  if (x.is_zero())
    return true;
  auto w = x.homogeneous_weight();
  if (!w)
    throw Error("radical check requires a homogeneous element");
  const Weight nu = x.side() == Side::plus ? *w : -*w;
  for (const auto& word : words_of_weight(nu)) {
    BorelElem probe = BorelElem::word(opposite(x.side()), word);
    QRat v = x.side() == Side::plus ? pair(probe, x) : pair(x, probe);
    if (!v.is_zero())
      return false;
  }
  return true;
}

} // namespace uqc
