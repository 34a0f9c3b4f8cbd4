#pragma once

#include "uqc/freealg.hpp"
#include "uqc/hopf.hpp"
#include "uqc/qmatrix.hpp"

#include <map>
#include <utility>
#include <vector>

namespace uqc {

/// Pairing matrix of all f-words against all e-words of one weight.
struct GramBlock {
  Weight nu;
  std::vector<Word> minus_words;
  std::vector<Word> plus_words;
  QMatrix matrix;  ///< matrix(i, j) = <f_{minus_words[i]}, e_{plus_words[j]}>
  std::size_t rank = 0;
};

/// Bilinear pairing U_q(b-) × U_q(b+) -> Q(q).
///
/// Base cases: <k_a, k_b> = q^{-(a,b)}, <f_i, e_j> = -δ_ij/(q_i - q_i^{-1})
/// with q_1 = q, q_2 = q^2, and zero whenever exactly one side is word-free.
/// Extension: <y y', x> = <y ⊗ y', Δ(x)> and <y, x x'> = <Δ(y), x' ⊗ x>.
///
/// Monomial pairings are memoised. An instance is not thread-safe; use one
/// per thread (default_pairing() is thread_local). Values do not depend on
/// evaluation order.
class Pairing {
public:
  QRat pair(const BorelElem& y, const BorelElem& x);
  QRat pair(const Monomial& y, const Monomial& x);

  GramBlock gram(const Weight& nu);
  std::size_t weight_dim(const Weight& nu);

  /// Minus-side elements d_1..d_r with <d_i, e_{basis_j}> = δ_ij that are
  /// genuine dual functionals on the Serre quotient at weight nu.
  /// Throws MathError if the basis is dependent modulo the radical or does
  /// not span, or if the defining system is inconsistent.
  std::vector<BorelElem> dual_basis(const Weight& nu, const std::vector<Word>& basis);

  /// True iff x pairs to zero with every f-word of its weight.
  bool radical_check(const BorelElem& x);
  /// Side-generic version: a minus-side y is in the radical iff it pairs to
  /// zero with every e-word of its weight.
  bool in_radical(const BorelElem& y_or_x);

  std::size_t cache_size() const noexcept { return cache_.size(); }

private:
  QRat compute(const Monomial& y, const Monomial& x);
  QRat pair_generator(int i, const Monomial& x);

  std::map<std::pair<Monomial, Monomial>, QRat> cache_;
};

/// <f_i, e_i> = -1/(q_i - q_i^{-1}).
QRat generator_pairing(int i);

/// The calling thread's shared pairing instance.
Pairing& default_pairing();

inline QRat pair(const BorelElem& y, const BorelElem& x) { return default_pairing().pair(y, x); }
inline GramBlock gram(const Weight& nu) { return default_pairing().gram(nu); }
inline std::size_t weight_dim(const Weight& nu) { return default_pairing().weight_dim(nu); }
inline std::vector<BorelElem> dual_basis(const Weight& nu, const std::vector<Word>& basis) {
  return default_pairing().dual_basis(nu, basis);
}
inline bool radical_check(const BorelElem& x) { return default_pairing().radical_check(x); }

} // namespace uqc
