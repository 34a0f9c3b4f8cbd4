#pragma once

#include "uqc/freealg.hpp"

#include <map>
#include <utility>

namespace uqc {

struct TensorTerm {
  QRat coeff;
  Monomial left;
  Monomial right;
};

/// Element of B ⊗ B for one Borel half B, each factor normal-ordered.
class TensorElem {
public:
  using Key = std::pair<Monomial, Monomial>;
  using TermMap = std::map<Key, QRat>;

  explicit TensorElem(Side side = Side::plus) : side_(side) {}

  Side side() const noexcept { return side_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::vector<TensorTerm> term_list() const;
  void add_term(const QRat& c, const Monomial& left, const Monomial& right);

  TensorElem& operator+=(const TensorElem& o);
  bool operator==(const TensorElem& o) const { return side_ == o.side_ && terms_ == o.terms_; }

private:
  Side side_;
  TermMap terms_;
};

/// Δ(e_i) = e_i⊗1 + k_i⊗e_i, Δ(f_i) = 1⊗f_i + f_i⊗k_i^{-1}, Δ(k) = k⊗k,
/// extended multiplicatively with both factors renormalised.
TensorElem coproduct(const BorelElem& x);

/// Sub-sum of terms whose left factor has word weight `left_weight`.
TensorElem select_by_weight(const TensorElem& t, const Weight& left_weight);

/// Componentwise product (a⊗b)(c⊗d) = ac⊗bd.
TensorElem tensor_mul(const TensorElem& a, const TensorElem& b);

} // namespace uqc
