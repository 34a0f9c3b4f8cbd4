#pragma once

#include "uqc/cartan.hpp"
#include "uqc/qrat.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace uqc {

/// Which Borel half an element lives in: plus is generated by e_i and k's,
/// minus by f_i and k's.
enum class Side { plus, minus };

inline Side opposite(Side s) { return s == Side::plus ? Side::minus : Side::plus; }
const char* side_name(Side s);
Side parse_side(const std::string& name);

/// Generator indices, each 1 or 2. The empty word is the identity.
using Word = std::vector<int>;

/// A word together with the half it lives in.
struct GenWord {
  Side side = Side::plus;
  Word letters;
};

/// Sum of simple roots of the letters.
Weight root_sum(const Word& w);
/// Grading weight: root_sum for plus words, its negative for minus words.
Weight weight_of(const GenWord& w);
inline Weight weight_of(Side side, const Word& w) { return weight_of(GenWord{side, w}); }

/// Normal-ordered monomial `word · k_k`.
struct Monomial {
  Word word;
  Weight k;

  auto operator<=>(const Monomial&) const = default;
};

struct BorelTerm {
  QRat coeff;
  Word word;
  Weight k;
};

/// Finite linear combination of normal-ordered monomials in one Borel half.
/// Terms are keyed by (word, k) so merging and ordering are structural.
class BorelElem {
public:
  using TermMap = std::map<Monomial, QRat>;

  explicit BorelElem(Side side = Side::plus) : side_(side) {}

  static BorelElem one(Side side) { return scalar(side, QRat(1)); }
  static BorelElem scalar(Side side, const QRat& c);
  static BorelElem generator(Side side, int i);
  static BorelElem k_elem(Side side, const Weight& k);
  static BorelElem word(Side side, const Word& w, const Weight& k = {});

  Side side() const noexcept { return side_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::vector<BorelTerm> term_list() const;
  QRat coeff(const Monomial& m) const;

  void add_term(const QRat& c, const Monomial& m);

  /// Word weight shared by all terms; nullopt if mixed (or empty).
  std::optional<Weight> homogeneous_weight() const;
  /// True when every term has the empty word.
  bool word_free() const;
  /// Same element viewed in the other half. Only valid when word_free().
  BorelElem retagged(Side side) const;

  BorelElem operator-() const;
  BorelElem& operator+=(const BorelElem& o);
  BorelElem& operator-=(const BorelElem& o);
  BorelElem& operator*=(const QRat& c);
  friend BorelElem operator+(BorelElem a, const BorelElem& b) { return a += b; }
  friend BorelElem operator-(BorelElem a, const BorelElem& b) { return a -= b; }
  friend BorelElem operator*(BorelElem a, const QRat& c) { return a *= c; }
  friend BorelElem operator*(const QRat& c, BorelElem a) { return a *= c; }

  bool operator==(const BorelElem& o) const { return side_ == o.side_ && terms_ == o.terms_; }

  /// Parseable text, e.g. `(q^2 + 1)*e1 e2 k(0,2) - e2 e1`.
  std::string to_string() const;

private:
  void check_side(const BorelElem& o) const;

  Side side_;
  TermMap terms_;
};

/// (a · b) of two monomials, renormalised as q^qexp · mono.
struct MonomialProduct {
  int qexp = 0;
  Monomial mono;
};
MonomialProduct monomial_mul(const Monomial& a, const Monomial& b, Side side);

/// Product in one Borel half. k's are moved right with
/// k_mu e_j = q^{(mu,alpha_j)} e_j k_mu and k_mu f_j = q^{-(mu,alpha_j)} f_j k_mu.
BorelElem borel_mul(const BorelElem& a, const BorelElem& b);

/// Algebra automorphism e_i <-> f_i, k_mu -> k_{-mu}. Flips the side.
BorelElem omega(const BorelElem& x);
/// Algebra anti-automorphism fixing e_i, f_i and sending k_mu -> k_{-mu}.
BorelElem tau(const BorelElem& x);

/// The four Serre elements, in order: e-quadratic, e-cubic, f-quadratic, f-cubic.
std::vector<BorelElem> serre_elements();

/// All words with the given root sum, in lexicographic order. Throws if
/// nu is not a nonnegative combination of simple roots.
std::vector<Word> words_of_weight(const Weight& nu);

std::string word_to_string(Side side, const Word& w);

} // namespace uqc
