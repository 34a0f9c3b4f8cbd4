#pragma once

#include "uqc/freealg.hpp"
#include "uqc/pairing.hpp"
#include "uqc/qmatrix.hpp"
#include "uqc/rep.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace uqc {

/// coeff · fpart · k_k · epart, with fpart a k-free minus-side combination
/// and epart a k-free plus-side combination.
struct CentralTerm {
  QRat coeff;
  BorelElem fpart{Side::minus};
  Weight k;
  BorelElem epart{Side::plus};
};

/// Normal-ordered element Σ coeff · f-combination · k · e-combination of the
/// full algebra. Each stored term has monic parts (first coefficient 1);
/// terms with identical (fpart, k, epart) are merged.
class CentralElem {
public:
  /// (f-word, k, e-word) -> coefficient
  using Expanded = std::map<std::tuple<Word, Weight, Word>, QRat>;

  void add(const QRat& coeff, const BorelElem& fpart, const Weight& k, const BorelElem& epart);
  void add(const CentralElem& other);

  const std::vector<CentralTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Fully expanded coefficients on word monomials.
  Expanded expanded() const;
  /// Same element with every (k, nu) block written as a single product
  /// coeff · (f-combination) k (e-combination) whenever its coefficient
  /// matrix has rank one; other blocks are kept term by term.
  CentralElem factored() const;
  /// Whether each (k, nu) block of the expansion has a rank-one coefficient matrix.
  bool blocks_rank_one() const;

  /// One term per line: `coeff * (fpart) k(a,b) (epart)`.
  std::string to_string() const;

private:
  std::vector<CentralTerm> terms_;
};

/// Weights of the five-dimensional representation, in basis order w_1..w_5.
const std::vector<Weight>& w5_weights();

struct WeightPair {
  Weight mu;
  Weight la;
  Weight nu() const { return mu - la; }
  Weight kweight() const { return -la - mu; }
};

/// All ordered pairs (mu, la) of w5 weights with mu >= la (diagonal included).
std::vector<WeightPair> weight_pairs();

/// f_la(v · u · v_la) in the given representation: apply u then v to the basis
/// vector of weight la and read off its la-coordinate.
QRat matrix_coefficient(const Weight& la, const BorelElem& v, const BorelElem& u,
                        const Representation& r);
QRat matrix_coefficient(const Weight& la, const BorelElem& v, const BorelElem& u);

/// Basis words used at weight nu: the fixed bases at (2,2) and (1,3),
/// otherwise the lexicographically first words of full rank.
std::vector<Word> chosen_basis(const Weight& nu, Pairing& pairing);

struct CentralOptions {
  /// Assemble weight pairs concurrently; the result is identical either way.
  bool parallel = false;
  /// Weight-pair assembly order (indices into weight_pairs()); empty = natural.
  std::vector<std::size_t> order;
};

/// Σ_{mu >= la} Σ_{i,j} q^{(mu-la,mu)} q^{-(2rho,mu)} f_la(v^i u^j v_la) v^j k_{-la-mu} u^i
/// with {u^i} a basis at nu = mu - la and {v^i} its dual basis.
CentralElem central_element(const CentralOptions& options = {});

/// Hand transcription of the closed-form central element; A and B are the
/// coefficients of e2e1e2e1 and e1e2e2e1 in the first block.
CentralElem theorem_element(const QRat& a, const QRat& b);
CentralElem theorem_element();

struct ABSolution {
  QRat a;
  QRat b;
};

/// Treats A, B as unknowns and imposes that the 16-dimensional action of
/// theorem_element(A, B) commutes with all generators. Throws MathError if
/// the solution is not unique.
ABSolution solve_ab();

struct BlockResult {
  Weight k;
  Weight nu;
  bool equal = false;
};

/// Blockwise comparison modulo the pairing radical: for each (k, nu) block,
/// the difference Σ c f⊗e must pair to zero against all words on both sides.
std::vector<BlockResult> compare_blockwise(const CentralElem& a, const CentralElem& b,
                                           Pairing& pairing);

struct ComparisonReport {
  bool evaluation16_equal = false;
  bool blockwise_equal = false;
  std::vector<BlockResult> blocks;

  bool match() const { return evaluation16_equal && blockwise_equal; }
  std::string verdict() const;
};

ComparisonReport compare_with_theorem(const CentralElem& built);

} // namespace uqc
