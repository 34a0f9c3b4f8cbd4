#pragma once

#include "uqc/cartan.hpp"
#include "uqc/freealg.hpp"
#include "uqc/qmatrix.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace uqc {

class CentralElem;

/// Finite-dimensional representation given by explicit generator matrices.
/// k_mu acts diagonally by q^{(weights[i], mu)} on basis vector i.
struct Representation {
  std::string name;
  std::size_t dim = 0;
  std::array<QMatrix, 2> e;  ///< e[0] = e_1, e[1] = e_2
  std::array<QMatrix, 2> f;
  std::vector<Weight> weights;

  const QMatrix& gen(Side side, int i) const;
  QMatrix kmat(const Weight& mu) const;
  /// K_i = k_{alpha_i}
  QMatrix K(int i) const { return kmat(simple_root(i)); }
  /// Index of the basis vector of weight w (requires a one-dimensional weight space).
  std::size_t index_of_weight(const Weight& w) const;
};

/// Five-dimensional representation on W = (V ∧ V)/Cv, basis w_1..w_5 of
/// weights (1,1), (1,-1), (0,0), (-1,1), (-1,-1).
Representation rep5();

/// Sixteen-dimensional representation on C^4 ⊗ C^4.
Representation rep16();

/// Four-dimensional representation recovered from rep16 by inverting the
/// coproduct formulas.
struct Rep4Extraction {
  Representation rep;
  /// index_map[p] = (a, b): position p of the 16-dim basis is v_a ⊗ v_b
  /// (0-based indices into rep.weights).
  std::vector<std::pair<int, int>> index_map;
  /// Whether index_map is the plain Kronecker order p = 4a + b.
  bool kronecker_order = false;
  /// Number of weight-compatible index maps that reproduce rep16 exactly.
  std::size_t solutions = 0;
};

/// Searches all index maps compatible with the weights of rep16 for one
/// under which e_i = E_i⊗1 + K_i⊗E_i, f_i = 1⊗F_i + F_i⊗K_i^{-1} and
/// k = K⊗K hold exactly. Throws MathError if none exists.
Rep4Extraction derive_rep4(const Representation& r16);
Representation rep4();

/// Lookup by name: "dim4", "dim5" or "dim16".
Representation representation(const std::string& name);

/// Matrix of a Borel-half element.
QMatrix borel_matrix(const BorelElem& x, const Representation& r);

struct RelationCheck {
  std::string name;
  bool holds = false;
};

/// Weyl relations, k-conjugation relations, k multiplicativity and the four
/// Serre elements, each as an exact matrix identity.
std::vector<RelationCheck> relation_suite(const Representation& r);

/// True iff m commutes with e_i, f_i and K_i of r.
bool centrality_check(const QMatrix& m, const Representation& r);

/// Σ coeff · mat(fpart) · kmat(k) · mat(epart).
QMatrix evaluate(const CentralElem& c, const Representation& r);

/// Affine normalisation constants of the Hamiltonian:
/// H = scale^{-1} (C - shift·Id).
QRat hamiltonian_scale();
QRat hamiltonian_shift();

/// Normalised action of the central element on C^4 ⊗ C^4.
QMatrix hamiltonian();
QMatrix hamiltonian(const QMatrix& c16);

struct SignEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  int sign = 0;
  mpq_class q0;
};

/// Signs of the nonzero off-diagonal entries at each sample point.
std::vector<SignEntry> sign_report(const QMatrix& m, const std::vector<mpq_class>& samples);
std::vector<mpq_class> default_sign_samples();

} // namespace uqc
