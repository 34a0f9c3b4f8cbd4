#pragma once

// Reference implementations used only by the tests. None of them calls the
// pairing, coproduct, elimination or representation code of the library.

#include "uqc/cartan.hpp"
#include "uqc/central.hpp"
#include "uqc/freealg.hpp"
#include "uqc/qrat.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

/// Number of multisets of positive roots {a1, a2, a1+a2, 2a1+a2} summing to nu,
/// i.e. the PBW dimension of U[nu].
std::size_t pbw_count(const uqc::Weight& nu);

/// Scalar operations the pairing oracle needs.
template <class T>
struct Field {
  std::function<T(int)> qpow;         // q^n
  std::function<T(int)> gen_pairing;  // <f_i, e_i>
};

Field<uqc::QRat> symbolic_field();
/// Everything specialised at q = q0 (exact rationals).
Field<mpq_class> numeric_field(const mpq_class& q0);

/// <f_yw k_ya, e_xw k_xb>, computed by peeling generators off the plus side:
/// <y, e_i x'> = sum over positions p of i in yw of
///   q^{(sum_{j<p} alpha_{yw[j]}, alpha_i)} <f_i, e_i> <y without p, x'>.
template <class T>
T plus_route_pairing(const Field<T>& F, const uqc::Word& yw, const uqc::Weight& ya,
                     const uqc::Word& xw, const uqc::Weight& xb) {
  if (yw.size() != xw.size())
    return T(0);
  if (yw.empty())
    return F.qpow(-uqc::inner(ya, xb));
  const int i = xw.front();
  const uqc::Word rest(xw.begin() + 1, xw.end());
  T total(0);
  uqc::Weight before{};
  for (std::size_t p = 0; p < yw.size(); ++p) {
    if (yw[p] == i) {
      uqc::Word shorter = yw;
      shorter.erase(shorter.begin() + static_cast<long>(p));
      T sub = plus_route_pairing(F, shorter, ya, rest, xb);
      if (sub != T(0))
        total += F.qpow(uqc::inner(before, uqc::simple_root(i))) * F.gen_pairing(i) * sub;
    }
    before += uqc::simple_root(yw[p]);
  }
  return total;
}

/// Rank of a rational matrix by plain fraction Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<mpq_class>> m);

/// Rational matrix helpers.
using RMat = std::vector<std::vector<mpq_class>>;
RMat rmul(const RMat& a, const RMat& b);
RMat radd(const RMat& a, const RMat& b);
RMat rscale(const RMat& a, const mpq_class& s);
RMat rident(std::size_t n);

/// Action of a central element at q = q0, built from the generator matrices
/// specialised entrywise and multiplied as rational matrices.
RMat numeric_action(const uqc::CentralElem& c, const uqc::Representation& r, const mpq_class& q0);

/// <f-combination, e-combination> with the plus-route oracle, symbolically.
uqc::QRat pair_combo(const uqc::BorelElem& y, const uqc::BorelElem& x);

} // namespace oracle
