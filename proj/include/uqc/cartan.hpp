#pragma once

#include <array>
#include <compare>
#include <string>

namespace uqc {

/// Integral weight (x1, x2) in the identification h* = R^2 of type B2 = C2.
struct Weight {
  int x1 = 0;
  int x2 = 0;

  auto operator<=>(const Weight&) const = default;

  Weight operator+(const Weight& o) const { return {x1 + o.x1, x2 + o.x2}; }
  Weight operator-(const Weight& o) const { return {x1 - o.x1, x2 - o.x2}; }
  Weight operator-() const { return {-x1, -x2}; }
  Weight& operator+=(const Weight& o) { return *this = *this + o; }
  friend Weight operator*(int s, const Weight& w) { return {s * w.x1, s * w.x2}; }

  std::string to_string() const;
};

/// Euclidean inner product.
constexpr int inner(const Weight& a, const Weight& b) { return a.x1 * b.x1 + a.x2 * b.x2; }

/// Simple root alpha_i for i in {1, 2}: alpha_1 = (1,-1), alpha_2 = (0,2).
Weight simple_root(int i);

/// Positive roots alpha_1, alpha_2, alpha_1+alpha_2, 2alpha_1+alpha_2.
std::array<Weight, 4> positive_roots();

/// Coordinates (a, b) of w = a·alpha_1 + b·alpha_2, when they are integers.
bool simple_root_coords(const Weight& w, int& a, int& b);

/// mu >= la in dominance order: mu - la is a nonnegative integer combination
/// of simple roots.
bool dominance_geq(const Weight& mu, const Weight& la);

/// Half the sum of the positive roots, (2,1).
Weight rho();

/// The root lattice is {(x1, x2) : x1 + x2 even}.
bool root_lattice_contains(const Weight& w);

} // namespace uqc
