#include "uqc/cartan.hpp"

#include "uqc/error.hpp"

namespace uqc {

std::string Weight::to_string() const {
  return "(" + std::to_string(x1) + "," + std::to_string(x2) + ")";
}

Weight simple_root(int i) {
  switch (i) {
  case 1:
    return {1, -1};
  case 2:
    return {0, 2};
  default:
    throw Error("simple root index must be 1 or 2, got " + std::to_string(i));
  }
}

std::array<Weight, 4> positive_roots() {
  const Weight a1 = simple_root(1), a2 = simple_root(2);
  return {a1, a2, a1 + a2, 2 * a1 + a2};
}

bool simple_root_coords(const Weight& w, int& a, int& b) {
  // a(1,-1) + b(0,2) = (a, 2b - a)
  if ((w.x1 + w.x2) % 2 != 0)
    return false;
  a = w.x1;
  b = (w.x1 + w.x2) / 2;
  return true;
}

bool dominance_geq(const Weight& mu, const Weight& la) {
  int a = 0, b = 0;
  return simple_root_coords(mu - la, a, b) && a >= 0 && b >= 0;
}

Weight rho() { return {2, 1}; }

bool root_lattice_contains(const Weight& w) { return (w.x1 + w.x2) % 2 == 0; }

} // namespace uqc
