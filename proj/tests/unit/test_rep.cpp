#include "../oracles/oracles.hpp"
#include "../support/gen.hpp"
#include "../support/helpers.hpp"

#include "uqc/central.hpp"
#include "uqc/error.hpp"
#include "uqc/rep.hpp"

#include <doctest.h>

using namespace uqc;
using th::q;

namespace {

const Representation& r16() {
  static const Representation r = rep16();
  return r;
}

const Rep4Extraction& ex4() {
  static const Rep4Extraction e = derive_rep4(r16());
  return e;
}

bool all_hold(const Representation& r) {
  for (const auto& c : relation_suite(r))
    if (!c.holds)
      return false;
  return true;
}

} // namespace

TEST_SUITE("rep") {

TEST_CASE("five-dimensional matrices") {
  const Representation r = rep5();
  CHECK(r.dim == 5);
  CHECK(r.e[1](0, 1) == QRat(1));
  CHECK(r.f[0](3, 2) == q(1) + q(-1));
  CHECK(r.e[0](1, 2) == q(1) + q(-1));
  CHECK(r.K(1) == QMatrix::diagonal({QRat(1), q(2), QRat(1), q(-2), QRat(1)}));
  CHECK(r.K(2) == QMatrix::diagonal({q(2), q(-2), QRat(1), q(2), q(-2)}));
  const QMatrix lhs = commutator(r.e[1], r.f[1]);
  CHECK(lhs == (r.K(2) - r.kmat(-simple_root(2))) * (q(2) - q(-2)).inverse());
  CHECK(all_hold(r));
}

TEST_CASE("sixteen-dimensional matrices") {
  const Representation& r = r16();
  CHECK(r.dim == 16);
  CHECK(r.e[0](0, 2) == q(1));
  CHECK(r.e[0](5, 9) == -q(1));
  const QMatrix k = r.kmat({3, 5});
  CHECK(k(0, 0) == q(6));
  CHECK(k(1, 1) == q(8));
  CHECK(k(2, 2) == q(8));
  CHECK(k(3, 3) == q(10));
  CHECK(all_hold(r));
}

TEST_CASE("k matrices are multiplicative") {
  gen::Rng rng(0x4a);
  for (const Representation& r : {rep5(), r16()})
    for (int t = 0; t < 10; ++t) {
      Weight a = rng.weight(3), b = rng.weight(3);
      CHECK(r.kmat(a) * r.kmat(b) == r.kmat(a + b));
    }
}

TEST_CASE("relation suite catches a broken matrix") {
  Representation r = rep5();
  r.e[0](1, 2) = QRat(1);  // drop the q + q^-1
  CHECK_FALSE(all_hold(r));
}

TEST_CASE("four-dimensional extraction") {
  const Rep4Extraction& ex = ex4();
  CHECK(ex.solutions == 1);
  CHECK_FALSE(ex.kronecker_order);
  CHECK(ex.rep.dim == 4);
  CHECK(all_hold(ex.rep));
  // Reconstruction identity, assembled independently of derive_rep4.
  std::vector<std::size_t> pos(16);
  for (std::size_t p = 0; p < 16; ++p)
    pos[static_cast<std::size_t>(ex.index_map[p].first * 4 + ex.index_map[p].second)] = p;
  auto place = [&](const QMatrix& m) {
    QMatrix out(16, 16);
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j)
        out(pos[i], pos[j]) = m(i, j);
    return out;
  };
  const Representation& v = ex.rep;
  const QMatrix id = QMatrix::identity(4);
  for (int i = 1; i <= 2; ++i) {
    const QMatrix E = v.gen(Side::plus, i), F = v.gen(Side::minus, i);
    CHECK(place(kron(E, id) + kron(v.K(i), E)) == r16().gen(Side::plus, i));
    CHECK(place(kron(id, F) + kron(F, v.kmat(-simple_root(i)))) == r16().gen(Side::minus, i));
    CHECK(place(kron(v.K(i), v.K(i))) == r16().K(i));
  }
  // Weights (1,0), (0,1), (0,-1), (-1,0) give K1 = diag(q, q^-1, q, q^-1).
  CHECK(v.K(1) == QMatrix::diagonal({q(1), q(-1), q(1), q(-1)}));
  CHECK(representation("dim4").e[0] == v.e[0]);
}

TEST_CASE("evaluation basics") {
  CentralElem k_only;
  k_only.add(q(6), BorelElem::one(Side::minus), {2, 2}, BorelElem::one(Side::plus));
  CHECK(evaluate(k_only, r16()) == r16().kmat({2, 2}) * q(6));
  CHECK(centrality_check(QMatrix::identity(16), r16()));
  CHECK_FALSE(centrality_check(r16().e[0], r16()));
}

TEST_CASE("evaluation is linear and multiplicative") {
  gen::Rng rng(0x11ea);
  const Representation r = rep5();
  for (int t = 0; t < 20; ++t) {
    const Side side = rng.coin() ? Side::plus : Side::minus;
    BorelElem a = rng.borel(side, 3), b = rng.borel(side, 3);
    CHECK(borel_matrix(borel_mul(a, b), r) == borel_matrix(a, r) * borel_matrix(b, r));
    CHECK(borel_matrix(a + b, r) == borel_matrix(a, r) + borel_matrix(b, r));
  }
  const CentralElem thm = theorem_element();
  CentralElem doubled = thm;
  doubled.add(thm);
  CHECK(evaluate(doubled, r) == evaluate(thm, r) * QRat(2));
}

TEST_CASE("closed form is central and scalar on the fundamental representations") {
  const CentralElem thm = theorem_element();
  const QMatrix m5 = evaluate(thm, rep5());
  const QMatrix m4 = evaluate(thm, ex4().rep);
  const QMatrix m16 = evaluate(thm, r16());
  CHECK(centrality_check(m5, rep5()));
  CHECK(centrality_check(m4, ex4().rep));
  CHECK(centrality_check(m16, r16()));
  REQUIRE(m5.scalar_value());
  REQUIRE(m4.scalar_value());
  CHECK(*m5.scalar_value() == q(10) + q(2) + QRat(1) + q(-2) + q(-10));
  CHECK(*m4.scalar_value() == q(8) + q(4) + QRat(1) + q(-4) + q(-8));
  CHECK_FALSE(m16.scalar_value());
  CHECK(evaluate(central_element(), rep5()) == m5);
  CHECK(evaluate(central_element(), r16()) == m16);
}

TEST_CASE("Hamiltonian") {
  CHECK(hamiltonian_scale() == q(-5) - q(-3) - q(3) + q(5));
  CHECK(hamiltonian_shift() == QRat(1) + q(-10) + q(-6) + q(6) + q(10));
  const QMatrix c16 = evaluate(theorem_element(), r16());
  const QMatrix h = hamiltonian();
  CHECK(h == (c16 - QMatrix::identity(16) * hamiltonian_shift()) * hamiltonian_scale().inverse());
  CHECK(centrality_check(h, r16()));
  CHECK_FALSE(h.is_zero());

  const mpq_class half(1, 2);
  const auto numeric_c = oracle::numeric_action(theorem_element(), r16(), half);
  const mpq_class scale = hamiltonian_scale().eval(half), shift = hamiltonian_shift().eval(half);
  const auto expect = oracle::rscale(oracle::radd(numeric_c, oracle::rscale(oracle::rident(16), -shift)),
                                     mpq_class(1 / scale));
  CHECK(h.eval(half) == expect);
  // The normalisation itself has a pole at q = 1.
  CHECK_THROWS_AS(hamiltonian_scale().inverse().eval(1), PoleError);
}

TEST_CASE("sign report") {
  const QMatrix h = hamiltonian();
  const auto samples = default_sign_samples();
  CHECK(samples.size() == 4);
  for (const auto& s : samples) {
    CHECK(s > 0);
    CHECK(s < 1);
  }
  const auto report = sign_report(h, samples);
  CHECK_FALSE(report.empty());
  for (const auto& e : report) {
    CHECK(e.row != e.col);
    const mpq_class v = h(e.row, e.col).eval(e.q0);
    CHECK(e.sign == sgn(v));
    CHECK(e.sign != 0);
  }
}

}
