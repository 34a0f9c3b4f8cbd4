#include "../support/helpers.hpp"

#include "uqc/central.hpp"
#include "uqc/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace uqc;
using th::q;

namespace {

const CentralElem& built() {
  static const CentralElem c = central_element();
  return c;
}

const CentralTerm* find_term(const CentralElem& c, const Weight& k, const Word& fw, const Word& ew) {
  for (const auto& t : c.terms())
    if (t.k == k && !t.fpart.coeff({fw, {}}).is_zero() && !t.epart.coeff({ew, {}}).is_zero())
      return &t;
  return nullptr;
}

} // namespace

TEST_SUITE("central") {

TEST_CASE("weight pairs") {
  const auto pairs = weight_pairs();
  CHECK(pairs.size() == 15);
  CHECK(std::count_if(pairs.begin(), pairs.end(), [](const WeightPair& p) { return p.mu == p.la; }) == 5);
  CHECK(std::any_of(pairs.begin(), pairs.end(), [](const WeightPair& p) {
    return p.mu == Weight{1, 1} && p.la == Weight{-1, -1} && p.nu() == Weight{2, 2};
  }));
  std::multiset<Weight> ks;
  std::set<Weight> nus;
  for (const auto& p : pairs) {
    ks.insert(p.kweight());
    nus.insert(p.nu());
  }
  CHECK(ks.count({0, 0}) == 3);
  CHECK(std::set<Weight>(ks.begin(), ks.end()).size() == 13);
  CHECK(nus == std::set<Weight>{{0, 0}, {1, -1}, {0, 2}, {1, 1}, {2, 0}, {2, 2}, {2, -2}});
  // Same multiset of k-weights as the closed-form element.
  std::multiset<Weight> thm;
  const CentralElem closed = theorem_element();
  for (const auto& t : closed.terms())
    thm.insert(t.k);
  CHECK(ks == thm);
}

TEST_CASE("W weights satisfy the lattice hypothesis") {
  for (const auto& w : w5_weights())
    CHECK(root_lattice_contains(2 * w));
}

TEST_CASE("matrix coefficients") {
  const auto one_m = BorelElem::one(Side::minus);
  const auto one_p = BorelElem::one(Side::plus);
  for (const auto& w : w5_weights())
    CHECK(matrix_coefficient(w, one_m, one_p) == QRat(1));
  // f1 e1 on w4 (weight (-1,1)): q + q^-1.
  CHECK(matrix_coefficient({-1, 1}, BorelElem::generator(Side::minus, 1), BorelElem::generator(Side::plus, 1)) ==
        q(1) + q(-1));
  // e2 kills w1.
  CHECK(matrix_coefficient({1, 1}, BorelElem::generator(Side::minus, 2), BorelElem::generator(Side::plus, 2))
            .is_zero());
}

TEST_CASE("chosen bases") {
  Pairing& p = default_pairing();
  CHECK(chosen_basis({2, 2}, p) == std::vector<Word>{{1, 2, 1, 2}, {2, 1, 1, 2}, {1, 2, 2, 1}, {2, 1, 2, 1}});
  CHECK(chosen_basis({1, 3}, p) == std::vector<Word>{{2, 2, 1}, {1, 2, 2}});
  CHECK(chosen_basis({2, 0}, p) == words_of_weight({2, 0}));
  CHECK(chosen_basis({1, 1}, p) == std::vector<Word>{{1, 2}, {2, 1}});
  CHECK(chosen_basis({0, 0}, p) == std::vector<Word>{{}});
}

TEST_CASE("diagonal and small contributions") {
  const CentralElem& c = built();
  const CentralTerm* t = find_term(c, {2, 2}, {}, {});
  REQUIRE(t);
  CHECK(t->coeff == q(6));
  t = find_term(c, {0, 0}, {}, {});
  REQUIRE(t);
  CHECK(t->coeff == QRat(1));
  t = find_term(c, {2, 0}, {2}, {2});
  REQUIRE(t);
  CHECK(t->coeff == (q(2) - q(-2)) * (q(2) - q(-2)) * q(4));
  CHECK(t->fpart == th::F({2}));
  CHECK(t->epart == th::E({2}));
}

TEST_CASE("closed-form element transcription") {
  const CentralElem thm = theorem_element();
  CHECK(thm.terms().size() == 15);
  const QRat x = q(1) - q(-1);
  const CentralTerm* t = find_term(thm, {0, 0}, {1, 1}, {1, 1});
  REQUIRE(t);
  CHECK(t->coeff == x * x * x * x);
  t = find_term(thm, {-2, -2}, {}, {});
  REQUIRE(t);
  CHECK(t->coeff == q(-6));
  t = find_term(thm, {-1, 1}, {1}, {1});
  REQUIRE(t);
  CHECK(t->coeff == x * x * (q(1) + q(-1)));
  // A and B are the coefficients of e2e1e2e1 and e1e2e2e1 in the first block.
  const CentralElem custom = theorem_element(QRat(7), QRat(11));
  const auto ex = custom.expanded();
  const QRat pre = q(-2) * x * x;
  const QRat f_coeff = QRat(1) - q(2);  // f1 f2 f1 f2
  CHECK(ex.at({Word{1, 2, 1, 2}, Weight{0, 0}, Word{2, 1, 2, 1}}) == pre * f_coeff * QRat(7));
  CHECK(ex.at({Word{1, 2, 1, 2}, Weight{0, 0}, Word{1, 2, 2, 1}}) == pre * f_coeff * QRat(11));
}

TEST_CASE("assembled element equals the closed form in both senses") {
  const ComparisonReport rep = compare_with_theorem(built());
  CHECK(rep.evaluation16_equal);
  CHECK(rep.blockwise_equal);
  CHECK(rep.blocks.size() == 15);
  CHECK(rep.verdict() == "MATCH (16-dim evaluation + blockwise mod-radical)");
}

TEST_CASE("blockwise comparison detects a wrong coefficient") {
  const QRat wrong = QRat(1) - q(4);
  CentralElem thm = theorem_element(wrong, QRat(1) - q(2));
  auto blocks = compare_blockwise(built(), thm, default_pairing());
  auto bad = std::count_if(blocks.begin(), blocks.end(), [](const BlockResult& b) { return !b.equal; });
  CHECK(bad == 1);
  CHECK_FALSE(compare_with_theorem(thm).match());
}

TEST_CASE("terms satisfy weight invariants") {
  for (const auto& t : built().terms()) {
    CHECK(root_lattice_contains(t.k));
    auto fw = t.fpart.homogeneous_weight();
    auto ew = t.epart.homogeneous_weight();
    REQUIRE(fw.has_value());
    REQUIRE(ew.has_value());
    CHECK(*fw == -*ew);
  }
}

TEST_CASE("each weight-pair block factors as a rank-one product") {
  CHECK(built().blocks_rank_one());
  CHECK(built().terms().size() == 15);
  CHECK(built().factored().expanded() == built().expanded());
}

TEST_CASE("assembly order and parallelism do not change the result") {
  std::vector<std::size_t> order(weight_pairs().size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 eng(0x0dde);
  std::shuffle(order.begin(), order.end(), eng);
  CentralOptions shuffled;
  shuffled.order = order;
  CentralOptions parallel;
  parallel.parallel = true;
  const CentralElem a = central_element(shuffled), b = central_element(parallel);
  CHECK(a.to_string() == built().to_string());
  CHECK(b.to_string() == built().to_string());
}

TEST_CASE("A and B") {
  const ABSolution s = solve_ab();
  CHECK(s.a == QRat(1) - q(2));
  CHECK(s.b == QRat(1) - q(2));
  // With A = B = 0 the element fails to commute with e2.
  const Representation r = rep16();
  const QMatrix m = evaluate(theorem_element(QRat(0), QRat(0)), r);
  CHECK_FALSE(commutator(m, r.gen(Side::plus, 2)).is_zero());
  // Symmetry under omega predicts the e-side coefficients from the f-side ones.
  const auto ex = theorem_element(QRat(0), QRat(0)).expanded();
  auto fcoeff = [&](const Word& w) { return ex.at({w, Weight{0, 0}, Word{1, 2, 1, 2}}); };
  const QRat base = QRat(1) - q(2);  // coefficient of e1e2e1e2
  const QRat predicted_a = base * fcoeff({2, 1, 2, 1}) / fcoeff({1, 2, 1, 2});
  const QRat predicted_b = base * fcoeff({1, 2, 2, 1}) / fcoeff({1, 2, 1, 2});
  CHECK(predicted_a == predicted_b);
  CHECK(predicted_a == s.a);
  CHECK(predicted_b == s.b);
}

TEST_CASE("term merging") {
  CentralElem c;
  c.add(QRat(2), th::F({1}), {0, 0}, th::E({1}));
  c.add(QRat(3), QRat(2) * th::F({1}), {0, 0}, th::E({1}));
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms()[0].coeff == QRat(8));
  c.add(QRat(-8), th::F({1}), {0, 0}, th::E({1}));
  CHECK(c.is_zero());
  CHECK_THROWS_AS(c.add(QRat(1), th::E({1}), {0, 0}, th::E({1})), Error);
}

}
