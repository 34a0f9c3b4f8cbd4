#include "../oracles/oracles.hpp"
#include "../support/gen.hpp"
#include "../support/helpers.hpp"

#include "uqc/error.hpp"
#include "uqc/pairing.hpp"

#include <doctest.h>

#include <algorithm>

using namespace uqc;
using th::E;
using th::F;
using th::q;

namespace {

const std::vector<Weight> kWeights = {{1, -1}, {0, 2}, {1, 1}, {2, 0}, {1, 3}, {2, 2}, {3, 1}, {2, -2}, {0, 4}, {3, -1}};

BorelElem f(int i) { return BorelElem::generator(Side::minus, i); }

} // namespace

TEST_SUITE("pairing") {

TEST_CASE("generator and k base cases") {
  CHECK(pair(f(1), E({1})) == QRat(-1) / (q(1) - q(-1)));
  CHECK(pair(f(2), E({2})) == QRat(-1) / (q(2) - q(-2)));
  CHECK(pair(f(1), E({2})).is_zero());
  CHECK(pair(F({}, simple_root(1)), E({}, simple_root(2))) == q(2));
  CHECK(pair(F({}), E({})) == QRat(1));
  CHECK(pair(F({}, {1, 0}), E({1})).is_zero());
  CHECK(pair(f(1), E({}, {1, 0})).is_zero());
  CHECK(pair(F({1, 2}), E({1})).is_zero());
  CHECK(generator_pairing(2) == QRat(-1) / (q(2) - q(-2)));
}

TEST_CASE("agrees with the plus-route oracle on all words up to length 4") {
  Pairing p;
  const auto field = oracle::symbolic_field();
  std::size_t checked = 0;
  for (int ones = 0; ones <= 4; ++ones)
    for (int twos = 0; ones + twos <= 4; ++twos) {
      const auto words = words_of_weight(ones * simple_root(1) + twos * simple_root(2));
      for (const auto& y : words)
        for (const auto& x : words) {
          CHECK(p.pair(Monomial{y, {}}, Monomial{x, {}}) ==
                oracle::plus_route_pairing(field, y, Weight{}, x, Weight{}));
          ++checked;
        }
    }
  // Sum of binomial(a + b, a)^2 over a + b <= 4.
  CHECK(checked == 99);
}

TEST_CASE("agrees with the oracle on random words with k decorations") {
  gen::Rng rng(0x0a7c);
  const auto field = oracle::symbolic_field();
  for (int t = 0; t < 60; ++t) {
    const int ones = rng.uniform(0, 3), twos = rng.uniform(0, 2);
    Word y = rng.shuffled(ones, twos), x = rng.shuffled(ones, twos);
    Weight ya = rng.weight(), xb = rng.weight();
    CHECK(pair(F(y, ya), E(x, xb)) == oracle::plus_route_pairing(field, y, ya, x, xb));
  }
}

TEST_CASE("specialisations agree with an all-rational oracle") {
  gen::Rng rng(0x5bec);
  for (int t = 0; t < 40; ++t) {
    const int ones = rng.uniform(1, 3), twos = rng.uniform(0, 2);
    Word y = rng.shuffled(ones, twos), x = rng.shuffled(ones, twos);
    const mpq_class q0 = rng.sample_q();
    const auto field = oracle::numeric_field(q0);
    CHECK(pair(F(y), E(x)).eval(q0) == oracle::plus_route_pairing(field, y, Weight{}, x, Weight{}));
  }
}

TEST_CASE("grading: mismatched weights pair to zero") {
  gen::Rng rng(0x9ad);
  for (int t = 0; t < 60; ++t) {
    Word y = rng.word(4), x = rng.word(4);
    if (root_sum(y) == root_sum(x))
      continue;
    CHECK(pair(F(y, rng.weight()), E(x, rng.weight())).is_zero());
  }
}

TEST_CASE("gram ranks match the PBW count oracle") {
  for (const auto& nu : kWeights) {
    CAPTURE(nu.to_string());
    CHECK(weight_dim(nu) == oracle::pbw_count(nu));
  }
  CHECK(oracle::pbw_count({1, 1}) == 2);
  CHECK(oracle::pbw_count({2, 0}) == 3);
  CHECK(oracle::pbw_count({1, 3}) == 2);
  CHECK(oracle::pbw_count({2, 2}) == 4);
  CHECK(weight_dim({0, 0}) == 1);
  CHECK(weight_dim({2, 0}) == 3);
  CHECK(weight_dim({2, 2}) == 4);
}

TEST_CASE("gram block layout") {
  GramBlock g = gram({1, 1});
  CHECK(g.plus_words == std::vector<Word>{{1, 2}, {2, 1}});
  CHECK(g.minus_words == g.plus_words);
  CHECK(g.rank == 2);
  GramBlock g13 = gram({1, 3});
  CHECK(g13.plus_words == std::vector<Word>{{1, 2, 2}, {2, 1, 2}, {2, 2, 1}});
  CHECK(g13.rank == 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(g13.matrix(i, j) == pair(F(g13.minus_words[i]), E(g13.plus_words[j])));
}

TEST_CASE("gram ranks agree with an independent rational rank at a sample point") {
  for (const auto& nu : kWeights) {
    const auto words = words_of_weight(nu);
    const auto field = oracle::numeric_field(mpq_class(3, 7));
    oracle::RMat m;
    for (const auto& y : words) {
      m.emplace_back();
      for (const auto& x : words)
        m.back().push_back(oracle::plus_route_pairing(field, y, Weight{}, x, Weight{}));
    }
    CAPTURE(nu.to_string());
    CHECK(oracle::rational_rank(m) == weight_dim(nu));
  }
}

TEST_CASE("Serre elements and radical checks") {
  for (const auto& s : serre_elements())
    CHECK(default_pairing().in_radical(s));
  CHECK(radical_check(serre_elements()[0]));
  CHECK(radical_check(serre_elements()[1]));
  CHECK_FALSE(radical_check(E({1, 2})));
  CHECK_FALSE(default_pairing().in_radical(F({2, 1})));
}

TEST_CASE("Serre elements times anything stay in the radical") {
  gen::Rng rng(0x5e44);
  for (int t = 0; t < 10; ++t) {
    BorelElem s = serre_elements()[static_cast<std::size_t>(rng.uniform(0, 1))];
    BorelElem a = BorelElem::word(Side::plus, rng.word(1));
    BorelElem x = rng.coin() ? borel_mul(a, s) : borel_mul(s, a);
    CHECK(radical_check(x));
  }
}

TEST_CASE("dual basis examples") {
  auto d0 = dual_basis({0, 0}, {{}});
  REQUIRE(d0.size() == 1);
  CHECK(d0[0] == BorelElem::one(Side::minus));

  auto d13 = dual_basis({1, 3}, {{2, 2, 1}, {1, 2, 2}});
  REQUIRE(d13.size() == 2);
  CHECK(pair(d13[0], E({2, 2, 1})) == QRat(1));
  CHECK(pair(d13[0], E({1, 2, 2})).is_zero());
  CHECK(pair(d13[1], E({1, 2, 2})) == QRat(1));
  // The dual of e2^2 e1 is (q^-2 - q^2)(q^2 + q^-2)^-1 (e2 e1)^* f2 modulo the radical.
  auto d11 = dual_basis({1, 1}, {{2, 1}, {1, 2}});
  BorelElem paper = ((q(-2) - q(2)) / (q(2) + q(-2))) * borel_mul(d11[0], f(2));
  CHECK(default_pairing().in_radical(paper - d13[0]));

  // Dependent modulo the radical, or not spanning: rejected.
  CHECK_THROWS_AS(dual_basis({1, 3}, {{2, 2, 1}}), MathError);
  CHECK_THROWS_AS(dual_basis({1, 3}, words_of_weight({1, 3})), MathError);
}

TEST_CASE("dual basis pairs as a Kronecker delta against every word") {
  for (const auto& nu : std::vector<Weight>{{1, 1}, {2, 0}, {0, 2}, {2, 2}, {3, 1}}) {
    Pairing p;
    GramBlock g = p.gram(nu);
    // Greedy independent subset in reverse order, to differ from the default choice.
    std::vector<Word> basis;
    std::vector<std::size_t> cols;
    for (std::size_t j = g.plus_words.size(); j-- > 0 && basis.size() < g.rank;) {
      cols.push_back(j);
      if (qmat_rank(g.matrix.select_cols(cols)) == cols.size())
        basis.push_back(g.plus_words[j]);
      else
        cols.pop_back();
    }
    auto duals = p.dual_basis(nu, basis);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        CHECK(oracle::pair_combo(duals[i], E(basis[j])) == QRat(i == j ? 1 : 0));
  }
}

TEST_CASE("golden pairings from the dimension lemma") {
  auto d20 = dual_basis({2, 0}, words_of_weight({2, 0}));  // words 112, 121, 211
  const BorelElem& d112 = d20[0];
  const QRat x = QRat(1) / (q(-2) - q(2));
  CHECK(pair(borel_mul(d112, f(2)), E({1, 2, 1, 2})) == q(2) * x);
  CHECK(pair(borel_mul(f(2), d112), E({1, 2, 1, 2})) == q(-2) * x);
  CHECK(pair(borel_mul(d112, f(2)), E({2, 1, 1, 2})) == x);
  CHECK(pair(borel_mul(f(2), d112), E({2, 1, 1, 2})) == x);
  auto d13 = dual_basis({1, 3}, {{2, 2, 1}, {1, 2, 2}});
  const QRat y = QRat(1) / (q(-1) - q(1));
  CHECK(pair(borel_mul(d13[0], f(1)), E({1, 2, 2, 1})) == q(-2) * y);
  CHECK(pair(borel_mul(f(1), d13[0]), E({1, 2, 2, 1})) == y);
  // Part 1 of the same lemma.
  auto d11 = dual_basis({1, 1}, {{2, 1}, {1, 2}});
  CHECK(pair(borel_mul(d11[0], f(2)), E({2, 2, 1})) == (q(2) + q(-2)) / (q(-2) - q(2)));
  CHECK(pair(borel_mul(d11[0], f(2)), E({1, 2, 2})).is_zero());
}

TEST_CASE("omega and tau identities on random homogeneous pairs") {
  gen::Rng rng(0x0e7a);
  for (int t = 0; t < 60; ++t) {
    const int ones = rng.uniform(0, 2), twos = rng.uniform(0, 2);
    const BorelElem x = rng.homogeneous(Side::plus, ones, twos);
    const BorelElem y = rng.homogeneous(Side::minus, ones, twos);
    const QRat v = pair(y, x);
    CHECK(pair(omega(x), omega(y)) == v);
    CHECK(pair(tau(y), tau(x)) == v);
  }
}

TEST_CASE("omega and tau with k decorations") {
  // omega is exact; tau picks up q^{(a - b, nu)} for y k_a, x k_b of weight nu,
  // because tau(k) = k^{-1} moves k's across the word.
  gen::Rng rng(0x0e7b);
  for (int t = 0; t < 60; ++t) {
    const int ones = rng.uniform(0, 2), twos = rng.uniform(0, 2);
    const Weight a = rng.weight(), b = rng.weight();
    const BorelElem x = borel_mul(rng.homogeneous(Side::plus, ones, twos), BorelElem::k_elem(Side::plus, b));
    const BorelElem y = borel_mul(rng.homogeneous(Side::minus, ones, twos), BorelElem::k_elem(Side::minus, a));
    const Weight nu = ones * simple_root(1) + twos * simple_root(2);
    const QRat v = pair(y, x);
    CHECK(pair(omega(x), omega(y)) == v);
    CHECK(pair(tau(y), tau(x)) == q(inner(a - b, nu)) * v);
  }
}

TEST_CASE("bilinearity") {
  gen::Rng rng(0xb111);
  for (int t = 0; t < 30; ++t) {
    BorelElem x1 = rng.homogeneous(Side::plus, 2, 1), x2 = rng.homogeneous(Side::plus, 2, 1);
    BorelElem y1 = rng.homogeneous(Side::minus, 2, 1), y2 = rng.homogeneous(Side::minus, 2, 1);
    QRat a = rng.qrat(), b = rng.qrat();
    CHECK(pair(a * y1 + b * y2, x1) == a * pair(y1, x1) + b * pair(y2, x1));
    CHECK(pair(y1, a * x1 + b * x2) == a * pair(y1, x1) + b * pair(y1, x2));
  }
}

TEST_CASE("results do not depend on evaluation order") {
  const auto words = words_of_weight({2, 2});
  Pairing forward, backward;
  std::vector<QRat> a, b(words.size() * words.size());
  for (const auto& y : words)
    for (const auto& x : words)
      a.push_back(forward.pair(Monomial{y, {}}, Monomial{x, {}}));
  for (std::size_t i = words.size(); i-- > 0;)
    for (std::size_t j = words.size(); j-- > 0;)
      b[i * words.size() + j] = backward.pair(Monomial{words[i], {}}, Monomial{words[j], {}});
  CHECK(a == b);
  CHECK(forward.cache_size() > 0);
}

}
