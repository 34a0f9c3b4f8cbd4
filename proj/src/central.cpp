#include "uqc/central.hpp"

#include "uqc/error.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <optional>

namespace uqc {

namespace {

// Pulls the first coefficient of x out so the remaining part is monic.
QRat make_monic(BorelElem& x) {
  QRat lead = x.terms().begin()->second;
  if (!lead.is_one())
    x *= lead.inverse();
  return lead;
}

bool same_term_shape(const CentralTerm& t, const BorelElem& f, const Weight& k,
                     const BorelElem& e) {
  return t.k == k && t.fpart == f && t.epart == e;
}

} // namespace

void CentralElem::add(const QRat& coeff, const BorelElem& fpart, const Weight& k,
                      const BorelElem& epart) {
  if (fpart.side() != Side::minus || epart.side() != Side::plus)
    throw Error("central term needs a minus-side f part and a plus-side e part");
  for (const auto* part : {&fpart, &epart})
    for (const auto& [m, c] : part->terms())
      if (m.k != Weight{})
        throw Error("central term parts must be k-free");
  if (coeff.is_zero() || fpart.is_zero() || epart.is_zero())
    return;
  BorelElem f = fpart, e = epart;
  QRat c = coeff * make_monic(f) * make_monic(e);
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const CentralTerm& t) { return same_term_shape(t, f, k, e); });
  if (it != terms_.end()) {
    it->coeff += c;
    if (it->coeff.is_zero())
      terms_.erase(it);
    return;
  }
  terms_.push_back({c, std::move(f), k, std::move(e)});
}

void CentralElem::add(const CentralElem& other) {
  for (const auto& t : other.terms_)
    add(t.coeff, t.fpart, t.k, t.epart);
}

CentralElem::Expanded CentralElem::expanded() const {
  Expanded out;
  for (const auto& t : terms_)
    for (const auto& [mf, cf] : t.fpart.terms())
      for (const auto& [me, ce] : t.epart.terms()) {
        auto key = std::make_tuple(mf.word, t.k, me.word);
        QRat& slot = out[key];
        slot += t.coeff * cf * ce;
        if (slot.is_zero())
          out.erase(key);
      }
  return out;
}

namespace {

using Block = std::map<std::pair<Word, Word>, QRat>;

std::map<std::pair<Weight, Weight>, Block> split_blocks(const CentralElem::Expanded& ex) {
  std::map<std::pair<Weight, Weight>, Block> out;
  for (const auto& [key, c] : ex) {
    const auto& [fw, k, ew] = key;
    out[{k, root_sum(ew)}][{fw, ew}] = c;
  }
  return out;
}

struct RankOne {
  QRat coeff;
  BorelElem f{Side::minus};
  BorelElem e{Side::plus};
};

// D(fw, ew) = D(fw, ew0) D(fw0, ew) / D(fw0, ew0) for the first entry (fw0, ew0).
std::optional<RankOne> rank_one(const Block& block) {
  const auto& [first, pivot] = *block.begin();
  const auto& [fw0, ew0] = first;
  RankOne r;
  r.coeff = pivot;
  const QRat inv = pivot.inverse();
  for (const auto& [words, c] : block) {
    if (words.second == ew0)
      r.f.add_term(c * inv, Monomial{words.first, {}});
    if (words.first == fw0)
      r.e.add_term(c * inv, Monomial{words.second, {}});
  }
  for (const auto& [mf, cf] : r.f.terms())
    for (const auto& [me, ce] : r.e.terms()) {
      auto it = block.find({mf.word, me.word});
      if (it == block.end() || !(it->second == pivot * cf * ce))
        return std::nullopt;
    }
  if (r.f.terms().size() * r.e.terms().size() != block.size())
    return std::nullopt;
  return r;
}

} // namespace

CentralElem CentralElem::factored() const {
  CentralElem out;
  for (const auto& [key, block] : split_blocks(expanded())) {
    if (auto r = rank_one(block)) {
      out.add(r->coeff, r->f, key.first, r->e);
      continue;
    }
    for (const auto& [words, c] : block)
      out.add(c, BorelElem::word(Side::minus, words.first), key.first,
              BorelElem::word(Side::plus, words.second));
  }
  return out;
}

bool CentralElem::blocks_rank_one() const {
  for (const auto& [key, block] : split_blocks(expanded()))
    if (!rank_one(block))
      return false;
  return true;
}

std::string CentralElem::to_string() const {
  auto part = [](const BorelElem& x) {
    if (x == BorelElem::one(x.side()))
      return std::string();
    return x.terms().size() == 1 ? x.to_string() + " " : "(" + x.to_string() + ") ";
  };
  std::string out;
  for (const auto& t : terms_) {
    std::string e = part(t.epart);
    if (!e.empty())
      e = " " + e.substr(0, e.size() - 1);
    out += "(" + t.coeff.to_string() + ") " + part(t.fpart) + "k(" + std::to_string(t.k.x1) + "," +
           std::to_string(t.k.x2) + ")" + e + "\n";
  }
  return out;
}

const std::vector<Weight>& w5_weights() {
  static const std::vector<Weight> weights = {{1, 1}, {1, -1}, {0, 0}, {-1, 1}, {-1, -1}};
  return weights;
}

std::vector<WeightPair> weight_pairs() {
  std::vector<WeightPair> out;
  for (const auto& mu : w5_weights())
    for (const auto& la : w5_weights())
      if (dominance_geq(mu, la))
        out.push_back({mu, la});
  return out;
}

QRat matrix_coefficient(const Weight& la, const BorelElem& v, const BorelElem& u,
                        const Representation& r) {
  const std::size_t idx = r.index_of_weight(la);
  const QMatrix m = borel_matrix(v, r) * borel_matrix(u, r);
  return m(idx, idx);
}

QRat matrix_coefficient(const Weight& la, const BorelElem& v, const BorelElem& u) {
  static const Representation r5 = rep5();
  return matrix_coefficient(la, v, u, r5);
}

std::vector<Word> chosen_basis(const Weight& nu, Pairing& pairing) {
  if (nu == Weight{2, 2})
    return {{1, 2, 1, 2}, {2, 1, 1, 2}, {1, 2, 2, 1}, {2, 1, 2, 1}};
  if (nu == Weight{1, 3})
    return {{2, 2, 1}, {1, 2, 2}};
  const GramBlock g = pairing.gram(nu);
  std::vector<Word> basis;
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < g.plus_words.size() && basis.size() < g.rank; ++j) {
    cols.push_back(j);
    if (qmat_rank(g.matrix.select_cols(cols)) == cols.size())
      basis.push_back(g.plus_words[j]);
    else
      cols.pop_back();
  }
  return basis;
}

namespace {

CentralElem assemble_pair(const WeightPair& wp, const Representation& r5) {
  Pairing& pairing = default_pairing();
  const Weight nu = wp.nu();
  const std::vector<Word> basis = chosen_basis(nu, pairing);
  const std::vector<BorelElem> duals = pairing.dual_basis(nu, basis);
  const QRat prefactor = QRat::q(inner(nu, wp.mu) - inner(2 * rho(), wp.mu));
  std::vector<BorelElem> us;
  for (const auto& w : basis)
    us.push_back(BorelElem::word(Side::plus, w));
  CentralElem out;
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = 0; j < us.size(); ++j) {
      QRat c = matrix_coefficient(wp.la, duals[i], us[j], r5);
      if (!c.is_zero())
        out.add(prefactor * c, duals[j], wp.kweight(), us[i]);
    }
  return out;
}

} // namespace

CentralElem central_element(const CentralOptions& options) {
  const auto pairs = weight_pairs();
  std::vector<std::size_t> order = options.order;
  if (order.empty()) {
    order.resize(pairs.size());
    std::iota(order.begin(), order.end(), 0);
  }
  const Representation r5 = rep5();
  std::vector<CentralElem> parts(pairs.size());
  if (options.parallel) {
    std::vector<std::future<CentralElem>> jobs;
    for (std::size_t idx : order)
      jobs.push_back(std::async(std::launch::async, assemble_pair, pairs.at(idx), std::cref(r5)));
    for (std::size_t k = 0; k < order.size(); ++k)
      parts[order[k]] = jobs[k].get();
  } else {
    for (std::size_t idx : order)
      parts.at(idx) = assemble_pair(pairs.at(idx), r5);
  }
  // Merge in the natural order so the result does not depend on `order`.
  CentralElem out;
  for (const auto& p : parts)
    out.add(p);
  return out.factored();
}

namespace {

BorelElem combo(Side side, std::initializer_list<std::pair<QRat, Word>> terms) {
  BorelElem x(side);
  for (const auto& [c, w] : terms)
    x.add_term(c, Monomial{w, {}});
  return x;
}

} // namespace

CentralElem theorem_element(const QRat& a, const QRat& b) {
  const QRat q = QRat::q(1);
  const QRat qi = QRat::q(-1);
  const QRat x = q - qi;                    // q - q^-1
  const QRat x2 = x * x;
  const QRat s = q + qi;                    // q + q^-1
  const QRat y = QRat::q(2) - QRat::q(-2);  // q^2 - q^-2
  const QRat one(1);
  const QRat c1 = one - QRat::q(2);             // 1 - q^2
  const QRat c2 = QRat::q(4) - QRat::q(-2);     // q^4 - q^-2
  const QRat p2 = one + QRat::q(2);             // 1 + q^2
  const auto M = Side::minus;
  const auto P = Side::plus;

  CentralElem c;
  c.add(QRat::q(-2) * x2,
        combo(M, {{c1, {1, 2, 1, 2}}, {c2, {2, 1, 1, 2}}, {c1, {2, 1, 2, 1}}, {c1, {1, 2, 2, 1}}}),
        {0, 0},
        combo(P, {{c1, {1, 2, 1, 2}}, {c2, {2, 1, 1, 2}}, {a, {2, 1, 2, 1}}, {b, {1, 2, 2, 1}}}));
  c.add(x2 * x2, combo(M, {{one, {1, 1}}}), {0, 0}, combo(P, {{one, {1, 1}}}));
  c.add(x2, combo(M, {{p2, {1, 2, 1}}, {-one, {2, 1, 1}}, {-QRat::q(2), {1, 1, 2}}}), {0, 2},
        combo(P, {{p2, {1, 2, 1}}, {-one, {1, 1, 2}}, {-QRat::q(2), {2, 1, 1}}}));
  c.add(x2 * s, combo(M, {{QRat::q(2), {1, 2}}, {-one, {2, 1}}}), {1, 1},
        combo(P, {{QRat::q(2), {2, 1}}, {-one, {1, 2}}}));
  c.add(y * y * QRat::q(4), combo(M, {{one, {2}}}), {2, 0}, combo(P, {{one, {2}}}));
  c.add(QRat::q(-4) * x2, combo(M, {{p2, {1, 2, 1}}, {-one, {1, 1, 2}}, {-QRat::q(2), {2, 1, 1}}}),
        {0, -2}, combo(P, {{p2, {1, 2, 1}}, {-one, {2, 1, 1}}, {-QRat::q(2), {1, 1, 2}}}));
  c.add(QRat::q(-4) * x2 * s, combo(M, {{QRat::q(2), {2, 1}}, {-one, {1, 2}}}), {-1, -1},
        combo(P, {{QRat::q(2), {1, 2}}, {-one, {2, 1}}}));
  c.add(QRat::q(-4) * y * y, combo(M, {{one, {2}}}), {-2, 0}, combo(P, {{one, {2}}}));
  c.add(x2 * s, combo(M, {{one, {1}}}), {-1, 1}, combo(P, {{one, {1}}}));
  c.add(x2 * s, combo(M, {{one, {1}}}), {1, -1}, combo(P, {{one, {1}}}));
  const BorelElem fone = BorelElem::one(M), eone = BorelElem::one(P);
  c.add(QRat::q(6), fone, {2, 2}, eone);
  c.add(QRat::q(-6), fone, {-2, -2}, eone);
  c.add(QRat::q(2), fone, {2, -2}, eone);
  c.add(QRat::q(-2), fone, {-2, 2}, eone);
  c.add(one, fone, {0, 0}, eone);
  return c;
}

CentralElem theorem_element() {
  const QRat c = QRat(1) - QRat::q(2);
  return theorem_element(c, c);
}

ABSolution solve_ab() {
  const Representation r = rep16();
  // The action is affine in (A, B): M(A,B) = M0 + A·MA + B·MB.
  const QMatrix m0 = evaluate(theorem_element(0, 0), r);
  const QMatrix ma = evaluate(theorem_element(1, 0), r) - m0;
  const QMatrix mb = evaluate(theorem_element(0, 1), r) - m0;
  std::vector<QMatrix> gens;
  for (int i = 1; i <= 2; ++i) {
    gens.push_back(r.gen(Side::plus, i));
    gens.push_back(r.gen(Side::minus, i));
    gens.push_back(r.K(i));
  }
  std::vector<std::array<QRat, 3>> rows;
  for (const auto& g : gens) {
    const QMatrix c0 = commutator(m0, g), ca = commutator(ma, g), cb = commutator(mb, g);
    for (std::size_t i = 0; i < r.dim; ++i)
      for (std::size_t j = 0; j < r.dim; ++j)
        if (!c0(i, j).is_zero() || !ca(i, j).is_zero() || !cb(i, j).is_zero())
          rows.push_back({ca(i, j), cb(i, j), -c0(i, j)});
  }
  QMatrix sys(rows.size(), 2), rhs(rows.size(), 1);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    sys(k, 0) = rows[k][0];
    sys(k, 1) = rows[k][1];
    rhs(k, 0) = rows[k][2];
  }
  if (qmat_rank(sys) != 2)
    throw MathError("commutator conditions do not determine A and B uniquely");
  auto sol = qmat_solve(sys, rhs);
  if (!sol)
    throw MathError("no values of A and B make the element central");
  return {(*sol)(0, 0), (*sol)(1, 0)};
}

std::vector<BlockResult> compare_blockwise(const CentralElem& a, const CentralElem& b,
                                           Pairing& pairing) {
  CentralElem::Expanded diff = a.expanded();
  for (const auto& [key, c] : b.expanded()) {
    QRat& slot = diff[key];
    slot -= c;
  }
  // Group by (k, nu); every block of either element is reported.
  std::map<std::pair<Weight, Weight>, std::map<std::pair<Word, Word>, QRat>> blocks;
  for (const auto* src : {&a, &b})
    for (const auto& [key, c] : src->expanded())
      blocks[{std::get<1>(key), root_sum(std::get<2>(key))}];
  for (const auto& [key, c] : diff) {
    const auto& [fw, k, ew] = key;
    if (root_sum(fw) != root_sum(ew))
      throw Error("central term with mismatched f/e weights");
    if (!c.is_zero())
      blocks[{k, root_sum(ew)}][{fw, ew}] = c;
  }
  std::vector<BlockResult> out;
  for (const auto& [key, entries] : blocks) {
    const auto& [k, nu] = key;
    BlockResult res{k, nu, true};
    if (!entries.empty()) {
      // S = G · D^T · G with D(fw, ew) the difference coefficients.
      const GramBlock g = pairing.gram(nu);
      const std::size_t n = g.plus_words.size();
      auto index = [&](const Word& w) {
        return static_cast<std::size_t>(std::find(g.plus_words.begin(), g.plus_words.end(), w) -
                                        g.plus_words.begin());
      };
      QMatrix dt(n, n);
      for (const auto& [words, c] : entries)
        dt(index(words.second), index(words.first)) = c;
      res.equal = (g.matrix * dt * g.matrix).is_zero();
    }
    out.push_back(res);
  }
  return out;
}

std::string ComparisonReport::verdict() const {
  if (match())
    return "MATCH (16-dim evaluation + blockwise mod-radical)";
  std::string why;
  if (!evaluation16_equal)
    why += "16-dim evaluation differs";
  if (!blockwise_equal)
    why += std::string(why.empty() ? "" : "; ") + "blockwise mod-radical comparison differs";
  return "MISMATCH (" + why + ")";
}

ComparisonReport compare_with_theorem(const CentralElem& built) {
  ComparisonReport rep;
  const CentralElem thm = theorem_element();
  const Representation r16 = rep16();
  rep.evaluation16_equal = evaluate(built, r16) == evaluate(thm, r16);
  rep.blocks = compare_blockwise(built, thm, default_pairing());
  rep.blockwise_equal = std::all_of(rep.blocks.begin(), rep.blocks.end(),
                                    [](const BlockResult& b) { return b.equal; });
  return rep;
}

} // namespace uqc
