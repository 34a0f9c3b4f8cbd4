#include "uqc/rep.hpp"

#include "uqc/central.hpp"
#include "uqc/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

namespace uqc {

const QMatrix& Representation::gen(Side side, int i) const {
  simple_root(i);
  return side == Side::plus ? e[static_cast<std::size_t>(i - 1)] : f[static_cast<std::size_t>(i - 1)];
}

QMatrix Representation::kmat(const Weight& mu) const {
  std::vector<QRat> d;
  d.reserve(weights.size());
  for (const auto& w : weights)
    d.push_back(QRat::q(inner(w, mu)));
  return QMatrix::diagonal(d);
}

std::size_t Representation::index_of_weight(const Weight& w) const {
  auto it = std::find(weights.begin(), weights.end(), w);
  if (it == weights.end() || std::count(weights.begin(), weights.end(), w) != 1)
    throw Error(name + ": weight " + w.to_string() + " does not span a one-dimensional weight space");
  return static_cast<std::size_t>(it - weights.begin());
}

namespace {

struct Entry {
  int row;  // 1-based, as in E_{row,col}
  int col;
  int sign;
  int qexp;
};

QMatrix from_entries(std::size_t n, std::initializer_list<Entry> entries) {
  QMatrix m(n, n);
  for (const auto& en : entries)
    m(static_cast<std::size_t>(en.row - 1), static_cast<std::size_t>(en.col - 1)) +=
        QRat(en.sign) * QRat::q(en.qexp);
  return m;
}

} // namespace

Representation rep5() {
  Representation r;
  r.name = "dim5";
  r.dim = 5;
  r.weights = {{1, 1}, {1, -1}, {0, 0}, {-1, 1}, {-1, -1}};
  const QRat qq = QRat::q(1) + QRat::q(-1);
  QMatrix e1(5, 5), f1(5, 5);
  e1(1, 2) = qq;
  e1(2, 3) = 1;
  f1(2, 1) = 1;
  f1(3, 2) = qq;
  r.e = {e1, from_entries(5, {{1, 2, 1, 0}, {4, 5, 1, 0}})};
  r.f = {f1, from_entries(5, {{2, 1, 1, 0}, {5, 4, 1, 0}})};
  return r;
}

Representation rep16() {
  Representation r;
  r.name = "dim16";
  r.dim = 16;
  // Exponents of k_(a,b): q^{2a}, q^{a+b} (x2), q^{2b}, q^{a-b} (x2), 1 (x4),
  // q^{b-a} (x2), q^{-2b}, q^{-a-b} (x2), q^{-2a}.
  r.weights = {{2, 0},  {1, 1},  {1, 1},   {0, 2},   {1, -1},  {1, -1},
               {0, 0},  {0, 0},  {0, 0},   {0, 0},   {-1, 1},  {-1, 1},
               {0, -2}, {-1, -1}, {-1, -1}, {-2, 0}};
  QMatrix e1 = from_entries(16, {{1, 2, 1, 0},    {3, 4, 1, 0},     {6, 7, 1, 0},
                                 {10, 12, 1, 0},  {5, 9, -1, 0},    {8, 11, -1, 0},
                                 {13, 14, -1, 0}, {15, 16, -1, 0},  {1, 3, 1, 1},
                                 {2, 4, 1, -1},   {5, 8, 1, 1},     {6, 10, -1, 1},
                                 {7, 12, -1, -1}, {9, 11, 1, -1},   {13, 15, -1, 1},
                                 {14, 16, -1, -1}});
  QMatrix e2 = from_entries(16, {{2, 5, 1, 0},  {4, 8, 1, 0},   {7, 13, 1, 0},  {12, 15, 1, 0},
                                 {3, 6, 1, 0},  {4, 7, 1, 2},   {8, 13, 1, -2}, {11, 14, 1, 0}});
  QMatrix f1 = from_entries(16, {{3, 1, 1, 0},    {4, 2, 1, 0},     {8, 5, 1, 0},
                                 {10, 6, -1, 0},  {12, 7, -1, 0},   {11, 9, 1, 0},
                                 {15, 13, -1, 0}, {16, 14, -1, 0},  {2, 1, 1, -1},
                                 {4, 3, 1, 1},    {7, 6, 1, -1},    {12, 10, 1, 1},
                                 {9, 5, -1, -1},  {11, 8, -1, 1},   {14, 13, -1, -1},
                                 {16, 15, -1, 1}});
  QMatrix f2 = from_entries(16, {{6, 3, 1, 0},  {7, 4, 1, 0},   {13, 8, 1, 0},  {14, 11, 1, 0},
                                 {5, 2, 1, 0},  {8, 4, 1, -2},  {13, 7, 1, 2},  {15, 12, 1, 0}});
  r.e = {e1, e2};
  r.f = {f1, f2};
  return r;
}

namespace {

// Reconstruction check for one candidate index map.
bool reproduces(const Representation& r16, const Representation& v,
                const std::vector<std::size_t>& pos_of_pair) {
  const std::size_t n = v.dim;
  auto permuted = [&](const QMatrix& m) {
    QMatrix out(n * n, n * n);
    for (std::size_t i = 0; i < n * n; ++i)
      for (std::size_t j = 0; j < n * n; ++j)
        if (!m(i, j).is_zero())
          out(pos_of_pair[i], pos_of_pair[j]) = m(i, j);
    return out;
  };
  const QMatrix id = QMatrix::identity(n);
  for (int i = 1; i <= 2; ++i) {
    const QMatrix Ki = v.K(i);
    const QMatrix Kinv = v.kmat(-simple_root(i));
    if (!(permuted(kron(v.gen(Side::plus, i), id) + kron(Ki, v.gen(Side::plus, i))) ==
          r16.gen(Side::plus, i)))
      return false;
    if (!(permuted(kron(id, v.gen(Side::minus, i)) + kron(v.gen(Side::minus, i), Kinv)) ==
          r16.gen(Side::minus, i)))
      return false;
    if (!(permuted(kron(Ki, Ki)) == r16.K(i)))
      return false;
  }
  return true;
}

} // namespace

Rep4Extraction derive_rep4(const Representation& r16) {
  if (r16.dim != 16)
    throw Error("derive_rep4 expects a 16-dimensional representation");
  // Weights of V: a 4-element subset of the halves of the even tensor
  // weights whose pairwise sums give the tensor weights with multiplicity.
  std::vector<Weight> halves;
  for (const auto& w : r16.weights)
    if (w.x1 % 2 == 0 && w.x2 % 2 == 0) {
      Weight half{w.x1 / 2, w.x2 / 2};
      if (std::find(halves.begin(), halves.end(), half) == halves.end())
        halves.push_back(half);
    }
  std::vector<Weight> target = r16.weights;
  std::sort(target.begin(), target.end());
  std::vector<Weight> vw;
  const std::size_t h = halves.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << h) && vw.empty(); ++mask) {
    if (std::popcount(mask) != 4)
      continue;
    std::vector<Weight> pick, sums;
    for (std::size_t b = 0; b < h; ++b)
      if (mask >> b & 1)
        pick.push_back(halves[b]);
    for (const auto& a : pick)
      for (const auto& b : pick)
        sums.push_back(a + b);
    std::sort(sums.begin(), sums.end());
    if (sums == target)
      vw = pick;
  }
  if (vw.size() != 4)
    throw MathError("tensor weights are not those of a 4-dimensional square");
  const std::size_t n = 4;

  // Positions and pairs grouped by weight.
  std::map<Weight, std::vector<std::size_t>> positions;
  for (std::size_t p = 0; p < r16.weights.size(); ++p)
    positions[r16.weights[p]].push_back(p);
  std::map<Weight, std::vector<std::size_t>> pairs;  // pair index a*n+b
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      pairs[vw[a] + vw[b]].push_back(a * n + b);
  std::vector<Weight> groups;
  for (const auto& [w, ps] : positions) {
    if (pairs[w].size() != ps.size())
      throw MathError("tensor weight multiplicities do not match V ⊗ V");
    groups.push_back(w);
  }

  Representation v;
  v.name = "dim4";
  v.dim = n;
  v.weights = vw;

  std::vector<std::vector<std::size_t>> perm(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g)
    perm[g] = pairs[groups[g]];

  Rep4Extraction out;
  std::vector<std::size_t> first_map;
  std::vector<std::size_t> pos_of_pair(n * n);
  // Odometer over the permutations of every weight group.
  for (;;) {
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const auto& ps = positions[groups[g]];
      for (std::size_t k = 0; k < ps.size(); ++k)
        pos_of_pair[perm[g][k]] = ps[k];
    }
    // Read E from entries (x,0)->(y,0) and F from (0,x)->(0,y): there only
    // the E⊗1 (resp. 1⊗F) part contributes.
    Representation cand = v;
    for (int i = 1; i <= 2; ++i) {
      QMatrix E(n, n), F(n, n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          if (x == y)
            continue;
          E(x, y) = r16.gen(Side::plus, i)(pos_of_pair[x * n], pos_of_pair[y * n]);
          F(x, y) = r16.gen(Side::minus, i)(pos_of_pair[x], pos_of_pair[y]);
        }
      cand.e[static_cast<std::size_t>(i - 1)] = E;
      cand.f[static_cast<std::size_t>(i - 1)] = F;
    }
    if (reproduces(r16, cand, pos_of_pair)) {
      if (out.solutions == 0) {
        out.rep = cand;
        first_map = pos_of_pair;
      }
      ++out.solutions;
    }
    std::size_t g = 0;
    while (g < groups.size() && !std::next_permutation(perm[g].begin(), perm[g].end()))
      ++g;
    if (g == groups.size())
      break;
  }
  if (out.solutions == 0)
    throw MathError("no 4-dimensional representation reproduces the 16-dimensional matrices");

  out.index_map.assign(n * n, {0, 0});
  out.kronecker_order = true;
  for (std::size_t pr = 0; pr < n * n; ++pr) {
    out.index_map[first_map[pr]] = {static_cast<int>(pr / n), static_cast<int>(pr % n)};
    if (first_map[pr] != pr)
      out.kronecker_order = false;
  }
  return out;
}

Representation rep4() { return derive_rep4(rep16()).rep; }

Representation representation(const std::string& name) {
  if (name == "dim4")
    return rep4();
  if (name == "dim5")
    return rep5();
  if (name == "dim16")
    return rep16();
  throw Error("unknown representation '" + name + "' (expected dim4, dim5 or dim16)");
}

QMatrix borel_matrix(const BorelElem& x, const Representation& r) {
  QMatrix out(r.dim, r.dim);
  std::map<Word, QMatrix> word_cache;
  for (const auto& [m, c] : x.terms()) {
    auto it = word_cache.find(m.word);
    if (it == word_cache.end()) {
      QMatrix w = QMatrix::identity(r.dim);
      for (int letter : m.word)
        w = w * r.gen(x.side(), letter);
      it = word_cache.emplace(m.word, std::move(w)).first;
    }
    QMatrix term = it->second;
    if (m.k != Weight{})
      term = term * r.kmat(m.k);
    out += term * c;
  }
  return out;
}

std::vector<RelationCheck> relation_suite(const Representation& r) {
  std::vector<RelationCheck> out;
  auto name = [](const char* pat, int i, int j) {
    std::string s;
    for (const char* c = pat; *c; ++c)
      s += *c == 'i' ? std::to_string(i) : *c == 'j' ? std::to_string(j) : std::string(1, *c);
    return s;
  };
  for (int i = 1; i <= 2; ++i) {
    const int qi = i == 1 ? 1 : 2;
    const QMatrix Ki = r.K(i);
    const QMatrix Kinv = r.kmat(-simple_root(i));
    for (int j = 1; j <= 2; ++j) {
      QMatrix lhs = commutator(r.gen(Side::plus, i), r.gen(Side::minus, j));
      QMatrix rhs(r.dim, r.dim);
      if (i == j)
        rhs = (Ki - Kinv) * (QRat::q(qi) - QRat::q(-qi)).inverse();
      out.push_back({name("[ei,fj]", i, j), lhs == rhs});
    }
    for (int j = 1; j <= 2; ++j) {
      const int s = inner(simple_root(i), simple_root(j));
      out.push_back({name("Ki ej Ki^-1", i, j),
                     Ki * r.gen(Side::plus, j) * Kinv == r.gen(Side::plus, j) * QRat::q(s)});
      out.push_back({name("Ki fj Ki^-1", i, j),
                     Ki * r.gen(Side::minus, j) * Kinv == r.gen(Side::minus, j) * QRat::q(-s)});
    }
  }
  const Weight a{1, 2}, b{-3, 1};
  out.push_back({"k multiplicative", r.kmat(a) * r.kmat(b) == r.kmat(a + b) &&
                                         r.kmat({0, 0}) == QMatrix::identity(r.dim)});
  const char* serre_names[] = {"serre e-quadratic", "serre e-cubic", "serre f-quadratic",
                               "serre f-cubic"};
  auto serre = serre_elements();
  for (std::size_t k = 0; k < serre.size(); ++k)
    out.push_back({serre_names[k], borel_matrix(serre[k], r).is_zero()});
  return out;
}

bool centrality_check(const QMatrix& m, const Representation& r) {
  for (int i = 1; i <= 2; ++i)
    for (const QMatrix* g : {&r.gen(Side::plus, i), &r.gen(Side::minus, i)})
      if (!commutator(m, *g).is_zero())
        return false;
  for (int i = 1; i <= 2; ++i)
    if (!commutator(m, r.K(i)).is_zero())
      return false;
  return true;
}

QMatrix evaluate(const CentralElem& c, const Representation& r) {
  QMatrix out(r.dim, r.dim);
  for (const auto& t : c.terms()) {
    QMatrix m = borel_matrix(t.fpart, r) * r.kmat(t.k) * borel_matrix(t.epart, r);
    out += m * t.coeff;
  }
  return out;
}

QRat hamiltonian_scale() { return QRat::q(-5) - QRat::q(-3) - QRat::q(3) + QRat::q(5); }

QRat hamiltonian_shift() {
  return QRat(1) + QRat::q(-10) + QRat::q(-6) + QRat::q(6) + QRat::q(10);
}

QMatrix hamiltonian(const QMatrix& c16) {
  QMatrix shifted = c16 - QMatrix::identity(c16.rows()) * hamiltonian_shift();
  return shifted * hamiltonian_scale().inverse();
}

QMatrix hamiltonian() { return hamiltonian(evaluate(theorem_element(), rep16())); }

std::vector<mpq_class> default_sign_samples() {
  return {mpq_class(1, 10), mpq_class(1, 3), mpq_class(1, 2), mpq_class(9, 10)};
}

std::vector<SignEntry> sign_report(const QMatrix& m, const std::vector<mpq_class>& samples) {
  std::vector<SignEntry> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i == j || m(i, j).is_zero())
        continue;
      for (const auto& q0 : samples)
        out.push_back({i, j, sgn(m(i, j).eval(q0)), q0});
    }
  return out;
}

} // namespace uqc
