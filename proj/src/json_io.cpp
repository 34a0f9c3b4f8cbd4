#include "uqc/json_io.hpp"

#include "uqc/error.hpp"

namespace uqc {

namespace {

json word_json(const Word& w) { return json(w); }

Word word_from(const json& j) {
  Word w = j.get<Word>();
  for (int c : w)
    if (c != 1 && c != 2)
      throw Error("word letters must be 1 or 2");
  return w;
}

QRat qrat_from(const json& j) { return QRat::parse(j.get<std::string>()); }

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(", \"") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

template <class Cell>
std::string csv_rows(std::size_t rows, std::size_t cols, Cell cell) {
  std::string out;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j)
        out += ',';
      out += csv_cell(cell(i, j));
    }
    out += '\n';
  }
  return out;
}

} // namespace

json to_json(const Weight& w) { return json::array({w.x1, w.x2}); }

Weight weight_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error("weight must be a two-element array");
  return {j[0].get<int>(), j[1].get<int>()};
}

json to_json(const BorelElem& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.terms())
    terms.push_back({{"coeff", c.to_string()}, {"word", word_json(m.word)}, {"k", to_json(m.k)}});
  return {{"side", side_name(x.side())}, {"terms", terms}};
}

BorelElem borel_from_json(const json& j) {
  BorelElem x(parse_side(j.at("side").get<std::string>()));
  for (const auto& t : j.at("terms"))
    x.add_term(qrat_from(t.at("coeff")), Monomial{word_from(t.at("word")), weight_from_json(t.at("k"))});
  return x;
}

json to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      row.push_back(m(i, k).to_string());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

QMatrix qmatrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const json& e = j.at("entries");
  if (e.size() != rows)
    throw Error("matrix row count mismatch");
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (e[i].size() != cols)
      throw Error("matrix column count mismatch");
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = qrat_from(e[i][k]);
  }
  return m;
}

json to_json(const std::vector<std::vector<mpq_class>>& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& v : r)
      row.push_back(v.get_str());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.size()}, {"cols", m.empty() ? 0 : m.front().size()}, {"entries", rows}};
}

json to_json(const GramBlock& g) {
  json minus = json::array(), plus = json::array();
  for (const auto& w : g.minus_words)
    minus.push_back(word_json(w));
  for (const auto& w : g.plus_words)
    plus.push_back(word_json(w));
  return {{"nu", to_json(g.nu)},
          {"minus_words", minus},
          {"plus_words", plus},
          {"matrix", to_json(g.matrix)},
          {"rank", g.rank}};
}

GramBlock gram_from_json(const json& j) {
  GramBlock g;
  g.nu = weight_from_json(j.at("nu"));
  for (const auto& w : j.at("minus_words"))
    g.minus_words.push_back(word_from(w));
  for (const auto& w : j.at("plus_words"))
    g.plus_words.push_back(word_from(w));
  g.matrix = qmatrix_from_json(j.at("matrix"));
  g.rank = j.at("rank").get<std::size_t>();
  return g;
}

json to_json(const CentralElem& c) {
  json terms = json::array();
  for (const auto& t : c.terms())
    terms.push_back({{"coeff", t.coeff.to_string()},
                     {"fpart", to_json(t.fpart)},
                     {"k", to_json(t.k)},
                     {"epart", to_json(t.epart)}});
  return {{"terms", terms}};
}

CentralElem central_from_json(const json& j) {
  CentralElem c;
  for (const auto& t : j.at("terms"))
    c.add(qrat_from(t.at("coeff")), borel_from_json(t.at("fpart")), weight_from_json(t.at("k")),
          borel_from_json(t.at("epart")));
  return c;
}

std::string to_csv(const QMatrix& m) {
  return csv_rows(m.rows(), m.cols(), [&](std::size_t i, std::size_t k) { return m(i, k).to_string(); });
}

std::string to_csv(const std::vector<std::vector<mpq_class>>& m) {
  return csv_rows(m.size(), m.empty() ? 0 : m.front().size(),
                  [&](std::size_t i, std::size_t k) { return m[i][k].get_str(); });
}

} // namespace uqc
