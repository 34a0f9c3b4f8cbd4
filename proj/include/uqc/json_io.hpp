#pragma once

#include "uqc/central.hpp"
#include "uqc/freealg.hpp"
#include "uqc/pairing.hpp"
#include "uqc/qmatrix.hpp"

#include <json.hpp>

#include <gmpxx.h>

#include <string>
#include <vector>

namespace uqc {

using nlohmann::json;

/// Schemas (all coefficients and matrix entries are canonical QRat text):
///   Weight       [x1, x2]
///   BorelElem    {"side": "plus"|"minus", "terms": [{"coeff", "word": [..], "k": [a, b]}]}
///   QMatrix      {"rows", "cols", "entries": [[..], ..]}
///   GramBlock    {"nu", "minus_words", "plus_words", "matrix": QMatrix, "rank"}
///   CentralElem  {"terms": [{"coeff", "fpart": BorelElem, "k": Weight, "epart": BorelElem}]}
json to_json(const Weight& w);
json to_json(const BorelElem& x);
json to_json(const QMatrix& m);
json to_json(const GramBlock& g);
json to_json(const CentralElem& c);
/// Specialised matrix: entries as rational text `a` or `a/b`.
json to_json(const std::vector<std::vector<mpq_class>>& m);

Weight weight_from_json(const json& j);
BorelElem borel_from_json(const json& j);
QMatrix qmatrix_from_json(const json& j);
GramBlock gram_from_json(const json& j);
CentralElem central_from_json(const json& j);

/// One row per line, comma separated; entries containing ',' or spaces are quoted.
std::string to_csv(const QMatrix& m);
std::string to_csv(const std::vector<std::vector<mpq_class>>& m);

} // namespace uqc
