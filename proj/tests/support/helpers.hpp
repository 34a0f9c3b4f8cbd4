#pragma once

#include "uqc/freealg.hpp"
#include "uqc/parse.hpp"
#include "uqc/qrat.hpp"

#include <doctest.h>

#include <string>

namespace doctest {
template <>
struct StringMaker<uqc::QRat> {
  static String convert(const uqc::QRat& v) { return v.to_string().c_str(); }
};
} // namespace doctest

namespace th {

inline uqc::QRat Q(const char* s) { return uqc::QRat::parse(s); }
inline uqc::QRat q(int e = 1) { return uqc::QRat::q(e); }
inline uqc::BorelElem E(const uqc::Word& w, const uqc::Weight& k = {}) {
  return uqc::BorelElem::word(uqc::Side::plus, w, k);
}
inline uqc::BorelElem F(const uqc::Word& w, const uqc::Weight& k = {}) {
  return uqc::BorelElem::word(uqc::Side::minus, w, k);
}
inline uqc::BorelElem minus(const char* s) { return uqc::parse_element(s, uqc::Side::minus); }
inline uqc::BorelElem plus(const char* s) { return uqc::parse_element(s, uqc::Side::plus); }

} // namespace th
