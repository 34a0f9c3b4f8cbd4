#include "uqc/parse.hpp"

#include "uqc/error.hpp"

#include <cctype>
#include <charconv>
#include <string>

namespace uqc {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && is_space(s[i]))
    ++i;
  return i;
}

bool starts_factor(std::string_view s, std::size_t i) {
  if (i + 1 >= s.size())
    return false;
  const char c = s[i];
  if (c == 'e' || c == 'f')
    return s[i + 1] == '1' || s[i + 1] == '2';
  return c == 'k' && s[i + 1] == '(';
}

int parse_int(std::string_view s, std::size_t& i, std::size_t base) {
  i = skip_space(s, i);
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+'))
    ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
    ++i;
  int v = 0;
  std::string_view digits = s.substr(start, i - start);
  if (!digits.empty() && digits.front() == '+')
    digits.remove_prefix(1);
  auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || p != digits.data() + digits.size())
    throw ParseError("expected an integer", base + start);
  return v;
}

void expect(std::string_view s, std::size_t& i, char c, std::size_t base) {
  i = skip_space(s, i);
  if (i >= s.size() || s[i] != c)
    throw ParseError(std::string("expected '") + c + "'", base + i);
  ++i;
}

Weight parse_k(std::string_view s, std::size_t& i, std::size_t base) {
  // s[i] == 'k'
  ++i;
  expect(s, i, '(', base);
  Weight w;
  w.x1 = parse_int(s, i, base);
  expect(s, i, ',', base);
  w.x2 = parse_int(s, i, base);
  expect(s, i, ')', base);
  return w;
}

struct Factors {
  std::optional<Side> side;
  std::size_t side_pos = 0;  // offset of the first generator
  std::vector<BorelElem> parts;  // side-less k's are stored on the plus side
};

Factors parse_factors(std::string_view s, std::size_t base) {
  Factors out;
  std::size_t i = skip_space(s, 0);
  while (i < s.size()) {
    if (s[i] == '*') {
      i = skip_space(s, i + 1);
      continue;
    }
    if (!starts_factor(s, i))
      throw ParseError("expected a generator e1, e2, f1, f2 or k(a,b)", base + i);
    if (s[i] == 'k') {
      out.parts.push_back(BorelElem::k_elem(Side::plus, parse_k(s, i, base)));
    } else {
      const Side side = s[i] == 'e' ? Side::plus : Side::minus;
      if (out.side && *out.side != side)
        throw ParseError("element mixes e and f generators", base + i);
      if (!out.side)
        out.side_pos = base + i;
      out.side = side;
      out.parts.push_back(BorelElem::generator(side, s[i + 1] - '0'));
      i += 2;
    }
    i = skip_space(s, i);
  }
  return out;
}

// Splits at top-level '+'/'-' that separate terms. A sign directly after
// '^', '*', '/' or '(' belongs to the coefficient, and anything inside
// parentheses is skipped.
std::vector<std::pair<std::size_t, std::size_t>> split_terms(std::string_view s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  char prev = 0;  // last non-space char
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(')
      ++depth;
    else if (c == ')') {
      if (--depth < 0)
        throw ParseError("unbalanced ')'", i);
    } else if ((c == '+' || c == '-') && depth == 0 && prev != 0 && prev != '^' &&
               prev != '*' && prev != '/' && prev != '+' && prev != '-') {
      out.emplace_back(start, i);
      start = i;
    }
    if (!is_space(c))
      prev = c;
  }
  if (depth != 0)
    throw ParseError("unbalanced '('", s.size());
  out.emplace_back(start, s.size());
  return out;
}

} // namespace

BorelElem parse_element(std::string_view text, Side default_side) {
  if (skip_space(text, 0) == text.size())
    throw ParseError("empty element", 0);
  struct Parsed {
    QRat coeff;
    Factors factors;
  };
  std::vector<Parsed> parsed;
  std::optional<Side> side;
  for (auto [b, e] : split_terms(text)) {
    std::string_view term = text.substr(b, e - b);
    std::size_t i = skip_space(term, 0);
    QRat sign(1);
    if (i < term.size() && (term[i] == '+' || term[i] == '-')) {
      if (term[i] == '-')
        sign = QRat(-1);
      i = skip_space(term, i + 1);
    }
    if (i == term.size())
      throw ParseError("missing term", b + i);
    // Coefficient ends at the first top-level '*' followed by a factor.
    std::size_t split = std::string_view::npos;
    if (!starts_factor(term, i)) {
      int depth = 0;
      for (std::size_t j = i; j < term.size(); ++j) {
        if (term[j] == '(')
          ++depth;
        else if (term[j] == ')')
          --depth;
        else if (term[j] == '*' && depth == 0 && starts_factor(term, skip_space(term, j + 1))) {
          split = j;
          break;
        }
      }
    }
    Parsed p;
    if (starts_factor(term, i)) {
      p.coeff = sign;
      p.factors = parse_factors(term.substr(i), b + i);
    } else {
      std::string_view ctext = term.substr(i, split == std::string_view::npos ? term.npos : split - i);
      try {
        p.coeff = sign * QRat::parse(ctext);
      } catch (const ParseError& err) {
        throw ParseError("bad coefficient", b + i + err.position());
      }
      if (split != std::string_view::npos)
        p.factors = parse_factors(term.substr(split + 1), b + split + 1);
    }
    if (p.factors.side) {
      if (side && *side != *p.factors.side)
        throw ParseError("element mixes e and f generators", p.factors.side_pos);
      side = p.factors.side;
    }
    parsed.push_back(std::move(p));
  }
  const Side s = side.value_or(default_side);
  BorelElem out(s);
  for (const auto& p : parsed) {
    BorelElem term = BorelElem::scalar(s, p.coeff);
    for (const auto& f : p.factors.parts)
      term = borel_mul(term, f.side() == s ? f : f.retagged(s));
    out += term;
  }
  return out;
}

Weight parse_weight(std::string_view text) {
  std::size_t i = skip_space(text, 0);
  bool paren = i < text.size() && text[i] == '(';
  if (paren)
    ++i;
  Weight w;
  w.x1 = parse_int(text, i, 0);
  expect(text, i, ',', 0);
  w.x2 = parse_int(text, i, 0);
  if (paren)
    expect(text, i, ')', 0);
  i = skip_space(text, i);
  if (i != text.size())
    throw ParseError("trailing characters after weight", i);
  return w;
}

Word parse_word(std::string_view text, std::optional<Side> expected) {
  Word w;
  std::optional<Side> side;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (is_space(c) || c == '*')
      continue;
    if (c == 'e' || c == 'f') {
      const Side s = c == 'e' ? Side::plus : Side::minus;
      if ((side && *side != s) || (expected && *expected != s))
        throw ParseError(std::string("unexpected generator '") + c + "'", i);
      side = s;
      if (i + 1 >= text.size() || (text[i + 1] != '1' && text[i + 1] != '2'))
        throw ParseError("generator index must be 1 or 2", i + 1);
      w.push_back(text[++i] - '0');
    } else if (c == '1' || c == '2') {
      w.push_back(c - '0');
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in word", i);
    }
  }
  return w;
}

} // namespace uqc
