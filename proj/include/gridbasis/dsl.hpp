#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "gridbasis/grid.hpp"

namespace gridbasis {
namespace detail {

// Class/grid spec grammar:
//   class := "Av(" perm ("," perm)* ")" | "inc" | "dec" | "empty" | "all"
//   grid  := "[" class class ";" class class "]"        (rows top first)
//   juxt  := "[" class "|" class "]" | "[" class "/" class "]"
// Whitespace around tokens is ignored. Permutations inside Av(...) use the
// digit form only; the comma already separates basis elements.
struct SpecCursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& message, std::size_t at, std::string token) const {
    if (token.empty() && at < text.size()) token = std::string(1, text[at]);
    throw parse_error(message, std::move(token), at);
  }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (eof() || peek() != c) fail("expected '" + std::string(1, c) + "' " + what, pos, "");
    ++pos;
  }

  void expect_end() {
    skip_ws();
    if (!eof()) fail("unexpected trailing input", pos, std::string(text.substr(pos)));
  }
};

inline std::string read_ident(SpecCursor& cur) {
  std::size_t b = cur.pos;
  while (cur.pos < cur.text.size() && std::isalpha(static_cast<unsigned char>(cur.text[cur.pos])))
    ++cur.pos;
  return std::string(cur.text.substr(b, cur.pos - b));
}

inline Permutation parse_digit_perm(SpecCursor& cur) {
  cur.skip_ws();
  std::size_t b = cur.pos;
  std::vector<std::uint8_t> ranks;
  while (cur.pos < cur.text.size() && cur.text[cur.pos] >= '1' && cur.text[cur.pos] <= '9')
    ranks.push_back(static_cast<std::uint8_t>(cur.text[cur.pos++] - '0'));
  if (ranks.empty()) cur.fail("expected a permutation (digits 1-9)", cur.pos, "");
  try {
    return Permutation(std::move(ranks));
  } catch (const std::invalid_argument&) {
    cur.fail("not a permutation of 1..n", b, std::string(cur.text.substr(b, cur.pos - b)));
  }
}

inline ClassSpec parse_class_at(SpecCursor& cur) {
  cur.skip_ws();
  if (cur.eof()) cur.fail("expected a class", cur.pos, "");
  const std::size_t b = cur.pos;
  const std::string ident = read_ident(cur);
  if (ident == "inc") return ClassSpec::inc();
  if (ident == "dec") return ClassSpec::dec();
  if (ident == "empty") return ClassSpec::empty_class();
  if (ident == "all") return ClassSpec::all();
  if (ident == "Av") {
    cur.expect('(', "after Av");
    std::vector<Permutation> basis;
    for (;;) {
      basis.push_back(parse_digit_perm(cur));
      cur.skip_ws();
      if (!cur.eof() && cur.peek() == ',') {
        ++cur.pos;
        continue;
      }
      break;
    }
    cur.expect(')', "closing Av(...)");
    return ClassSpec::av(std::move(basis));
  }
  cur.fail("unknown class", b, ident);
}

}  // namespace detail

inline ClassSpec parse_class(std::string_view text) {
  detail::SpecCursor cur{text};
  ClassSpec c = detail::parse_class_at(cur);
  cur.expect_end();
  return c;
}

/// Parses "[A B; C D]", rows top first.
inline GridSpec parse_grid(std::string_view text) {
  detail::SpecCursor cur{text};
  cur.expect('[', "opening the grid");
  ClassSpec a = detail::parse_class_at(cur);
  ClassSpec b = detail::parse_class_at(cur);
  cur.expect(';', "between grid rows");
  ClassSpec c = detail::parse_class_at(cur);
  ClassSpec d = detail::parse_class_at(cur);
  cur.expect(']', "closing the grid");
  cur.expect_end();
  return GridSpec::grid2(std::move(a), std::move(b), std::move(c), std::move(d));
}

/// Parses "[L|R]" (horizontal) or "[T/B]" (vertical, top first).
inline GridSpec parse_juxt(std::string_view text) {
  detail::SpecCursor cur{text};
  cur.expect('[', "opening the juxtaposition");
  ClassSpec first = detail::parse_class_at(cur);
  cur.skip_ws();
  if (cur.eof()) cur.fail("expected '|' or '/'", cur.pos, "");
  const char sep = cur.peek();
  if (sep != '|' && sep != '/') cur.fail("expected '|' or '/'", cur.pos, "");
  ++cur.pos;
  ClassSpec second = detail::parse_class_at(cur);
  cur.expect(']', "closing the juxtaposition");
  cur.expect_end();
  return sep == '|' ? GridSpec::juxt_h(std::move(first), std::move(second))
                    : GridSpec::juxt_v(std::move(first), std::move(second));
}

}  // namespace gridbasis
