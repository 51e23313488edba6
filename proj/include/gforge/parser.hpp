#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gforge/theory.hpp"

namespace gforge {

struct SourceSpan {
  std::size_t start = 0;  // byte offsets, half-open [start, end)
  std::size_t end = 0;
  int line = 1;
  int column = 1;

  bool operator==(const SourceSpan&) const = default;
};

struct parse_error : std::runtime_error {
  SourceSpan span;
  std::vector<std::string> expected;  // token descriptions, may be empty

  parse_error(const std::string& message, SourceSpan s, std::vector<std::string> exp = {})
      : std::runtime_error(message), span(s), expected(std::move(exp)) {}
};

// Parses the theory file format:
//
//   theory <name>            # optional header
//   sorts: X, Y
//   relations: leq(X, X), flag()
//   axioms:
//     refl: [x:X] true => leq(x,x)
//
// Formulas: true | false | r(x,..) | x = y | f & f | f | f
//           | exists v:S. f | (f), with exists binding weakest, then |, then &.
// Comments run from '#' to end of line. The returned theory always validates.
Theory parse_theory(std::string_view text);

// Canonical text form; parse_theory(render_theory(t)) is structurally equal
// to t for every theory in the image of the parser.
std::string render_theory(const Theory& t);

}  // namespace gforge
