#pragma once

// Text format for presentations (.fp files).  Whitespace is insignificant
// and '#' starts a comment that runs to the end of the line.
//
//   presentation := "<" gens "|" rels ">"
//   gens         := ident ("," ident)*
//   rels         := empty | rel ("," rel)*
//   rel          := word ("=" word)?
//   word         := "1" | factor+          factors juxtaposed, '*' optional
//   factor       := base ("^" int)?
//   base         := ident | "(" word ")"
//   ident        := [A-Za-z][A-Za-z0-9_]*
//   int          := "-"? digits
//
// A relation u = v is stored as the relator u*v^-1.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "justfp/presentation.hpp"

namespace justfp {

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(SourceSpan, SourceSpan) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, SourceSpan span);

  std::string const& message() const noexcept { return message_; }
  SourceSpan span() const noexcept { return span_; }

  // "line:col: message" followed by the offending line and a caret marker.
  std::string render(std::string_view text) const;

 private:
  std::string message_;
  SourceSpan span_;
};

Presentation parse_presentation(std::string_view text);

// Parses a `word` (or `word = word`, giving u*v^-1) over the alphabet of `p`.
Word parse_word(Presentation const& p, std::string_view text);

std::string print_presentation(Presentation const& p);

}  // namespace justfp
