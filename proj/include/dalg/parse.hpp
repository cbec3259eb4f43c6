#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dalg/dpoly.hpp"

namespace dalg {

/// Parses a differential polynomial.
///
/// Grammar (whitespace ignored):
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' exponent)?
///   atom   := number | name | '(' expr ')'
///   name   := 'y' digits? jetsuffix? | 'z' jetsuffix? | 's' | 'x' | 'i' | parameter
///   jetsuffix := "'"+ | '^(' digits ')'
/// Bare `y` means `y1`. Division is only by jet-free field elements.
/// Juxtaposition is rejected: `2y1` and `y1 y2` are syntax errors.
DPoly parse(std::string_view text, const FieldDesc& field);

/// Parses a field element (no jet variables, no s).
Coeff parse_coeff(std::string_view text, const FieldDesc& field);

/// Family named by "y", "y<i>" or "z".
Family parse_family(std::string_view text);

/// A generator file: `field:` and `target:` headers, `#` comments, one
/// generator per remaining non-blank line. Field defaults to Q.
struct SystemFile {
  FieldDesc field;
  std::optional<Family> target;
  std::vector<DPoly> generators;
};

SystemFile parse_system(std::istream& in);
SystemFile parse_system_text(std::string_view text);

/// One line of a witness library:
///   name | field | equation | y(p), y'(p), ..., y^(r-1)(p) [| p]
/// The equation is in one family; the initial jets are field elements.
struct WitnessSpec {
  std::string name;
  FieldDesc field;
  DPoly equation;
  Family family;
  std::vector<Coeff> initial;
  Coeff point;
};

std::vector<WitnessSpec> parse_witness_library(std::istream& in);

}  // namespace dalg
