#pragma once

// Plain-text polynomial files:
//
//   field 65521
//   vars 3
//   3*x1^2*x3 + x2 + 65520
//
// One polynomial per line, terms joined by " + ". The parser also accepts
// "-" between terms, signed integer coefficients, whitespace anywhere, blank
// lines and '#' comments. The writer prints canonical residues and drops unit
// coefficients on non-constant terms.

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "critpoints/polynomial.hpp"

namespace critpoints {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PolyFile {
  Ring ring;
  std::vector<Polynomial> polys;
};

Polynomial parse_polynomial(const Ring& ring, std::string_view text);
std::string format_polynomial(const Polynomial& f);

PolyFile read_poly_file(std::istream& in, MonomialOrder order = MonomialOrder::kGrevlex);
void write_poly_file(std::ostream& out, const Ring& ring, std::span<const Polynomial> polys);

}  // namespace critpoints
