#pragma once

#include <string>
#include <vector>

#include "gcmlab/poly.hpp"

namespace gcmlab {

// Parses "+', '-', '*', '^', parentheses, integer literals and variable
// names into a polynomial of the given ring. Throws std::invalid_argument
// with a position-annotated message on bad input.
Poly parse_poly(const Ring& ring, const std::string& text);

// Comma-separated list of polynomials; empty strings between commas are
// rejected, an entirely empty input yields the empty list.
std::vector<Poly> parse_poly_list(const Ring& ring, const std::string& text);

}  // namespace gcmlab
