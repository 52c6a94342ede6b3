#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polyvdw/coloring.hpp"
#include "polyvdw/multivar.hpp"
#include "polyvdw/polynomial.hpp"
#include "polyvdw/shifts.hpp"
#include "polyvdw/sympoly.hpp"

namespace polyvdw {

// Literal syntax shared by the command line and the test fixtures.
// Whitespace is insignificant everywhere except inside file paths. Errors
// carry the 0-based offset into the original text.
//
//   term         T{iota;c1,...,cl}
//   sympoly      term (+ term)*
//   multiterm    M{iota; [c,...]; [c,...]; ...}     one group per variable
//   polynomial   3n^2 + 2n   or   x1^2*x2 - 4x3
//   index set    {1,3,4}  (braces optional)
//   sequence     id | const:c | pow:e | table:v1,v2,...
//   coloring     mod:q:c0,...,c(q-1) | random:r:seed:lo:hi | explicit:lo:c0,c1,...
//                | file:PATH           (lines `integer color`, # comments)

// cap defaults to the term's own length.
Term parse_term(std::string_view text, std::optional<std::size_t> cap = std::nullopt);

// cap defaults to the longest term.
SymPoly parse_sympoly(std::string_view text, std::optional<std::size_t> cap = std::nullopt);

// Shape defaults to k = number of groups, m = max(1, longest group).
MultiTerm parse_multiterm(std::string_view text, std::optional<MultiShape> shape = std::nullopt);
MultiSymPoly parse_multisympoly(std::string_view text, std::optional<MultiShape> shape = std::nullopt);

using AnyPoly = std::variant<IntPoly, MultiIntPoly>;

// Polynomials without variables come back as IntPoly. Throws SyntaxError or
// MixedVariableStyles.
AnyPoly parse_polynomial(std::string_view text);

// Comma-separated list; mixing n and x styles across entries is an error.
std::vector<AnyPoly> parse_polynomial_list(std::string_view text);

IndexSet parse_index_set(std::string_view text);
SequenceSpec parse_sequence(std::string_view text);

// Throws SyntaxError, BadColorCount or FileUnreadable. A `file:` coloring
// must cover a contiguous range and becomes an explicit coloring.
Coloring parse_coloring(std::string_view text);

std::string to_string(const IntPoly& p);
std::string to_string(const MultiIntPoly& p);
std::string to_string(const AnyPoly& p);
std::string to_string(const Coloring& c);

}  // namespace polyvdw
