#pragma once

#include <optional>

#include "polyvdw/multivar.hpp"
#include "polyvdw/polynomial.hpp"
#include "polyvdw/sympoly.hpp"

namespace polyvdw {

// Head times the product of all inner coefficients. A term with head 0
// evaluates to 0 whatever its coefficients.
Int pi_term(const Term& t);

// Sum of pi_term over the terms; additive across irreducible operands only.
Int pi_poly(const SymPoly& x);

// Each term T{h;c1..cl} maps to (h * c1 * ... * cl) n^l. Distinct terms of
// equal length land on the same monomial, so the map is many-to-one.
IntPoly eval_px(const SymPoly& x);

// sum over a_i != 0 of T{a_i; 1,...,1 (length i)}. Requires p(0) = 0,
// p != 0 and deg p <= cap.
SymPoly encode_poly(const IntPoly& p, std::size_t cap);

// A term with head h and blocks of sizes (j1..jk) maps to
// (h * all block coefficients) x1^j1 ... xk^jk.
MultiIntPoly eval_pmulti(const MultiSymPoly& x);

struct MultiEncoding {
    MultiSymPoly eta;
    std::size_t m;
};

// One unit-coefficient term per monomial, m = total of all exponents over
// all monomials. Requires a nonzero, constant-free polynomial with k >= 2.
// A caller encoding a family into one space may force a larger m.
MultiEncoding encode_multi(const MultiIntPoly& p, std::optional<std::size_t> m = std::nullopt);

}  // namespace polyvdw
