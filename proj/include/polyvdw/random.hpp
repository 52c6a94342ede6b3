#pragma once

#include <random>

#include "polyvdw/multivar.hpp"
#include "polyvdw/polynomial.hpp"
#include "polyvdw/sympoly.hpp"

namespace polyvdw {

using Rng = std::mt19937_64;

// Inclusive integer ranges for the generators below.
struct Range {
    Int lo;
    Int hi;
};

Int uniform(Rng& rng, Range range);

// Term of uniformly chosen length in [1, cap].
Term random_term(Rng& rng, std::size_t cap, Range iota, Range coeff);

// 1..max_terms pairwise irreducible terms; colliding keys are redrawn.
SymPoly random_sympoly(Rng& rng, std::size_t cap, std::size_t max_terms, Range iota, Range coeff);

MultiTerm random_multiterm(Rng& rng, MultiShape shape, Range iota, Range coeff);
MultiSymPoly random_multisympoly(Rng& rng, MultiShape shape, std::size_t max_terms, Range iota,
                                 Range coeff);

// p(0) = 0, degree at most max_degree, never the zero polynomial.
IntPoly random_intpoly(Rng& rng, std::size_t max_degree, Range coeff);

// Constant-free, nonzero, at most max_monomials monomials, each of total
// degree at most max_exponent_sum.
MultiIntPoly random_multiintpoly(Rng& rng, std::size_t k, std::size_t max_monomials,
                                 unsigned max_exponent_sum, Range coeff);

}  // namespace polyvdw
