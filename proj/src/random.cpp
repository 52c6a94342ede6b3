#include "polyvdw/random.hpp"

#include <set>

namespace polyvdw {

namespace {

Int nonzero(Rng& rng, Range range)
{
    if (range.lo == 0 && range.hi == 0) {
        throw Error(ErrorKind::InvalidRange, "range [0, 0] has no nonzero value");
    }
    Int v = 0;
    while (v == 0) {
        v = uniform(rng, range);
    }
    return v;
}

}  // namespace

Int uniform(Rng& rng, Range range)
{
    if (range.hi < range.lo) {
        throw Error(ErrorKind::InvalidRange, "empty range");
    }
    return std::uniform_int_distribution<Int>(range.lo, range.hi)(rng);
}

Term random_term(Rng& rng, std::size_t cap, Range iota, Range coeff)
{
    const auto length = static_cast<std::size_t>(uniform(rng, {1, static_cast<Int>(cap)}));
    std::vector<Int> coeffs(length);
    for (Int& c : coeffs) {
        c = uniform(rng, coeff);
    }
    return Term::make(uniform(rng, iota), std::move(coeffs), cap);
}

SymPoly random_sympoly(Rng& rng, std::size_t cap, std::size_t max_terms, Range iota, Range coeff)
{
    const auto target = static_cast<std::size_t>(uniform(rng, {1, static_cast<Int>(max_terms)}));
    std::vector<Term> terms;
    std::set<TermKey> keys;
    // Bounded retries: a tiny key space may hold fewer than `target` keys.
    for (std::size_t attempt = 0; terms.size() < target && attempt < 64 * target; ++attempt) {
        Term t = random_term(rng, cap, iota, coeff);
        if (keys.insert(t.key()).second) {
            terms.push_back(std::move(t));
        }
    }
    return SymPoly::make(std::move(terms));
}

MultiTerm random_multiterm(Rng& rng, MultiShape shape, Range iota, Range coeff)
{
    std::vector<std::vector<Int>> blocks(shape.k);
    for (auto& block : blocks) {
        block.resize(static_cast<std::size_t>(uniform(rng, {0, static_cast<Int>(shape.m)})));
        for (Int& c : block) {
            c = uniform(rng, coeff);
        }
    }
    return MultiTerm::make(uniform(rng, iota), std::move(blocks), shape);
}

MultiSymPoly random_multisympoly(Rng& rng, MultiShape shape, std::size_t max_terms, Range iota,
                                 Range coeff)
{
    const auto target = static_cast<std::size_t>(uniform(rng, {1, static_cast<Int>(max_terms)}));
    std::vector<MultiTerm> terms;
    std::set<MultiTermKey> keys;
    for (std::size_t attempt = 0; terms.size() < target && attempt < 64 * target; ++attempt) {
        MultiTerm t = random_multiterm(rng, shape, iota, coeff);
        if (keys.insert(t.key()).second) {
            terms.push_back(std::move(t));
        }
    }
    return MultiSymPoly::make(std::move(terms));
}

IntPoly random_intpoly(Rng& rng, std::size_t max_degree, Range coeff)
{
    const auto degree = static_cast<std::size_t>(uniform(rng, {1, static_cast<Int>(max_degree)}));
    std::vector<Int> coeffs(degree + 1, 0);
    for (std::size_t i = 1; i < degree; ++i) {
        coeffs[i] = uniform(rng, coeff);
    }
    coeffs[degree] = nonzero(rng, coeff);
    return IntPoly(std::move(coeffs));
}

MultiIntPoly random_multiintpoly(Rng& rng, std::size_t k, std::size_t max_monomials,
                                 unsigned max_exponent_sum, Range coeff)
{
    MultiIntPoly out(k);
    const auto target = static_cast<std::size_t>(uniform(rng, {1, static_cast<Int>(max_monomials)}));
    for (std::size_t attempt = 0; out.monomials().size() < target && attempt < 64 * target; ++attempt) {
        Exponents exps(k, 0);
        const auto total = static_cast<unsigned>(uniform(rng, {1, static_cast<Int>(max_exponent_sum)}));
        for (unsigned i = 0; i < total; ++i) {
            ++exps[static_cast<std::size_t>(uniform(rng, {0, static_cast<Int>(k) - 1}))];
        }
        if (out.monomials().count(exps) == 0) {
            out.add_monomial(exps, nonzero(rng, coeff));
        }
    }
    return out;
}

}  // namespace polyvdw
