#include "polyvdw/evaluation.hpp"

#include <numeric>

namespace polyvdw {

Int pi_term(const Term& t)
{
    Int out = t.iota();
    for (Int c : t.coeffs()) {
        out = checked::mul(out, c);
    }
    return out;
}

Int pi_poly(const SymPoly& x)
{
    Int out = 0;
    for (const Term& t : x.terms()) {
        out = checked::add(out, pi_term(t));
    }
    return out;
}

IntPoly eval_px(const SymPoly& x)
{
    std::vector<Int> coeffs(x.max_length() + 1, 0);
    for (const Term& t : x.terms()) {
        coeffs[t.length()] = checked::add(coeffs[t.length()], pi_term(t));
    }
    return IntPoly(std::move(coeffs));
}

SymPoly encode_poly(const IntPoly& p, std::size_t cap)
{
    if (p.is_zero()) {
        throw Error(ErrorKind::ZeroPolynomial, "cannot encode the zero polynomial");
    }
    if (p.constant_term() != 0) {
        throw Error(ErrorKind::ConstantTermNonzero,
                    "constant term " + std::to_string(p.constant_term()) + " must be 0");
    }
    if (static_cast<std::size_t>(p.degree()) > cap) {
        throw Error(ErrorKind::DegreeExceedsCap, "degree " + std::to_string(p.degree())
                                                     + " exceeds cap " + std::to_string(cap));
    }
    std::vector<Term> terms;
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] != 0) {
            terms.push_back(Term::make(p.coeffs()[i], std::vector<Int>(i, 1), cap));
        }
    }
    return SymPoly::make(std::move(terms));
}

MultiIntPoly eval_pmulti(const MultiSymPoly& x)
{
    MultiIntPoly out(x.shape().k);
    for (const MultiTerm& t : x.terms()) {
        Int coeff = t.iota();
        Exponents exps;
        exps.reserve(t.blocks().size());
        for (const auto& block : t.blocks()) {
            for (Int c : block) {
                coeff = checked::mul(coeff, c);
            }
            exps.push_back(static_cast<unsigned>(block.size()));
        }
        out.add_monomial(exps, coeff);
    }
    return out;
}

MultiEncoding encode_multi(const MultiIntPoly& p, std::optional<std::size_t> forced_m)
{
    if (p.is_zero()) {
        throw Error(ErrorKind::ZeroPolynomial, "cannot encode the zero polynomial");
    }
    if (p.has_constant_term()) {
        throw Error(ErrorKind::ConstantTermPresent, "polynomial has a constant term");
    }
    std::size_t m = 0;
    for (const auto& [exps, c] : p.monomials()) {
        m += std::accumulate(exps.begin(), exps.end(), std::size_t{0});
    }
    if (forced_m) {
        if (*forced_m < m) {
            throw Error(ErrorKind::InvalidShape, "m=" + std::to_string(*forced_m)
                                                     + " is below the required " + std::to_string(m));
        }
        m = *forced_m;
    }
    const MultiShape shape{p.k(), m};
    std::vector<MultiTerm> terms;
    for (const auto& [exps, c] : p.monomials()) {
        std::vector<std::vector<Int>> blocks;
        blocks.reserve(exps.size());
        for (unsigned e : exps) {
            blocks.emplace_back(e, 1);
        }
        terms.push_back(MultiTerm::make(c, std::move(blocks), shape));
    }
    return {MultiSymPoly::make(std::move(terms)), m};
}

}  // namespace polyvdw
