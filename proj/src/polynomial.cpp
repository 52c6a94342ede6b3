#include "polyvdw/polynomial.hpp"

#include <algorithm>

namespace polyvdw {

IntPoly::IntPoly(std::vector<Int> coeffs) : m_coeffs(std::move(coeffs))
{
    while (!m_coeffs.empty() && m_coeffs.back() == 0) {
        m_coeffs.pop_back();
    }
}

Int IntPoly::operator()(Int x) const
{
    Int acc = 0;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc = checked::add(checked::mul(acc, x), *it);
    }
    return acc;
}

IntPoly operator+(const IntPoly& p, const IntPoly& q)
{
    std::vector<Int> sum(std::max(p.coeffs().size(), q.coeffs().size()), 0);
    for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] = checked::add(p.coeff(i), q.coeff(i));
    }
    return IntPoly(std::move(sum));
}

void MultiIntPoly::add_monomial(const Exponents& exponents, Int coeff)
{
    if (exponents.size() != m_k) {
        throw Error(ErrorKind::ArityMismatch, "exponent tuple of length " + std::to_string(exponents.size())
                                                  + " in a polynomial of " + std::to_string(m_k)
                                                  + " variables");
    }
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = m_monomials.try_emplace(exponents, coeff);
    if (!inserted) {
        it->second = checked::add(it->second, coeff);
        if (it->second == 0) {
            m_monomials.erase(it);
        }
    }
}

bool MultiIntPoly::has_constant_term() const
{
    return m_monomials.contains(Exponents(m_k, 0));
}

MultiIntPoly MultiIntPoly::widened(std::size_t k) const
{
    if (k < m_k) {
        throw Error(ErrorKind::ArityMismatch, "cannot narrow a polynomial from "
                                                  + std::to_string(m_k) + " to " + std::to_string(k)
                                                  + " variables");
    }
    MultiIntPoly out(k);
    for (const auto& [exps, c] : m_monomials) {
        Exponents wide = exps;
        wide.resize(k, 0);
        out.add_monomial(wide, c);
    }
    return out;
}

Int MultiIntPoly::operator()(std::span<const Int> xs) const
{
    if (xs.size() != m_k) {
        throw Error(ErrorKind::ArityMismatch, std::to_string(xs.size()) + " values for "
                                                  + std::to_string(m_k) + " variables");
    }
    Int acc = 0;
    for (const auto& [exps, c] : m_monomials) {
        Int term = c;
        for (std::size_t i = 0; i < m_k; ++i) {
            term = checked::mul(term, checked::pow(xs[i], exps[i]));
        }
        acc = checked::add(acc, term);
    }
    return acc;
}

MultiIntPoly operator+(const MultiIntPoly& p, const MultiIntPoly& q)
{
    MultiIntPoly out = p.widened(std::max(p.k(), q.k()));
    const MultiIntPoly wide = q.widened(out.k());
    for (const auto& [exps, c] : wide.monomials()) {
        out.add_monomial(exps, c);
    }
    return out;
}

}  // namespace polyvdw
