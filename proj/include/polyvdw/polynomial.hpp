#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "polyvdw/checked.hpp"

namespace polyvdw {

/// Dense one-variable integer polynomial; coeffs[i] multiplies n^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    std::span<const Int> coeffs() const noexcept { return m_coeffs; }
    bool is_zero() const noexcept { return m_coeffs.empty(); }
    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(m_coeffs.size()) - 1; }
    Int coeff(std::size_t i) const noexcept { return i < m_coeffs.size() ? m_coeffs[i] : 0; }
    Int constant_term() const noexcept { return coeff(0); }

    Int operator()(Int x) const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    std::vector<Int> m_coeffs;
};

IntPoly operator+(const IntPoly& p, const IntPoly& q);

using Exponents = std::vector<unsigned>;

/// Sparse polynomial in x1..xk: exponent tuple -> nonzero coefficient.
class MultiIntPoly {
public:
    explicit MultiIntPoly(std::size_t k) : m_k(k) {}

    // Accumulates; a coefficient that cancels to zero is erased.
    void add_monomial(const Exponents& exponents, Int coeff);

    std::size_t k() const noexcept { return m_k; }
    const std::map<Exponents, Int>& monomials() const noexcept { return m_monomials; }
    bool is_zero() const noexcept { return m_monomials.empty(); }
    bool has_constant_term() const;

    // Same polynomial viewed with more variables.
    MultiIntPoly widened(std::size_t k) const;

    Int operator()(std::span<const Int> xs) const;

    friend bool operator==(const MultiIntPoly&, const MultiIntPoly&) = default;

private:
    std::size_t m_k;
    std::map<Exponents, Int> m_monomials;
};

MultiIntPoly operator+(const MultiIntPoly& p, const MultiIntPoly& q);

}  // namespace polyvdw
