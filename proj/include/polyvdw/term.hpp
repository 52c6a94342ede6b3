#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "polyvdw/checked.hpp"

namespace polyvdw {

// Identity of a term for compatibility purposes: two terms fold under
// addition exactly when their keys agree. Ordered by length, then head.
struct TermKey {
    std::size_t length;
    Int iota;

    friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// One-variable symbolic string (a0 1_0)(a1 1_1)...(al 1_l) in the space of
/// strings of length at most `cap`. `iota` is a0; `coeffs` holds a1..al.
/// Zero inner coefficients are structural and never trimmed.
class Term {
public:
    /// Throws EmptyCoeffs or CapExceeded.
    static Term make(Int iota, std::vector<Int> coeffs, std::size_t cap);

    Int iota() const noexcept { return m_iota; }
    std::span<const Int> coeffs() const noexcept { return m_coeffs; }
    std::size_t length() const noexcept { return m_coeffs.size(); }
    std::size_t cap() const noexcept { return m_cap; }
    TermKey key() const noexcept { return {length(), m_iota}; }

    friend bool operator==(const Term&, const Term&) = default;

private:
    Term(Int iota, std::vector<Int> coeffs, std::size_t cap)
        : m_iota(iota), m_coeffs(std::move(coeffs)), m_cap(cap)
    {
    }

    Int m_iota;
    std::vector<Int> m_coeffs;
    std::size_t m_cap;
};

// Same length and same head.
bool compatible(const Term& t, const Term& u) noexcept;

// Lexicographic on (length, head). Compatible terms are mutually non-less,
// so this is only a strict total order on pairwise irreducible sets.
bool order_less(const Term& t, const Term& u) noexcept;

// Slotwise sum of inner coefficients, head kept. Throws NotCompatible,
// MixedCaps or Overflow.
Term add_compatible(const Term& t, const Term& u);

// r . t: inner coefficient j is multiplied by r[j]; the head is untouched.
// Only the first length(t) entries of r are read.
Term scale_term(std::span<const Int> r, const Term& t);

// `T{iota;c1,...,cl}`
std::string to_string(const Term& t);

}  // namespace polyvdw
