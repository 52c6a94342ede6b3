#pragma once

#include <span>
#include <string>
#include <vector>

#include "polyvdw/term.hpp"

namespace polyvdw {

/// Element of the one-variable symbolic polynomial space: a nonempty,
/// pairwise irreducible set of terms sharing one cap. The term list is kept
/// sorted by (length, head), which is the canonical form; equality of two
/// polynomials is equality of their term sets and hence entrywise equality
/// of the sorted lists.
class SymPoly {
public:
    /// Sorts the input. Throws EmptyTerms, MixedCaps, or NotIrreducible
    /// naming the first compatible pair found.
    static SymPoly make(std::vector<Term> terms);

    static SymPoly single(Term term);

    std::span<const Term> terms() const noexcept { return m_terms; }
    std::size_t size() const noexcept { return m_terms.size(); }
    std::size_t cap() const noexcept { return m_terms.front().cap(); }
    std::size_t max_length() const noexcept { return m_terms.back().length(); }

    friend bool operator==(const SymPoly&, const SymPoly&) = default;

private:
    explicit SymPoly(std::vector<Term> sorted) : m_terms(std::move(sorted)) {}

    friend SymPoly add(const SymPoly& x, const SymPoly& y);
    friend SymPoly scale_poly(std::span<const Int> r, const SymPoly& x);

    std::vector<Term> m_terms;
};

// Compatible pairs across the operands fold, every unmatched term is kept,
// result in canonical order. Folds that cancel to all-zero coefficients stay.
SymPoly add(const SymPoly& x, const SymPoly& y);

inline SymPoly operator+(const SymPoly& x, const SymPoly& y) { return add(x, y); }

inline bool equal(const SymPoly& x, const SymPoly& y) { return x == y; }

// True iff no term of x is compatible with a term of any eta.
bool in_ir(const SymPoly& x, std::span<const SymPoly> etas);
bool in_ir(const SymPoly& x, const SymPoly& eta);

// Singleton T{1 + max head; 1}, which lies in the intersection of the Ir
// sets of the whole family. Throws EmptyTerms for an empty family.
SymPoly fresh_ir_element(std::span<const SymPoly> etas);

SymPoly scale_poly(std::span<const Int> r, const SymPoly& x);

// Scaling by the diagonal vector (s, ..., s).
SymPoly scale_diagonal(Int s, const SymPoly& x);

// Terms joined by " + " in canonical order.
std::string to_string(const SymPoly& x);

}  // namespace polyvdw
