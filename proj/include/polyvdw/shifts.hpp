#pragma once

#include <span>
#include <string>
#include <vector>

#include "polyvdw/multivar.hpp"
#include "polyvdw/sympoly.hpp"

namespace polyvdw {

/// Finite nonempty set of positive integers, kept ascending.
class IndexSet {
public:
    /// Throws InvalidIndexSet on an empty input, a nonpositive entry or a
    /// repeated entry.
    static IndexSet make(std::vector<Int> elements);

    std::span<const Int> elements() const noexcept { return m_elements; }
    std::size_t size() const noexcept { return m_elements.size(); }
    Int max() const noexcept { return m_elements.back(); }

    bool disjoint(const IndexSet& other) const;
    IndexSet united(const IndexSet& other) const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    explicit IndexSet(std::vector<Int> sorted) : m_elements(std::move(sorted)) {}

    std::vector<Int> m_elements;
};

// `{1,3,4}`
std::string to_string(const IndexSet& set);

/// Sequence f: N -> Z, either a closed form or a finite table over [1, N].
class SequenceSpec {
public:
    enum class Kind { Identity, Constant, Power, Table };

    static SequenceSpec identity() { return SequenceSpec(Kind::Identity, 0, {}); }
    static SequenceSpec constant(Int c) { return SequenceSpec(Kind::Constant, c, {}); }
    static SequenceSpec power(unsigned e) { return SequenceSpec(Kind::Power, e, {}); }
    static SequenceSpec table(std::vector<Int> values)
    {
        return SequenceSpec(Kind::Table, 0, std::move(values));
    }

    Kind kind() const noexcept { return m_kind; }
    Int parameter() const noexcept { return m_parameter; }
    std::span<const Int> values() const noexcept { return m_values; }

    // True when value(t) is defined for every t in [1, n].
    bool defined_up_to(Int n) const noexcept;

    // Throws UndefinedIndex outside the domain, Overflow for huge powers.
    Int value(Int t) const;

    friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

private:
    SequenceSpec(Kind kind, Int parameter, std::vector<Int> values)
        : m_kind(kind), m_parameter(parameter), m_values(std::move(values))
    {
    }

    Kind m_kind;
    Int m_parameter;
    std::vector<Int> m_values;
};

// `id`, `const:c`, `pow:e` or `table:v1,v2,...`
std::string to_string(const SequenceSpec& f);

Int ip_sum(const SequenceSpec& f, const IndexSet& set);

// x + (s, ..., s) . eta with s the IP sum of f over F, computed in the
// collapsed single-scaling form. Requires x in Ir({eta}); throws NotInIr.
SymPoly shift(const SymPoly& x, const SymPoly& eta, const SequenceSpec& f, const IndexSet& set);

// Multivariable analogue: block i of every eta term is scaled diagonally by
// the IP sum of fs[i] over sets[i]. Throws ArityMismatch when the list
// lengths differ from k.
MultiSymPoly shift_multi(const MultiSymPoly& x, const MultiSymPoly& eta,
                         std::span<const SequenceSpec> fs, std::span<const IndexSet> sets);

}  // namespace polyvdw
