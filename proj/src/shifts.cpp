#include "polyvdw/shifts.hpp"

#include <algorithm>

namespace polyvdw {

IndexSet IndexSet::make(std::vector<Int> elements)
{
    if (elements.empty()) {
        throw Error(ErrorKind::InvalidIndexSet, "index sets are nonempty");
    }
    std::sort(elements.begin(), elements.end());
    if (elements.front() < 1) {
        throw Error(ErrorKind::InvalidIndexSet,
                    "index " + std::to_string(elements.front()) + " is not a positive integer");
    }
    if (auto dup = std::adjacent_find(elements.begin(), elements.end()); dup != elements.end()) {
        throw Error(ErrorKind::InvalidIndexSet, "index " + std::to_string(*dup) + " repeated");
    }
    return IndexSet(std::move(elements));
}

bool IndexSet::disjoint(const IndexSet& other) const
{
    auto a = m_elements.begin();
    auto b = other.m_elements.begin();
    while (a != m_elements.end() && b != other.m_elements.end()) {
        if (*a == *b) {
            return false;
        }
        *a < *b ? ++a : ++b;
    }
    return true;
}

IndexSet IndexSet::united(const IndexSet& other) const
{
    std::vector<Int> out;
    std::set_union(m_elements.begin(), m_elements.end(), other.m_elements.begin(),
                   other.m_elements.end(), std::back_inserter(out));
    return IndexSet(std::move(out));
}

std::string to_string(const IndexSet& set)
{
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(set.elements()[i]);
    }
    return out + "}";
}

bool SequenceSpec::defined_up_to(Int n) const noexcept
{
    return m_kind != Kind::Table || n <= static_cast<Int>(m_values.size());
}

Int SequenceSpec::value(Int t) const
{
    if (t < 1) {
        throw Error(ErrorKind::UndefinedIndex, "sequences are indexed from 1, got " + std::to_string(t));
    }
    switch (m_kind) {
    case Kind::Identity:
        return t;
    case Kind::Constant:
        return m_parameter;
    case Kind::Power:
        return checked::pow(t, static_cast<unsigned>(m_parameter));
    case Kind::Table:
        if (t > static_cast<Int>(m_values.size())) {
            throw Error(ErrorKind::UndefinedIndex, "table of length " + std::to_string(m_values.size())
                                                       + " has no entry " + std::to_string(t));
        }
        return m_values[static_cast<std::size_t>(t - 1)];
    }
    return 0;
}

std::string to_string(const SequenceSpec& f)
{
    switch (f.kind()) {
    case SequenceSpec::Kind::Identity:
        return "id";
    case SequenceSpec::Kind::Constant:
        return "const:" + std::to_string(f.parameter());
    case SequenceSpec::Kind::Power:
        return "pow:" + std::to_string(f.parameter());
    case SequenceSpec::Kind::Table: {
        std::string out = "table:";
        for (std::size_t i = 0; i < f.values().size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(f.values()[i]);
        }
        return out;
    }
    }
    return {};
}

Int ip_sum(const SequenceSpec& f, const IndexSet& set)
{
    Int sum = 0;
    for (Int t : set.elements()) {
        sum = checked::add(sum, f.value(t));
    }
    return sum;
}

SymPoly shift(const SymPoly& x, const SymPoly& eta, const SequenceSpec& f, const IndexSet& set)
{
    if (!in_ir(x, eta)) {
        throw Error(ErrorKind::NotInIr, to_string(x) + " shares a term key with " + to_string(eta));
    }
    return add(x, scale_diagonal(ip_sum(f, set), eta));
}

MultiSymPoly shift_multi(const MultiSymPoly& x, const MultiSymPoly& eta,
                         std::span<const SequenceSpec> fs, std::span<const IndexSet> sets)
{
    const MultiShape shape = eta.shape();
    if (fs.size() != shape.k || sets.size() != shape.k) {
        throw Error(ErrorKind::ArityMismatch, std::to_string(fs.size()) + " sequences and "
                                                  + std::to_string(sets.size()) + " index sets for k="
                                                  + std::to_string(shape.k));
    }
    if (!mv_in_ir(x, eta)) {
        throw Error(ErrorKind::NotInIr, to_string(x) + " shares a term key with " + to_string(eta));
    }
    std::vector<std::vector<Int>> rs;
    rs.reserve(shape.k);
    for (std::size_t i = 0; i < shape.k; ++i) {
        rs.emplace_back(shape.m, ip_sum(fs[i], sets[i]));
    }
    return mv_add(x, mv_scale(rs, eta));
}

}  // namespace polyvdw
