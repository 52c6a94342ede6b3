#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "polyvdw/checked.hpp"

namespace polyvdw {

// Shape of the multivariable term space: k variables, each with index sets
// {i1, ..., ij} for j <= m. Only prefix index sets occur, so a block is fully
// described by its size and its coefficient list.
struct MultiShape {
    std::size_t k;
    std::size_t m;

    friend bool operator==(const MultiShape&, const MultiShape&) = default;
};

struct MultiTermKey {
    std::vector<std::size_t> signature;
    Int iota;

    friend auto operator<=>(const MultiTermKey&, const MultiTermKey&) = default;
};

/// Multiterm (a0 1_0)(a1 . 1_{A_1 j1}) ... (ak . 1_{A_k jk}). Block i holds
/// j_i coefficients; an empty block stands for 1_empty and carries none.
class MultiTerm {
public:
    /// Throws InvalidShape when k < 2, m < 1, the block count differs from k
    /// or a block is longer than m.
    static MultiTerm make(Int iota, std::vector<std::vector<Int>> blocks, MultiShape shape);

    Int iota() const noexcept { return m_iota; }
    const std::vector<std::vector<Int>>& blocks() const noexcept { return m_blocks; }
    MultiShape shape() const noexcept { return m_shape; }
    std::vector<std::size_t> signature() const;
    MultiTermKey key() const { return {signature(), m_iota}; }

    friend bool operator==(const MultiTerm&, const MultiTerm&) = default;

private:
    MultiTerm(Int iota, std::vector<std::vector<Int>> blocks, MultiShape shape)
        : m_iota(iota), m_blocks(std::move(blocks)), m_shape(shape)
    {
    }

    Int m_iota;
    std::vector<std::vector<Int>> m_blocks;
    MultiShape m_shape;
};

bool mt_compatible(const MultiTerm& t, const MultiTerm& u);
bool mt_order_less(const MultiTerm& t, const MultiTerm& u);
MultiTerm mt_add_compatible(const MultiTerm& t, const MultiTerm& u);

// `M{iota; [c11,...]; [c21,...]}`
std::string to_string(const MultiTerm& t);

/// Canonical representative of a class of the permutation quotient: the
/// pairwise irreducible term set sorted by (signature, head).
class MultiSymPoly {
public:
    static MultiSymPoly make(std::vector<MultiTerm> terms);
    static MultiSymPoly single(MultiTerm term);

    std::span<const MultiTerm> terms() const noexcept { return m_terms; }
    std::size_t size() const noexcept { return m_terms.size(); }
    MultiShape shape() const noexcept { return m_terms.front().shape(); }

    friend bool operator==(const MultiSymPoly&, const MultiSymPoly&) = default;

private:
    explicit MultiSymPoly(std::vector<MultiTerm> sorted) : m_terms(std::move(sorted)) {}

    friend MultiSymPoly mv_add(const MultiSymPoly& x, const MultiSymPoly& y);
    friend MultiSymPoly mv_scale(std::span<const std::vector<Int>> rs, const MultiSymPoly& x);

    std::vector<MultiTerm> m_terms;
};

MultiSymPoly mv_add(const MultiSymPoly& x, const MultiSymPoly& y);
inline MultiSymPoly operator+(const MultiSymPoly& x, const MultiSymPoly& y) { return mv_add(x, y); }

// Block i of every term is scaled entrywise by rs[i].
MultiSymPoly mv_scale(std::span<const std::vector<Int>> rs, const MultiSymPoly& x);

bool mv_in_ir(const MultiSymPoly& x, std::span<const MultiSymPoly> etas);
bool mv_in_ir(const MultiSymPoly& x, const MultiSymPoly& eta);

// Singleton with head 1 + max head and unit coefficient in the first block.
MultiSymPoly mv_fresh_ir_element(std::span<const MultiSymPoly> etas);

std::string to_string(const MultiSymPoly& x);

}  // namespace polyvdw
