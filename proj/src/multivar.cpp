#include "polyvdw/multivar.hpp"

#include <algorithm>

namespace polyvdw {

namespace {

std::string shape_text(MultiShape s)
{
    return "(k=" + std::to_string(s.k) + ", m=" + std::to_string(s.m) + ")";
}

// Same ordering as MultiTermKey without materializing the signature.
std::strong_ordering compare_keys(const MultiTerm& t, const MultiTerm& u)
{
    const auto& tb = t.blocks();
    const auto& ub = u.blocks();
    const std::size_t n = std::min(tb.size(), ub.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = tb[i].size() <=> ub[i].size(); c != 0) {
            return c;
        }
    }
    if (auto c = tb.size() <=> ub.size(); c != 0) {
        return c;
    }
    return t.iota() <=> u.iota();
}

void require_same_shape(MultiShape a, MultiShape b)
{
    if (a != b) {
        throw Error(ErrorKind::MixedCaps, "shapes " + shape_text(a) + " and " + shape_text(b));
    }
}

}  // namespace

MultiTerm MultiTerm::make(Int iota, std::vector<std::vector<Int>> blocks, MultiShape shape)
{
    if (shape.k < 2 || shape.m < 1) {
        throw Error(ErrorKind::InvalidShape, "need k >= 2 and m >= 1, got " + shape_text(shape));
    }
    if (blocks.size() != shape.k) {
        throw Error(ErrorKind::InvalidShape, std::to_string(blocks.size()) + " blocks for "
                                                 + shape_text(shape));
    }
    for (const auto& block : blocks) {
        if (block.size() > shape.m) {
            throw Error(ErrorKind::InvalidShape, "block of size " + std::to_string(block.size())
                                                     + " exceeds m in " + shape_text(shape));
        }
    }
    return MultiTerm(iota, std::move(blocks), shape);
}

std::vector<std::size_t> MultiTerm::signature() const
{
    std::vector<std::size_t> sig;
    sig.reserve(m_blocks.size());
    for (const auto& block : m_blocks) {
        sig.push_back(block.size());
    }
    return sig;
}

bool mt_compatible(const MultiTerm& t, const MultiTerm& u)
{
    if (t.iota() != u.iota() || t.blocks().size() != u.blocks().size()) {
        return false;
    }
    for (std::size_t i = 0; i < t.blocks().size(); ++i) {
        if (t.blocks()[i].size() != u.blocks()[i].size()) {
            return false;
        }
    }
    return true;
}

bool mt_order_less(const MultiTerm& t, const MultiTerm& u)
{
    return compare_keys(t, u) < 0;
}

MultiTerm mt_add_compatible(const MultiTerm& t, const MultiTerm& u)
{
    require_same_shape(t.shape(), u.shape());
    if (!mt_compatible(t, u)) {
        throw Error(ErrorKind::NotCompatible, to_string(t) + " and " + to_string(u));
    }
    std::vector<std::vector<Int>> blocks = t.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = 0; j < blocks[i].size(); ++j) {
            blocks[i][j] = checked::add(blocks[i][j], u.blocks()[i][j]);
        }
    }
    return MultiTerm::make(t.iota(), std::move(blocks), t.shape());
}

std::string to_string(const MultiTerm& t)
{
    std::string out = "M{" + std::to_string(t.iota());
    for (const auto& block : t.blocks()) {
        out += "; [";
        for (std::size_t j = 0; j < block.size(); ++j) {
            if (j > 0) {
                out += ',';
            }
            out += std::to_string(block[j]);
        }
        out += ']';
    }
    out += '}';
    return out;
}

MultiSymPoly MultiSymPoly::make(std::vector<MultiTerm> terms)
{
    if (terms.empty()) {
        throw Error(ErrorKind::EmptyTerms, "a multivariable polynomial needs at least one term");
    }
    for (const MultiTerm& t : terms) {
        require_same_shape(terms.front().shape(), t.shape());
    }
    std::stable_sort(terms.begin(), terms.end(), mt_order_less);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (mt_compatible(terms[i - 1], terms[i])) {
            throw Error(ErrorKind::NotIrreducible,
                        to_string(terms[i - 1]) + " and " + to_string(terms[i]) + " are compatible");
        }
    }
    return MultiSymPoly(std::move(terms));
}

MultiSymPoly MultiSymPoly::single(MultiTerm term)
{
    std::vector<MultiTerm> terms;
    terms.push_back(std::move(term));
    return make(std::move(terms));
}

MultiSymPoly mv_add(const MultiSymPoly& x, const MultiSymPoly& y)
{
    require_same_shape(x.shape(), y.shape());
    const auto& xs = x.m_terms;
    const auto& ys = y.m_terms;
    std::vector<MultiTerm> out;
    out.reserve(xs.size() + ys.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < xs.size() && j < ys.size()) {
        const auto order = compare_keys(xs[i], ys[j]);
        if (order < 0) {
            out.push_back(xs[i++]);
        } else if (order > 0) {
            out.push_back(ys[j++]);
        } else {
            out.push_back(mt_add_compatible(xs[i++], ys[j++]));
        }
    }
    out.insert(out.end(), xs.begin() + static_cast<std::ptrdiff_t>(i), xs.end());
    out.insert(out.end(), ys.begin() + static_cast<std::ptrdiff_t>(j), ys.end());
    return MultiSymPoly(std::move(out));
}

MultiSymPoly mv_scale(std::span<const std::vector<Int>> rs, const MultiSymPoly& x)
{
    const MultiShape shape = x.shape();
    if (rs.size() != shape.k) {
        throw Error(ErrorKind::ArityMismatch, std::to_string(rs.size())
                                                  + " scaling vectors for k=" + std::to_string(shape.k));
    }
    std::vector<MultiTerm> out;
    out.reserve(x.size());
    for (const MultiTerm& t : x.terms()) {
        std::vector<std::vector<Int>> blocks = t.blocks();
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (rs[i].size() < blocks[i].size()) {
                throw Error(ErrorKind::VectorTooShort, "scaling vector " + std::to_string(i + 1)
                                                           + " is shorter than its block in "
                                                           + to_string(t));
            }
            for (std::size_t j = 0; j < blocks[i].size(); ++j) {
                blocks[i][j] = checked::mul(rs[i][j], blocks[i][j]);
            }
        }
        out.push_back(MultiTerm::make(t.iota(), std::move(blocks), shape));
    }
    return MultiSymPoly(std::move(out));
}

bool mv_in_ir(const MultiSymPoly& x, std::span<const MultiSymPoly> etas)
{
    for (const MultiSymPoly& eta : etas) {
        require_same_shape(x.shape(), eta.shape());
        for (const MultiTerm& t : x.terms()) {
            for (const MultiTerm& u : eta.terms()) {
                if (mt_compatible(t, u)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool mv_in_ir(const MultiSymPoly& x, const MultiSymPoly& eta)
{
    return mv_in_ir(x, std::span<const MultiSymPoly>(&eta, 1));
}

MultiSymPoly mv_fresh_ir_element(std::span<const MultiSymPoly> etas)
{
    if (etas.empty()) {
        throw Error(ErrorKind::EmptyTerms, "mv_fresh_ir_element needs a nonempty family");
    }
    const MultiShape shape = etas.front().shape();
    Int max_iota = etas.front().terms().front().iota();
    for (const MultiSymPoly& eta : etas) {
        require_same_shape(shape, eta.shape());
        for (const MultiTerm& t : eta.terms()) {
            max_iota = std::max(max_iota, t.iota());
        }
    }
    std::vector<std::vector<Int>> blocks(shape.k);
    blocks[0] = {1};
    return MultiSymPoly::single(MultiTerm::make(checked::add(max_iota, 1), std::move(blocks), shape));
}

std::string to_string(const MultiSymPoly& x)
{
    std::string out;
    for (const MultiTerm& t : x.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += to_string(t);
    }
    return out;
}

}  // namespace polyvdw
