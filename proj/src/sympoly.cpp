#include "polyvdw/sympoly.hpp"

#include <algorithm>

namespace polyvdw {

SymPoly SymPoly::make(std::vector<Term> terms)
{
    if (terms.empty()) {
        throw Error(ErrorKind::EmptyTerms, "a symbolic polynomial needs at least one term");
    }
    const std::size_t cap = terms.front().cap();
    for (const Term& t : terms) {
        if (t.cap() != cap) {
            throw Error(ErrorKind::MixedCaps, "terms with caps " + std::to_string(cap) + " and "
                                                  + std::to_string(t.cap()));
        }
    }
    std::stable_sort(terms.begin(), terms.end(), order_less);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (compatible(terms[i - 1], terms[i])) {
            throw Error(ErrorKind::NotIrreducible,
                        to_string(terms[i - 1]) + " and " + to_string(terms[i]) + " are compatible");
        }
    }
    return SymPoly(std::move(terms));
}

SymPoly SymPoly::single(Term term)
{
    std::vector<Term> terms;
    terms.push_back(std::move(term));
    return make(std::move(terms));
}

SymPoly add(const SymPoly& x, const SymPoly& y)
{
    if (x.cap() != y.cap()) {
        throw Error(ErrorKind::MixedCaps, to_string(x) + " and " + to_string(y));
    }
    const auto& xs = x.m_terms;
    const auto& ys = y.m_terms;
    std::vector<Term> out;
    out.reserve(xs.size() + ys.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < xs.size() && j < ys.size()) {
        const TermKey kx = xs[i].key();
        const TermKey ky = ys[j].key();
        if (kx < ky) {
            out.push_back(xs[i++]);
        } else if (ky < kx) {
            out.push_back(ys[j++]);
        } else {
            out.push_back(add_compatible(xs[i++], ys[j++]));
        }
    }
    out.insert(out.end(), xs.begin() + static_cast<std::ptrdiff_t>(i), xs.end());
    out.insert(out.end(), ys.begin() + static_cast<std::ptrdiff_t>(j), ys.end());
    return SymPoly(std::move(out));
}

bool in_ir(const SymPoly& x, std::span<const SymPoly> etas)
{
    for (const SymPoly& eta : etas) {
        if (eta.cap() != x.cap()) {
            throw Error(ErrorKind::MixedCaps, to_string(x) + " and " + to_string(eta));
        }
        // Both lists are sorted by key, so a merge walk finds any collision.
        auto xs = x.terms();
        auto es = eta.terms();
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < xs.size() && j < es.size()) {
            const TermKey kx = xs[i].key();
            const TermKey ke = es[j].key();
            if (kx == ke) {
                return false;
            }
            if (kx < ke) {
                ++i;
            } else {
                ++j;
            }
        }
    }
    return true;
}

bool in_ir(const SymPoly& x, const SymPoly& eta)
{
    return in_ir(x, std::span<const SymPoly>(&eta, 1));
}

SymPoly fresh_ir_element(std::span<const SymPoly> etas)
{
    if (etas.empty()) {
        throw Error(ErrorKind::EmptyTerms, "fresh_ir_element needs a nonempty family");
    }
    const std::size_t cap = etas.front().cap();
    Int max_iota = etas.front().terms().front().iota();
    for (const SymPoly& eta : etas) {
        if (eta.cap() != cap) {
            throw Error(ErrorKind::MixedCaps, "family with caps " + std::to_string(cap) + " and "
                                                  + std::to_string(eta.cap()));
        }
        for (const Term& t : eta.terms()) {
            max_iota = std::max(max_iota, t.iota());
        }
    }
    return SymPoly::single(Term::make(checked::add(max_iota, 1), {1}, cap));
}

SymPoly scale_poly(std::span<const Int> r, const SymPoly& x)
{
    std::vector<Term> scaled;
    scaled.reserve(x.size());
    for (const Term& t : x.terms()) {
        scaled.push_back(scale_term(r, t));
    }
    // Scaling leaves every key alone, so the sorted order survives.
    return SymPoly(std::move(scaled));
}

SymPoly scale_diagonal(Int s, const SymPoly& x)
{
    const std::vector<Int> r(x.max_length(), s);
    return scale_poly(r, x);
}

std::string to_string(const SymPoly& x)
{
    std::string out;
    for (const Term& t : x.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += to_string(t);
    }
    return out;
}

}  // namespace polyvdw
