#include "polyvdw/term.hpp"

namespace polyvdw {

Term Term::make(Int iota, std::vector<Int> coeffs, std::size_t cap)
{
    if (coeffs.empty()) {
        throw Error(ErrorKind::EmptyCoeffs, "a term needs at least one inner coefficient");
    }
    if (coeffs.size() > cap) {
        throw Error(ErrorKind::CapExceeded, "term length " + std::to_string(coeffs.size())
                                                + " exceeds cap " + std::to_string(cap));
    }
    return Term(iota, std::move(coeffs), cap);
}

bool compatible(const Term& t, const Term& u) noexcept
{
    return t.length() == u.length() && t.iota() == u.iota();
}

bool order_less(const Term& t, const Term& u) noexcept
{
    return t.key() < u.key();
}

Term add_compatible(const Term& t, const Term& u)
{
    if (t.cap() != u.cap()) {
        throw Error(ErrorKind::MixedCaps, to_string(t) + " and " + to_string(u));
    }
    if (!compatible(t, u)) {
        throw Error(ErrorKind::NotCompatible, to_string(t) + " and " + to_string(u));
    }
    std::vector<Int> sum(t.length());
    for (std::size_t j = 0; j < sum.size(); ++j) {
        sum[j] = checked::add(t.coeffs()[j], u.coeffs()[j]);
    }
    return Term::make(t.iota(), std::move(sum), t.cap());
}

Term scale_term(std::span<const Int> r, const Term& t)
{
    if (r.size() < t.length()) {
        throw Error(ErrorKind::VectorTooShort, "scaling vector of length " + std::to_string(r.size())
                                                   + " for term of length "
                                                   + std::to_string(t.length()));
    }
    std::vector<Int> scaled(t.length());
    for (std::size_t j = 0; j < scaled.size(); ++j) {
        scaled[j] = checked::mul(r[j], t.coeffs()[j]);
    }
    return Term::make(t.iota(), std::move(scaled), t.cap());
}

std::string to_string(const Term& t)
{
    std::string out = "T{" + std::to_string(t.iota()) + ";";
    for (std::size_t j = 0; j < t.length(); ++j) {
        if (j > 0) {
            out += ',';
        }
        out += std::to_string(t.coeffs()[j]);
    }
    out += '}';
    return out;
}

}  // namespace polyvdw
