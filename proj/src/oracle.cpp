#include "polyvdw/oracle.hpp"

#include <algorithm>
#include <tuple>

namespace polyvdw {

namespace {

Int naive_pow(Int x, unsigned e)
{
    Int out = 1;
    for (unsigned i = 0; i < e; ++i) {
        out = checked::mul(out, x);
    }
    return out;
}

Int naive_eval(const IntPoly& p, Int x)
{
    Int out = 0;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        out = checked::add(out, checked::mul(p.coeffs()[i], naive_pow(x, static_cast<unsigned>(i))));
    }
    return out;
}

Int naive_eval(const MultiIntPoly& p, const std::vector<Int>& xs)
{
    Int out = 0;
    for (const auto& [exps, c] : p.monomials()) {
        Int term = c;
        for (std::size_t v = 0; v < exps.size(); ++v) {
            term = checked::mul(term, v < xs.size() ? naive_pow(xs[v], exps[v]) : (exps[v] == 0 ? 1 : 0));
        }
        out = checked::add(out, term);
    }
    return out;
}

// 0, 1, -1, 2, -2, ... built by sorting on (|v|, v < 0).
std::vector<Int> signed_range(Int bound)
{
    std::vector<Int> out;
    for (Int v = -bound; v <= bound; ++v) {
        out.push_back(v);
    }
    std::sort(out.begin(), out.end(), [](Int x, Int y) {
        return std::tuple(x < 0 ? -x : x, x < 0) < std::tuple(y < 0 ? -y : y, y < 0);
    });
    return out;
}

// Subsets of [1, n] via bitmasks, then sorted by (max, size, lexicographic).
std::vector<std::vector<Int>> subsets(Int n, std::size_t max_size)
{
    if (n > 20) {
        throw Error(ErrorKind::BoundsTooLarge, "oracle enumerates subsets of at most [1, 20]");
    }
    std::vector<std::vector<Int>> out;
    for (std::uint32_t mask = 1; n > 0 && mask < (1u << n); ++mask) {
        std::vector<Int> s;
        for (Int t = 1; t <= n; ++t) {
            if (mask & (1u << (t - 1))) {
                s.push_back(t);
            }
        }
        if (s.size() <= max_size) {
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.back() != y.back()) {
            return x.back() < y.back();
        }
        if (x.size() != y.size()) {
            return x.size() < y.size();
        }
        return x < y;
    });
    return out;
}

Int sum_over(const SequenceSpec& f, const std::vector<Int>& set)
{
    Int s = 0;
    for (Int t : set) {
        s = checked::add(s, f.value(t));
    }
    return s;
}

void check_budget(std::uint64_t params, Int a_bound)
{
    const auto a_count = static_cast<std::uint64_t>(2 * a_bound + 1);
    if (params != 0 && a_count > kOracleCandidateCap / params) {
        throw Error(ErrorKind::BoundsTooLarge, "oracle limited to " + std::to_string(kOracleCandidateCap)
                                                   + " candidates");
    }
}

template <typename Poly>
bool polys_differ(const Poly& p, const Poly& q)
{
    return !(p == q);
}

// Appends the witnesses for one parameter, given p_i(parameter) in `pv`.
template <typename Poly, typename MakeParam>
void scan_a(const std::vector<Poly>& polys, const std::vector<Int>& pv, const Coloring& coloring,
            const std::vector<Int>& a_values, bool distinct, MakeParam make_param, std::vector<Witness>& out)
{
    if (distinct) {
        for (std::size_t i = 0; i < polys.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (pv[i] == pv[j] && polys_differ(polys[i], polys[j])) {
                    return;
                }
            }
        }
    }
    for (Int a : a_values) {
        std::vector<Int> values;
        std::vector<int> colors;
        for (Int v : pv) {
            values.push_back(checked::add(a, v));
            const auto c = coloring.color(values.back());
            if (!c) {
                break;
            }
            colors.push_back(*c);
        }
        if (colors.size() != pv.size()) {
            continue;
        }
        if (std::count(colors.begin(), colors.end(), colors.front()) == static_cast<long>(colors.size())) {
            out.push_back(Witness{a, make_param(), values, colors.front()});
        }
    }
}

}  // namespace

std::vector<Witness> exhaustive_poly_vdw(std::span<const IntPoly> polys_in, const Coloring& coloring,
                                         Int a_bound, Int r_bound, bool distinct, bool positive_r_only)
{
    const std::vector<IntPoly> polys(polys_in.begin(), polys_in.end());
    std::vector<Int> rs = signed_range(r_bound);
    if (positive_r_only) {
        std::erase_if(rs, [](Int r) { return r < 1; });
    }
    check_budget(rs.size(), a_bound);
    const std::vector<Int> as = signed_range(a_bound);
    std::vector<Witness> out;
    for (Int r : rs) {
        std::vector<Int> pv;
        for (const IntPoly& p : polys) {
            pv.push_back(naive_eval(p, r));
        }
        scan_a(polys, pv, coloring, as, distinct, [r] { return r; }, out);
    }
    return out;
}

std::vector<Witness> exhaustive_ip_vdw(std::span<const IntPoly> polys_in, const SequenceSpec& f,
                                       const Coloring& coloring, Int a_bound, Int max_index,
                                       std::size_t max_size, bool distinct)
{
    const std::vector<IntPoly> polys(polys_in.begin(), polys_in.end());
    const auto sets = subsets(max_index, max_size);
    check_budget(sets.size(), a_bound);
    const std::vector<Int> as = signed_range(a_bound);
    std::vector<Witness> out;
    for (const auto& set : sets) {
        const Int s = sum_over(f, set);
        std::vector<Int> pv;
        for (const IntPoly& p : polys) {
            pv.push_back(naive_eval(p, s));
        }
        scan_a(polys, pv, coloring, as, distinct, [&] { return IpParam{IndexSet::make(set), f, s}; }, out);
    }
    return out;
}

std::vector<Witness> exhaustive_multivar_vdw(std::span<const MultiIntPoly> polys_in,
                                             std::span<const SequenceSpec> fs, const Coloring& coloring,
                                             Int a_bound, std::span<const Int> max_index,
                                             std::span<const std::size_t> max_size, bool distinct)
{
    const std::size_t k = fs.size();
    if (max_index.size() != k || max_size.size() != k) {
        throw Error(ErrorKind::ArityMismatch, "one bound per variable required");
    }
    std::vector<MultiIntPoly> polys;
    for (const MultiIntPoly& p : polys_in) {
        polys.push_back(p.widened(k));
    }
    std::vector<std::vector<std::vector<Int>>> sets(k);
    std::uint64_t total = 1;
    for (std::size_t v = 0; v < k; ++v) {
        sets[v] = subsets(max_index[v], max_size[v]);
        total *= sets[v].size();
    }
    check_budget(total, a_bound);
    const std::vector<Int> as = signed_range(a_bound);
    std::vector<Witness> out;
    if (total == 0) {
        return out;
    }
    // Odometer over the tuple, first digit fastest.
    std::vector<std::size_t> digit(k, 0);
    while (true) {
        MultiIpParam param;
        std::vector<Int> point;
        for (std::size_t v = 0; v < k; ++v) {
            const auto& set = sets[v][digit[v]];
            param.sets.push_back(IndexSet::make(set));
            param.fs.push_back(fs[v]);
            param.ip_sums.push_back(sum_over(fs[v], set));
            point.push_back(param.ip_sums.back());
        }
        std::vector<Int> pv;
        for (const MultiIntPoly& p : polys) {
            pv.push_back(naive_eval(p, point));
        }
        scan_a(polys, pv, coloring, as, distinct, [&] { return param; }, out);
        std::size_t v = 0;
        while (v < k && ++digit[v] == sets[v].size()) {
            digit[v] = 0;
            ++v;
        }
        if (v == k) {
            break;
        }
    }
    return out;
}

}  // namespace polyvdw
