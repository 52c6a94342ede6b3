#include "polyvdw/vdw_search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <limits>
#include <thread>

#include "polyvdw/evaluation.hpp"

namespace polyvdw {

std::vector<Int> signed_scan_order(Int bound)
{
    if (bound < 0) {
        throw Error(ErrorKind::InvalidRange, "bound must be nonnegative, got " + std::to_string(bound));
    }
    std::vector<Int> order{0};
    for (Int v = 1; v <= bound; ++v) {
        order.push_back(v);
        order.push_back(-v);
    }
    return order;
}

std::vector<IndexSet> ordered_index_sets(Int max_index, std::size_t max_size)
{
    std::vector<IndexSet> out;
    // For each maximum element m, the other members are a subset of
    // [1, m-1]; combinations of a fixed size come out lexicographically.
    for (Int m = 1; m <= max_index; ++m) {
        const auto below = static_cast<std::size_t>(m - 1);
        for (std::size_t size = 1; size <= max_size && size <= below + 1; ++size) {
            const std::size_t pick = size - 1;
            std::vector<Int> comb(pick);
            for (std::size_t i = 0; i < pick; ++i) {
                comb[i] = static_cast<Int>(i + 1);
            }
            while (true) {
                std::vector<Int> elements = comb;
                elements.push_back(m);
                out.push_back(IndexSet::make(std::move(elements)));
                // Next combination of `pick` elements from [1, below].
                std::size_t i = pick;
                while (i > 0 && comb[i - 1] == static_cast<Int>(below - (pick - i))) {
                    --i;
                }
                if (i == 0) {
                    break;
                }
                ++comb[i - 1];
                for (std::size_t j = i; j < pick; ++j) {
                    comb[j] = comb[j - 1] + 1;
                }
            }
        }
    }
    return out;
}

namespace {

struct Hit {
    std::size_t param = 0;
    Int a = 0;
    std::vector<Int> values;
    int color = 0;
};

struct ScanSpace {
    std::size_t param_count = 0;
    // p_i evaluated at parameter number `index`.
    std::function<std::vector<Int>(std::size_t index)> param_values;
    std::vector<Int> a_order;
    // Index pairs of polynomials that differ and so must take different values.
    std::vector<std::pair<std::size_t, std::size_t>> distinct_pairs;
    std::optional<std::pair<Int, Int>> value_window;
};

struct BlockOutcome {
    std::optional<Hit> hit;
    std::uint64_t scanned = 0;
    bool any_in_window = false;
    std::exception_ptr error;
};

template <typename Poly>
std::vector<std::pair<std::size_t, std::size_t>> differing_pairs(std::span<const Poly> polys)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            if (!(polys[i] == polys[j])) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

void scan_block(const ScanSpace& space, const Coloring& coloring, bool distinct, std::size_t begin,
                std::size_t end, std::size_t block, const std::atomic<std::size_t>& best_block,
                BlockOutcome& outcome)
{
    std::vector<Int> values;
    for (std::size_t p = begin; p < end; ++p) {
        if (best_block.load(std::memory_order_relaxed) < block) {
            return;
        }
        const std::vector<Int> pv = space.param_values(p);
        bool degenerate = false;
        if (distinct) {
            for (auto [i, j] : space.distinct_pairs) {
                if (pv[i] == pv[j]) {
                    degenerate = true;
                    break;
                }
            }
        }
        // A degenerate parameter cannot hit; it only matters for the window check.
        if (degenerate && outcome.any_in_window) {
            continue;
        }
        for (Int a : space.a_order) {
            ++outcome.scanned;
            values.resize(pv.size());
            std::optional<int> first_color;
            bool in_window = true;
            bool mono = true;
            for (std::size_t i = 0; i < pv.size() && in_window; ++i) {
                values[i] = checked::add(a, pv[i]);
                if (space.value_window
                    && (values[i] < space.value_window->first || values[i] > space.value_window->second)) {
                    in_window = false;
                    break;
                }
                const std::optional<int> c = coloring.color(values[i]);
                if (!c) {
                    in_window = false;
                    break;
                }
                if (!first_color) {
                    first_color = c;
                } else if (*c != *first_color) {
                    mono = false;
                }
            }
            if (!in_window) {
                continue;
            }
            outcome.any_in_window = true;
            if (degenerate) {
                break;
            }
            if (mono) {
                outcome.hit = Hit{p, a, values, first_color.value_or(0)};
                return;
            }
        }
    }
}

struct ScanResult {
    std::optional<Hit> hit;
    std::uint64_t scanned = 0;
};

ScanResult run_scan(const ScanSpace& space, const Coloring& coloring, const SearchOptions& options)
{
    const std::size_t blocks = std::max<std::size_t>(
        1, std::min<std::size_t>(options.threads == 0 ? 1 : options.threads, space.param_count));
    std::vector<BlockOutcome> outcomes(blocks);
    std::atomic<std::size_t> best_block{std::numeric_limits<std::size_t>::max()};
    auto bounds = [&](std::size_t b) {
        return std::pair{space.param_count * b / blocks, space.param_count * (b + 1) / blocks};
    };
    auto work = [&](std::size_t b) {
        try {
            auto [begin, end] = bounds(b);
            scan_block(space, coloring, options.distinct, begin, end, b, best_block, outcomes[b]);
            if (outcomes[b].hit) {
                std::size_t current = best_block.load();
                while (b < current && !best_block.compare_exchange_weak(current, b)) {
                }
            }
        } catch (...) {
            outcomes[b].error = std::current_exception();
        }
    };
    if (blocks == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t b = 0; b < blocks; ++b) {
            pool.emplace_back(work, b);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    ScanResult result;
    bool any_in_window = false;
    for (auto& outcome : outcomes) {
        result.scanned += outcome.scanned;
        any_in_window = any_in_window || outcome.any_in_window;
    }
    // Blocks are contiguous in scan order, so the earliest block with a hit
    // holds the global first hit. Errors in earlier blocks take precedence.
    for (auto& outcome : outcomes) {
        if (outcome.error) {
            std::rethrow_exception(outcome.error);
        }
        if (outcome.hit) {
            result.hit = std::move(outcome.hit);
            return result;
        }
    }
    if (!any_in_window) {
        throw Error(ErrorKind::WindowTooSmall, "no candidate keeps every value inside the coloring window");
    }
    return result;
}

void require_zero_constants(std::span<const IntPoly> polys)
{
    for (const IntPoly& p : polys) {
        if (p.constant_term() != 0) {
            throw Error(ErrorKind::ConstantTermNonzero,
                        "constant term " + std::to_string(p.constant_term()) + " must be 0");
        }
    }
}

std::vector<Int> eval_all(std::span<const IntPoly> polys, Int x)
{
    std::vector<Int> out;
    out.reserve(polys.size());
    for (const IntPoly& p : polys) {
        out.push_back(p(x));
    }
    return out;
}

SearchResult finish(const ScanResult& scan, const std::function<Witness(const Hit&)>& make_witness)
{
    SearchResult result;
    result.candidates_scanned = scan.scanned;
    if (scan.hit) {
        result.witness = make_witness(*scan.hit);
    }
    return result;
}

SearchResult poly_scan(std::span<const IntPoly> polys, const Coloring& coloring, Int a_bound, Int r_bound,
                       const SearchOptions& options, bool positive_r_only,
                       std::optional<std::pair<Int, Int>> value_window)
{
    require_zero_constants(polys);
    if (polys.empty()) {
        throw Error(ErrorKind::InvalidRange, "no polynomials given");
    }
    std::vector<Int> r_order;
    if (positive_r_only) {
        if (r_bound < 1) {
            throw Error(ErrorKind::InvalidRange, "positive r needs r_bound >= 1");
        }
        for (Int r = 1; r <= r_bound; ++r) {
            r_order.push_back(r);
        }
    } else {
        r_order = signed_scan_order(r_bound);
    }
    ScanSpace space;
    space.param_count = r_order.size();
    space.param_values = [&](std::size_t i) { return eval_all(polys, r_order[i]); };
    space.a_order = signed_scan_order(a_bound);
    space.distinct_pairs = differing_pairs(polys);
    space.value_window = value_window;
    const ScanResult scan = run_scan(space, coloring, options);
    return finish(scan, [&](const Hit& h) { return Witness{h.a, r_order[h.param], h.values, h.color}; });
}

}  // namespace

SearchResult find_poly_vdw(std::span<const IntPoly> polys, const Coloring& coloring, Int a_bound,
                           Int r_bound, const SearchOptions& options, bool positive_r_only)
{
    return poly_scan(polys, coloring, a_bound, r_bound, options, positive_r_only, std::nullopt);
}

SearchResult find_ip_vdw(std::span<const IntPoly> polys, const SequenceSpec& f,
                         const Coloring& coloring, Int a_bound, Int max_index, std::size_t max_size,
                         const SearchOptions& options)
{
    require_zero_constants(polys);
    if (polys.empty()) {
        throw Error(ErrorKind::InvalidRange, "no polynomials given");
    }
    if (!f.defined_up_to(max_index)) {
        throw Error(ErrorKind::UndefinedIndex, to_string(f) + " is not defined up to "
                                                   + std::to_string(max_index));
    }
    const std::vector<IndexSet> sets = ordered_index_sets(max_index, max_size);
    std::vector<Int> sums;
    sums.reserve(sets.size());
    for (const IndexSet& s : sets) {
        sums.push_back(ip_sum(f, s));
    }
    ScanSpace space;
    space.param_count = sets.size();
    space.param_values = [&](std::size_t i) { return eval_all(polys, sums[i]); };
    space.a_order = signed_scan_order(a_bound);
    space.distinct_pairs = differing_pairs(polys);
    if (sets.empty()) {
        return {};
    }
    const ScanResult scan = run_scan(space, coloring, options);
    return finish(scan, [&](const Hit& h) {
        return Witness{h.a, IpParam{sets[h.param], f, sums[h.param]}, h.values, h.color};
    });
}

SearchResult find_multivar_vdw(std::span<const MultiIntPoly> polys, std::span<const SequenceSpec> fs,
                               const Coloring& coloring, Int a_bound, std::span<const Int> max_index,
                               std::span<const std::size_t> max_size, const SearchOptions& options)
{
    const std::size_t k = fs.size();
    if (k == 0 || max_index.size() != k || max_size.size() != k) {
        throw Error(ErrorKind::ArityMismatch, "need one sequence, max index and max size per variable");
    }
    if (polys.empty()) {
        throw Error(ErrorKind::InvalidRange, "no polynomials given");
    }
    std::vector<MultiIntPoly> wide;
    for (const MultiIntPoly& p : polys) {
        if (p.k() > k) {
            throw Error(ErrorKind::ArityMismatch, "polynomial in " + std::to_string(p.k())
                                                      + " variables but only " + std::to_string(k)
                                                      + " sequences");
        }
        wide.push_back(p.widened(k));
        if (wide.back().has_constant_term()) {
            throw Error(ErrorKind::ConstantTermPresent, "polynomial has a constant term");
        }
    }
    std::vector<std::vector<IndexSet>> sets(k);
    std::vector<std::vector<Int>> sums(k);
    std::size_t count = 1;
    for (std::size_t v = 0; v < k; ++v) {
        if (!fs[v].defined_up_to(max_index[v])) {
            throw Error(ErrorKind::UndefinedIndex, to_string(fs[v]) + " is not defined up to "
                                                       + std::to_string(max_index[v]));
        }
        sets[v] = ordered_index_sets(max_index[v], max_size[v]);
        for (const IndexSet& s : sets[v]) {
            sums[v].push_back(ip_sum(fs[v], s));
        }
        count *= sets[v].size();
    }
    if (count == 0) {
        return {};
    }
    auto decode = [&](std::size_t index) {
        std::vector<std::size_t> digits(k);
        for (std::size_t v = 0; v < k; ++v) {
            digits[v] = index % sets[v].size();
            index /= sets[v].size();
        }
        return digits;
    };
    ScanSpace space;
    space.param_count = count;
    space.param_values = [&](std::size_t index) {
        const auto digits = decode(index);
        std::vector<Int> point(k);
        for (std::size_t v = 0; v < k; ++v) {
            point[v] = sums[v][digits[v]];
        }
        std::vector<Int> out;
        out.reserve(wide.size());
        for (const MultiIntPoly& p : wide) {
            out.push_back(p(point));
        }
        return out;
    };
    space.a_order = signed_scan_order(a_bound);
    space.distinct_pairs = differing_pairs(std::span<const MultiIntPoly>(wide));
    const ScanResult scan = run_scan(space, coloring, options);
    return finish(scan, [&](const Hit& h) {
        const auto digits = decode(h.param);
        MultiIpParam param;
        for (std::size_t v = 0; v < k; ++v) {
            param.sets.push_back(sets[v][digits[v]]);
            param.fs.push_back(fs[v]);
            param.ip_sums.push_back(sums[v][digits[v]]);
        }
        return Witness{h.a, std::move(param), h.values, h.color};
    });
}

std::vector<IntPoly> ap_polys(std::size_t length)
{
    std::vector<IntPoly> polys;
    for (std::size_t i = 0; i < length; ++i) {
        polys.emplace_back(std::vector<Int>{0, static_cast<Int>(i)});
    }
    return polys;
}

SearchResult find_ap(std::size_t length, const Coloring& coloring, Int lo, Int hi,
                     const SearchOptions& options)
{
    if (length < 1) {
        throw Error(ErrorKind::InvalidRange, "progression length must be at least 1");
    }
    if (hi < lo) {
        throw Error(ErrorKind::InvalidRange, "empty window");
    }
    const std::vector<IntPoly> polys = ap_polys(length);
    const Int span = checked::sub(hi, lo);
    const Int r_bound = length > 1 ? std::max<Int>(1, span / static_cast<Int>(length - 1)) : 1;
    const Int a_bound = std::max(lo < 0 ? -lo : lo, hi < 0 ? -hi : hi);
    try {
        return poly_scan(polys, coloring, a_bound, r_bound, options, true, std::pair{lo, hi});
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::WindowTooSmall) {
            return {};
        }
        throw;
    }
}

namespace {

bool values_colored(const Witness& w, const Coloring& coloring)
{
    for (Int v : w.values) {
        if (coloring.color(v) != std::optional<int>(w.color)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool verify_witness(const Witness& w, std::span<const IntPoly> polys, const Coloring& coloring)
{
    try {
        if (w.values.size() != polys.size()) {
            return false;
        }
        Int s = 0;
        if (const Int* r = std::get_if<Int>(&w.param)) {
            s = *r;
        } else if (const IpParam* ip = std::get_if<IpParam>(&w.param)) {
            s = ip_sum(ip->f, ip->set);
            if (s != ip->ip_sum) {
                return false;
            }
        } else {
            return false;
        }
        for (std::size_t i = 0; i < polys.size(); ++i) {
            if (checked::add(w.a, polys[i](s)) != w.values[i]) {
                return false;
            }
        }
        return values_colored(w, coloring);
    } catch (const Error&) {
        return false;
    }
}

bool verify_witness(const Witness& w, std::span<const MultiIntPoly> polys, const Coloring& coloring)
{
    try {
        const MultiIpParam* param = std::get_if<MultiIpParam>(&w.param);
        if (param == nullptr || w.values.size() != polys.size() || param->sets.size() != param->fs.size()
            || param->ip_sums.size() != param->fs.size()) {
            return false;
        }
        std::vector<Int> point;
        for (std::size_t v = 0; v < param->sets.size(); ++v) {
            point.push_back(ip_sum(param->fs[v], param->sets[v]));
            if (point.back() != param->ip_sums[v]) {
                return false;
            }
        }
        for (std::size_t i = 0; i < polys.size(); ++i) {
            if (polys[i].k() > point.size()) {
                return false;
            }
            if (checked::add(w.a, polys[i].widened(point.size())(point)) != w.values[i]) {
                return false;
            }
        }
        return values_colored(w, coloring);
    } catch (const Error&) {
        return false;
    }
}

bool verify_symbolic_chain(const Witness& w, std::span<const IntPoly> polys)
{
    try {
        if (w.values.size() != polys.size()) {
            return false;
        }
        int max_degree = 0;
        for (const IntPoly& p : polys) {
            max_degree = std::max(max_degree, p.degree());
        }
        // Encodings only use lengths up to max_degree, so length cap is free
        // for the preimage of a.
        const auto cap = static_cast<std::size_t>(max_degree + 1);
        std::vector<SymPoly> etas;
        std::vector<std::optional<std::size_t>> eta_of(polys.size());
        for (std::size_t j = 0; j < polys.size(); ++j) {
            if (!polys[j].is_zero()) {
                eta_of[j] = etas.size();
                etas.push_back(encode_poly(polys[j], cap));
            }
        }
        std::optional<SymPoly> x;
        for (std::size_t len = 1; len <= cap && !x; ++len) {
            SymPoly candidate = SymPoly::single(Term::make(w.a, std::vector<Int>(len, 1), cap));
            if (in_ir(candidate, etas)) {
                x = std::move(candidate);
            }
        }
        if (!x || pi_poly(*x) != w.a) {
            return false;
        }
        for (std::size_t j = 0; j < polys.size(); ++j) {
            Int value = 0;
            if (!eta_of[j]) {
                value = pi_poly(*x);
            } else if (const IpParam* ip = std::get_if<IpParam>(&w.param)) {
                value = pi_poly(shift(*x, etas[*eta_of[j]], ip->f, ip->set));
            } else if (const Int* r = std::get_if<Int>(&w.param)) {
                value = pi_poly(add(*x, scale_diagonal(*r, etas[*eta_of[j]])));
            } else {
                return false;
            }
            if (value != w.values[j]) {
                return false;
            }
        }
        return true;
    } catch (const Error&) {
        return false;
    }
}

bool verify_symbolic_chain(const Witness& w, std::span<const MultiIntPoly> polys)
{
    try {
        const MultiIpParam* param = std::get_if<MultiIpParam>(&w.param);
        if (param == nullptr || w.values.size() != polys.size()) {
            return false;
        }
        const std::size_t k = param->sets.size();
        if (k == 1) {
            std::vector<IntPoly> single;
            for (const MultiIntPoly& p : polys) {
                std::vector<Int> coeffs;
                const MultiIntPoly narrow = p.widened(1);
                for (const auto& [exps, c] : narrow.monomials()) {
                    coeffs.resize(std::max<std::size_t>(coeffs.size(), exps[0] + 1), 0);
                    coeffs[exps[0]] = c;
                }
                single.emplace_back(std::move(coeffs));
            }
            const Witness one{w.a, IpParam{param->sets[0], param->fs[0], param->ip_sums[0]}, w.values,
                              w.color};
            return verify_symbolic_chain(one, single);
        }
        std::vector<MultiIntPoly> wide;
        std::size_t m = 1;
        for (const MultiIntPoly& p : polys) {
            wide.push_back(p.widened(k));
            if (!wide.back().is_zero()) {
                m = std::max(m, encode_multi(wide.back()).m);
            }
        }
        // One spare slot in the first block leaves room for the preimage of a.
        m += 1;
        const MultiShape shape{k, m};
        std::vector<MultiSymPoly> etas;
        std::vector<std::optional<std::size_t>> eta_of(wide.size());
        for (std::size_t j = 0; j < wide.size(); ++j) {
            if (!wide[j].is_zero()) {
                eta_of[j] = etas.size();
                etas.push_back(encode_multi(wide[j], m).eta);
            }
        }
        std::optional<MultiSymPoly> x;
        for (std::size_t len = 1; len <= m && !x; ++len) {
            std::vector<std::vector<Int>> blocks(k);
            blocks[0].assign(len, 1);
            MultiSymPoly candidate = MultiSymPoly::single(MultiTerm::make(w.a, std::move(blocks), shape));
            if (mv_in_ir(candidate, etas)) {
                x = std::move(candidate);
            }
        }
        if (!x) {
            return false;
        }
        const std::vector<Int> ones(k, 1);
        for (std::size_t j = 0; j < wide.size(); ++j) {
            const MultiSymPoly y = eta_of[j] ? shift_multi(*x, etas[*eta_of[j]], param->fs, param->sets) : *x;
            if (eval_pmulti(y)(ones) != w.values[j]) {
                return false;
            }
        }
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace polyvdw
