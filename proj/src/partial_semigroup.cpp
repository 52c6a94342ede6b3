#include "polyvdw/partial_semigroup.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace polyvdw {

namespace {

constexpr std::size_t kMaxStoredCounterexamples = 64;

}  // namespace

PartialOpTable::PartialOpTable(std::size_t n)
    : m_labels(n), m_cells(n * n, kUndefined)
{
    for (std::size_t i = 0; i < n; ++i) {
        m_labels[i] = std::to_string(i);
    }
}

PartialOpTable::PartialOpTable(std::vector<std::string> labels)
    : m_labels(std::move(labels)), m_cells(m_labels.size() * m_labels.size(), kUndefined)
{
}

const std::string& PartialOpTable::label(std::size_t i) const
{
    check_index(i);
    return m_labels[i];
}

void PartialOpTable::set_label(std::size_t i, std::string text)
{
    check_index(i);
    m_labels[i] = std::move(text);
}

void PartialOpTable::check_index(std::size_t i) const
{
    if (i >= m_labels.size()) {
        throw Error(ErrorKind::UnknownElement, "element " + std::to_string(i) + " not in a table of "
                                                   + std::to_string(m_labels.size()));
    }
}

std::int64_t PartialOpTable::cell(std::size_t i, std::size_t j) const
{
    check_index(i);
    check_index(j);
    return m_cells[i * m_labels.size() + j];
}

void PartialOpTable::define(std::size_t i, std::size_t j, std::size_t result)
{
    check_index(i);
    check_index(j);
    check_index(result);
    m_cells[i * m_labels.size() + j] = static_cast<std::int64_t>(result);
}

void PartialOpTable::censor(std::size_t i, std::size_t j)
{
    check_index(i);
    check_index(j);
    m_cells[i * m_labels.size() + j] = kCensored;
}

std::optional<std::size_t> PartialOpTable::product(std::size_t i, std::size_t j) const
{
    const std::int64_t c = cell(i, j);
    if (c < 0) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(c);
}

bool PartialOpTable::defined(std::size_t i, std::size_t j) const
{
    return cell(i, j) != kUndefined;
}

bool PartialOpTable::censored(std::size_t i, std::size_t j) const
{
    return cell(i, j) == kCensored;
}

std::string_view to_string(AssocFailure kind) noexcept
{
    return kind == AssocFailure::OneSideUndefined ? "one side undefined" : "both defined, unequal";
}

namespace {

enum class Side { Undefined, Censored, Defined };

struct Evaluated {
    Side side;
    std::size_t value = 0;
};

Evaluated evaluate(const PartialOpTable& t, std::size_t a, std::size_t b)
{
    if (!t.defined(a, b)) {
        return {Side::Undefined};
    }
    if (t.censored(a, b)) {
        return {Side::Censored};
    }
    return {Side::Defined, *t.product(a, b)};
}

Evaluated evaluate_then(const PartialOpTable& t, Evaluated first, std::size_t a, std::size_t b,
                        bool first_on_left)
{
    if (first.side != Side::Defined) {
        return first;
    }
    return first_on_left ? evaluate(t, first.value, b) : evaluate(t, a, first.value);
}

}  // namespace

AssocReport check_partial_associativity(const PartialOpTable& t)
{
    AssocReport report;
    const std::size_t n = t.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const Evaluated xy = evaluate(t, x, y);
            for (std::size_t z = 0; z < n; ++z) {
                const Evaluated left = evaluate_then(t, xy, 0, z, true);
                const Evaluated right = evaluate_then(t, evaluate(t, y, z), x, 0, false);
                if (left.side == Side::Censored || right.side == Side::Censored) {
                    ++report.censored_triples;
                    continue;
                }
                ++report.checked_triples;
                std::optional<AssocFailure> failure;
                if (left.side != right.side) {
                    failure = AssocFailure::OneSideUndefined;
                } else if (left.side == Side::Defined && left.value != right.value) {
                    failure = AssocFailure::Unequal;
                }
                if (failure) {
                    report.pass = false;
                    ++report.failures;
                    if (report.counterexamples.size() < kMaxStoredCounterexamples) {
                        report.counterexamples.push_back({x, y, z, *failure});
                    }
                }
            }
        }
    }
    return report;
}

CommReport check_commutativity(const PartialOpTable& t)
{
    CommReport report;
    for (std::size_t x = 0; x < t.size(); ++x) {
        for (std::size_t y = x + 1; y < t.size(); ++y) {
            ++report.checked_pairs;
            const bool same = t.defined(x, y) == t.defined(y, x)
                              && t.censored(x, y) == t.censored(y, x)
                              && t.product(x, y) == t.product(y, x);
            if (!same) {
                report.pass = false;
                if (report.counterexamples.size() < kMaxStoredCounterexamples) {
                    report.counterexamples.emplace_back(x, y);
                }
            }
        }
    }
    return report;
}

std::vector<std::size_t> right_set(const PartialOpTable& t, std::size_t x)
{
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < t.size(); ++s) {
        if (t.defined(x, s)) {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<std::size_t> left_set(const PartialOpTable& t, std::size_t x)
{
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < t.size(); ++s) {
        if (t.defined(s, x)) {
            out.push_back(s);
        }
    }
    return out;
}

AdequacyResult check_adequate(const PartialOpTable& t)
{
    AdequacyResult result;
    for (std::size_t s = 0; s < t.size(); ++s) {
        bool in_all = true;
        for (std::size_t x = 0; x < t.size() && in_all; ++x) {
            in_all = t.defined(x, s);
        }
        if (in_all) {
            result.common_right_set.push_back(s);
        }
    }
    // An empty table has no finite families to test.
    result.adequate = t.size() == 0 || !result.common_right_set.empty();
    if (!result.common_right_set.empty()) {
        result.witness = result.common_right_set.front();
    }
    return result;
}

std::vector<std::size_t> idempotents(const PartialOpTable& t)
{
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < t.size(); ++p) {
        if (t.product(p, p) == p) {
            out.push_back(p);
        }
    }
    return out;
}

namespace {

std::vector<bool> membership(const PartialOpTable& t, const std::vector<std::size_t>& subset)
{
    std::vector<bool> in(t.size(), false);
    for (std::size_t s : subset) {
        if (s >= t.size()) {
            throw Error(ErrorKind::UnknownElement, "element " + std::to_string(s) + " not in a table of "
                                                       + std::to_string(t.size()));
        }
        in[s] = true;
    }
    return in;
}

}  // namespace

bool is_left_ideal(const PartialOpTable& t, const std::vector<std::size_t>& subset)
{
    const auto in = membership(t, subset);
    for (std::size_t x : subset) {
        for (std::size_t y = 0; y < t.size(); ++y) {
            if (auto p = t.product(y, x); p && !in[*p]) {
                return false;
            }
        }
    }
    return true;
}

bool is_right_ideal(const PartialOpTable& t, const std::vector<std::size_t>& subset)
{
    const auto in = membership(t, subset);
    for (std::size_t x : subset) {
        for (std::size_t y = 0; y < t.size(); ++y) {
            if (auto p = t.product(x, y); p && !in[*p]) {
                return false;
            }
        }
    }
    return true;
}

PartialOpTable read_table(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    std::size_t line_offset = 0;
    std::size_t next_offset = 0;
    std::optional<PartialOpTable> table;
    auto fail = [&](const std::string& what) {
        throw SyntaxError(line_offset, "line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        line_offset = next_offset;
        next_offset += line.size() + 1;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ls(line);
        if (!table) {
            std::string head;
            long long n = -1;
            if (!(ls >> head >> n) || head != "elements:" || n < 0) {
                fail("expected `elements: n`");
            }
            table.emplace(static_cast<std::size_t>(n));
            continue;
        }
        const auto n = static_cast<long long>(table->size());
        std::string word;
        ls >> word;
        if (word == "label") {
            long long i = -1;
            if (!(ls >> i) || i < 0 || i >= n) {
                fail("bad label index");
            }
            std::string text;
            std::getline(ls >> std::ws, text);
            table->set_label(static_cast<std::size_t>(i), text);
            continue;
        }
        std::istringstream ps(line);
        long long i = -1;
        long long j = -1;
        std::string arrow;
        std::string result;
        if (!(ps >> i >> j >> arrow >> result) || arrow != "->") {
            fail("expected `i j -> k`");
        }
        if (i < 0 || j < 0 || i >= n || j >= n) {
            fail("element index out of range");
        }
        if (result == "*") {
            table->censor(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            continue;
        }
        std::size_t used = 0;
        long long k = -1;
        try {
            k = std::stoll(result, &used);
        } catch (const std::exception&) {
            fail("bad product `" + result + "`");
        }
        if (used != result.size() || k < 0 || k >= n) {
            fail("bad product `" + result + "`");
        }
        table->define(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                      static_cast<std::size_t>(k));
    }
    if (!table) {
        throw SyntaxError(next_offset, "missing `elements: n` header");
    }
    return std::move(*table);
}

void write_table(std::ostream& out, const PartialOpTable& t)
{
    out << "elements: " << t.size() << '\n';
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.label(i) != std::to_string(i)) {
            out << "label " << i << ' ' << t.label(i) << '\n';
        }
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (t.censored(i, j)) {
                out << i << ' ' << j << " -> *\n";
            } else if (auto p = t.product(i, j)) {
                out << i << ' ' << j << " -> " << *p << '\n';
            }
        }
    }
}

bool in_s_component(const SymPoly& z, const std::vector<SymPoly>& etas, std::size_t i)
{
    if (in_ir(z, etas)) {
        return true;
    }
    const SymPoly& eta = etas.at(i);
    // Otherwise z must split as x + r.eta with x in Ir: the terms of z on the
    // keys of eta are a common diagonal multiple of eta and the rest avoid
    // every key of the family.
    std::optional<Int> r;
    std::vector<Term> rest;
    auto zs = z.terms();
    auto es = eta.terms();
    std::size_t e = 0;
    for (const Term& term : zs) {
        if (e < es.size() && term.key() == es[e].key()) {
            const Term& base = es[e++];
            for (std::size_t j = 0; j < term.length(); ++j) {
                const Int c = base.coeffs()[j];
                const Int d = term.coeffs()[j];
                if (c == 0) {
                    if (d != 0) {
                        return false;
                    }
                    continue;
                }
                if (d % c != 0 || (r && *r != d / c)) {
                    return false;
                }
                r = d / c;
            }
        } else {
            if (e < es.size() && es[e].key() < term.key()) {
                return false;
            }
            rest.push_back(term);
        }
    }
    if (e != es.size() || rest.empty()) {
        return false;
    }
    return in_ir(SymPoly::make(std::move(rest)), etas);
}

namespace {

void require_pool_in_ir(const std::vector<SymPoly>& etas, const std::vector<SymPoly>& pool, Int r_bound)
{
    if (etas.empty()) {
        throw Error(ErrorKind::EmptyTerms, "the eta family is empty");
    }
    if (r_bound < 0) {
        throw Error(ErrorKind::InvalidRange, "r_bound must be nonnegative");
    }
    if (pool.empty()) {
        throw Error(ErrorKind::PoolNotInIr, "the Ir pool is empty");
    }
    for (const SymPoly& x : pool) {
        if (!in_ir(x, etas)) {
            throw Error(ErrorKind::PoolNotInIr, to_string(x) + " is not in the Ir intersection");
        }
    }
}

// Pool first, then x + r.eta_i ordered by i, r ascending, pool order.
template <typename Value, typename MakeLabel>
std::size_t intern(std::vector<Value>& values, std::map<std::string, std::size_t>& index,
                   Value value, MakeLabel label_of)
{
    std::string label = label_of(value);
    auto [it, inserted] = index.try_emplace(std::move(label), values.size());
    if (inserted) {
        values.push_back(std::move(value));
    }
    return it->second;
}

std::string tuple_label(const std::vector<SymPoly>& tuple)
{
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += to_string(tuple[i]);
    }
    return out + ")";
}

}  // namespace

TruncatedS build_truncated_s(const std::vector<SymPoly>& etas, Int r_bound,
                             const std::vector<SymPoly>& x_pool)
{
    require_pool_in_ir(etas, x_pool, r_bound);
    std::vector<SymPoly> values;
    std::map<std::string, std::size_t> index;
    auto label_of = [](const SymPoly& p) { return to_string(p); };
    std::vector<std::size_t> ir_fragment;
    for (const SymPoly& x : x_pool) {
        ir_fragment.push_back(intern(values, index, x, label_of));
    }
    for (const SymPoly& eta : etas) {
        for (Int r = -r_bound; r <= r_bound; ++r) {
            const SymPoly scaled = scale_diagonal(r, eta);
            for (const SymPoly& x : x_pool) {
                intern(values, index, add(x, scaled), label_of);
            }
        }
    }

    const std::size_t n = values.size();
    std::vector<std::vector<bool>> member(n, std::vector<bool>(etas.size()));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t i = 0; i < etas.size(); ++i) {
            member[a][i] = in_s_component(values[a], etas, i);
        }
    }

    std::vector<std::string> labels;
    labels.reserve(n);
    for (const SymPoly& v : values) {
        labels.push_back(to_string(v));
    }
    PartialOpTable table(std::move(labels));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            bool shared = false;
            for (std::size_t i = 0; i < etas.size() && !shared; ++i) {
                shared = member[a][i] && member[b][i];
            }
            if (!shared) {
                continue;
            }
            auto it = index.find(to_string(add(values[a], values[b])));
            if (it == index.end()) {
                table.censor(a, b);
            } else {
                table.define(a, b, it->second);
            }
        }
    }
    std::sort(ir_fragment.begin(), ir_fragment.end());
    ir_fragment.erase(std::unique(ir_fragment.begin(), ir_fragment.end()), ir_fragment.end());
    return {std::move(table), std::move(values), std::move(ir_fragment)};
}

TruncatedV build_truncated_v(const std::vector<SymPoly>& etas, Int r_bound,
                             const std::vector<SymPoly>& x_pool)
{
    require_pool_in_ir(etas, x_pool, r_bound);
    using Tuple = std::vector<SymPoly>;
    std::vector<Tuple> values;
    std::map<std::string, std::size_t> index;
    std::vector<std::size_t> i_fragment;
    std::vector<std::size_t> diagonal_fragment;
    for (Int r = -r_bound; r <= r_bound; ++r) {
        for (const SymPoly& x : x_pool) {
            Tuple tuple;
            for (const SymPoly& eta : etas) {
                tuple.push_back(add(x, scale_diagonal(r, eta)));
            }
            i_fragment.push_back(intern(values, index, std::move(tuple), tuple_label));
        }
    }
    for (const SymPoly& x : x_pool) {
        diagonal_fragment.push_back(intern(values, index, Tuple(etas.size(), x), tuple_label));
    }

    // Component membership in each S_i, keyed by the component's text.
    std::map<std::string, std::vector<bool>> member;
    auto member_of = [&](const SymPoly& z) -> const std::vector<bool>& {
        auto [it, inserted] = member.try_emplace(to_string(z));
        if (inserted) {
            for (std::size_t i = 0; i < etas.size(); ++i) {
                it->second.push_back(in_s_component(z, etas, i));
            }
        }
        return it->second;
    };
    auto dot_defined = [&](const SymPoly& a, const SymPoly& b) {
        const auto& ma = member_of(a);
        const auto& mb = member_of(b);
        for (std::size_t i = 0; i < ma.size(); ++i) {
            if (ma[i] && mb[i]) {
                return true;
            }
        }
        return false;
    };

    std::vector<std::string> labels;
    for (const Tuple& v : values) {
        labels.push_back(tuple_label(v));
    }
    PartialOpTable table(std::move(labels));
    for (std::size_t a = 0; a < values.size(); ++a) {
        for (std::size_t b = 0; b < values.size(); ++b) {
            Tuple sum;
            bool defined = true;
            for (std::size_t c = 0; c < etas.size() && defined; ++c) {
                defined = dot_defined(values[a][c], values[b][c]);
                if (defined) {
                    sum.push_back(add(values[a][c], values[b][c]));
                }
            }
            if (!defined) {
                continue;
            }
            auto it = index.find(tuple_label(sum));
            if (it == index.end()) {
                table.censor(a, b);
            } else {
                table.define(a, b, it->second);
            }
        }
    }
    return {std::move(table), std::move(values), std::move(i_fragment), std::move(diagonal_fragment)};
}

}  // namespace polyvdw
