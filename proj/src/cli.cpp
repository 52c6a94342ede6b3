#include "polyvdw/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyvdw/evaluation.hpp"
#include "polyvdw/partial_semigroup.hpp"
#include "polyvdw/random.hpp"
#include "polyvdw/text.hpp"
#include "polyvdw/vdw_search.hpp"

namespace polyvdw::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kAbsent = 1;
constexpr int kInputError = 2;

struct Output {
    std::ostream& out;
    bool json_mode = false;

    void emit(const json& doc, const std::string& text) const
    {
        if (json_mode) {
            out << doc.dump(2) << '\n';
        } else {
            out << text;
        }
    }
};

json document(const std::string& command)
{
    return json{{"schema", 1}, {"command", command}};
}

bool is_multi_literal(const std::string& text)
{
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text[pos] == 'M';
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        out.push_back(item);
    }
    if (!text.empty() && text.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::vector<Int> parse_int_list(const std::string& text)
{
    std::vector<Int> out;
    for (const std::string& item : split(text, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
            throw SyntaxError(0, "expected a comma-separated integer list, got '" + text + "'");
        }
        out.push_back(value);
    }
    return out;
}

// Parses several sympoly literals into one common cap.
std::vector<SymPoly> parse_sympolys(const std::vector<std::string>& texts, std::optional<std::size_t> cap)
{
    std::size_t common = cap.value_or(0);
    if (!cap) {
        for (const std::string& t : texts) {
            common = std::max(common, parse_sympoly(t).cap());
        }
    }
    std::vector<SymPoly> out;
    for (const std::string& t : texts) {
        out.push_back(parse_sympoly(t, common));
    }
    return out;
}

std::vector<MultiSymPoly> parse_multisympolys(const std::vector<std::string>& texts)
{
    MultiShape shape{0, 1};
    for (const std::string& t : texts) {
        const MultiShape s = parse_multisympoly(t).shape();
        if (shape.k != 0 && s.k != shape.k) {
            throw Error(ErrorKind::InvalidShape, "literals disagree on the number of variables");
        }
        shape.k = s.k;
        shape.m = std::max(shape.m, s.m);
    }
    std::vector<MultiSymPoly> out;
    for (const std::string& t : texts) {
        out.push_back(parse_multisympoly(t, shape));
    }
    return out;
}

json coloring_json(const Coloring& c)
{
    json j{{"literal", to_string(c)}, {"colors", c.color_count()}};
    switch (c.kind()) {
    case Coloring::Kind::Modular:
        j["kind"] = "mod";
        j["q"] = c.table().size();
        j["residue_colors"] = c.table();
        break;
    case Coloring::Kind::Explicit:
        j["kind"] = "explicit";
        j["lo"] = c.lo();
        j["hi"] = c.window()->second;
        break;
    case Coloring::Kind::SeededRandom:
        j["kind"] = "random";
        j["seed"] = c.seed();
        j["lo"] = c.lo();
        j["hi"] = c.window()->second;
        break;
    }
    return j;
}

std::vector<Int> set_elements(const IndexSet& s)
{
    return {s.elements().begin(), s.elements().end()};
}

json param_json(const Witness& w)
{
    if (const Int* r = std::get_if<Int>(&w.param)) {
        return json{{"r", *r}};
    }
    if (const IpParam* ip = std::get_if<IpParam>(&w.param)) {
        return json{{"F", set_elements(ip->set)}, {"f", to_string(ip->f)}, {"ip_sum", ip->ip_sum}};
    }
    const auto& mp = std::get<MultiIpParam>(w.param);
    json sets = json::array();
    json fs = json::array();
    for (std::size_t v = 0; v < mp.sets.size(); ++v) {
        sets.push_back(set_elements(mp.sets[v]));
        fs.push_back(to_string(mp.fs[v]));
    }
    return json{{"Fs", sets}, {"fs", fs}, {"ip_sums", mp.ip_sums}};
}

std::string param_text(const Witness& w)
{
    if (const Int* r = std::get_if<Int>(&w.param)) {
        return "r=" + std::to_string(*r);
    }
    if (const IpParam* ip = std::get_if<IpParam>(&w.param)) {
        return "F=" + to_string(ip->set) + " f=" + to_string(ip->f) + " ip_sum=" + std::to_string(ip->ip_sum);
    }
    const auto& mp = std::get<MultiIpParam>(w.param);
    std::string out;
    for (std::size_t v = 0; v < mp.sets.size(); ++v) {
        out += (v ? " " : "") + std::string("F") + std::to_string(v + 1) + "=" + to_string(mp.sets[v]) + " f"
               + std::to_string(v + 1) + "=" + to_string(mp.fs[v]) + " ip_sum" + std::to_string(v + 1) + "="
               + std::to_string(mp.ip_sums[v]);
    }
    return out;
}

template <typename Poly>
int report_search(const Output& o, const std::string& command, const std::vector<Poly>& polys,
                  const Coloring& coloring, const SearchResult& result, std::int64_t elapsed_ms)
{
    json doc = document(command);
    json poly_list = json::array();
    for (const Poly& p : polys) {
        poly_list.push_back(to_string(p));
    }
    doc["polys"] = poly_list;
    doc["coloring"] = coloring_json(coloring);
    doc["stats"] = json{{"candidates_scanned", result.candidates_scanned}, {"elapsed_ms", elapsed_ms}};
    std::ostringstream text;
    if (!result.witness) {
        doc["witness"] = nullptr;
        text << "no witness within bounds (" << result.candidates_scanned << " candidates scanned)\n";
        o.emit(doc, text.str());
        return kAbsent;
    }
    const Witness& w = *result.witness;
    const bool verified = verify_witness(w, std::span<const Poly>(polys), coloring);
    doc["witness"] = json{{"a", w.a}, {"param", param_json(w)}, {"values", w.values}, {"color", w.color}};
    doc["verified"] = verified;
    text << "witness: a=" << w.a << ' ' << param_text(w) << '\n' << "values:";
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        text << (i ? ", " : " ") << w.values[i];
    }
    text << "\ncolor: " << w.color << "\nverified: " << (verified ? "yes" : "NO") << '\n'
         << "candidates scanned: " << result.candidates_scanned << '\n';
    o.emit(doc, text.str());
    return verified ? kOk : kAbsent;
}

std::vector<IntPoly> one_variable(const std::vector<AnyPoly>& polys)
{
    std::vector<IntPoly> out;
    for (const AnyPoly& p : polys) {
        if (!std::holds_alternative<IntPoly>(p)) {
            throw Error(ErrorKind::MixedVariableStyles, "this command takes polynomials in n");
        }
        out.push_back(std::get<IntPoly>(p));
    }
    return out;
}

std::vector<MultiIntPoly> multi_variable(const std::vector<AnyPoly>& polys)
{
    std::vector<MultiIntPoly> out;
    for (const AnyPoly& p : polys) {
        if (const auto* q = std::get_if<MultiIntPoly>(&p)) {
            out.push_back(*q);
        } else {
            // A constant list or a list in n is read as one variable x1.
            const IntPoly& single = std::get<IntPoly>(p);
            MultiIntPoly m(1);
            for (std::size_t i = 0; i < single.coeffs().size(); ++i) {
                m.add_monomial({static_cast<unsigned>(i)}, single.coeffs()[i]);
            }
            out.push_back(m);
        }
    }
    return out;
}

std::int64_t millis_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
        .count();
}

json counterexamples_json(const AssocReport& report, const PartialOpTable& table)
{
    json out = json::array();
    for (const auto& c : report.counterexamples) {
        out.push_back(json{{"x", table.label(c.x)},
                           {"y", table.label(c.y)},
                           {"z", table.label(c.z)},
                           {"kind", std::string(to_string(c.kind))}});
    }
    return out;
}

json labels_json(const PartialOpTable& table, const std::vector<std::size_t>& elements)
{
    json out = json::array();
    for (std::size_t e : elements) {
        out.push_back(table.label(e));
    }
    return out;
}

struct Options {
    bool json_mode = false;
    bool allow_degenerate = false;
    unsigned threads = 1;

    std::vector<std::string> operands;
    std::optional<std::size_t> cap;
    std::optional<std::size_t> m;
    std::string r_vector;
    std::optional<Int> diag;
    std::string eta;
    std::vector<std::string> fs;
    std::vector<std::string> index_sets;

    std::string polys;
    std::string coloring;
    Int a_range = 10;
    Int r_range = 10;
    bool positive_r = false;
    std::string max_index = "4";
    std::string max_size;
    std::size_t length = 3;
    Int lo = 1;
    Int hi = 9;

    std::string table_file;
    std::string write_file;
    std::string etas;
    std::string pool;
    std::size_t pool_size = 3;
    Int r_bound = 2;
    std::string structure = "s";

    std::size_t trials = 1000;
    std::uint64_t seed = 0;
};

int cmd_eval(const Options& opt, const Output& o)
{
    json doc = document("eval");
    std::ostringstream text;
    const std::string& lit = opt.operands.at(0);
    if (is_multi_literal(lit)) {
        const MultiSymPoly x = parse_multisympoly(lit);
        const MultiIntPoly p = eval_pmulti(x);
        const Int at_ones = p(std::vector<Int>(p.k(), 1));
        doc["input"] = to_string(x);
        doc["polynomial"] = to_string(p);
        doc["value_at_ones"] = at_ones;
        text << "P = " << to_string(p) << "\nP(1,...,1) = " << at_ones << '\n';
    } else {
        const SymPoly x = parse_sympoly(lit, opt.cap);
        doc["input"] = to_string(x);
        doc["pi"] = pi_poly(x);
        doc["polynomial"] = to_string(eval_px(x));
        text << "pi = " << pi_poly(x) << "\nP = " << to_string(eval_px(x)) << '\n';
    }
    o.emit(doc, text.str());
    return kOk;
}

int cmd_add(const Options& opt, const Output& o)
{
    json doc = document("add");
    std::string result;
    if (is_multi_literal(opt.operands.at(0))) {
        const auto xs = parse_multisympolys(opt.operands);
        MultiSymPoly sum = xs.at(0);
        for (std::size_t i = 1; i < xs.size(); ++i) {
            sum = mv_add(sum, xs[i]);
        }
        result = to_string(sum);
    } else {
        const auto xs = parse_sympolys(opt.operands, opt.cap);
        SymPoly sum = xs.at(0);
        for (std::size_t i = 1; i < xs.size(); ++i) {
            sum = add(sum, xs[i]);
        }
        result = to_string(sum);
        doc["cap"] = sum.cap();
    }
    doc["result"] = result;
    o.emit(doc, result + "\n");
    return kOk;
}

int cmd_scale(const Options& opt, const Output& o)
{
    json doc = document("scale");
    const std::string& lit = opt.operands.at(0);
    if (opt.r_vector.empty() == !opt.diag.has_value()) {
        throw SyntaxError(0, "give exactly one of --r and --diag");
    }
    std::string result;
    if (is_multi_literal(lit)) {
        const MultiSymPoly x = parse_multisympoly(lit);
        std::vector<std::vector<Int>> rs;
        if (opt.diag) {
            rs.assign(x.shape().k, std::vector<Int>(x.shape().m, *opt.diag));
        } else {
            for (const std::string& group : split(opt.r_vector, ';')) {
                rs.push_back(parse_int_list(group));
            }
        }
        result = to_string(mv_scale(rs, x));
    } else {
        const SymPoly x = parse_sympoly(lit, opt.cap);
        result = to_string(opt.diag ? scale_diagonal(*opt.diag, x) : scale_poly(parse_int_list(opt.r_vector), x));
    }
    doc["result"] = result;
    o.emit(doc, result + "\n");
    return kOk;
}

int cmd_encode(const Options& opt, const Output& o)
{
    json doc = document("encode");
    const AnyPoly p = parse_polynomial(opt.operands.at(0));
    doc["polynomial"] = to_string(p);
    std::ostringstream text;
    if (const IntPoly* q = std::get_if<IntPoly>(&p)) {
        const std::size_t cap = opt.cap.value_or(static_cast<std::size_t>(std::max(q->degree(), 1)));
        const SymPoly eta = encode_poly(*q, cap);
        doc["eta"] = to_string(eta);
        doc["cap"] = cap;
        text << to_string(eta) << '\n';
    } else {
        const MultiEncoding enc = encode_multi(std::get<MultiIntPoly>(p), opt.m);
        doc["eta"] = to_string(enc.eta);
        doc["m"] = enc.m;
        text << to_string(enc.eta) << "\nm = " << enc.m << '\n';
    }
    o.emit(doc, text.str());
    return kOk;
}

int cmd_shift(const Options& opt, const Output& o)
{
    json doc = document("shift");
    const std::string& lit = opt.operands.at(0);
    std::vector<SequenceSpec> fs;
    for (const std::string& f : opt.fs) {
        fs.push_back(parse_sequence(f));
    }
    std::vector<IndexSet> sets;
    for (const std::string& s : opt.index_sets) {
        sets.push_back(parse_index_set(s));
    }
    std::ostringstream text;
    if (is_multi_literal(lit)) {
        const auto xs = parse_multisympolys({lit, opt.eta});
        const MultiSymPoly y = shift_multi(xs[0], xs[1], fs, sets);
        doc["result"] = to_string(y);
        doc["ip_sums"] = json::array();
        for (std::size_t v = 0; v < sets.size() && v < fs.size(); ++v) {
            doc["ip_sums"].push_back(ip_sum(fs[v], sets[v]));
        }
        text << to_string(y) << '\n';
    } else {
        if (fs.size() != 1 || sets.size() != 1) {
            throw Error(ErrorKind::ArityMismatch, "a one-variable shift takes one --f and one --F");
        }
        const auto xs = parse_sympolys({lit, opt.eta}, opt.cap);
        const SymPoly y = shift(xs[0], xs[1], fs[0], sets[0]);
        doc["result"] = to_string(y);
        doc["ip_sum"] = ip_sum(fs[0], sets[0]);
        doc["pi_before"] = pi_poly(xs[0]);
        doc["pi_after"] = pi_poly(y);
        text << to_string(y) << "\npi: " << pi_poly(xs[0]) << " -> " << pi_poly(y) << '\n';
    }
    o.emit(doc, text.str());
    return kOk;
}

SearchOptions search_options(const Options& opt)
{
    return SearchOptions{!opt.allow_degenerate, opt.threads};
}

int cmd_search_vdw(const Options& opt, const Output& o)
{
    const auto polys = one_variable(parse_polynomial_list(opt.polys));
    const Coloring coloring = parse_coloring(opt.coloring);
    const auto start = std::chrono::steady_clock::now();
    const SearchResult result = find_poly_vdw(polys, coloring, opt.a_range, opt.r_range, search_options(opt),
                                              opt.positive_r);
    return report_search(o, "search-vdw", polys, coloring, result, millis_since(start));
}

Int single_bound(const std::string& text)
{
    const auto values = parse_int_list(text);
    if (values.size() != 1) {
        throw SyntaxError(0, "expected a single integer, got '" + text + "'");
    }
    return values[0];
}

int cmd_search_ip(const Options& opt, const Output& o)
{
    const auto polys = one_variable(parse_polynomial_list(opt.polys));
    const Coloring coloring = parse_coloring(opt.coloring);
    if (opt.fs.size() != 1) {
        throw Error(ErrorKind::ArityMismatch, "search-ip takes exactly one --f");
    }
    const SequenceSpec f = parse_sequence(opt.fs[0]);
    const Int n = single_bound(opt.max_index);
    const Int size = opt.max_size.empty() ? n : single_bound(opt.max_size);
    if (size < 0) {
        throw Error(ErrorKind::InvalidRange, "--max-size must be nonnegative");
    }
    const auto start = std::chrono::steady_clock::now();
    const SearchResult result = find_ip_vdw(polys, f, coloring, opt.a_range, n, static_cast<std::size_t>(size),
                                            search_options(opt));
    return report_search(o, "search-ip", polys, coloring, result, millis_since(start));
}

int cmd_search_multi(const Options& opt, const Output& o)
{
    const auto polys = multi_variable(parse_polynomial_list(opt.polys));
    const Coloring coloring = parse_coloring(opt.coloring);
    std::size_t k = 1;
    for (const MultiIntPoly& p : polys) {
        k = std::max(k, p.k());
    }
    if (opt.fs.empty() || (opt.fs.size() != 1 && opt.fs.size() != k)) {
        throw Error(ErrorKind::ArityMismatch, "give one --f per variable, or one for all " + std::to_string(k));
    }
    std::vector<SequenceSpec> fs;
    for (std::size_t v = 0; v < k; ++v) {
        fs.push_back(parse_sequence(opt.fs[opt.fs.size() == 1 ? 0 : v]));
    }
    auto per_variable = [&](const std::string& text, const char* name) {
        std::vector<Int> values = parse_int_list(text);
        if (values.size() == 1) {
            values.assign(k, values[0]);
        }
        if (values.size() != k) {
            throw Error(ErrorKind::ArityMismatch, std::string(name) + " needs 1 or " + std::to_string(k)
                                                      + " entries");
        }
        return values;
    };
    const std::vector<Int> max_index = per_variable(opt.max_index, "--max-index");
    const std::vector<Int> sizes_raw = opt.max_size.empty() ? max_index : per_variable(opt.max_size, "--max-size");
    std::vector<std::size_t> sizes;
    for (Int s : sizes_raw) {
        if (s < 0) {
            throw Error(ErrorKind::InvalidRange, "--max-size must be nonnegative");
        }
        sizes.push_back(static_cast<std::size_t>(s));
    }
    const auto start = std::chrono::steady_clock::now();
    const SearchResult result = find_multivar_vdw(polys, fs, coloring, opt.a_range, max_index, sizes,
                                                  search_options(opt));
    return report_search(o, "search-multi", polys, coloring, result, millis_since(start));
}

int cmd_search_ap(const Options& opt, const Output& o)
{
    const Coloring coloring = parse_coloring(opt.coloring);
    const auto start = std::chrono::steady_clock::now();
    const SearchResult result = find_ap(opt.length, coloring, opt.lo, opt.hi, search_options(opt));
    return report_search(o, "search-ap", ap_polys(opt.length), coloring, result, millis_since(start));
}

std::vector<SymPoly> encode_family(const std::string& polys_text)
{
    const auto polys = one_variable(parse_polynomial_list(polys_text));
    int degree = 1;
    for (const IntPoly& p : polys) {
        degree = std::max(degree, p.degree());
    }
    std::vector<SymPoly> etas;
    for (const IntPoly& p : polys) {
        etas.push_back(encode_poly(p, static_cast<std::size_t>(degree)));
    }
    return etas;
}

std::vector<SymPoly> build_pool(const Options& opt, const std::vector<SymPoly>& etas)
{
    if (!opt.pool.empty()) {
        return parse_sympolys(split(opt.pool, ';'), etas.front().cap());
    }
    // Successive singletons T{h;1}, T{h+1;1}, ... past every head in use.
    std::vector<SymPoly> pool;
    const SymPoly first = fresh_ir_element(etas);
    const Int head = first.terms().front().iota();
    for (std::size_t i = 0; i < opt.pool_size; ++i) {
        pool.push_back(SymPoly::single(
            Term::make(checked::add(head, static_cast<Int>(i)), {1}, etas.front().cap())));
    }
    return pool;
}

int cmd_analyze(const Options& opt, const Output& o)
{
    json doc = document("analyze-semigroup");
    std::optional<PartialOpTable> loaded;
    std::optional<TruncatedS> s_table;
    std::optional<TruncatedV> v_table;
    if (!opt.table_file.empty()) {
        std::ifstream in(opt.table_file);
        if (!in) {
            throw Error(ErrorKind::FileUnreadable, "cannot read table file '" + opt.table_file + "'");
        }
        loaded = read_table(in);
        doc["source"] = json{{"file", opt.table_file}};
    } else {
        if (opt.etas.empty()) {
            throw SyntaxError(0, "give --table or --etas");
        }
        const auto etas = encode_family(opt.etas);
        const auto pool = build_pool(opt, etas);
        json source{{"structure", opt.structure}, {"etas", json::array()}, {"pool", json::array()},
                    {"r_bound", opt.r_bound}};
        for (const SymPoly& e : etas) {
            source["etas"].push_back(to_string(e));
        }
        for (const SymPoly& x : pool) {
            source["pool"].push_back(to_string(x));
        }
        doc["source"] = source;
        if (opt.structure == "s") {
            s_table = build_truncated_s(etas, opt.r_bound, pool);
        } else if (opt.structure == "v") {
            v_table = build_truncated_v(etas, opt.r_bound, pool);
        } else {
            throw SyntaxError(0, "--structure must be s or v");
        }
    }
    const PartialOpTable& table = loaded ? *loaded : s_table ? s_table->table : v_table->table;

    const AssocReport assoc = check_partial_associativity(table);
    const CommReport comm = check_commutativity(table);
    const AdequacyResult adequacy = check_adequate(table);
    const auto idem = idempotents(table);

    doc["elements"] = table.size();
    doc["associativity"] = json{{"pass", assoc.pass},
                                {"checked_triples", assoc.checked_triples},
                                {"window_censored_triples", assoc.censored_triples},
                                {"failures", assoc.failures},
                                {"counterexamples", counterexamples_json(assoc, table)}};
    json comm_cx = json::array();
    for (auto [x, y] : comm.counterexamples) {
        comm_cx.push_back(json::array({table.label(x), table.label(y)}));
    }
    doc["commutativity"] = json{{"pass", comm.pass}, {"checked_pairs", comm.checked_pairs},
                                {"counterexamples", comm_cx}};
    doc["adequacy"] = json{{"adequate", adequacy.adequate},
                           {"witness", adequacy.witness ? json(table.label(*adequacy.witness)) : json(nullptr)},
                           {"common_right_set_size", adequacy.common_right_set.size()}};
    doc["idempotents"] = labels_json(table, idem);

    std::ostringstream text;
    text << "elements: " << table.size() << '\n'
         << "associativity: " << (assoc.pass ? "pass" : "FAIL") << " (" << assoc.checked_triples << " triples checked, "
         << assoc.censored_triples << " window-censored, " << assoc.failures << " failures)\n"
         << "commutativity: " << (comm.pass ? "pass" : "FAIL") << " (" << comm.checked_pairs << " pairs)\n"
         << "adequate: " << (adequacy.adequate ? "yes" : "no");
    if (adequacy.witness) {
        text << " (witness " << table.label(*adequacy.witness) << ")";
    }
    text << "\nidempotents: " << idem.size() << '\n';

    bool ok = assoc.pass && comm.pass;
    if (s_table) {
        const auto& frag = s_table->ir_fragment;
        const bool from_ir = adequacy.witness
                             && std::find(frag.begin(), frag.end(), *adequacy.witness) != frag.end();
        doc["adequacy"]["witness_in_ir_fragment"] = from_ir;
        text << "adequacy witness in Ir fragment: " << (from_ir ? "yes" : "no") << '\n';
    }
    if (v_table) {
        const bool left = is_left_ideal(table, v_table->i_fragment);
        const bool right = is_right_ideal(table, v_table->i_fragment);
        doc["i_fragment"] = json{{"size", v_table->i_fragment.size()}, {"left_ideal", left}, {"right_ideal", right}};
        text << "I fragment: " << v_table->i_fragment.size() << " elements, left ideal "
             << (left ? "yes" : "no") << ", right ideal " << (right ? "yes" : "no") << '\n';
        ok = ok && left && right;
    }
    if (!opt.write_file.empty()) {
        std::ofstream file(opt.write_file);
        if (!file) {
            throw Error(ErrorKind::FileUnreadable, "cannot write '" + opt.write_file + "'");
        }
        write_table(file, table);
    }
    o.emit(doc, text.str());
    return ok ? kOk : kAbsent;
}

int cmd_check_axioms(const Options& opt, const Output& o)
{
    if (opt.cap.value_or(3) < 1) {
        throw Error(ErrorKind::InvalidRange, "--cap must be at least 1");
    }
    const std::size_t cap = opt.cap.value_or(3);
    Rng rng(opt.seed);
    const Range iota{0, 3};
    const Range coeff{-9, 9};
    std::uint64_t assoc_fail = 0;
    std::uint64_t comm_fail = 0;
    std::uint64_t multi_assoc_fail = 0;
    std::uint64_t multi_comm_fail = 0;
    const MultiShape shape{2, cap};
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const SymPoly x = random_sympoly(rng, cap, 3, iota, coeff);
        const SymPoly y = random_sympoly(rng, cap, 3, iota, coeff);
        const SymPoly z = random_sympoly(rng, cap, 3, iota, coeff);
        assoc_fail += !(add(add(x, y), z) == add(x, add(y, z)));
        comm_fail += !(add(x, y) == add(y, x));
        const MultiSymPoly u = random_multisympoly(rng, shape, 3, iota, coeff);
        const MultiSymPoly v = random_multisympoly(rng, shape, 3, iota, coeff);
        const MultiSymPoly w = random_multisympoly(rng, shape, 3, iota, coeff);
        multi_assoc_fail += !(mv_add(mv_add(u, v), w) == mv_add(u, mv_add(v, w)));
        multi_comm_fail += !(mv_add(u, v) == mv_add(v, u));
    }
    const bool pass = assoc_fail + comm_fail + multi_assoc_fail + multi_comm_fail == 0;
    json doc = document("check-axioms");
    doc["cap"] = cap;
    doc["trials"] = opt.trials;
    doc["seed"] = opt.seed;
    doc["one_variable"] = json{{"associativity_failures", assoc_fail}, {"commutativity_failures", comm_fail}};
    doc["multivariable"] = json{{"k", shape.k},
                                {"m", shape.m},
                                {"associativity_failures", multi_assoc_fail},
                                {"commutativity_failures", multi_comm_fail}};
    doc["pass"] = pass;
    std::ostringstream text;
    text << "one variable (cap " << cap << "): " << assoc_fail << " associativity, " << comm_fail
         << " commutativity failures over " << opt.trials << " triples\n"
         << "multivariable (k=2, m=" << cap << "): " << multi_assoc_fail << " associativity, " << multi_comm_fail
         << " commutativity failures\n"
         << (pass ? "pass" : "FAIL") << '\n';
    o.emit(doc, text.str());
    return pass ? kOk : kAbsent;
}

void add_common(CLI::App* sub, Options& opt)
{
    sub->add_flag("--json", opt.json_mode, "Emit one JSON document");
}

void add_search_common(CLI::App* sub, Options& opt)
{
    add_common(sub, opt);
    sub->add_option("--coloring", opt.coloring, "mod:q:c0,... | random:r:seed:lo:hi | explicit:lo:c0,... | file:PATH")
        ->required();
    sub->add_option("--threads", opt.threads, "Parallel scan blocks")->check(CLI::Range(1u, 256u));
    sub->add_flag("--allow-degenerate", opt.allow_degenerate,
                  "Accept parameters where different polynomials take equal values");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Symbolic polynomial algebra and polynomial van der Waerden witness search", "polyvdw"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "Evaluate a symbolic polynomial (pi and P)");
    eval->add_option("x", opt.operands, "Symbolic polynomial literal")->required()->expected(1);
    eval->add_option("--cap", opt.cap, "Length cap");
    add_common(eval, opt);

    auto* add_cmd = app.add_subcommand("add", "Add symbolic polynomials");
    add_cmd->add_option("x", opt.operands, "Literals")->required()->expected(2, 64);
    add_cmd->add_option("--cap", opt.cap, "Common length cap");
    add_common(add_cmd, opt);

    auto* scale = app.add_subcommand("scale", "Apply the bullet action r . x");
    scale->add_option("x", opt.operands, "Literal")->required()->expected(1);
    scale->add_option("--r", opt.r_vector, "Scaling vector r1,r2,... (multivariable: groups split by ';')");
    scale->add_option("--diag", opt.diag, "Diagonal scaling (s,...,s)");
    scale->add_option("--cap", opt.cap, "Length cap");
    add_common(scale, opt);

    auto* encode = app.add_subcommand("encode", "Encode an integer polynomial symbolically");
    encode->add_option("p", opt.operands, "Polynomial, e.g. 3n^2+2n or x1*x2")->required()->expected(1);
    encode->add_option("--cap", opt.cap, "Length cap (default: degree)");
    encode->add_option("--m", opt.m, "Forced block size for multivariable encodings");
    add_common(encode, opt);

    auto* shift_cmd = app.add_subcommand("shift", "IP shift x + (sum f over F) . eta");
    shift_cmd->add_option("x", opt.operands, "Literal in Ir(eta)")->required()->expected(1);
    shift_cmd->add_option("--eta", opt.eta, "Shift direction")->required();
    shift_cmd->add_option("--f", opt.fs, "Sequence (repeat once per variable)")->required();
    shift_cmd->add_option("--F", opt.index_sets, "Index set (repeat once per variable)")->required();
    shift_cmd->add_option("--cap", opt.cap, "Length cap");
    add_common(shift_cmd, opt);

    auto* search_vdw = app.add_subcommand("search-vdw", "Find a + p_i(r) monochromatic");
    search_vdw->add_option("--polys", opt.polys, "Comma-separated polynomials in n")->required();
    search_vdw->add_option("--a-range", opt.a_range, "|a| bound")->check(CLI::NonNegativeNumber);
    search_vdw->add_option("--r-range", opt.r_range, "|r| bound")->check(CLI::NonNegativeNumber);
    search_vdw->add_flag("--positive-r", opt.positive_r, "Only r >= 1");
    add_search_common(search_vdw, opt);

    auto* search_ip = app.add_subcommand("search-ip", "Find a + p_i(sum f over F) monochromatic");
    search_ip->add_option("--polys", opt.polys, "Comma-separated polynomials in n")->required();
    search_ip->add_option("--f", opt.fs, "Sequence: id | const:c | pow:e | table:v1,...")->required();
    search_ip->add_option("--a-range", opt.a_range, "|a| bound")->check(CLI::NonNegativeNumber);
    search_ip->add_option("--max-index", opt.max_index, "N: F is a subset of [1, N]");
    search_ip->add_option("--max-size", opt.max_size, "Largest |F| (default N)");
    add_search_common(search_ip, opt);

    auto* search_multi = app.add_subcommand("search-multi", "Multivariable IP polynomial search");
    search_multi->add_option("--polys", opt.polys, "Comma-separated polynomials in x1..xk")->required();
    search_multi->add_option("--f", opt.fs, "Sequence per variable (or one for all)")->required();
    search_multi->add_option("--a-range", opt.a_range, "|a| bound")->check(CLI::NonNegativeNumber);
    search_multi->add_option("--max-index", opt.max_index, "N or N1,...,Nk");
    search_multi->add_option("--max-size", opt.max_size, "Largest |F_i|, one or per variable");
    add_search_common(search_multi, opt);

    auto* search_ap = app.add_subcommand("search-ap", "Monochromatic arithmetic progression in [lo, hi]");
    search_ap->add_option("--length", opt.length, "Progression length")->check(CLI::PositiveNumber);
    search_ap->add_option("--lo", opt.lo, "Window start");
    search_ap->add_option("--hi", opt.hi, "Window end");
    add_search_common(search_ap, opt);

    auto* analyze = app.add_subcommand("analyze-semigroup", "Check a partial operation table");
    analyze->alias("analyze");
    analyze->add_option("--table", opt.table_file, "Table file (elements: n / i j -> k)");
    analyze->add_option("--etas", opt.etas, "Polynomials whose encodings generate a truncated structure");
    analyze->add_option("--structure", opt.structure, "s or v")->check(CLI::IsMember({"s", "v"}));
    analyze->add_option("--r-bound", opt.r_bound, "Diagonal scalars |r| bound")->check(CLI::NonNegativeNumber);
    analyze->add_option("--pool", opt.pool, "Ir pool literals separated by ';'");
    analyze->add_option("--pool-size", opt.pool_size, "Generated pool size when --pool is absent")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--write-table", opt.write_file, "Also write the table to this file");
    add_common(analyze, opt);

    auto* axioms = app.add_subcommand("check-axioms", "Fuzz associativity and commutativity of addition");
    axioms->add_option("--cap", opt.cap, "Length cap / block size");
    axioms->add_option("--trials", opt.trials, "Random triples");
    axioms->add_option("--seed", opt.seed, "RNG seed");
    add_common(axioms, opt);

    std::vector<std::string> argv_store{"polyvdw"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_store) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        if (opt.json_mode) {
            json doc = document("error");
            doc["error"] = json{{"kind", "UsageError"}, {"message", e.what()}};
            out << doc.dump(2) << '\n';
        }
        return kInputError;
    }

    const Output o{out, opt.json_mode};
    try {
        if (eval->parsed()) {
            return cmd_eval(opt, o);
        }
        if (add_cmd->parsed()) {
            return cmd_add(opt, o);
        }
        if (scale->parsed()) {
            return cmd_scale(opt, o);
        }
        if (encode->parsed()) {
            return cmd_encode(opt, o);
        }
        if (shift_cmd->parsed()) {
            return cmd_shift(opt, o);
        }
        if (search_vdw->parsed()) {
            return cmd_search_vdw(opt, o);
        }
        if (search_ip->parsed()) {
            return cmd_search_ip(opt, o);
        }
        if (search_multi->parsed()) {
            return cmd_search_multi(opt, o);
        }
        if (search_ap->parsed()) {
            return cmd_search_ap(opt, o);
        }
        if (analyze->parsed()) {
            return cmd_analyze(opt, o);
        }
        return cmd_check_axioms(opt, o);
    } catch (const Error& e) {
        const auto* syntax = dynamic_cast<const SyntaxError*>(&e);
        err << "error: " << e.what() << '\n';
        if (opt.json_mode) {
            json doc = document("error");
            doc["error"] = json{{"kind", std::string(error_kind_name(e.kind()))}, {"message", e.what()}};
            if (syntax != nullptr) {
                doc["error"]["position"] = syntax->position();
            }
            out << doc.dump(2) << '\n';
        }
    }
    return kInputError;
}

}  // namespace polyvdw::cli
