#include "polyvdw/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace polyvdw {

namespace {

// Reader over the original text that skips whitespace before every token,
// so reported offsets always refer to the caller's string.
class Cursor {
public:
    explicit Cursor(std::string_view text) : m_text(text) {}

    void skip_space()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }

    bool at_end()
    {
        skip_space();
        return m_pos == m_text.size();
    }

    char peek()
    {
        skip_space();
        return m_pos < m_text.size() ? m_text[m_pos] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c && c != '\0') {
            ++m_pos;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    void expect_end()
    {
        if (!at_end()) {
            fail(std::string("unexpected '") + m_text[m_pos] + "'");
        }
    }

    bool digit_next()
    {
        return std::isdigit(static_cast<unsigned char>(peek())) != 0;
    }

    // Optional sign, then at least one digit.
    Int integer()
    {
        skip_space();
        const std::size_t start = m_pos;
        bool negative = false;
        if (accept('-')) {
            negative = true;
        } else {
            accept('+');
        }
        return unsigned_integer(start, negative);
    }

    Int unsigned_integer(std::size_t start, bool negative = false)
    {
        skip_space();
        const std::size_t begin = m_pos;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
        if (begin == m_pos) {
            fail("expected an integer");
        }
        // Parse with the sign attached so the most negative value fits.
        std::string digits(m_text.substr(begin, m_pos - begin));
        if (negative) {
            digits.insert(digits.begin(), '-');
        }
        Int value = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw Error(ErrorKind::Overflow, "integer at offset " + std::to_string(start) + " out of range");
        }
        return value;
    }

    std::vector<Int> integer_list(char close)
    {
        std::vector<Int> out;
        if (peek() == close) {
            return out;
        }
        do {
            out.push_back(integer());
        } while (accept(','));
        return out;
    }

    std::size_t pos() const noexcept { return m_pos; }
    void seek(std::size_t pos) noexcept { m_pos = std::min(pos, m_text.size()); }

    std::string_view rest() const noexcept { return m_text.substr(m_pos); }

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(m_pos, what); }

private:
    std::string_view m_text;
    std::size_t m_pos = 0;
};

struct RawTerm {
    Int iota;
    std::vector<Int> coeffs;
};

RawTerm read_term(Cursor& in)
{
    in.expect('T');
    in.expect('{');
    const Int iota = in.integer();
    in.expect(';');
    std::vector<Int> coeffs = in.integer_list('}');
    in.expect('}');
    return {iota, std::move(coeffs)};
}

struct RawMultiTerm {
    Int iota;
    std::vector<std::vector<Int>> blocks;
};

RawMultiTerm read_multiterm(Cursor& in)
{
    in.expect('M');
    in.expect('{');
    RawMultiTerm out{in.integer(), {}};
    while (in.accept(';')) {
        in.expect('[');
        out.blocks.push_back(in.integer_list(']'));
        in.expect(']');
    }
    in.expect('}');
    return out;
}

MultiShape default_shape(const std::vector<RawMultiTerm>& terms)
{
    MultiShape shape{terms.front().blocks.size(), 1};
    for (const RawMultiTerm& t : terms) {
        for (const auto& block : t.blocks) {
            shape.m = std::max(shape.m, block.size());
        }
    }
    return shape;
}

enum class VarStyle { None, N, X };

struct Monomial {
    Int coeff;
    // Index 0 is n for the one-variable style, x_i sits at i - 1 otherwise.
    std::vector<unsigned> exps;
};

struct RawPoly {
    VarStyle style = VarStyle::None;
    std::vector<Monomial> monomials;
};

void note_style(RawPoly& poly, VarStyle style, std::size_t pos)
{
    if (poly.style != VarStyle::None && poly.style != style) {
        throw Error(ErrorKind::MixedVariableStyles,
                    "variable at offset " + std::to_string(pos) + " mixes n with x1..xk");
    }
    poly.style = style;
}

// One signed monomial: [coefficient] [*] factor ([*] factor)*.
Monomial read_monomial(Cursor& in, RawPoly& poly, bool negative)
{
    Monomial mono{1, {}};
    bool any = false;
    if (in.digit_next()) {
        mono.coeff = in.unsigned_integer(in.pos());
        any = true;
    }
    while (true) {
        const std::size_t factor_pos = (in.skip_space(), in.pos());
        if (any && in.peek() == '*') {
            in.accept('*');
            const char next = in.peek();
            if (next != 'n' && next != 'x') {
                in.fail("expected a variable after '*'");
            }
        }
        const char c = in.peek();
        std::size_t var = 0;
        if (c == 'n') {
            in.accept('n');
            note_style(poly, VarStyle::N, factor_pos);
        } else if (c == 'x') {
            in.accept('x');
            // The index is glued to the x.
            if (in.rest().empty() || !std::isdigit(static_cast<unsigned char>(in.rest().front()))) {
                in.fail("expected a variable index after 'x'");
            }
            const Int index = in.unsigned_integer(in.pos());
            if (index < 1 || index > 64) {
                throw SyntaxError(factor_pos, "variable index must be in [1, 64]");
            }
            note_style(poly, VarStyle::X, factor_pos);
            var = static_cast<std::size_t>(index - 1);
        } else {
            break;
        }
        unsigned e = 1;
        if (in.accept('^')) {
            if (!in.digit_next()) {
                in.fail("expected an exponent");
            }
            const Int value = in.unsigned_integer(in.pos());
            if (value > 64) {
                throw SyntaxError(in.pos(), "exponent larger than 64");
            }
            e = static_cast<unsigned>(value);
        }
        if (mono.exps.size() <= var) {
            mono.exps.resize(var + 1, 0);
        }
        mono.exps[var] += e;
        any = true;
    }
    if (!any) {
        in.fail("expected a coefficient or a variable");
    }
    if (negative) {
        mono.coeff = checked::sub(0, mono.coeff);
    }
    return mono;
}

RawPoly read_polynomial(Cursor& in)
{
    RawPoly poly;
    bool negative = false;
    if (in.accept('-')) {
        negative = true;
    } else {
        in.accept('+');
    }
    poly.monomials.push_back(read_monomial(in, poly, negative));
    while (true) {
        if (in.accept('+')) {
            negative = false;
        } else if (in.accept('-')) {
            negative = true;
        } else {
            break;
        }
        poly.monomials.push_back(read_monomial(in, poly, negative));
    }
    return poly;
}

AnyPoly build_poly(const RawPoly& raw)
{
    if (raw.style == VarStyle::X) {
        std::size_t k = 1;
        for (const Monomial& mono : raw.monomials) {
            k = std::max(k, mono.exps.size());
        }
        MultiIntPoly out(k);
        for (const Monomial& mono : raw.monomials) {
            Exponents exps(k, 0);
            std::copy(mono.exps.begin(), mono.exps.end(), exps.begin());
            out.add_monomial(exps, mono.coeff);
        }
        return out;
    }
    std::vector<Int> coeffs;
    for (const Monomial& mono : raw.monomials) {
        const std::size_t degree = mono.exps.empty() ? 0 : mono.exps[0];
        if (coeffs.size() <= degree) {
            coeffs.resize(degree + 1, 0);
        }
        coeffs[degree] = checked::add(coeffs[degree], mono.coeff);
    }
    return IntPoly(std::move(coeffs));
}

Coloring read_color_file(const std::string& path)
{
    std::ifstream file(path);
    if (!file) {
        throw Error(ErrorKind::FileUnreadable, "cannot read coloring file '" + path + "'");
    }
    std::map<Int, int> colors;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        Int z = 0;
        long long color = 0;
        if (!(fields >> z)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            throw SyntaxError(0, path + ":" + std::to_string(line_no) + ": expected `integer color`");
        }
        std::string extra;
        if (!(fields >> color) || (fields >> extra)) {
            throw SyntaxError(0, path + ":" + std::to_string(line_no) + ": expected `integer color`");
        }
        if (color < 0 || color > 1'000'000) {
            throw Error(ErrorKind::BadColorCount, path + ":" + std::to_string(line_no) + ": bad color id");
        }
        if (!colors.emplace(z, static_cast<int>(color)).second) {
            throw SyntaxError(0, path + ":" + std::to_string(line_no) + ": " + std::to_string(z)
                                     + " colored twice");
        }
    }
    if (colors.empty()) {
        throw Error(ErrorKind::BadColorCount, "coloring file '" + path + "' colors nothing");
    }
    const Int lo = colors.begin()->first;
    std::vector<int> table;
    Int expected = lo;
    for (const auto& [z, c] : colors) {
        if (z != expected) {
            throw SyntaxError(0, path + ": " + std::to_string(expected) + " has no color");
        }
        table.push_back(c);
        ++expected;
    }
    return Coloring::explicit_window(lo, std::move(table));
}

std::string strip(std::string_view text)
{
    std::string out(text);
    std::erase_if(out, [](unsigned char c) { return std::isspace(c) != 0; });
    return out;
}

std::vector<int> to_colors(const std::vector<Int>& values)
{
    std::vector<int> out;
    for (Int v : values) {
        if (v < 0 || v > 1'000'000) {
            throw Error(ErrorKind::BadColorCount, "color id " + std::to_string(v) + " out of range");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

template <typename Range>
std::string join_ints(const Range& values)
{
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(v);
    }
    return out;
}

// Appends one monomial `coeff * body` to out with sign handling.
void append_monomial(std::string& out, Int coeff, const std::string& body)
{
    const bool negative = coeff < 0;
    if (out.empty()) {
        out += negative ? "-" : "";
    } else {
        out += negative ? " - " : " + ";
    }
    // |coeff| as unsigned so the most negative value prints correctly.
    const std::uint64_t magnitude = negative ? 0 - static_cast<std::uint64_t>(coeff) : static_cast<std::uint64_t>(coeff);
    if (magnitude != 1 || body.empty()) {
        out += std::to_string(magnitude);
    }
    out += body;
}

}  // namespace

Term parse_term(std::string_view text, std::optional<std::size_t> cap)
{
    Cursor in(text);
    RawTerm raw = read_term(in);
    in.expect_end();
    const std::size_t c = cap.value_or(raw.coeffs.size());
    return Term::make(raw.iota, std::move(raw.coeffs), c);
}

SymPoly parse_sympoly(std::string_view text, std::optional<std::size_t> cap)
{
    Cursor in(text);
    std::vector<RawTerm> raw;
    do {
        raw.push_back(read_term(in));
    } while (in.accept('+'));
    in.expect_end();
    std::size_t c = 0;
    for (const RawTerm& t : raw) {
        c = std::max(c, t.coeffs.size());
    }
    c = cap.value_or(c);
    std::vector<Term> terms;
    for (RawTerm& t : raw) {
        terms.push_back(Term::make(t.iota, std::move(t.coeffs), c));
    }
    return SymPoly::make(std::move(terms));
}

MultiTerm parse_multiterm(std::string_view text, std::optional<MultiShape> shape)
{
    Cursor in(text);
    std::vector<RawMultiTerm> raw{read_multiterm(in)};
    in.expect_end();
    const MultiShape s = shape.value_or(default_shape(raw));
    return MultiTerm::make(raw[0].iota, std::move(raw[0].blocks), s);
}

MultiSymPoly parse_multisympoly(std::string_view text, std::optional<MultiShape> shape)
{
    Cursor in(text);
    std::vector<RawMultiTerm> raw;
    do {
        raw.push_back(read_multiterm(in));
    } while (in.accept('+'));
    in.expect_end();
    const MultiShape s = shape.value_or(default_shape(raw));
    std::vector<MultiTerm> terms;
    for (RawMultiTerm& t : raw) {
        terms.push_back(MultiTerm::make(t.iota, std::move(t.blocks), s));
    }
    return MultiSymPoly::make(std::move(terms));
}

AnyPoly parse_polynomial(std::string_view text)
{
    Cursor in(text);
    const RawPoly raw = read_polynomial(in);
    in.expect_end();
    return build_poly(raw);
}

std::vector<AnyPoly> parse_polynomial_list(std::string_view text)
{
    Cursor in(text);
    std::vector<RawPoly> raws;
    RawPoly combined;
    do {
        const std::size_t start = (in.skip_space(), in.pos());
        raws.push_back(read_polynomial(in));
        if (raws.back().style != VarStyle::None) {
            note_style(combined, raws.back().style, start);
        }
    } while (in.accept(','));
    in.expect_end();
    std::vector<AnyPoly> out;
    for (const RawPoly& raw : raws) {
        RawPoly styled = raw;
        if (combined.style == VarStyle::X) {
            styled.style = VarStyle::X;
        }
        out.push_back(build_poly(styled));
    }
    return out;
}

IndexSet parse_index_set(std::string_view text)
{
    Cursor in(text);
    const bool braced = in.accept('{');
    std::vector<Int> elements = in.integer_list(braced ? '}' : '\0');
    if (braced) {
        in.expect('}');
    }
    in.expect_end();
    return IndexSet::make(std::move(elements));
}

SequenceSpec parse_sequence(std::string_view text)
{
    const auto colon = text.find(':');
    const std::string name = strip(text.substr(0, colon == std::string_view::npos ? text.size() : colon));
    if (colon == std::string_view::npos) {
        if (name == "id") {
            return SequenceSpec::identity();
        }
        throw SyntaxError(0, "expected id, const:c, pow:e or table:v1,...");
    }
    Cursor args(text);
    args.seek(colon + 1);
    if (name == "const") {
        const Int c = args.integer();
        args.expect_end();
        return SequenceSpec::constant(c);
    }
    if (name == "pow") {
        const Int e = args.integer();
        if (e < 0 || e > 64) {
            throw SyntaxError(colon + 1, "exponent must be in [0, 64]");
        }
        args.expect_end();
        return SequenceSpec::power(static_cast<unsigned>(e));
    }
    if (name == "table") {
        std::vector<Int> values = args.integer_list('\0');
        args.expect_end();
        return SequenceSpec::table(std::move(values));
    }
    throw SyntaxError(0, "unknown sequence kind '" + name + "'");
}

Coloring parse_coloring(std::string_view text)
{
    const auto colon = text.find(':');
    const std::string kind = strip(text.substr(0, colon == std::string_view::npos ? text.size() : colon));
    if (colon == std::string_view::npos) {
        throw SyntaxError(text.size(), "expected ':' after the coloring kind");
    }
    if (kind == "file") {
        return read_color_file(std::string(text.substr(colon + 1)));
    }
    Cursor in(text);
    in.seek(colon + 1);
    if (kind == "mod") {
        const Int q = in.integer();
        in.expect(':');
        const std::vector<Int> colors = in.integer_list('\0');
        in.expect_end();
        if (q < 1 || static_cast<Int>(colors.size()) != q) {
            throw Error(ErrorKind::BadColorCount, "mod:" + std::to_string(q) + " needs exactly "
                                                      + std::to_string(q) + " residue colors, got "
                                                      + std::to_string(colors.size()));
        }
        return Coloring::modular(to_colors(colors));
    }
    if (kind == "random") {
        const Int r = in.integer();
        in.expect(':');
        const Int seed = in.integer();
        in.expect(':');
        const Int lo = in.integer();
        in.expect(':');
        const Int hi = in.integer();
        in.expect_end();
        if (r < 1 || r > 1'000'000) {
            throw Error(ErrorKind::BadColorCount, "color count must be in [1, 1000000]");
        }
        if (seed < 0) {
            throw SyntaxError(colon + 1, "seed must be nonnegative");
        }
        return Coloring::seeded_random(static_cast<int>(r), static_cast<std::uint64_t>(seed), lo, hi);
    }
    if (kind == "explicit") {
        const Int lo = in.integer();
        in.expect(':');
        const std::vector<Int> colors = in.integer_list('\0');
        in.expect_end();
        return Coloring::explicit_window(lo, to_colors(colors));
    }
    throw SyntaxError(0, "unknown coloring kind '" + kind + "'");
}

std::string to_string(const IntPoly& p)
{
    std::string out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Int c = p.coeffs()[i];
        if (c == 0) {
            continue;
        }
        std::string body;
        if (i >= 1) {
            body = "n";
        }
        if (i >= 2) {
            body += "^" + std::to_string(i);
        }
        append_monomial(out, c, body);
    }
    return out.empty() ? "0" : out;
}

std::string to_string(const MultiIntPoly& p)
{
    std::string out;
    for (auto it = p.monomials().rbegin(); it != p.monomials().rend(); ++it) {
        const auto& [exps, c] = *it;
        std::string body;
        for (std::size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] == 0) {
                continue;
            }
            if (!body.empty()) {
                body += '*';
            }
            body += "x" + std::to_string(v + 1);
            if (exps[v] > 1) {
                body += "^" + std::to_string(exps[v]);
            }
        }
        append_monomial(out, c, body);
    }
    return out.empty() ? "0" : out;
}

std::string to_string(const AnyPoly& p)
{
    return std::visit([](const auto& q) { return to_string(q); }, p);
}

std::string to_string(const Coloring& c)
{
    switch (c.kind()) {
    case Coloring::Kind::Modular:
        return "mod:" + std::to_string(c.table().size()) + ":" + join_ints(c.table());
    case Coloring::Kind::Explicit:
        return "explicit:" + std::to_string(c.lo()) + ":" + join_ints(c.table());
    case Coloring::Kind::SeededRandom:
        return "random:" + std::to_string(c.color_count()) + ":" + std::to_string(c.seed()) + ":"
               + std::to_string(c.lo()) + ":" + std::to_string(c.window()->second);
    }
    return {};
}

}  // namespace polyvdw
