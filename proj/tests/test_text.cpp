#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "polyvdw/random.hpp"
#include "polyvdw/text.hpp"

using namespace polyvdw;

namespace {

ErrorKind error_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::EmptyCoeffs;
}

std::size_t syntax_position(std::string_view text)
{
    try {
        parse_polynomial(text);
    } catch (const SyntaxError& e) {
        return e.position();
    }
    return std::string_view::npos;
}

}  // namespace

TEST_CASE("polynomial grammar")
{
    CHECK(std::get<IntPoly>(parse_polynomial("3n^2 + 2n")) == IntPoly({0, 2, 3}));
    CHECK(std::get<IntPoly>(parse_polynomial("-n")) == IntPoly({0, -1}));
    CHECK(std::get<IntPoly>(parse_polynomial(" 2 * n ^ 3 - n*n ")) == IntPoly({0, 0, -1, 2}));
    CHECK(std::get<IntPoly>(parse_polynomial("n+1")) == IntPoly({1, 1}));
    CHECK(std::get<IntPoly>(parse_polynomial("n - n")).is_zero());

    const MultiIntPoly q = std::get<MultiIntPoly>(parse_polynomial("x1^2*x2 - 4x3"));
    CHECK(q.k() == 3);
    REQUIRE(q.monomials().size() == 2);
    CHECK(q.monomials().at({2, 1, 0}) == 1);
    CHECK(q.monomials().at({0, 0, 1}) == -4);
    const MultiIntPoly glued = std::get<MultiIntPoly>(parse_polynomial("2x1x2"));
    CHECK(glued.monomials().at({1, 1}) == 2);

    CHECK(syntax_position("3n^") == 3);
    CHECK(syntax_position("3n +") == 4);
    CHECK(syntax_position("n ^ x") == 4);
    CHECK(syntax_position("x") == 1);
    CHECK(syntax_position("2n)") == 2);
    CHECK(error_of([] { parse_polynomial("n + x1"); }) == ErrorKind::MixedVariableStyles);
    CHECK(error_of([] { parse_polynomial_list("n, x1"); }) == ErrorKind::MixedVariableStyles);
    CHECK(error_of([] { parse_polynomial("99999999999999999999n"); }) == ErrorKind::Overflow);
}

TEST_CASE("polynomial lists")
{
    const auto one = parse_polynomial_list("n, n^2");
    REQUIRE(one.size() == 2);
    CHECK(std::get<IntPoly>(one[1]) == IntPoly({0, 0, 1}));
    const auto many = parse_polynomial_list("x1*x2, x1^2");
    CHECK(std::holds_alternative<MultiIntPoly>(many[0]));
    CHECK(std::holds_alternative<MultiIntPoly>(many[1]));
}

TEST_CASE("term and symbolic literals")
{
    const Term t = parse_term("T{2;3,-1}");
    CHECK(t.iota() == 2);
    CHECK(t.cap() == 2);
    CHECK(parse_term(" T{ 2 ; 3 , -1 } ", 5).cap() == 5);
    CHECK(error_of([] { parse_term("T{2;}"); }) == ErrorKind::EmptyCoeffs);
    CHECK(error_of([] { parse_term("T{2;1,2}", 1); }) == ErrorKind::CapExceeded);
    CHECK(error_of([] { parse_term("T{2,1}"); }) == ErrorKind::SyntaxError);

    const SymPoly x = parse_sympoly("T{3;1,1} + T{1;2}");
    CHECK(to_string(x) == "T{1;2} + T{3;1,1}");
    CHECK(x.cap() == 2);
    CHECK(error_of([] { parse_sympoly("T{1;2} + T{1;3}"); }) == ErrorKind::NotIrreducible);

    const MultiTerm m = parse_multiterm("M{1; [2]; []}");
    CHECK(m.shape() == MultiShape{2, 1});
    CHECK(to_string(m) == "M{1; [2]; []}");
    CHECK(parse_multiterm("M{5;[];[]}").shape() == MultiShape{2, 1});
    CHECK(error_of([] { parse_multiterm("M{5;[1]}"); }) == ErrorKind::InvalidShape);
}

TEST_CASE("index sets and sequences")
{
    CHECK(to_string(parse_index_set("{3, 1}")) == "{1,3}");
    CHECK(to_string(parse_index_set("2,5")) == "{2,5}");
    CHECK(error_of([] { parse_index_set("{}"); }) == ErrorKind::InvalidIndexSet);
    CHECK(parse_sequence("id") == SequenceSpec::identity());
    CHECK(parse_sequence("const:-4") == SequenceSpec::constant(-4));
    CHECK(parse_sequence("pow:3") == SequenceSpec::power(3));
    CHECK(parse_sequence("table:1, -2,3") == SequenceSpec::table({1, -2, 3}));
    CHECK(error_of([] { parse_sequence("sqrt:2"); }) == ErrorKind::SyntaxError);
    CHECK(error_of([] { parse_sequence("identity"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("coloring literals")
{
    const Coloring parity = parse_coloring("mod:2:0,1");
    CHECK(parity.kind() == Coloring::Kind::Modular);
    CHECK(parity.color(-3) == std::optional<int>(1));
    CHECK(error_of([] { parse_coloring("mod:2:0"); }) == ErrorKind::BadColorCount);
    CHECK(error_of([] { parse_coloring("mod:2:0,-1"); }) == ErrorKind::BadColorCount);

    const Coloring a = parse_coloring("random:3:42:-100:100");
    const Coloring b = parse_coloring("random:3:42:-100:100");
    CHECK(a == b);
    CHECK(a.window() == std::optional<std::pair<Int, Int>>({-100, 100}));
    CHECK_FALSE(a.color(101).has_value());
    CHECK(a.color_count() == 3);
    CHECK_FALSE(a == parse_coloring("random:3:43:-100:100"));

    const Coloring e = parse_coloring("explicit:-1:0,1,1");
    CHECK(e.color(-1) == std::optional<int>(0));
    CHECK(e.color(1) == std::optional<int>(1));
    CHECK_FALSE(e.color(2).has_value());
    CHECK(error_of([] { parse_coloring("stripes:2"); }) == ErrorKind::SyntaxError);
    CHECK(error_of([] { parse_coloring("file:/nonexistent/colors.txt"); }) == ErrorKind::FileUnreadable);
}

TEST_CASE("coloring files")
{
    const std::string path = "polyvdw_test_colors.txt";
    {
        std::ofstream out(path);
        out << "# two colors\n3 1\n1 0\n2 1\n\n";
    }
    const Coloring c = parse_coloring("file:" + path);
    CHECK(c == Coloring::explicit_window(1, {0, 1, 1}));
    {
        std::ofstream out(path);
        out << "1 0\n3 1\n";
    }
    CHECK(error_of([&] { parse_coloring("file:" + path); }) == ErrorKind::SyntaxError);
    std::remove(path.c_str());
}

TEST_CASE("emitted literals parse back to equal values")
{
    Rng rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        const IntPoly p = random_intpoly(rng, 5, {-30, 30});
        CHECK(std::get<IntPoly>(parse_polynomial(to_string(p))) == p);
        const MultiIntPoly q = random_multiintpoly(rng, 3, 4, 5, {-30, 30});
        CHECK(std::get<MultiIntPoly>(parse_polynomial(to_string(q))).widened(3) == q);
        const SymPoly x = random_sympoly(rng, 4, 4, {-5, 5}, {-9, 9});
        CHECK(parse_sympoly(to_string(x), x.cap()) == x);
        const Term t = random_term(rng, 4, {-5, 5}, {-9, 9});
        CHECK(parse_term(to_string(t), 4) == t);
        const MultiSymPoly m = random_multisympoly(rng, {2, 3}, 3, {-2, 2}, {-5, 5});
        CHECK(parse_multisympoly(to_string(m), m.shape()) == m);
    }
    for (const char* literal : {"mod:3:0,2,1", "random:2:7:-5:5", "explicit:4:1,0,1"}) {
        const Coloring c = parse_coloring(literal);
        CHECK(to_string(c) == literal);
        CHECK(parse_coloring(to_string(c)) == c);
    }
    CHECK(to_string(IntPoly()) == "0");
    CHECK(to_string(IntPoly({0, -1, 0, 2})) == "2n^3 - n");
}
