#include <doctest.h>

#include "polyvdw/evaluation.hpp"
#include "polyvdw/random.hpp"
#include "polyvdw/text.hpp"
#include "reference.hpp"

using namespace polyvdw;

namespace {

SymPoly P(std::string_view text, std::size_t cap = 4)
{
    return parse_sympoly(text, cap);
}

ErrorKind error_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::SyntaxError;
}

MultiIntPoly multi(std::size_t k, std::initializer_list<std::pair<Exponents, Int>> monomials)
{
    MultiIntPoly p(k);
    for (const auto& [e, c] : monomials) {
        p.add_monomial(e, c);
    }
    return p;
}

}  // namespace

TEST_CASE("pi on terms and polynomials")
{
    CHECK(pi_term(parse_term("T{2;3,-1}")) == -6);
    CHECK(pi_term(parse_term("T{7;1,1,1}")) == 7);
    CHECK(pi_term(parse_term("T{0;5}")) == 0);
    CHECK(pi_poly(P("T{2;3} + T{1;4,5}")) == 26);
    CHECK(pi_poly(P("T{4;2,2}")) == 16);
}

TEST_CASE("pi is not additive on compatible pairs")
{
    const SymPoly a = P("T{2;3,1}");
    const SymPoly b = P("T{2;5,1}");
    CHECK(pi_poly(add(a, b)) == 32);
    CHECK(pi_poly(a) + pi_poly(b) == 16);
}

TEST_CASE("P_x evaluation")
{
    CHECK(eval_px(P("T{2;3}")) == IntPoly({0, 6}));
    CHECK(eval_px(P("T{1;1} + T{2;1}")) == IntPoly({0, 3}));
    CHECK(eval_px(P("T{2;1} + T{3;1,1}")) == IntPoly({0, 2, 3}));
}

TEST_CASE("one-variable encoding")
{
    CHECK(encode_poly(IntPoly({0, 2, 3}), 4) == P("T{2;1} + T{3;1,1}"));
    CHECK(encode_poly(IntPoly({0, 1}), 4) == P("T{1;1}"));
    CHECK(error_of([] { encode_poly(IntPoly({1, 1}), 4); }) == ErrorKind::ConstantTermNonzero);
    CHECK(error_of([] { encode_poly(IntPoly({0, 0, 0, 0, 0, 1}), 4); }) == ErrorKind::DegreeExceedsCap);
    CHECK(error_of([] { encode_poly(IntPoly(), 4); }) == ErrorKind::ZeroPolynomial);
}

TEST_CASE("multivariable evaluation and encoding")
{
    const MultiShape shape{2, 2};
    const MultiSymPoly five = MultiSymPoly::single(MultiTerm::make(5, {{}, {}}, shape));
    CHECK(eval_pmulti(five) == multi(2, {{{0, 0}, 5}}));
    const MultiSymPoly zeroed = MultiSymPoly::single(MultiTerm::make(5, {{0}, {1}}, shape));
    CHECK(eval_pmulti(zeroed).is_zero());

    const MultiEncoding xy = encode_multi(multi(2, {{{1, 1}, 1}}));
    CHECK(xy.m == 2);
    CHECK(to_string(xy.eta) == "M{1; [1]; [1]}");

    const MultiIntPoly p = multi(2, {{{2, 0}, 4}, {{0, 1}, 1}});
    const MultiEncoding enc = encode_multi(p);
    CHECK(enc.m == 3);
    CHECK(enc.eta.size() == 2);
    CHECK(eval_pmulti(enc.eta) == p);

    CHECK(error_of([] { encode_multi(multi(2, {{{0, 0}, 7}})); }) == ErrorKind::ConstantTermPresent);
    CHECK(error_of([] { encode_multi(MultiIntPoly(2)); }) == ErrorKind::ZeroPolynomial);
    CHECK(encode_multi(p, 5).m == 5);
    CHECK(error_of([&] { encode_multi(p, 2); }) == ErrorKind::InvalidShape);
}

TEST_CASE("diagonal scaling of an encoding evaluates the polynomial")
{
    Rng rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
        const IntPoly p = random_intpoly(rng, 5, {-20, 20});
        const Int r = uniform(rng, {-6, 6});
        CHECK(pi_poly(scale_diagonal(r, encode_poly(p, 5))) == ref::eval(p, r));
    }
}

TEST_CASE("round trips and coherence on random inputs")
{
    Rng rng(23);
    for (int trial = 0; trial < 2000; ++trial) {
        const IntPoly p = random_intpoly(rng, 6, {-20, 20});
        CHECK(eval_px(encode_poly(p, 6)) == p);

        const MultiIntPoly q = random_multiintpoly(rng, 3, 4, 6, {-20, 20});
        CHECK(eval_pmulti(encode_multi(q).eta) == q);

        const SymPoly x = random_sympoly(rng, 4, 4, {-3, 3}, {-9, 9});
        CHECK(pi_poly(x) == ref::pi(x));
        CHECK(pi_poly(x) == eval_px(x)(1));

        const SymPoly y = random_sympoly(rng, 4, 4, {-3, 3}, {-9, 9});
        if (in_ir(x, y)) {
            CHECK(pi_poly(add(x, y)) == pi_poly(x) + pi_poly(y));
            CHECK(eval_px(add(x, y)) == eval_px(x) + eval_px(y));
        }
    }
}
