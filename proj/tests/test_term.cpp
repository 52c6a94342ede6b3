#include <doctest.h>

#include <limits>

#include "polyvdw/random.hpp"
#include "polyvdw/term.hpp"

using namespace polyvdw;

namespace {

Term T(Int iota, std::vector<Int> coeffs, std::size_t cap = 4)
{
    return Term::make(iota, std::move(coeffs), cap);
}

template <typename F>
ErrorKind kind_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::SyntaxError;
}

}  // namespace

TEST_CASE("make stores fields")
{
    const Term t = T(2, {3, -1});
    CHECK(t.iota() == 2);
    CHECK(t.length() == 2);
    CHECK(t.cap() == 4);
    CHECK(t.coeffs()[0] == 3);
    CHECK(t.coeffs()[1] == -1);
    CHECK(to_string(t) == "T{2;3,-1}");
}

TEST_CASE("make rejects bad lengths")
{
    CHECK(kind_of([] { T(0, {}); }) == ErrorKind::EmptyCoeffs);
    CHECK(kind_of([] { T(5, {1, 1, 1, 1, 1}); }) == ErrorKind::CapExceeded);
}

TEST_CASE("compatibility")
{
    CHECK(compatible(T(2, {3}), T(2, {5})));
    CHECK_FALSE(compatible(T(2, {3}), T(3, {3})));
    CHECK_FALSE(compatible(T(2, {3}), T(2, {3, 0})));
}

TEST_CASE("order is lexicographic on length then head")
{
    CHECK(order_less(T(9, {1}), T(0, {1, 1})));
    CHECK(order_less(T(1, {7}), T(2, {0})));
    CHECK_FALSE(order_less(T(1, {7}), T(1, {8})));
    CHECK_FALSE(order_less(T(1, {8}), T(1, {7})));
}

TEST_CASE("compatible addition")
{
    CHECK(add_compatible(T(2, {3}), T(2, {5})) == T(2, {8}));
    CHECK(add_compatible(T(1, {2, -2}), T(1, {-2, 2})) == T(1, {0, 0}));
    CHECK(kind_of([] { add_compatible(T(2, {3}), T(3, {3})); }) == ErrorKind::NotCompatible);
    CHECK(kind_of([] { add_compatible(T(2, {3}, 4), T(2, {3}, 5)); }) == ErrorKind::MixedCaps);
    const Int big = std::numeric_limits<Int>::max();
    CHECK(kind_of([&] { add_compatible(T(1, {big}), T(1, {1})); }) == ErrorKind::Overflow);
}

TEST_CASE("bullet action")
{
    const std::vector<Int> r23{2, 3};
    CHECK(scale_term(r23, T(5, {1, 1})) == T(5, {2, 3}));
    const std::vector<Int> ones{1, 1, 1, 1};
    CHECK(scale_term(ones, T(5, {4, -2})) == T(5, {4, -2}));
    const std::vector<Int> zero{0};
    CHECK(scale_term(zero, T(5, {7})) == T(5, {0}));
    CHECK(kind_of([&] { scale_term(zero, T(5, {7, 1})); }) == ErrorKind::VectorTooShort);
}

TEST_CASE("algebraic properties on random terms")
{
    Rng rng(11);
    const Range iota{0, 2};
    const Range coeff{-9, 9};
    for (int trial = 0; trial < 2000; ++trial) {
        const Term t = random_term(rng, 3, iota, coeff);
        const Term u = random_term(rng, 3, iota, coeff);
        const Term v = random_term(rng, 3, iota, coeff);
        CHECK(compatible(t, t));
        CHECK(compatible(t, u) == compatible(u, t));
        if (compatible(t, u) && compatible(u, v)) {
            CHECK(compatible(t, v));
            CHECK(add_compatible(t, u) == add_compatible(u, t));
            CHECK(add_compatible(add_compatible(t, u), v) == add_compatible(t, add_compatible(u, v)));
        }
        // Exactly one of t < u, u < t on irreducible pairs.
        if (!compatible(t, u)) {
            CHECK(order_less(t, u) != order_less(u, t));
        }
        std::vector<Int> r(3);
        std::vector<Int> s(3);
        std::vector<Int> rs(3);
        for (std::size_t j = 0; j < 3; ++j) {
            r[j] = uniform(rng, coeff);
            s[j] = uniform(rng, coeff);
            rs[j] = r[j] + s[j];
        }
        CHECK(add_compatible(scale_term(r, t), scale_term(s, t)) == scale_term(rs, t));
        if (compatible(t, u)) {
            CHECK(scale_term(r, add_compatible(t, u)) == add_compatible(scale_term(r, t), scale_term(r, u)));
        }
    }
}
