#include <doctest.h>

#include <algorithm>
#include <set>

#include "polyvdw/oracle.hpp"
#include "polyvdw/random.hpp"
#include "polyvdw/text.hpp"
#include "polyvdw/vdw_search.hpp"
#include "reference.hpp"

using namespace polyvdw;

namespace {

const Coloring kParity = Coloring::modular({0, 1});

std::vector<IntPoly> polys(std::string_view text)
{
    std::vector<IntPoly> out;
    for (const AnyPoly& p : parse_polynomial_list(text)) {
        out.push_back(std::get<IntPoly>(p));
    }
    return out;
}

std::vector<MultiIntPoly> multi_polys(std::string_view text)
{
    std::vector<MultiIntPoly> out;
    for (const AnyPoly& p : parse_polynomial_list(text)) {
        out.push_back(std::get<MultiIntPoly>(p));
    }
    return out;
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

// First (r, a) in the documented order at which {a + p_i(r)} is
// monochromatic and different polynomials give different values.
std::optional<std::pair<Int, Int>> brute_first(const std::vector<IntPoly>& ps, const Coloring& c, Int a_bound,
                                               Int r_bound)
{
    auto order = [](Int bound) {
        std::vector<Int> out{0};
        for (Int v = 1; v <= bound; ++v) {
            out.push_back(v);
            out.push_back(-v);
        }
        return out;
    };
    for (Int r : order(r_bound)) {
        bool collapsed = false;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                collapsed |= !(ps[i] == ps[j]) && ref::eval(ps[i], r) == ref::eval(ps[j], r);
            }
        }
        if (collapsed) {
            continue;
        }
        for (Int a : order(a_bound)) {
            std::set<int> colors;
            for (const IntPoly& p : ps) {
                colors.insert(*c.color(a + ref::eval(p, r)));
            }
            if (colors.size() == 1) {
                return std::pair{r, a};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("scan orders")
{
    CHECK(signed_scan_order(2) == std::vector<Int>{0, 1, -1, 2, -2});
    std::vector<std::string> sets;
    for (const IndexSet& s : ordered_index_sets(3, 3)) {
        sets.push_back(to_string(s));
    }
    CHECK(sets == std::vector<std::string>{"{1}", "{2}", "{1,2}", "{3}", "{1,3}", "{2,3}", "{1,2,3}"});
    CHECK(ordered_index_sets(4, 1).size() == 4);
    CHECK(ordered_index_sets(0, 3).empty());
}

TEST_CASE("one-variable finder")
{
    const auto ps = polys("n,n^2");
    const SearchResult result = find_poly_vdw(ps, kParity, 10, 10);
    REQUIRE(result.witness.has_value());
    const auto expected = brute_first(ps, kParity, 10, 10);
    REQUIRE(expected.has_value());
    CHECK(std::get<Int>(result.witness->param) == expected->first);
    CHECK(result.witness->a == expected->second);
    CHECK(std::get<Int>(result.witness->param) == -1);
    CHECK(result.witness->values == std::vector<Int>{-1, 1});
    CHECK(result.witness->color == 1);
    CHECK(verify_witness(*result.witness, ps, kParity));

    const SearchResult positive = find_poly_vdw(ps, kParity, 10, 10, {}, true);
    REQUIRE(positive.witness.has_value());
    CHECK(std::get<Int>(positive.witness->param) == 2);
    CHECK(positive.witness->values == std::vector<Int>{2, 4});

    const SearchResult loose = find_poly_vdw(ps, kParity, 10, 10, {false, 1});
    REQUIRE(loose.witness.has_value());
    CHECK(loose.witness->values == std::vector<Int>{0, 0});

    const auto square = polys("n^2");
    const SearchResult origin = find_poly_vdw(square, Coloring::modular({0, 1, 2}), 5, 5);
    REQUIRE(origin.witness.has_value());
    CHECK(origin.witness->a == 0);
    CHECK(std::get<Int>(origin.witness->param) == 0);

    CHECK(error_of([] { find_poly_vdw(polys("n+1"), kParity, 3, 3); }) == ErrorKind::ConstantTermNonzero);
    const Coloring far = Coloring::explicit_window(100, {0, 1});
    CHECK(error_of([&] { find_poly_vdw(polys("n"), far, 2, 1); }) == ErrorKind::WindowTooSmall);
}

TEST_CASE("IP finder")
{
    const auto ps = polys("n,n^2");
    const SearchResult result = find_ip_vdw(ps, SequenceSpec::identity(), kParity, 10, 3, 3);
    REQUIRE(result.witness.has_value());
    const auto& param = std::get<IpParam>(result.witness->param);
    CHECK(to_string(param.set) == "{2}");
    CHECK(param.ip_sum == 2);
    CHECK(result.witness->a == 0);
    CHECK(result.witness->values == std::vector<Int>{2, 4});
    CHECK(verify_symbolic_chain(*result.witness, ps));

    const SequenceSpec zero = SequenceSpec::constant(0);
    const SearchResult collapsed = find_ip_vdw(ps, zero, kParity, 10, 3, 3, {false, 1});
    REQUIRE(collapsed.witness.has_value());
    CHECK(collapsed.witness->a == 0);
    CHECK(collapsed.witness->values == std::vector<Int>{0, 0});
    CHECK_FALSE(find_ip_vdw(ps, zero, kParity, 10, 3, 3).witness.has_value());

    CHECK_FALSE(find_ip_vdw(ps, SequenceSpec::identity(), kParity, 10, 0, 3).witness.has_value());
    CHECK(error_of([&] { find_ip_vdw(ps, SequenceSpec::table({1, 2}), kParity, 10, 3, 3); })
          == ErrorKind::UndefinedIndex);
}

TEST_CASE("multivariable finder")
{
    const auto ps = multi_polys("x1*x2,x1^2");
    const std::vector<SequenceSpec> ids(2, SequenceSpec::identity());
    const std::vector<Int> n{3, 3};
    const std::vector<std::size_t> sizes{3, 3};
    const SearchResult result = find_multivar_vdw(ps, ids, kParity, 10, n, sizes);
    REQUIRE(result.witness.has_value());
    const auto& param = std::get<MultiIpParam>(result.witness->param);
    CHECK(to_string(param.sets[0]) == "{2}");
    CHECK(to_string(param.sets[1]) == "{1}");
    CHECK(result.witness->a == 0);
    CHECK(result.witness->values == std::vector<Int>{2, 4});
    CHECK(verify_witness(*result.witness, std::span<const MultiIntPoly>(ps), kParity));
    CHECK(verify_symbolic_chain(*result.witness, std::span<const MultiIntPoly>(ps)));

    MultiIntPoly constant(2);
    constant.add_monomial({0, 0}, 3);
    const std::vector<MultiIntPoly> bad{constant};
    CHECK(error_of([&] { find_multivar_vdw(bad, ids, kParity, 10, n, sizes); }) == ErrorKind::ConstantTermPresent);
}

TEST_CASE("a single variable reduces to the IP finder")
{
    const auto one = polys("n,n^2+n");
    std::vector<MultiIntPoly> as_multi;
    for (const IntPoly& p : one) {
        MultiIntPoly q(1);
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            q.add_monomial({static_cast<unsigned>(i)}, p.coeffs()[i]);
        }
        as_multi.push_back(q);
    }
    const Coloring c = Coloring::modular({0, 1, 1, 2, 0});
    const SequenceSpec f = SequenceSpec::power(2);
    const std::vector<SequenceSpec> fs{f};
    const std::vector<Int> n{4};
    const std::vector<std::size_t> sizes{4};
    const SearchResult single = find_ip_vdw(one, f, c, 20, 4, 4);
    const SearchResult multi = find_multivar_vdw(as_multi, fs, c, 20, n, sizes);
    REQUIRE(single.witness.has_value());
    REQUIRE(multi.witness.has_value());
    CHECK(single.witness->a == multi.witness->a);
    CHECK(single.witness->values == multi.witness->values);
    CHECK(std::get<IpParam>(single.witness->param).set == std::get<MultiIpParam>(multi.witness->param).sets[0]);
    CHECK(verify_symbolic_chain(*multi.witness, std::span<const MultiIntPoly>(as_multi)));
}

TEST_CASE("arithmetic progressions")
{
    const Coloring rbbrrbbr = Coloring::explicit_window(1, {0, 1, 1, 0, 0, 1, 1, 0});
    CHECK_FALSE(find_ap(3, rbbrrbbr, 1, 8).witness.has_value());
    const SearchResult one = find_ap(1, rbbrrbbr, 1, 8);
    REQUIRE(one.witness.has_value());
    CHECK(one.witness->values.size() == 1);
    const Coloring nine = Coloring::explicit_window(1, {0, 1, 1, 0, 0, 1, 1, 0, 0});
    const SearchResult hit = find_ap(3, nine, 1, 9);
    REQUIRE(hit.witness.has_value());
    CHECK(verify_witness(*hit.witness, ap_polys(3), nine));
    CHECK(std::get<Int>(hit.witness->param) >= 1);
}

TEST_CASE("verification rejects tampered witnesses")
{
    const auto ps = polys("n,n^2");
    Witness w = *find_poly_vdw(ps, kParity, 10, 10).witness;
    CHECK(verify_witness(w, ps, kParity));
    Witness bumped = w;
    bumped.values[1] += 1;
    CHECK_FALSE(verify_witness(bumped, ps, kParity));
    CHECK_FALSE(verify_symbolic_chain(bumped, ps));
    Witness recolored = w;
    recolored.color = 1 - w.color;
    CHECK_FALSE(verify_witness(recolored, ps, kParity));
    const Coloring window = Coloring::explicit_window(0, {0, 0, 0});
    CHECK_FALSE(verify_witness(w, ps, window));
    const Witness wrong_arity{w.a, w.param, {w.values[0]}, w.color};
    CHECK_FALSE(verify_witness(wrong_arity, ps, kParity));
}

TEST_CASE("finders match the oracle and ignore thread count")
{
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<IntPoly> ps;
        const auto count = static_cast<std::size_t>(uniform(rng, {1, 3}));
        for (std::size_t i = 0; i < count; ++i) {
            ps.push_back(random_intpoly(rng, 2, {-3, 3}));
        }
        const int colors = static_cast<int>(uniform(rng, {2, 3}));
        const Coloring c = Coloring::seeded_random(colors, rng(), -200, 200);
        const Int a_bound = uniform(rng, {0, 20});
        const Int r_bound = uniform(rng, {0, 6});
        SearchResult found;
        try {
            found = find_poly_vdw(ps, c, a_bound, r_bound);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::WindowTooSmall);
            continue;
        }
        const auto all = exhaustive_poly_vdw(ps, c, a_bound, r_bound);
        CHECK(found.witness.has_value() == !all.empty());
        if (found.witness) {
            CHECK(*found.witness == all.front());
            CHECK(verify_witness(*found.witness, ps, c));
        }
        CHECK(find_poly_vdw(ps, c, a_bound, r_bound, {true, 4}).witness == found.witness);

        // Enlarging the bounds keeps every earlier witness in the scan space.
        if (found.witness) {
            const auto wider = exhaustive_poly_vdw(ps, c, a_bound + 3, r_bound + 2);
            CHECK(std::find(wider.begin(), wider.end(), *found.witness) != wider.end());
        }
    }
}

TEST_CASE("oracle refuses huge bounds")
{
    const auto ps = polys("n");
    CHECK(error_of([&] { exhaustive_poly_vdw(ps, kParity, 5'000'000, 5); }) == ErrorKind::BoundsTooLarge);
}
