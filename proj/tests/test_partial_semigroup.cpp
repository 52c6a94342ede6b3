#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "polyvdw/evaluation.hpp"
#include "polyvdw/partial_semigroup.hpp"
#include "polyvdw/text.hpp"

using namespace polyvdw;

namespace {

PartialOpTable cyclic(std::size_t n)
{
    PartialOpTable t(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            t.define(i, j, (i + j) % n);
        }
    }
    return t;
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

std::vector<SymPoly> criterion_etas()
{
    return {encode_poly(IntPoly({0, 1}), 2), encode_poly(IntPoly({0, 1, 1}), 2)};
}

}  // namespace

TEST_CASE("group table is an adequate commutative semigroup")
{
    const PartialOpTable z3 = cyclic(3);
    const AssocReport assoc = check_partial_associativity(z3);
    CHECK(assoc.pass);
    CHECK(assoc.checked_triples == 27);
    CHECK(check_commutativity(z3).pass);
    const AdequacyResult adequate = check_adequate(z3);
    CHECK(adequate.adequate);
    CHECK(adequate.witness == std::optional<std::size_t>(0));
    CHECK(idempotents(z3) == std::vector<std::size_t>{0});
    CHECK(is_left_ideal(z3, {0, 1, 2}));
    CHECK(is_right_ideal(z3, {0, 1, 2}));
    CHECK_FALSE(is_left_ideal(z3, {0}));
}

TEST_CASE("one side undefined is reported")
{
    PartialOpTable t(3);
    t.define(0, 1, 2);
    t.define(2, 2, 2);
    const AssocReport report = check_partial_associativity(t);
    CHECK_FALSE(report.pass);
    REQUIRE_FALSE(report.counterexamples.empty());
    CHECK(report.failures >= 1);
    const auto& c = report.counterexamples.front();
    CHECK(c.kind == AssocFailure::OneSideUndefined);
    CHECK(to_string(c.kind) == "one side undefined");
}

TEST_CASE("unequal products are reported")
{
    PartialOpTable t(2);
    t.define(0, 0, 1);
    t.define(0, 1, 0);
    t.define(1, 0, 1);
    t.define(1, 1, 0);
    const AssocReport report = check_partial_associativity(t);
    CHECK_FALSE(report.pass);
    CHECK(std::any_of(report.counterexamples.begin(), report.counterexamples.end(),
                      [](const AssocCounterexample& c) { return c.kind == AssocFailure::Unequal; }));
}

TEST_CASE("right sets and adequacy")
{
    PartialOpTable t(4);
    t.define(0, 0, 0);
    t.define(0, 1, 1);
    t.define(2, 2, 2);
    t.define(3, 3, 3);
    CHECK(right_set(t, 0) == std::vector<std::size_t>{0, 1});
    CHECK(right_set(t, 1).empty());
    CHECK(left_set(t, 1) == std::vector<std::size_t>{0});
    CHECK(error_of([&] { right_set(t, 9); }) == ErrorKind::UnknownElement);
    CHECK_FALSE(check_adequate(t).adequate);
    CHECK(check_adequate(PartialOpTable(0)).adequate);
}

TEST_CASE("censored cells")
{
    PartialOpTable t(2);
    t.define(0, 0, 0);
    t.censor(0, 1);
    t.censor(1, 0);
    CHECK(t.defined(0, 1));
    CHECK(t.censored(0, 1));
    CHECK_FALSE(t.product(0, 1).has_value());
    const AssocReport report = check_partial_associativity(t);
    CHECK(report.censored_triples > 0);
    CHECK(report.failures == 0);
}

TEST_CASE("text format round trip")
{
    PartialOpTable t = cyclic(3);
    t.set_label(1, "T{1;1}");
    std::ostringstream out;
    write_table(out, t);
    std::istringstream in(out.str());
    const PartialOpTable back = read_table(in);
    REQUIRE(back.size() == 3);
    CHECK(back.label(1) == "T{1;1}");
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(back.product(i, j) == t.product(i, j));
        }
    }
    std::istringstream censored("elements: 2\n# comment\n0 1 -> *\n1 1 -> 0\n");
    const PartialOpTable c = read_table(censored);
    CHECK(c.censored(0, 1));
    CHECK(c.product(1, 1) == std::optional<std::size_t>(0));

    std::istringstream bad("elements: 2\n0 1 => 1\n");
    try {
        read_table(bad);
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 12);
    }
    std::istringstream out_of_range("elements: 2\n0 5 -> 1\n");
    CHECK_THROWS_AS(read_table(out_of_range), Error);
}

TEST_CASE("truncated S with one direction")
{
    const std::vector<SymPoly> etas{parse_sympoly("T{1;1}", 2)};
    const std::vector<SymPoly> pool{parse_sympoly("T{2;1,1}", 2)};
    const TruncatedS s = build_truncated_s(etas, 1, pool);
    // x and x + r.eta for r = -1, 0, 1; r = 0 leaves a zero-coefficient term.
    CHECK(s.table.size() == 4);
    CHECK(s.ir_fragment == std::vector<std::size_t>{0});
    CHECK(check_partial_associativity(s.table).pass);
    CHECK(check_commutativity(s.table).pass);
    CHECK(error_of([&] { build_truncated_s(etas, 1, {}); }) == ErrorKind::PoolNotInIr);
    CHECK(error_of([&] { build_truncated_s(etas, 1, etas); }) == ErrorKind::PoolNotInIr);
}

TEST_CASE("shifted fragments of different directions are disjoint")
{
    const std::vector<SymPoly> etas{parse_sympoly("T{1;1}", 2), parse_sympoly("T{1;1,1}", 2)};
    const std::vector<SymPoly> pool{parse_sympoly("T{2;1}", 2)};
    const TruncatedS s = build_truncated_s(etas, 2, pool);
    std::size_t in_first = 0;
    std::size_t in_second = 0;
    for (const SymPoly& v : s.values) {
        if (in_ir(v, etas)) {
            continue;
        }
        const bool a = in_s_component(v, etas, 0);
        const bool b = in_s_component(v, etas, 1);
        CHECK(a != b);
        in_first += a;
        in_second += b;
    }
    CHECK(in_first == 5);
    CHECK(in_second == 5);
}

TEST_CASE("truncated S for the two-polynomial family")
{
    const auto etas = criterion_etas();
    const std::vector<SymPoly> pool{fresh_ir_element(etas)};
    const TruncatedS s = build_truncated_s(etas, 2, pool);
    CHECK(check_partial_associativity(s.table).pass);
    CHECK(check_commutativity(s.table).pass);
    const AdequacyResult adequate = check_adequate(s.table);
    REQUIRE(adequate.witness.has_value());
    CHECK(std::find(s.ir_fragment.begin(), s.ir_fragment.end(), *adequate.witness) != s.ir_fragment.end());
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        CHECK(s.table.label(i) == to_string(s.values[i]));
    }
}

TEST_CASE("I fragment is an ideal of truncated V")
{
    const auto etas = criterion_etas();
    const SymPoly head = fresh_ir_element(etas);
    const std::vector<SymPoly> pool{head};
    const TruncatedV v = build_truncated_v(etas, 1, pool);
    CHECK_FALSE(v.i_fragment.empty());
    CHECK_FALSE(v.diagonal_fragment.empty());
    CHECK(check_partial_associativity(v.table).pass);
    CHECK(check_commutativity(v.table).pass);
    CHECK(is_left_ideal(v.table, v.i_fragment));
    CHECK(is_right_ideal(v.table, v.i_fragment));
}
