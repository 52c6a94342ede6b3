#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polyvdw/sympoly.hpp"

namespace polyvdw {

/// Finite partial operation table over elements 0..n-1.
///
/// Each ordered pair is in one of three states: defined with a result in the
/// table, undefined, or censored. Censored means the operation is defined on
/// the pair but its value lies outside a finite truncation of a larger
/// structure; censored pairs count as defined for R/L sets and are never
/// reported as associativity failures.
class PartialOpTable {
public:
    explicit PartialOpTable(std::size_t n);
    explicit PartialOpTable(std::vector<std::string> labels);

    std::size_t size() const noexcept { return m_labels.size(); }
    const std::string& label(std::size_t i) const;
    const std::vector<std::string>& labels() const noexcept { return m_labels; }
    void set_label(std::size_t i, std::string text);

    void define(std::size_t i, std::size_t j, std::size_t result);
    void censor(std::size_t i, std::size_t j);

    // Result when defined inside the table.
    std::optional<std::size_t> product(std::size_t i, std::size_t j) const;
    // Defined, whether or not the result is inside the table.
    bool defined(std::size_t i, std::size_t j) const;
    bool censored(std::size_t i, std::size_t j) const;

private:
    static constexpr std::int64_t kUndefined = -1;
    static constexpr std::int64_t kCensored = -2;

    std::int64_t cell(std::size_t i, std::size_t j) const;
    void check_index(std::size_t i) const;

    std::vector<std::string> m_labels;
    std::vector<std::int64_t> m_cells;
};

enum class AssocFailure { OneSideUndefined, Unequal };

std::string_view to_string(AssocFailure kind) noexcept;

struct AssocCounterexample {
    std::size_t x;
    std::size_t y;
    std::size_t z;
    AssocFailure kind;
};

struct AssocReport {
    bool pass = true;
    std::uint64_t checked_triples = 0;
    std::uint64_t censored_triples = 0;
    std::uint64_t failures = 0;
    // First failures only; `failures` has the full count.
    std::vector<AssocCounterexample> counterexamples;
};

// Strong associativity: if either of (xy)z and x(yz) is defined then both
// are, and they agree. Triples that touch a censored product are counted
// separately and never fail.
AssocReport check_partial_associativity(const PartialOpTable& t);

struct CommReport {
    bool pass = true;
    std::uint64_t checked_pairs = 0;
    std::vector<std::pair<std::size_t, std::size_t>> counterexamples;
};

// xy = yx including definedness and censoring.
CommReport check_commutativity(const PartialOpTable& t);

std::vector<std::size_t> right_set(const PartialOpTable& t, std::size_t x);
std::vector<std::size_t> left_set(const PartialOpTable& t, std::size_t x);

struct AdequacyResult {
    bool adequate = false;
    std::optional<std::size_t> witness;
    std::vector<std::size_t> common_right_set;
};

// On a finite table adequacy reduces to the intersection of all right sets
// being nonempty; the smallest member is returned as the witness.
AdequacyResult check_adequate(const PartialOpTable& t);

std::vector<std::size_t> idempotents(const PartialOpTable& t);

// Products that are censored are skipped.
bool is_left_ideal(const PartialOpTable& t, const std::vector<std::size_t>& subset);
bool is_right_ideal(const PartialOpTable& t, const std::vector<std::size_t>& subset);

// Text format: `elements: n`, then one `i j -> k` line per defined product,
// `i j -> *` for censored products, optional `label i text` lines and `#`
// comments.
PartialOpTable read_table(std::istream& in);
void write_table(std::ostream& out, const PartialOpTable& t);

/// Finite window onto S({eta_i}): the pool elements (assumed in Ir) together
/// with x + (r,...,r) . eta_i for every pool x, every i and |r| <= r_bound.
/// x +. y is defined when some S_i contains both; membership is decided
/// exactly, not from the enumeration.
struct TruncatedS {
    PartialOpTable table;
    std::vector<SymPoly> values;
    // Index of each pool element in the table.
    std::vector<std::size_t> ir_fragment;
};

TruncatedS build_truncated_s(const std::vector<SymPoly>& etas, Int r_bound,
                             const std::vector<SymPoly>& x_pool);

// Whether z lies in S_i for the family etas (0-based i).
bool in_s_component(const SymPoly& z, const std::vector<SymPoly>& etas, std::size_t i);

/// Finite window onto V = I u Delta(Ir): tuples (x + r.eta_1, ..., x + r.eta_m)
/// and diagonal tuples (x, ..., x), with the componentwise partial operation.
struct TruncatedV {
    PartialOpTable table;
    std::vector<std::vector<SymPoly>> values;
    std::vector<std::size_t> i_fragment;
    std::vector<std::size_t> diagonal_fragment;
};

TruncatedV build_truncated_v(const std::vector<SymPoly>& etas, Int r_bound,
                             const std::vector<SymPoly>& x_pool);

}  // namespace polyvdw
