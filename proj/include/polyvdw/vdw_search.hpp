#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "polyvdw/coloring.hpp"
#include "polyvdw/polynomial.hpp"
#include "polyvdw/shifts.hpp"

namespace polyvdw {

// Monochromatic configurations {a + p_i(parameter)} for the three polynomial
// van der Waerden statements, found by deterministic exhaustive scans.
//
// Scan orders:
//   signed integers (a, and r)  0, 1, -1, 2, -2, ...
//   index sets F of [1, N]      by max element, then size, then lexicographic
//   tuples (F_1, ..., F_k)      product of the single-set order, F_1 fastest
// The parameter is the outer loop and a the inner one.

struct IpParam {
    IndexSet set;
    SequenceSpec f;
    Int ip_sum;

    friend bool operator==(const IpParam&, const IpParam&) = default;
};

struct MultiIpParam {
    std::vector<IndexSet> sets;
    std::vector<SequenceSpec> fs;
    std::vector<Int> ip_sums;

    friend bool operator==(const MultiIpParam&, const MultiIpParam&) = default;
};

struct Witness {
    Int a;
    std::variant<Int, IpParam, MultiIpParam> param;
    std::vector<Int> values;
    int color;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct SearchOptions {
    // Reject parameters at which two different polynomials take the same
    // value. Without this every p_i(0) = 0 configuration is a trivial hit.
    bool distinct = true;
    // Parameter blocks scanned concurrently; the result does not depend on it.
    unsigned threads = 1;
};

struct SearchResult {
    std::optional<Witness> witness;
    std::uint64_t candidates_scanned = 0;
};

// |a| <= a_bound, |r| <= r_bound (or 1 <= r <= r_bound when positive_r_only).
// Throws ConstantTermNonzero, InvalidRange, or WindowTooSmall when no
// candidate keeps every value inside the coloring's window.
SearchResult find_poly_vdw(std::span<const IntPoly> polys, const Coloring& coloring, Int a_bound,
                           Int r_bound, const SearchOptions& options = {}, bool positive_r_only = false);

// F ranges over nonempty subsets of [1, max_index] with |F| <= max_size.
SearchResult find_ip_vdw(std::span<const IntPoly> polys, const SequenceSpec& f,
                         const Coloring& coloring, Int a_bound, Int max_index, std::size_t max_size,
                         const SearchOptions& options = {});

// One sequence, max index and max size per variable; polynomials with fewer
// variables than fs.size() are widened.
SearchResult find_multivar_vdw(std::span<const MultiIntPoly> polys, std::span<const SequenceSpec> fs,
                               const Coloring& coloring, Int a_bound, std::span<const Int> max_index,
                               std::span<const std::size_t> max_size, const SearchOptions& options = {});

// Arithmetic progression a, a + r, ..., a + (L-1) r with r >= 1 inside [lo, hi].
SearchResult find_ap(std::size_t length, const Coloring& coloring, Int lo, Int hi,
                     const SearchOptions& options = {});

// {0, n, 2n, ..., (L-1) n}
std::vector<IntPoly> ap_polys(std::size_t length);

// Recomputes every value from the parameter and checks colors; never throws.
bool verify_witness(const Witness& w, std::span<const IntPoly> polys, const Coloring& coloring);
bool verify_witness(const Witness& w, std::span<const MultiIntPoly> polys, const Coloring& coloring);

// Runs the symbolic route for a one-variable witness: encodes each p_j as
// eta_j, picks x in the common Ir set with pi(x) = a, and checks that
// pi(x + s . eta_j) equals values[j], where s is r or the IP sum.
bool verify_symbolic_chain(const Witness& w, std::span<const IntPoly> polys);

// Multivariable counterpart through shift_multi and P evaluated at (1,...,1).
bool verify_symbolic_chain(const Witness& w, std::span<const MultiIntPoly> polys);

// Index sets in scan order.
std::vector<IndexSet> ordered_index_sets(Int max_index, std::size_t max_size);

// 0, 1, -1, ..., bound, -bound
std::vector<Int> signed_scan_order(Int bound);

}  // namespace polyvdw
