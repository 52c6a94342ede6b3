#pragma once

#include <span>
#include <vector>

#include "polyvdw/vdw_search.hpp"

namespace polyvdw {

// Brute-force reference enumerations used to cross-check the finders. Each
// returns every witness in the finders' scan order, so the first entry is
// what the matching finder must report. Throws BoundsTooLarge when the
// candidate count exceeds kOracleCandidateCap.

inline constexpr std::uint64_t kOracleCandidateCap = 5'000'000;

std::vector<Witness> exhaustive_poly_vdw(std::span<const IntPoly> polys, const Coloring& coloring,
                                         Int a_bound, Int r_bound, bool distinct = true,
                                         bool positive_r_only = false);

std::vector<Witness> exhaustive_ip_vdw(std::span<const IntPoly> polys, const SequenceSpec& f,
                                       const Coloring& coloring, Int a_bound, Int max_index,
                                       std::size_t max_size, bool distinct = true);

std::vector<Witness> exhaustive_multivar_vdw(std::span<const MultiIntPoly> polys,
                                             std::span<const SequenceSpec> fs, const Coloring& coloring,
                                             Int a_bound, std::span<const Int> max_index,
                                             std::span<const std::size_t> max_size, bool distinct = true);

}  // namespace polyvdw
