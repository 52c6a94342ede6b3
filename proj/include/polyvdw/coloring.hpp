#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polyvdw/checked.hpp"

namespace polyvdw {

/// Finite coloring of the integers or of a window [lo, hi].
///
/// Modular colorings are total on Z; the residue is taken in [0, q). Explicit
/// and seeded-random colorings are defined only on their window and return
/// no color outside it.
class Coloring {
public:
    enum class Kind { Modular, Explicit, SeededRandom };

    // Color of residue i is residue_colors[i]; throws BadColorCount when empty.
    static Coloring modular(std::vector<int> residue_colors);
    // colors[i] colors lo + i.
    static Coloring explicit_window(Int lo, std::vector<int> colors);
    // Colors drawn from mt19937_64(seed), one draw per integer from lo upward,
    // reduced mod `colors`. Identical arguments give identical colorings.
    static Coloring seeded_random(int colors, std::uint64_t seed, Int lo, Int hi);

    Kind kind() const noexcept { return m_kind; }
    std::optional<int> color(Int z) const noexcept;

    // Number of colors, i.e. 1 + the largest color id in use.
    int color_count() const noexcept { return m_color_count; }
    std::optional<std::pair<Int, Int>> window() const noexcept;

    // Residue table for modular colorings, window table otherwise.
    const std::vector<int>& table() const noexcept { return m_table; }
    Int lo() const noexcept { return m_lo; }
    std::uint64_t seed() const noexcept { return m_seed; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    Coloring(Kind kind, Int lo, std::vector<int> table, int color_count, std::uint64_t seed)
        : m_kind(kind), m_lo(lo), m_table(std::move(table)), m_color_count(color_count), m_seed(seed)
    {
    }

    Kind m_kind;
    Int m_lo;
    std::vector<int> m_table;
    int m_color_count;
    std::uint64_t m_seed;
};

}  // namespace polyvdw
