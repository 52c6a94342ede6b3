#include "polyvdw/coloring.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace polyvdw {

namespace {

constexpr Int kMaxWindow = 10'000'000;

int count_colors(const std::vector<int>& table)
{
    if (std::any_of(table.begin(), table.end(), [](int c) { return c < 0; })) {
        throw Error(ErrorKind::BadColorCount, "color ids must be nonnegative");
    }
    return table.empty() ? 0 : *std::max_element(table.begin(), table.end()) + 1;
}

}  // namespace

Coloring Coloring::modular(std::vector<int> residue_colors)
{
    if (residue_colors.empty()) {
        throw Error(ErrorKind::BadColorCount, "a modular coloring needs q >= 1 residue colors");
    }
    const int count = count_colors(residue_colors);
    return Coloring(Kind::Modular, 0, std::move(residue_colors), count, 0);
}

Coloring Coloring::explicit_window(Int lo, std::vector<int> colors)
{
    if (colors.empty()) {
        throw Error(ErrorKind::BadColorCount, "an explicit coloring needs a nonempty window");
    }
    if (static_cast<Int>(colors.size()) > kMaxWindow) {
        throw Error(ErrorKind::InvalidRange, "window larger than " + std::to_string(kMaxWindow));
    }
    checked::add(lo, static_cast<Int>(colors.size()));
    const int count = count_colors(colors);
    return Coloring(Kind::Explicit, lo, std::move(colors), count, 0);
}

Coloring Coloring::seeded_random(int colors, std::uint64_t seed, Int lo, Int hi)
{
    if (colors < 1) {
        throw Error(ErrorKind::BadColorCount, "a random coloring needs at least one color");
    }
    if (hi < lo) {
        throw Error(ErrorKind::InvalidRange, "empty window [" + std::to_string(lo) + ", "
                                                 + std::to_string(hi) + "]");
    }
    if (checked::sub(hi, lo) >= kMaxWindow) {
        throw Error(ErrorKind::InvalidRange, "window larger than " + std::to_string(kMaxWindow));
    }
    // Raw engine output reduced by hand: the engine is fully specified by the
    // standard, the distribution classes are not.
    std::mt19937_64 engine(seed);
    std::vector<int> table(static_cast<std::size_t>(hi - lo + 1));
    for (int& c : table) {
        c = static_cast<int>(engine() % static_cast<std::uint64_t>(colors));
    }
    return Coloring(Kind::SeededRandom, lo, std::move(table), colors, seed);
}

std::optional<int> Coloring::color(Int z) const noexcept
{
    if (m_kind == Kind::Modular) {
        const auto q = static_cast<Int>(m_table.size());
        Int residue = z % q;
        if (residue < 0) {
            residue += q;
        }
        return m_table[static_cast<std::size_t>(residue)];
    }
    if (z < m_lo || z - m_lo >= static_cast<Int>(m_table.size())) {
        return std::nullopt;
    }
    return m_table[static_cast<std::size_t>(z - m_lo)];
}

std::optional<std::pair<Int, Int>> Coloring::window() const noexcept
{
    if (m_kind == Kind::Modular) {
        return std::nullopt;
    }
    return std::pair{m_lo, m_lo + static_cast<Int>(m_table.size()) - 1};
}

}  // namespace polyvdw
