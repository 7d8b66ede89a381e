#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dimerexp {

/// Largest lattice dimension the fixed-width site type supports.
inline constexpr int kMaxDim = 6;

/// Point of Z^d. Coordinates beyond the active dimension stay zero, so
/// default comparison gives the left-to-right lexicographic site order.
struct Site {
    std::array<int32_t, kMaxDim> x{};

    auto operator<=>(const Site&) const = default;

    Site translated(const Site& by) const {
        Site r = *this;
        for (int i = 0; i < kMaxDim; ++i) r.x[i] += by.x[i];
        return r;
    }
};

/// Undirected lattice edge: occupies base and base + e_axis. Base is the
/// lexicographically smaller endpoint by construction. Axes are 0-based.
struct Dimer {
    Site base;
    int32_t axis = 0;

    auto operator<=>(const Dimer&) const = default;

    Site second_site() const {
        Site s = base;
        s.x[static_cast<std::size_t>(axis)] += 1;
        return s;
    }
};

/// True iff the two occupancy sets intersect; a dimer overlaps itself.
bool overlaps(const Dimer& a, const Dimer& b);

/// All dimers sharing at least one site with a, including a itself.
/// Exactly 4d - 1 dimers.
std::vector<Dimer> overlap_neighborhood(const Dimer& a, int dim);

/// Translates the set so its lexicographically smallest occupied site is
/// the origin, and sorts. Idempotent; the unique representative of the
/// translation class.
std::vector<Dimer> canonical_translate(std::vector<Dimer> dimers);

std::size_t hash_dimers(std::span<const Dimer> dimers);

} // namespace dimerexp
