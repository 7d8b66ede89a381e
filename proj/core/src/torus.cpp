#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "dimerexp/errors.hpp"
#include "dimerexp/mayer.hpp"

namespace dimerexp {

namespace {

using Poly = std::vector<BigInt>; // index = dimer count, truncated at k_max

void add_shifted(Poly& dst, const Poly& src, int shift) {
    for (std::size_t k = 0; k + static_cast<std::size_t>(shift) < dst.size() && k < src.size(); ++k)
        dst[k + static_cast<std::size_t>(shift)] += src[k];
}

Poly convolve(const Poly& a, const Poly& b, int k_max) {
    Poly r(static_cast<std::size_t>(k_max) + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < r.size() && j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// One row of the torus: from the mask of sites occupied by stubs from the
// previous row, every way to lay horizontal dimers (with the row-internal
// wrap edge) and start new downward stubs. Produces (out mask, dimers added
// this row) multiplicities.
struct RowTransfer {
    int side;
    int k_max;

    // out mask -> counts by number of dimers added
    std::map<uint32_t, Poly> targets;

    void build(uint32_t in) {
        targets.clear();
        // Case split on the wrap edge (side-1, 0).
        descend(in, 0, 0, 0, 0, false);
        if (!(in & 1u) && !(in & (1u << (side - 1))))
            descend(in, 0, 0, 1, (1u << (side - 1)) | 1u, false);
    }

private:
    // cell: next column to decide; pre: sites pre-occupied (stubs in + wrap
    // endpoints); pending: current cell taken by a horizontal from the left.
    void descend(uint32_t in, int cell, uint32_t out, int added, uint32_t wrap_pre, bool pending) {
        if (added > k_max) return;
        if (cell == side) {
            auto [it, fresh] = targets.try_emplace(out, static_cast<std::size_t>(k_max) + 1);
            if (static_cast<std::size_t>(added) < it->second.size()) it->second[static_cast<std::size_t>(added)] += 1;
            return;
        }
        const uint32_t bit = 1u << cell;
        const bool occupied = pending || (in & bit) || (wrap_pre & bit);
        if (occupied) {
            descend(in, cell + 1, out, added, wrap_pre, false);
            return;
        }
        // Leave the site to a monomer.
        descend(in, cell + 1, out, added, wrap_pre, false);
        // Start a downward stub.
        descend(in, cell + 1, out | bit, added + 1, wrap_pre, false);
        // Horizontal dimer toward cell+1 (the wrap edge is handled above).
        if (cell + 1 < side) {
            const uint32_t nbit = 1u << (cell + 1);
            if (!(in & nbit) && !(wrap_pre & nbit))
                descend(in, cell + 1, out, added + 1, wrap_pre, true);
        }
    }
};

} // namespace

std::vector<BigInt> torus_matching_polynomial(int side, int k_max) {
    if (side > 16) throw ResourceLimitError("torus_matching_polynomial: side above 16 exceeds the memory budget");
    if (side < 4 || side % 2 != 0)
        throw std::invalid_argument("torus_matching_polynomial: side must be even and at least 4");
    if (k_max < 0 || k_max > side * side / 2)
        throw std::invalid_argument("torus_matching_polynomial: k_max above the perfect-matching size");

    const uint32_t nmasks = 1u << side;
    std::vector<BigInt> m(static_cast<std::size_t>(k_max) + 1);

    // Transfer rows are identical, so build each in-mask's targets once.
    std::vector<std::map<uint32_t, Poly>> transfer(nmasks);
    std::vector<char> built(nmasks, 0);
    RowTransfer rt{side, k_max, {}};
    auto targets_of = [&](uint32_t in) -> const std::map<uint32_t, Poly>& {
        if (!built[in]) {
            rt.build(in);
            transfer[in] = rt.targets;
            built[in] = 1;
        }
        return transfer[in];
    };

    // Trace over the seam: vertical dimers crossing from the last row into
    // row 0 show up as the initial mask and must be reproduced at the end.
    for (uint32_t seam = 0; seam < nmasks; ++seam) {
        if (std::popcount(seam) > k_max) continue;
        std::map<uint32_t, Poly> cur;
        {
            Poly unit(static_cast<std::size_t>(k_max) + 1);
            unit[0] = 1;
            cur.emplace(seam, std::move(unit));
        }
        for (int row = 0; row < side && !cur.empty(); ++row) {
            std::map<uint32_t, Poly> next;
            for (const auto& [mask, poly] : cur) {
                for (const auto& [out, tpoly] : targets_of(mask)) {
                    Poly conv = convolve(poly, tpoly, k_max);
                    auto [it, fresh] = next.try_emplace(out, static_cast<std::size_t>(k_max) + 1);
                    add_shifted(it->second, conv, 0);
                }
            }
            cur = std::move(next);
        }
        // A placement is booked under exactly one seam: its own crossing set.
        auto it = cur.find(seam);
        if (it == cur.end()) continue;
        const Poly& closed = it->second;
        for (int k = 0; k <= k_max; ++k) m[static_cast<std::size_t>(k)] += closed[static_cast<std::size_t>(k)];
    }
    return m;
}

MayerTable torus_mayer_oracle(int side, int order) {
    if (order < 1 || order > kMaxMayerOrder)
        throw std::invalid_argument("torus_mayer_oracle: order must be in 1..8");
    if (side < 2 * order + 2)
        throw std::invalid_argument(
            "torus_mayer_oracle: side below 2*order + 2 risks finite-size contamination");
    const auto m = torus_matching_polynomial(side, order);

    TruncatedSeries f(order);
    for (int k = 1; k <= order; ++k) f.set(k, Rational(BigInt(m[static_cast<std::size_t>(k)])));
    const TruncatedSeries logxi = log1p_series(f);

    const Rational per_site(1, static_cast<long>(side) * side);
    MayerTable table;
    table.dim = 2;
    table.order = order;
    for (int n = 1; n <= order; ++n) table.b.push_back(per_site * logxi[n]);
    return table;
}

} // namespace dimerexp
