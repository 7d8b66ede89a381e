#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dimerexp/clusters.hpp"
#include "dimerexp/rational.hpp"
#include "dimerexp/series.hpp"

namespace dimerexp {

/// Mayer coefficients b_1..b_N of the hard-dimer gas on Z^d, per site.
struct MayerTable {
    int dim = 0;
    int order = 0;
    std::vector<Rational> b; // b[n-1] = b_n

    const Rational& coeff(int n) const; // 1-based, n in 1..order
};

inline constexpr int kMaxMayerOrder = 8;

struct MayerOptions {
    int workers = 1;
    /// Memoize cluster weights by overlap-graph signature.
    bool cache = true;
    std::size_t max_classes = 5'000'000;
};

/// Grand partition function of a finite dimer set under hard-core
/// exclusion: sum of z^|I| over pairwise non-overlapping subsets I.
TruncatedSeries hard_core_polynomial(std::span<const Dimer> dimers);

/// Connected part of ln Xi for the set s by subset inclusion-exclusion:
///   w(s) = sum over t subseteq s of (-1)^(|s|-|t|) ln(hard_core_polynomial(t)),
/// truncated at the given order. Identically zero when the overlap graph of
/// s is disconnected; the lowest nonzero order is at least |s|.
TruncatedSeries moebius_weight(std::span<const Dimer> dimers, int order);

/// b_n as the sum of [z^n] moebius_weight(s) over all translation classes
/// of connected supports with |s| <= order. Exact; b_1 = d.
MayerTable mayer_coefficients(int dim, int order, const MayerOptions& opts = {});

/// Definition-level cross-check: b_n from the Ursell sum over ordered
/// dimer n-tuples (repetition allowed) anchored at the origin. Cost grows
/// as (lattice ball)^n, so only order <= 3 is accepted.
MayerTable ursell_tuple_oracle(int dim, int order);

/// m_k = number of placements of k pairwise non-overlapping dimers on the
/// L x L torus (d = 2), k = 0..k_max, by a row transfer over seam-crossing
/// vertical stubs. Exact integers.
std::vector<BigInt> torus_matching_polynomial(int side, int k_max);

/// b_1..b_N for d = 2 from the per-site log of the torus polynomial.
/// Requires side >= 2*order + 2 so no connected cluster of <= order dimers
/// can wrap.
MayerTable torus_mayer_oracle(int side, int order);

} // namespace dimerexp
