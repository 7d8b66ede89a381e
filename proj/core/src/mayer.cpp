#include "dimerexp/mayer.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "dimerexp/errors.hpp"

namespace dimerexp {

const Rational& MayerTable::coeff(int n) const {
    if (n < 1 || n > order) throw std::out_of_range("MayerTable: coefficient index");
    return b[static_cast<std::size_t>(n) - 1];
}

TruncatedSeries hard_core_polynomial(std::span<const Dimer> dimers) {
    const int n = static_cast<int>(dimers.size());
    if (n > 30) throw std::invalid_argument("hard_core_polynomial: set too large");
    const auto adj = overlap_adjacency(dimers);
    TruncatedSeries poly(n);
    poly.set(0, Rational(1));
    if (n == 0) return poly;
    // Count independent subsets by size: a mask is independent iff its lowest
    // member does not overlap the rest and the rest is independent.
    std::vector<char> ind(1u << n);
    std::vector<Rational> count(static_cast<std::size_t>(n) + 1, Rational(0));
    ind[0] = 1;
    for (uint32_t m = 1; m < (1u << n); ++m) {
        const int low = std::countr_zero(m);
        const uint32_t rest = m & (m - 1);
        ind[m] = ind[rest] && (adj[low] & rest) == 0;
        if (ind[m]) count[static_cast<std::size_t>(std::popcount(m))] += 1;
    }
    for (int k = 1; k <= n; ++k) poly.set(k, count[static_cast<std::size_t>(k)]);
    return poly;
}

TruncatedSeries moebius_weight(std::span<const Dimer> dimers, int order) {
    const int n = static_cast<int>(dimers.size());
    if (n == 0 || n > kMaxClusterSize) throw std::invalid_argument("moebius_weight: set size must be 1..8");
    if (order < n) throw std::invalid_argument("moebius_weight: order below set size");
    const auto adj = overlap_adjacency(dimers);

    // Independent-subset indicator over the full set; each subset t then
    // reads off its own hard-core polynomial by restriction.
    std::vector<char> ind(1u << n);
    ind[0] = 1;
    for (uint32_t m = 1; m < (1u << n); ++m) {
        const int low = std::countr_zero(m);
        const uint32_t rest = m & (m - 1);
        ind[m] = ind[rest] && (adj[low] & rest) == 0;
    }

    TruncatedSeries acc(order);
    std::vector<long> counts(static_cast<std::size_t>(n) + 1);
    for (uint32_t t = 0; t < (1u << n); ++t) {
        std::fill(counts.begin(), counts.end(), 0);
        int tsize = std::popcount(t);
        // Subsets of t, including the empty one.
        uint32_t m = t;
        for (;;) {
            if (ind[m]) ++counts[static_cast<std::size_t>(std::popcount(m))];
            if (m == 0) break;
            m = (m - 1) & t;
        }
        // ln(hard-core polynomial of t), truncated.
        TruncatedSeries f(order);
        for (int k = 1; k <= tsize; ++k) f.set(k, Rational(counts[static_cast<std::size_t>(k)]));
        TruncatedSeries lg = log1p_series(f);
        const bool negate = ((n - tsize) % 2) != 0;
        acc += negate ? Rational(-1) * lg : lg;
    }
    return acc;
}

namespace {

struct WeightCache {
    std::unordered_map<uint64_t, TruncatedSeries> map;

    const TruncatedSeries& get(const ClusterSupport& s, int order, bool enabled) {
        if (!enabled) {
            scratch = moebius_weight(s.dimers, order);
            return scratch;
        }
        const uint64_t key = overlap_graph_signature(s.dimers);
        auto it = map.find(key);
        if (it == map.end())
            it = map.emplace(key, moebius_weight(s.dimers, order)).first;
        return it->second;
    }

    TruncatedSeries scratch{0};
};

} // namespace

MayerTable mayer_coefficients(int dim, int order, const MayerOptions& opts) {
    if (order < 1 || order > kMaxMayerOrder)
        throw std::invalid_argument("mayer_coefficients: order must be in 1..8");
    EnumerationOptions eopts;
    eopts.workers = opts.workers;
    eopts.max_classes = opts.max_classes;
    const auto supports = enumerate_connected_supports(dim, order, eopts);

    const int workers = std::max(1, opts.workers);
    std::vector<TruncatedSeries> partial(static_cast<std::size_t>(workers), TruncatedSeries(order));
    std::atomic<std::size_t> cursor{0};

    auto run = [&](int w) {
        WeightCache cache;
        TruncatedSeries acc(order);
        constexpr std::size_t kChunk = 64;
        for (;;) {
            const std::size_t lo = cursor.fetch_add(kChunk);
            if (lo >= supports.size()) break;
            const std::size_t hi = std::min(supports.size(), lo + kChunk);
            for (std::size_t i = lo; i < hi; ++i)
                acc += cache.get(supports[i], order, opts.cache);
        }
        partial[static_cast<std::size_t>(w)] = std::move(acc);
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    // Exact rational addition commutes, so the scheduling above cannot
    // change the result; summing in worker order is for clarity only.
    TruncatedSeries total(order);
    for (const auto& p : partial) total += p;

    MayerTable table;
    table.dim = dim;
    table.order = order;
    for (int n = 1; n <= order; ++n) table.b.push_back(total[n]);
    return table;
}

namespace {

// Ursell weight of an n-vertex overlap graph given as a bitmask over the
// C(n,2) vertex pairs: sum of (-1)^|G| over spanning connected subgraphs G.
long ursell_weight(int n, uint32_t edge_mask) {
    if (n == 1) return 1;
    const int npairs = n * (n - 1) / 2;
    long w = 0;
    for (uint32_t g = 0;; ++g) {
        if ((g & edge_mask) == g) {
            // Connectivity of (V, g).
            uint32_t comp = 1;
            for (bool grew = true; grew;) {
                grew = false;
                int bit = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j, ++bit)
                        if (g & (1u << bit)) {
                            const uint32_t vi = 1u << i, vj = 1u << j;
                            if (bool(comp & vi) != bool(comp & vj)) {
                                comp |= vi | vj;
                                grew = true;
                            }
                        }
            }
            if (comp == (1u << n) - 1) w += (std::popcount(g) % 2 == 0) ? 1 : -1;
        }
        if (g == (1u << npairs) - 1) break;
    }
    return w;
}

// All dimers whose base lies in the L-infinity ball of the given radius.
// One overlap step moves a base by at most 1 per axis, so radius n-1
// reaches every member of a connected n-tuple anchored at the origin.
std::vector<Dimer> dimer_ball(int dim, int radius) {
    std::vector<Dimer> out;
    std::vector<int> c(static_cast<std::size_t>(dim), -radius);
    for (;;) {
        Site s{};
        for (int i = 0; i < dim; ++i) s.x[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
        for (int ax = 0; ax < dim; ++ax) out.push_back(Dimer{s, ax});
        int i = 0;
        for (; i < dim; ++i) {
            if (++c[static_cast<std::size_t>(i)] <= radius) break;
            c[static_cast<std::size_t>(i)] = -radius;
        }
        if (i == dim) break;
    }
    return out;
}

} // namespace

MayerTable ursell_tuple_oracle(int dim, int order) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("ursell_tuple_oracle: bad dimension");
    if (order < 1 || order > 3)
        throw std::invalid_argument("ursell_tuple_oracle: order above 3 is rejected, tuple count explodes");

    std::vector<Dimer> anchors;
    for (int ax = 0; ax < dim; ++ax) anchors.push_back(Dimer{Site{}, ax});

    MayerTable table;
    table.dim = dim;
    table.order = order;

    // n = 1: each anchor contributes weight 1.
    table.b.emplace_back(dim);

    if (order >= 2) {
        const auto ball = dimer_ball(dim, 1);
        // Precomputed weights for the single pair edge.
        long sum = 0;
        for (const Dimer& a : anchors)
            for (const Dimer& t2 : ball)
                if (overlaps(a, t2)) sum += ursell_weight(2, 1);
        table.b.push_back(Rational(sum, 2)); // 2!
    }

    if (order >= 3) {
        const auto ball = dimer_ball(dim, 2);
        long w3[8];
        for (uint32_t e = 0; e < 8; ++e) w3[e] = ursell_weight(3, e);
        long long sum = 0;
        for (const Dimer& a : anchors) {
            for (const Dimer& t2 : ball) {
                const bool e01 = overlaps(a, t2);
                for (const Dimer& t3 : ball) {
                    uint32_t mask = e01 ? 1u : 0u;
                    if (overlaps(a, t3)) mask |= 2u;
                    if (overlaps(t2, t3)) mask |= 4u;
                    sum += w3[mask];
                }
            }
        }
        table.b.push_back(Rational(BigInt(static_cast<long>(sum)), BigInt(6))); // 3!
    }

    return table;
}

} // namespace dimerexp
