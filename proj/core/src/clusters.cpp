#include "dimerexp/clusters.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <utility>

#include "dimerexp/errors.hpp"

namespace dimerexp {

namespace {

struct SupportHash {
    std::size_t operator()(const std::vector<Dimer>& v) const { return hash_dimers(v); }
};

using SupportSet = std::unordered_set<std::vector<Dimer>, SupportHash>;

// Children of one support: add any overlapping dimer not already present,
// then renormalize the translation.
void emit_children(const std::vector<Dimer>& support, int dim, SupportSet& out) {
    for (const Dimer& d : support) {
        for (const Dimer& nb : overlap_neighborhood(d, dim)) {
            if (std::find(support.begin(), support.end(), nb) != support.end()) continue;
            std::vector<Dimer> child = support;
            child.push_back(nb);
            out.insert(canonical_translate(std::move(child)));
        }
    }
}

} // namespace

std::vector<ClusterSupport> enumerate_connected_supports(int dim, int n_max,
                                                         const EnumerationOptions& opts) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("enumerate_connected_supports: bad dimension");
    if (n_max < 1 || n_max > kMaxClusterSize)
        throw std::invalid_argument("enumerate_connected_supports: size must be in 1..8");
    const int workers = std::max(1, opts.workers);

    std::vector<ClusterSupport> result;
    std::size_t total = 0;

    // Size 1: one class per axis.
    std::vector<std::vector<Dimer>> level;
    for (int ax = 0; ax < dim; ++ax) level.push_back({Dimer{Site{}, ax}});

    for (int size = 1; size <= n_max; ++size) {
        std::sort(level.begin(), level.end());
        total += level.size();
        if (total > opts.max_classes)
            throw ResourceLimitError("enumerate_connected_supports: class ceiling exceeded");
        for (auto& s : level) result.push_back(ClusterSupport{s});
        if (size == n_max) break;

        // Grow the frontier. Workers scan disjoint slices; the merged set is
        // the union, so the outcome does not depend on the split.
        std::vector<SupportSet> partial(static_cast<std::size_t>(workers));
        if (workers == 1) {
            for (const auto& s : level) emit_children(s, dim, partial[0]);
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (level.size() + workers - 1) / workers;
            for (int w = 0; w < workers; ++w) {
                const std::size_t lo = std::min(level.size(), static_cast<std::size_t>(w) * chunk);
                const std::size_t hi = std::min(level.size(), lo + chunk);
                pool.emplace_back([&, lo, hi, w] {
                    for (std::size_t i = lo; i < hi; ++i) emit_children(level[i], dim, partial[w]);
                });
            }
            for (auto& t : pool) t.join();
        }
        SupportSet next;
        for (auto& p : partial) next.merge(p);
        level.assign(std::make_move_iterator(next.begin()), std::make_move_iterator(next.end()));
    }
    return result;
}

std::vector<uint32_t> overlap_adjacency(std::span<const Dimer> dimers) {
    const std::size_t n = dimers.size();
    std::vector<uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (overlaps(dimers[i], dimers[j])) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
    return adj;
}

bool overlap_graph_connected(std::span<const Dimer> dimers) {
    const std::size_t n = dimers.size();
    if (n == 0) return false;
    const auto adj = overlap_adjacency(dimers);
    uint32_t seen = 1;
    uint32_t frontier = 1;
    while (frontier != 0) {
        uint32_t next = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (frontier & (1u << i)) next |= adj[i];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 32 ? ~0u : (1u << n) - 1);
}

namespace {

// Upper-triangle adjacency bits under the permutation perm (perm[i] = old
// index placed at position i).
uint64_t triangle_code(const std::vector<uint32_t>& adj, const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (adj[perm[i]] & (1u << perm[j])) code |= 1ull << bit;
    return code;
}

} // namespace

uint64_t overlap_graph_signature(std::span<const Dimer> dimers) {
    const int n = static_cast<int>(dimers.size());
    if (n == 0) return 0;
    if (n > kMaxClusterSize) throw std::invalid_argument("overlap_graph_signature: too many dimers");
    const auto adj = overlap_adjacency(dimers);

    // Isomorphism-invariant vertex colors: degree, then the sorted multiset
    // of neighbor degrees. Only permutations that respect the color order
    // can yield the canonical (minimal) encoding of some relabeled copy.
    std::vector<int> degree(n);
    for (int i = 0; i < n; ++i) degree[i] = std::popcount(adj[i]);
    std::vector<std::vector<int>> color(n);
    for (int i = 0; i < n; ++i) {
        color[i].push_back(degree[i]);
        std::vector<int> nd;
        for (int j = 0; j < n; ++j)
            if (adj[i] & (1u << j)) nd.push_back(degree[j]);
        std::sort(nd.begin(), nd.end());
        color[i].insert(color[i].end(), nd.begin(), nd.end());
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return color[a] != color[b] ? color[a] < color[b] : a < b;
    });

    // Segment boundaries of equal colors. Permutations mix vertices only
    // within a class, odometer style across classes; the minimum over that
    // set is isomorphism-invariant because colors are.
    std::vector<std::pair<int, int>> classes;
    for (int i = 0; i < n;) {
        int j = i + 1;
        while (j < n && color[order[j]] == color[order[i]]) ++j;
        classes.emplace_back(i, j);
        i = j;
    }

    uint64_t best = ~0ull;
    std::vector<int> perm = order;
    for (;;) {
        best = std::min(best, triangle_code(adj, perm));
        std::size_t c = 0;
        for (; c < classes.size(); ++c) {
            auto [lo, hi] = classes[c];
            if (std::next_permutation(perm.begin() + lo, perm.begin() + hi)) break;
        }
        if (c == classes.size()) break;
    }

    return (static_cast<uint64_t>(n) << 56) | best;
}

void write_cluster_dump(std::ostream& os, int dim, std::span<const ClusterSupport> supports) {
    for (const ClusterSupport& s : supports) {
        os << dim << ' ' << s.size();
        for (const Dimer& d : s.dimers) {
            os << ' ';
            for (int i = 0; i < dim; ++i) {
                if (i) os << ',';
                os << d.base.x[static_cast<std::size_t>(i)];
            }
            os << ':' << d.axis;
        }
        os << '\n';
    }
}

} // namespace dimerexp
