#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "dimerexp/lattice.hpp"

namespace dimerexp {

/// A translation class of connected dimers: sorted, canonically translated,
/// with a connected overlap graph.
struct ClusterSupport {
    std::vector<Dimer> dimers;

    int size() const { return static_cast<int>(dimers.size()); }

    auto operator<=>(const ClusterSupport&) const = default;
};

struct EnumerationOptions {
    int workers = 1;
    /// Enumeration aborts with ResourceLimitError past this many classes.
    std::size_t max_classes = 5'000'000;
};

/// Hard cap on the cluster size; counts grow geometrically beyond it.
inline constexpr int kMaxClusterSize = 8;

/// Every translation class of connected supports with size <= n_max, each
/// exactly once, sorted by (size, dimer sequence). The returned set is
/// independent of the worker count.
std::vector<ClusterSupport> enumerate_connected_supports(int dim, int n_max,
                                                         const EnumerationOptions& opts = {});

/// Bitmask adjacency of the overlap graph: bit j of element i set iff
/// dimers i and j overlap (i != j). At most 8 vertices.
std::vector<uint32_t> overlap_adjacency(std::span<const Dimer> dimers);

bool overlap_graph_connected(std::span<const Dimer> dimers);

/// Canonical key of the overlap graph: vertex count plus the minimal
/// upper-triangle adjacency encoding over all isomorphism-invariant
/// relabelings. Two sets get the same key iff their overlap graphs are
/// isomorphic.
uint64_t overlap_graph_signature(std::span<const Dimer> dimers);

/// One support per line: dimension, size, then "x1,..,xd:axis" tokens in
/// sorted order. Stable across runs for a sorted support list.
void write_cluster_dump(std::ostream& os, int dim, std::span<const ClusterSupport> supports);

} // namespace dimerexp
