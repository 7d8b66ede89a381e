#include "dimerexp/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace dimerexp {

bool overlaps(const Dimer& a, const Dimer& b) {
    const Site a2 = a.second_site();
    const Site b2 = b.second_site();
    return a.base == b.base || a.base == b2 || a2 == b.base || a2 == b2;
}

std::vector<Dimer> overlap_neighborhood(const Dimer& a, int dim) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("overlap_neighborhood: bad dimension");
    if (a.axis < 0 || a.axis >= dim) throw std::invalid_argument("overlap_neighborhood: axis outside dimension");
    std::vector<Dimer> out;
    out.reserve(static_cast<std::size_t>(4 * dim - 1));
    const Site ends[2] = {a.base, a.second_site()};
    for (const Site& s : ends) {
        for (int ax = 0; ax < dim; ++ax) {
            // The two dimers along ax touching site s: based at s and at s - e_ax.
            Dimer up{s, ax};
            Site lower = s;
            lower.x[static_cast<std::size_t>(ax)] -= 1;
            Dimer down{lower, ax};
            for (const Dimer& d : {up, down})
                if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
        }
    }
    return out;
}

std::vector<Dimer> canonical_translate(std::vector<Dimer> dimers) {
    if (dimers.empty()) throw std::invalid_argument("canonical_translate: empty set");
    // The lex-min occupied site is the lex-min base, since base < base + e_axis.
    Site min_base = dimers.front().base;
    for (const Dimer& d : dimers) min_base = std::min(min_base, d.base);
    Site shift{};
    for (int i = 0; i < kMaxDim; ++i) shift.x[i] = -min_base.x[i];
    for (Dimer& d : dimers) d.base = d.base.translated(shift);
    std::sort(dimers.begin(), dimers.end());
    return dimers;
}

std::size_t hash_dimers(std::span<const Dimer> dimers) {
    // FNV-1a over the packed coordinates and axes.
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (const Dimer& d : dimers) {
        for (int i = 0; i < kMaxDim; ++i) mix(static_cast<std::size_t>(static_cast<uint32_t>(d.base.x[i])));
        mix(static_cast<std::size_t>(d.axis));
    }
    return h;
}

} // namespace dimerexp
