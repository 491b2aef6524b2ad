#include "funnelgroup/limitset.hpp"
#include "funnelgroup/schottky.hpp"

#include <algorithm>

namespace funnelgroup {

std::vector<NielsenBoundary::Geodesic> NielsenBoundary::geodesics() const
{
    std::vector<Geodesic> out;
    out.reserve(gaps.size());
    for (const Interval& g : gaps)
        out.push_back({g.midpoint(), g.length() / 2});
    return out;
}

NielsenBoundary nielsen_boundary(const SchottkyGroup& group, int depth, std::size_t cap)
{
    if (group.rank() == 1) {
        const Axis a = axis(group.generator(1), group.tolerance());
        throw DegenerateRankOne(a.repelling, a.attracting);
    }
    if (depth < 0)
        throw std::invalid_argument("nielsen_boundary: depth must be >= 0");

    const RefinementLayer layer = refine(group, depth + 1, cap);
    std::vector<Interval> cells;
    cells.reserve(layer.cells.size());
    for (const Cell& c : layer.cells)
        cells.push_back(c.interval);
    std::sort(cells.begin(), cells.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    NielsenBoundary boundary;
    boundary.depth = depth;
    boundary.hull_span = {cells.front().lo, cells.back().hi};
    for (std::size_t i = 1; i < cells.size(); ++i)
        boundary.gaps.push_back({cells[i - 1].hi, cells[i].lo});
    return boundary;
}

} // namespace funnelgroup
