#include "funnelgroup/errors.hpp"

namespace funnelgroup {

UseBaseBuilder::UseBaseBuilder()
    : Error("no reversing flag set; use build_group for orientation-preserving groups")
{
}

DegenerateRankOne::DegenerateRankOne(double repelling_, double attracting_)
    : Error("rank-1 group: limit set is two points, hull is the axis ("
            + std::to_string(repelling_) + ", " + std::to_string(attracting_) + ")"),
      repelling(repelling_), attracting(attracting_)
{
}

DepthOverflow::DepthOverflow(std::size_t requested_, std::size_t cap_)
    : Error("reduced-word count " + std::to_string(requested_) + " exceeds word cap "
            + std::to_string(cap_)),
      requested(requested_), cap(cap_)
{
}

} // namespace funnelgroup
