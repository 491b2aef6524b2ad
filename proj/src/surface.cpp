#include "funnelgroup/surface.hpp"

#include "funnelgroup/limitset.hpp"

#include <algorithm>
#include <cmath>

namespace funnelgroup {

SurfaceTopology fuchsian_topology(int rank)
{
    if (rank < 1)
        throw RankTooSmall("fuchsian_topology: rank must be >= 1");
    SurfaceTopology t;
    t.rank = rank;
    if (rank == 1) {
        t.genus = 0;
        t.funnels = 2;
        t.name = "hyperbolic cylinder";
    } else if (rank % 2 == 0) {
        t.genus = rank / 2;
        t.funnels = 1;
        t.name = "finite Loch Ness monster";
    } else {
        t.genus = (rank - 1) / 2;
        t.funnels = 2;
        t.name = "finite Jacob's ladder";
    }
    t.euler = 2 - 2 * t.genus - t.funnels - t.cusps;
    return t;
}

ClassicalFunnelSet classical_funnels(int m)
{
    if (m < 1)
        throw RankTooSmall("classical_funnels: rank must be >= 1");
    ClassicalFunnelSet set;
    set.rank = m;
    if (m == 1) {
        set.genus = 0;
        set.options.push_back({1, 2, 1 == 2 * 0 + 2 - 1});
        return set;
    }
    set.genus = m;
    const long long mm = m;
    for (int q = 1; q < m; ++q) {
        if (m % q != 0)
            continue;
        const long long f = mm * (mm - (2LL * q - 1)) / q;
        set.options.push_back({q, f, mm == 2 * mm + f - 1});
    }
    return set;
}

bool is_prime(int n)
{
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<FunnelBoundRow> funnel_bound_comparison(int first_rank, int last_rank)
{
    if (first_rank < 2 || last_rank < first_rank)
        throw RankTooSmall("funnel_bound_comparison: need 2 <= first <= last");
    std::vector<FunnelBoundRow> rows;
    for (int n = first_rank; n <= last_rank; ++n) {
        FunnelBoundRow row;
        row.rank = n;
        // Both parities: the larger funnel count of ranks n and n + 1.
        row.fuchsian_max = std::max(fuchsian_topology(n).funnels, fuchsian_topology(n + 1).funnels);
        for (const FunnelOption& o : classical_funnels(n).options)
            row.classical_options.push_back(o.funnels);
        row.classical_min = *std::min_element(row.classical_options.begin(), row.classical_options.end());
        row.classical_max = static_cast<long long>(n) * (n - 1);
        row.equality = row.classical_min == row.fuchsian_max;
        row.prime = is_prime(n);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string BoundaryLabel::str() const { return "Y" + std::to_string(piece) + ".b" + std::to_string(boundary); }

namespace {

// Y_{2j-1} + Y_{2j} form an X-piece along boundary 0; Y_{2j} is then glued to
// Y_{2j+1} along boundaries 1 and 2.  The outer boundaries of Y_1 and of the last
// piece stay free.
void build_gluing(PantsReport& r)
{
    int twist = 0;
    const auto next_twist = [&twist] { return "beta" + std::to_string(++twist); };
    for (int j = 1; 2 * j <= r.num_pants; ++j) {
        const int left = 2 * j - 1;
        const int right = 2 * j;
        r.gluing.push_back({{left, 0}, {right, 0}, next_twist()});
        if (right < r.num_pants) {
            r.gluing.push_back({{right, 1}, {right + 1, 1}, next_twist()});
            r.gluing.push_back({{right, 2}, {right + 1, 2}, next_twist()});
        }
    }
    r.unmatched = {{1, 1}, {1, 2}, {r.num_pants, 1}, {r.num_pants, 2}};
}

} // namespace

PantsReport pants_report(int n)
{
    if (n < 2)
        throw RankTooSmall("pants_report: rank must be >= 2");
    PantsReport r;
    r.rank = n;
    r.num_pants = 2 * (n - 1);
    r.twist_count = 3 * n - 2;
    r.signature = {n - 2, 4};
    r.fn_length_count = 3 * n + 2;
    r.fn_twist_count = 3 * n - 2;
    r.bers_bound = 31 * n + 21;
    r.euler = 2 - 2 * n;
    build_gluing(r);

    const int coords = r.fn_length_count + r.fn_twist_count;
    r.consistency_flags.push_back({"fenchel_nielsen_dimension", 6LL * n - 4, coords,
                                   "lengths 3n+2 plus twists 3n-2 give 6n parameters; the stated ambient "
                                   "dimension is 6n-4"});
    r.consistency_flags.push_back({"twists_vs_gluings", r.twist_count, static_cast<long long>(r.gluing.size()),
                                   "3n-2 twist parameters but the gluing graph has (3*pants-4)/2 = 3n-5 "
                                   "internal identifications"});
    const SurfaceTopology topo = fuchsian_topology(n);
    r.consistency_flags.push_back({"signature_genus_vs_quotient_genus", r.signature.first, topo.genus,
                                   "pants signature (n-2, 4) vs quotient genus with "
                                       + std::to_string(topo.funnels) + " funnel(s)"});
    return r;
}

PantsReport pants_report(const SchottkyGroup& group)
{
    PantsReport r = pants_report(group.rank());
    const double eps = group.tolerance();
    for (int i = 1; i <= group.rank(); ++i)
        r.curve_lengths.push_back({Word({i}).str(), axis(group.generator(i), eps).translation_length});
    for (int i = 1; i <= group.rank(); ++i)
        for (int j = i + 1; j <= group.rank(); ++j)
            r.curve_lengths.push_back({Word({i, j}).str(),
                                       axis(compose(group.generator(i), group.generator(j)), eps).translation_length});
    return r;
}

CollarSpec collar(double boundary_length)
{
    if (!(boundary_length > 0.0))
        throw NonpositiveLength("collar: boundary length must be positive");
    return {boundary_length, std::asinh(1.0 / std::sinh(boundary_length / 2))};
}

EndDecomposition end_decomposition(const SchottkyGroup& group, const SurfaceTopology& topology)
{
    EndDecomposition d;
    d.funnels = topology.funnels;
    d.cusps = 0;
    d.convex_cocompact = true;
    const double eps = group.tolerance();
    if (group.rank() == 1) {
        const Axis a = axis(group.generator(1), eps);
        d.core_geodesic_length = a.translation_length;
        d.hull_span = {a.repelling, a.attracting};
        d.compact_core = "core geodesic";
        for (int i = 1; i <= d.funnels; ++i)
            d.ends.push_back({i, a.translation_length});
        return d;
    }
    const RefinementLayer first = refine(group, 1);
    d.hull_span = {first.cells.front().interval.lo, first.cells.front().interval.hi};
    for (const Cell& c : first.cells) {
        d.hull_span.lo = std::min(d.hull_span.lo, c.interval.lo);
        d.hull_span.hi = std::max(d.hull_span.hi, c.interval.hi);
    }
    d.compact_core = "Nielsen region quotient";
    for (int i = 1; i <= d.funnels; ++i)
        d.ends.push_back({i, std::nullopt});
    return d;
}

} // namespace funnelgroup
