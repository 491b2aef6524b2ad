#pragma once

// Topology of the quotient surface, funnel counts under both uniformizations,
// the pants decomposition report and half-collar widths.

#include "funnelgroup/mobius.hpp"
#include "funnelgroup/schottky.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace funnelgroup {

struct SurfaceTopology {
    int rank = 0;
    int genus = 0;
    int funnels = 0;
    int cusps = 0;
    int euler = 0;
    std::string name;
};

/// Rank 1 is the hyperbolic cylinder (g=0, two funnels, chi=0); even rank n has
/// genus n/2 and one funnel; odd rank n >= 3 has genus (n-1)/2 and two funnels.
SurfaceTopology fuchsian_topology(int rank);

struct FunnelOption {
    int divisor = 0;
    long long funnels = 0;
    /// Whether rank = 2*genus + funnels - 1 holds for this row.
    bool relation_holds = false;
};

struct ClassicalFunnelSet {
    int rank = 0;
    int genus = 0;
    std::vector<FunnelOption> options;
};

/// For every divisor q of m with 1 <= q < m: f = m(m - (2q - 1))/q.  m = 1 is
/// the cylinder row (genus 0, two funnels).
ClassicalFunnelSet classical_funnels(int m);

bool is_prime(int n);

struct FunnelBoundRow {
    int rank = 0;
    int fuchsian_max = 0;
    long long classical_min = 0;
    long long classical_max = 0;
    bool equality = false;
    bool prime = false;
    std::vector<long long> classical_options;
};

std::vector<FunnelBoundRow> funnel_bound_comparison(int first_rank, int last_rank);

struct BoundaryLabel {
    int piece = 0;    // Y-piece, 1-based
    int boundary = 0; // 0, 1, 2
    std::string str() const;
};

struct GluingEdge {
    BoundaryLabel a;
    BoundaryLabel b;
    std::string twist;
};

struct CurveLength {
    std::string word;
    double length = 0.0;
};

struct ConsistencyFlag {
    std::string name;
    long long stated = 0;
    long long computed = 0;
    std::string detail;
};

struct PantsReport {
    int rank = 0;
    int num_pants = 0;
    int twist_count = 0;
    std::pair<int, int> signature;
    int fn_length_count = 0;
    int fn_twist_count = 0;
    int bers_bound = 0;
    int euler = 0;
    std::vector<GluingEdge> gluing;
    std::vector<BoundaryLabel> unmatched;
    std::vector<CurveLength> curve_lengths;
    std::vector<ConsistencyFlag> consistency_flags;
};

/// Throws RankTooSmall for n < 2.
PantsReport pants_report(int rank);
/// Same, with translation lengths of the generators and of g_i g_j (i < j) attached.
PantsReport pants_report(const SchottkyGroup& group);

struct CollarSpec {
    double boundary_length = 0.0;
    double width = 0.0;
};

/// w = arcsinh(1 / sinh(l/2)).  Throws NonpositiveLength.
CollarSpec collar(double boundary_length);

struct FunnelEnd {
    int index = 0;
    std::optional<double> core_length;
};

struct EndDecomposition {
    int funnels = 0;
    int cusps = 0;
    bool convex_cocompact = true;
    std::vector<FunnelEnd> ends;
    std::optional<double> core_geodesic_length;
    Interval hull_span;
    std::string compact_core;
};

EndDecomposition end_decomposition(const SchottkyGroup& group, const SurfaceTopology& topology);

} // namespace funnelgroup
