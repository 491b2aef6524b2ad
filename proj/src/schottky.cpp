#include "funnelgroup/schottky.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace funnelgroup {

namespace {

std::string describe(const Interval& i)
{
    return "(" + std::to_string(i.lo) + ", " + std::to_string(i.hi) + ")";
}

double min_consecutive_gap(const std::vector<Interval>& sorted)
{
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < sorted.size(); ++i)
        gap = std::min(gap, sorted[i].lo - sorted[i - 1].hi);
    return gap;
}

} // namespace

SchottkyConfig::SchottkyConfig(std::vector<Interval> positive_intervals, double tolerance)
    : positive_(std::move(positive_intervals)), tolerance_(tolerance)
{
    if (positive_.empty())
        throw InvalidConfig("configuration needs at least one interval");
    if (!(tolerance_ > 0.0))
        throw InvalidConfig("tolerance must be positive");
    double previous = 0.0;
    for (std::size_t k = 0; k < positive_.size(); ++k) {
        const Interval& iv = positive_[k];
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
            throw InvalidConfig("interval " + std::to_string(k + 1) + " has a non-finite endpoint");
        if (!(iv.lo < iv.hi))
            throw InvalidConfig("interval " + std::to_string(k + 1) + " " + describe(iv) + " is empty or reversed");
        if (!(iv.lo > previous)) {
            throw InvalidConfig(k == 0 ? "interval 1 " + describe(iv) + " must lie right of 0"
                                       : "interval " + std::to_string(k + 1) + " " + describe(iv)
                                             + " overlaps or precedes interval " + std::to_string(k));
        }
        previous = iv.hi;
    }
}

Interval SchottkyConfig::positive(int k) const { return positive_.at(static_cast<std::size_t>(k - 1)); }

Interval SchottkyConfig::mirrored(int k) const
{
    const Interval p = positive(k);
    return {-p.hi, -p.lo};
}

std::vector<Interval> SchottkyConfig::all_intervals() const
{
    std::vector<Interval> out;
    for (int k = rank(); k >= 1; --k)
        out.push_back(mirrored(k));
    for (int k = 1; k <= rank(); ++k)
        out.push_back(positive(k));
    return out;
}

Interval SchottkyConfig::span() const
{
    const double outer = positive_.back().hi;
    return {-outer, outer};
}

ExtendedMobiusMap pairing_generator(const Interval& positive)
{
    const double center = positive.midpoint();
    const double radius = positive.length() / 2;
    return compose(reflection_in_imaginary_axis<double>(), reflection_in_semicircle(-center, radius));
}

SchottkyGroup build_group(const SchottkyConfig& config)
{
    SchottkyGroup group(config);
    group.generators_.reserve(static_cast<std::size_t>(config.rank()));
    for (const Interval& iv : config.positive_intervals())
        group.generators_.push_back(pairing_generator(iv));
    return group;
}

VerificationReport verify_schottky_condition(const SchottkyGroup& group)
{
    const SchottkyConfig& config = group.config();
    const double eps = config.tolerance();
    const std::vector<Interval> intervals = config.all_intervals();

    VerificationReport report;
    report.min_gap = min_consecutive_gap(intervals);
    report.disjoint = report.min_gap > 0.0;
    report.tangency_margin = report.min_gap;
    report.non_tangent = report.min_gap > eps;

    report.nesting = true;
    for (int i = 0; i < 2 * config.rank(); ++i) {
        const Letter l = letter_from_index(i);
        const ExtendedMobiusMap m = group.letter(l);
        const Interval source = config.source(l);
        const Interval target = config.target(l);
        for (const Interval& j : intervals) {
            if (j == source)
                continue;
            NestingCheck check;
            check.letter = l;
            check.interval = j;
            check.target = target;
            try {
                check.image = image_interval(m, j, eps);
                check.margin = std::min(check.image.lo - target.lo, target.hi - check.image.hi);
                check.nested = target.strictly_contains(check.image);
            } catch (const PoleInsideInterval&) {
                check.nested = false;
                check.margin = -std::numeric_limits<double>::infinity();
            }
            report.nesting = report.nesting && check.nested;
            report.nesting_checks.push_back(check);
        }
    }
    return report;
}

std::vector<int> ExtendedSchottkyGroup::reversing_generators() const
{
    std::vector<int> out;
    for (std::size_t k = 0; k < reversing_.size(); ++k)
        if (reversing_[k])
            out.push_back(static_cast<int>(k + 1));
    return out;
}

ExtendedSchottkyGroup build_extended_group(const SchottkyConfig& config, const std::vector<bool>& reversing)
{
    if (reversing.size() != static_cast<std::size_t>(config.rank()))
        throw InvalidConfig("reversing flags: expected " + std::to_string(config.rank()) + ", got "
                            + std::to_string(reversing.size()));
    if (std::none_of(reversing.begin(), reversing.end(), [](bool b) { return b; }))
        throw UseBaseBuilder();

    ExtendedSchottkyGroup group(build_group(config), reversing);
    for (int k = 1; k <= config.rank(); ++k) {
        const ExtendedMobiusMap& g = group.base().generator(k);
        if (!reversing[static_cast<std::size_t>(k - 1)]) {
            group.generators_.push_back(g);
            continue;
        }
        const Interval p = config.positive(k);
        const double axis_radius = std::sqrt(p.lo * p.hi);
        group.generators_.push_back(compose(g, reflection_in_semicircle(0.0, axis_radius)));
    }
    return group;
}

std::vector<SampledElement> orientation_subgroup_sample(const ExtendedSchottkyGroup& group, int depth,
                                                        std::size_t cap)
{
    std::vector<SampledElement> out;
    for_each_reduced_word(
        group.generators(), depth,
        [&](const Word& w, const ExtendedMobiusMap& m) {
            if (m.orientation() > 0)
                out.push_back({w, m});
            return true;
        },
        cap);
    return out;
}

ClassificationReport is_fuchsian_schottky(std::span<const ExtendedMobiusMap> generators, int depth,
                                          std::optional<double> dimension_estimate, double eps, std::size_t cap)
{
    ClassificationReport report;
    report.rank = static_cast<int>(generators.size());
    report.sample_depth = depth;
    if (generators.empty()) {
        report.note = "empty generator list";
        return report;
    }

    report.orientation_preserving = std::all_of(generators.begin(), generators.end(),
                                                [](const ExtendedMobiusMap& g) { return g.orientation() > 0; });

    const HyperbolicSample sample = purely_hyperbolic_sample(generators, depth, eps, cap);
    report.purely_hyperbolic_sample = sample.all_hyperbolic;
    report.offending_word = sample.offending;
    report.offending_kind = sample.offending_kind;

    // Isometric circles: g maps the exterior of I(g) onto the interior of I(g^-1).
    bool has_circles = true;
    for (const ExtendedMobiusMap& g : generators) {
        if (std::abs(g.c()) <= eps) {
            has_circles = false;
            continue;
        }
        const double radius = 1.0 / std::abs(g.c());
        const double from = -g.d() / g.c();
        const double to = g.a() / g.c();
        report.isometric_circles.push_back({from - radius, from + radius});
        report.isometric_circles.push_back({to - radius, to + radius});
    }
    std::sort(report.isometric_circles.begin(), report.isometric_circles.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    if (has_circles) {
        report.semicircle_gap = min_consecutive_gap(report.isometric_circles);
        report.disjoint_semicircles = *report.semicircle_gap > eps;
    }

    if (dimension_estimate) {
        report.dimension_estimate = dimension_estimate;
        report.dimension_at_most_half = *dimension_estimate <= 0.5;
    }

    report.fuchsian_schottky =
        report.orientation_preserving && report.purely_hyperbolic_sample && report.disjoint_semicircles;

    if (!report.orientation_preserving)
        report.note = "a generator reverses orientation";
    else if (!report.purely_hyperbolic_sample)
        report.note = "word " + sample.offending->str() + " is " + std::string(to_string(sample.offending_kind))
                      + "; not a Fuchsian Schottky group";
    else if (!has_circles)
        report.note = "a generator fixes infinity; no semicircle pairing";
    else if (!report.disjoint_semicircles)
        report.note = "pairing semicircles intersect or touch";
    else if (report.rank == 1)
        report.note = "rank 1: holds trivially, limit set is two conical limit points";
    else
        report.note = "purely hyperbolic with disjoint semicircle pairing";
    return report;
}

ClassificationReport is_fuchsian_schottky(const SchottkyGroup& group, int depth,
                                          std::optional<double> dimension_estimate, std::size_t cap)
{
    return is_fuchsian_schottky(group.generators(), depth, dimension_estimate, group.tolerance(), cap);
}

} // namespace funnelgroup
