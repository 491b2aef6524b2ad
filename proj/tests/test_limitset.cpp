#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "funnelgroup/limitset.hpp"
#include "funnelgroup/schottky.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace funnelgroup;

namespace {

SchottkyGroup group_of(const std::vector<std::pair<double, double>>& pairs)
{
    std::vector<Interval> intervals;
    for (const auto& [lo, hi] : pairs)
        intervals.push_back({lo, hi});
    return build_group(SchottkyConfig(intervals));
}

const SchottkyGroup& worked()
{
    static const SchottkyGroup g = group_of({{2, 8}, {10, 12}});
    return g;
}

std::vector<ExtendedMobiusMap> conjugated(std::span<const ExtendedMobiusMap> gens, const ExtendedMobiusMap& h)
{
    std::vector<ExtendedMobiusMap> out;
    for (const auto& g : gens)
        out.push_back(compose(compose(h, g), inverse(h)));
    return out;
}

bool in_some_cell(const std::vector<Interval>& sorted, double x, double slack)
{
    auto it = std::upper_bound(sorted.begin(), sorted.end(), x, [](double v, const Interval& i) { return v < i.lo; });
    if (it == sorted.begin())
        return false;
    --it;
    return it->lo - slack <= x && x <= it->hi + slack;
}

} // namespace

TEST_CASE("refine on (2,8)")
{
    const auto g = group_of({{2, 8}});
    const auto l1 = refine(g, 1);
    REQUIRE(l1.cells.size() == 2);
    CHECK(l1.cells[0].word == Word({1}));
    CHECK(l1.cells[0].interval == Interval{2, 8});
    CHECK(l1.cells[1].interval == Interval{-8, -2});
    CHECK(l1.total_length == doctest::Approx(12.0));

    const auto l2 = refine(g, 2);
    REQUIRE(l2.cells.size() == 2);
    CHECK(l2.cells[0].word == Word({1, 1}));
    CHECK(l2.cells[0].interval.lo == doctest::Approx(oracle::mobius(5, 16, 1, 5, 2).value()));
    CHECK(l2.cells[0].interval.lo == doctest::Approx(26.0 / 7));
    CHECK(l2.cells[0].interval.hi == doctest::Approx(56.0 / 13));

    CHECK_THROWS_AS(refine(worked(), 12, 10000), DepthOverflow);
}

TEST_CASE("property: nesting, disjointness and shrinking total length")
{
    const std::vector<std::pair<std::vector<std::pair<double, double>>, int>> cases = {
        {{{2, 8}, {10, 12}}, 6},
        {{{1, 3}, {4, 7}, {9, 14}}, 8},
        {{{1, 4}, {5, 9}}, 8},
    };
    for (const auto& [pairs, depth] : cases) {
        const auto layers = refine_layers(group_of(pairs), depth);
        REQUIRE(layers.size() == static_cast<std::size_t>(depth));
        const std::size_t branch = 2 * pairs.size() - 1;
        double rho = 0.0;
        for (std::size_t k = 1; k < layers.size(); ++k) {
            const auto& parent = layers[k - 1].cells;
            const auto& cells = layers[k].cells;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                const Cell& p = parent[c / branch];
                CHECK(cells[c].word.prefix(k) == p.word);
                CHECK(p.interval.strictly_contains(cells[c].interval));
            }
            std::vector<Interval> sorted;
            for (const Cell& c : cells)
                sorted.push_back(c.interval);
            std::sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) { return a.lo < b.lo; });
            for (std::size_t i = 1; i < sorted.size(); ++i)
                CHECK(sorted[i - 1].hi < sorted[i].lo);
            CHECK(layers[k].total_length < layers[k - 1].total_length);
            rho = std::max(rho, layers[k].total_length / layers[k - 1].total_length);
        }
        CHECK(rho < 1.0);
    }
}

TEST_CASE("cell_length agrees with refined endpoints")
{
    for (const auto& pairs : {std::vector<std::pair<double, double>>{{2, 8}, {10, 12}},
                              std::vector<std::pair<double, double>>{{1, 3}, {4, 7}, {9, 14}}}) {
        const auto g = group_of(pairs);
        const auto layers = refine_layers(g, 4);
        const auto lengths = cell_lengths(g, 4);
        for (std::size_t k = 0; k < layers.size(); ++k) {
            REQUIRE(lengths[k].size() == layers[k].cells.size());
            for (std::size_t c = 0; c < lengths[k].size(); ++c)
                CHECK(lengths[k][c] == doctest::Approx(layers[k].cells[c].interval.length()).epsilon(1e-8));
        }
    }
}

TEST_CASE("sample_points")
{
    const auto one = group_of({{2, 8}});
    for (int k = 1; k <= 6; ++k) {
        const auto s = sample_points(one, k);
        REQUIRE(s.points.size() == 2);
        CHECK(s.points[0] == doctest::Approx(4.0));
        CHECK(s.points[1] == doctest::Approx(-4.0));
    }

    for (int k = 1; k <= 6; ++k) {
        const auto layer = refine(worked(), k);
        const auto s = sample_points(worked(), k);
        REQUIRE(s.points.size() == layer.cells.size());
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            CHECK(s.words[i] == layer.cells[i].word);
            CHECK(layer.cells[i].interval.contains(s.points[i]));
        }
    }
}

TEST_CASE("property: generators map the sample into the shallower refinement")
{
    const int k = 5;
    const auto s = sample_points(worked(), k);
    std::vector<Interval> cells;
    for (const Cell& c : refine(worked(), k - 1).cells)
        cells.push_back(c.interval);
    std::sort(cells.begin(), cells.end(), [](auto& a, auto& b) { return a.lo < b.lo; });
    for (int i = 0; i < 4; ++i) {
        const auto g = worked().letter(letter_from_index(i));
        for (double p : s.points)
            CHECK(in_some_cell(cells, apply_boundary(g, p), 1e-9));
    }
}

TEST_CASE("transfer system and spectral radius")
{
    const TransferSystem t(worked().generators(), 1);
    CHECK(t.states() == 4);
    for (double s : {0.1, 0.3, 0.7}) {
        const auto m = t.matrix(s);
        CHECK(spectral_radius(m) == doctest::Approx(oracle::spectral_radius(m)).epsilon(1e-10));
    }
    const TransferSystem t3(worked().generators(), 3);
    CHECK(t3.states() == 36);
    const auto m3 = t3.matrix(0.4);
    CHECK(spectral_radius(m3) == doctest::Approx(oracle::spectral_radius(m3)).epsilon(1e-10));
}

TEST_CASE("property: pressure is strictly decreasing in s")
{
    std::mt19937_64 rng(0x70726573);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = group_of(oracle::random_config(rng, 2 + trial % 3));
        const TransferSystem t(g.generators(), 1 + trial % 2);
        double previous = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 20; ++i) {
            const double rho = spectral_radius(t.matrix(0.001 + 0.998 * i / 20));
            CHECK(rho < previous);
            previous = rho;
        }
    }
}

TEST_CASE("estimate_dimension_pressure")
{
    CHECK(estimate_dimension_pressure(group_of({{2, 8}})).value == 0.0);

    const auto e = estimate_dimension_pressure(worked());
    CHECK(e.value > 0.0);
    CHECK(e.value < 1.0);
    CHECK(e.bracket.length() <= 1e-4);
    CHECK(e.bracket.lo <= e.value);
    CHECK(e.value <= e.bracket.hi);
    CHECK(e.value == doctest::Approx(0.3256).epsilon(1e-3));

    // Finer partitions move towards the same value.
    PressureOptions fine;
    fine.partition_depth = 4;
    const auto f = estimate_dimension_pressure(worked(), fine);
    CHECK(std::abs(f.value - e.value) < 0.01);

    PressureOptions narrow;
    narrow.s_min = 0.5;
    CHECK_THROWS_AS(estimate_dimension_pressure(worked(), narrow), NoBracket);
}

TEST_CASE("property: pressure estimate is conjugation invariant")
{
    const PressureOptions options;
    const double base = estimate_dimension_pressure(worked(), options).value;

    const ExtendedMobiusMap affine(3, -1, 0, 2);
    const double a = estimate_dimension_pressure(conjugated(worked().generators(), affine), options).value;
    CHECK(std::abs(a - base) <= 2 * options.resolution);

    PressureOptions deep;
    deep.partition_depth = 4;
    const double deep_base = estimate_dimension_pressure(worked(), deep).value;
    const ExtendedMobiusMap moebius(2, 1, 1, 1);
    const double m = estimate_dimension_pressure(conjugated(worked().generators(), moebius), deep).value;
    CHECK(std::abs(m - deep_base) <= 2 * deep.resolution);
}

TEST_CASE("estimate_dimension_boxcount")
{
    CHECK(estimate_dimension_boxcount(group_of({{2, 8}}), 5).value == 0.0);
    CHECK_THROWS_AS(estimate_dimension_boxcount(worked(), 2), std::invalid_argument);

    const auto b = estimate_dimension_boxcount(worked(), 8);
    CHECK(b.table.size() == 8);
    for (std::size_t i = 1; i < b.table.size(); ++i) {
        CHECK(b.table[i].scale < b.table[i - 1].scale);
        CHECK(b.table[i].cover_size >= b.table[i - 1].cover_size);
    }
    CHECK(b.value > 0.0);
    CHECK(b.value < 1.0);

    // Doubling the depth does not widen the gap to the pressure estimate.
    const double p = estimate_dimension_pressure(worked()).value;
    const double gap4 = std::abs(estimate_dimension_boxcount(worked(), 4).value - p);
    const double gap8 = std::abs(b.value - p);
    CHECK(gap8 <= gap4);
}

TEST_CASE("convergence_type_report")
{
    DimensionEstimate e;
    e.value = 0.3;
    auto r = convergence_type_report(e);
    CHECK(r.convergence_type);
    CHECK(r.dimension_at_most_half);
    CHECK(r.green_function_exists);

    e.value = 0.6;
    r = convergence_type_report(e);
    CHECK(r.convergence_type);
    CHECK_FALSE(r.dimension_at_most_half);

    r = convergence_type_report(estimate_dimension_pressure(group_of({{2, 8}})));
    CHECK(r.convergence_type);
    CHECK(r.dimension_at_most_half);
}
