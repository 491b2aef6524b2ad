// Runs the acceptance criteria and prints one PASS/FAIL line for each.

#include "funnelgroup/cli.hpp"
#include "funnelgroup/limitset.hpp"
#include "funnelgroup/schottky.hpp"
#include "funnelgroup/surface.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace funnelgroup;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

char buf[256];

template <typename... T>
std::string format(const char* f, T... v)
{
    std::snprintf(buf, sizeof buf, f, v...);
    return buf;
}

SchottkyGroup worked() { return build_group(SchottkyConfig({{2, 8}, {10, 12}})); }

Outcome topology_rows()
{
    const std::map<int, std::pair<int, int>> rows = {
        {2, {1, 1}}, {3, {1, 2}}, {4, {2, 1}}, {5, {2, 2}},  {6, {3, 1}},
        {7, {3, 2}}, {8, {4, 1}}, {9, {4, 2}}, {10, {5, 1}}, {11, {5, 2}},
    };
    Outcome o;
    for (const auto& [n, row] : rows) {
        const auto t = fuchsian_topology(n);
        o.require(t.genus == row.first && t.funnels == row.second, format("rank %d: (g, F) mismatch", n));
        o.require(t.euler == 1 - n && t.euler == 2 - 2 * t.genus - t.funnels, format("rank %d: chi mismatch", n));
    }
    if (o.pass)
        o.detail = "ranks 2..11 exact";
    return o;
}

Outcome classical_rows()
{
    const std::map<int, std::vector<long long>> rows = {
        {1, {2}},        {2, {2}},  {3, {6}},         {4, {12, 2}},  {5, {20}},
        {6, {30, 9, 2}}, {7, {42}}, {8, {56, 20, 2}}, {9, {72, 12}}, {10, {90, 35, 2}},
    };
    Outcome o;
    for (const auto& [m, expected] : rows) {
        std::vector<long long> got;
        for (const auto& opt : classical_funnels(m).options)
            got.push_back(opt.funnels);
        o.require(got == expected, format("rank %d: funnel options mismatch", m));
    }
    if (o.pass)
        o.detail = "ranks 1..10 exact, including 30/9/2 and 72/12";
    return o;
}

Outcome funnel_bounds()
{
    Outcome o;
    for (const auto& r : funnel_bound_comparison(2, 50)) {
        o.require(r.fuchsian_max == 2, format("rank %d: fuchsian max != 2", r.rank));
        if (r.rank % 2 == 0)
            o.require(r.classical_min == 2 && r.equality, format("rank %d: even rank without equality", r.rank));
        if (is_prime(r.rank))
            o.require(r.classical_options == std::vector<long long>{static_cast<long long>(r.rank) * (r.rank - 1)},
                      format("prime %d: options != {p(p-1)}", r.rank));
    }
    if (o.pass)
        o.detail = "ranks 2..50";
    return o;
}

Outcome pants_counts()
{
    Outcome o;
    for (int n = 2; n <= 20; ++n) {
        const auto p = pants_report(n);
        o.require(p.num_pants == 2 * (n - 1) && p.twist_count == 3 * n - 2, format("n=%d: pants/twists", n));
        o.require(p.signature == std::pair{n - 2, 4}, format("n=%d: signature", n));
        o.require(p.bers_bound == 31 * n + 21, format("n=%d: Bers bound", n));
        o.require(p.fn_length_count == 3 * n + 2 && p.fn_twist_count == 3 * n - 2, format("n=%d: FN counts", n));
        const bool flagged = std::any_of(p.consistency_flags.begin(), p.consistency_flags.end(), [&](auto& f) {
            return f.name == "fenchel_nielsen_dimension" && f.stated == 6 * n - 4 && f.computed == 6 * n;
        });
        o.require(flagged, format("n=%d: 6n vs 6n-4 flag missing", n));
    }
    if (o.pass)
        o.detail = "n = 2..20";
    return o;
}

Outcome generator()
{
    Outcome o;
    const auto g = build_group(SchottkyConfig({{2, 8}}));
    const auto& s = g.generator(1);
    const Axis a = axis(s);
    const double tol = 1e-9;
    o.require(std::abs(a.repelling + 4) <= tol && std::abs(a.attracting - 4) <= tol, "fixed points not +-4");
    o.require(std::abs(a.translation_length - 2 * std::log(3.0)) <= tol, "translation length != 2 ln 3");
    o.require(std::abs(apply_boundary(s, -8.0) - 8) <= tol, "-8 does not map to 8");
    o.require(std::abs(apply_boundary(s, -2.0) - 2) <= tol, "-2 does not map to 2");
    if (o.pass)
        o.detail = format("fixed points %.12f, %.12f; length %.12f", a.repelling, a.attracting, a.translation_length);
    return o;
}

Outcome ping_pong()
{
    Outcome o;
    const auto g = worked();
    o.require(verify_schottky_condition(g).passed(), "verify_schottky_condition failed");
    const auto hyp = purely_hyperbolic_sample(g.generators(), 6, 1e-9);
    o.require(hyp.all_hyperbolic, "non-hyperbolic word of length <= 6");
    const auto free = freeness_sample(g.generators(), 8, 1e-9);
    o.require(free.free, "word of length <= 8 near +-identity");
    if (o.pass)
        o.detail = format("%zu words hyperbolic, %zu words free, min distance %.3g", hyp.words_checked,
                          free.words_checked, free.min_identity_distance);
    return o;
}

Outcome refinement()
{
    Outcome o;
    const auto g = worked();
    const auto layers = refine_layers(g, 6);
    const std::size_t branch = 3;
    for (std::size_t k = 0; k < layers.size(); ++k) {
        const auto& cells = layers[k].cells;
        if (k > 0) {
            for (std::size_t c = 0; c < cells.size(); ++c)
                o.require(layers[k - 1].cells[c / branch].interval.strictly_contains(cells[c].interval),
                          format("depth %zu: cell not strictly nested", k + 1));
            o.require(layers[k].total_length < layers[k - 1].total_length,
                      format("depth %zu: total length did not decrease", k + 1));
        }
        std::vector<Interval> sorted;
        for (const Cell& c : cells)
            sorted.push_back(c.interval);
        std::sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) { return a.lo < b.lo; });
        for (std::size_t i = 1; i < sorted.size(); ++i)
            o.require(sorted[i - 1].hi < sorted[i].lo, format("depth %zu: cells overlap", k + 1));

        const auto sample = sample_points(g, static_cast<int>(k + 1));
        for (std::size_t i = 0; i < cells.size(); ++i)
            o.require(cells[i].interval.contains(sample.points[i]),
                      format("depth %zu: fixed point outside its cell", k + 1));
    }
    if (o.pass)
        o.detail = format("depths 1..6, total length %.4g -> %.4g", layers.front().total_length,
                          layers.back().total_length);
    return o;
}

Outcome dimension()
{
    Outcome o;
    const auto g = worked();
    const double p = estimate_dimension_pressure(g).value;
    const double b = estimate_dimension_boxcount(g, 8).value;
    o.require(std::abs(p - b) <= 0.05, format("gap %.4f > 0.05", std::abs(p - b)));

    const auto one = build_group(SchottkyConfig({{2, 8}}));
    o.require(estimate_dimension_pressure(one).value == 0.0, "rank-1 pressure != 0");
    o.require(estimate_dimension_boxcount(one, 8).value == 0.0, "rank-1 box count != 0");

    // Shrink each interval about its centre.
    std::vector<double> sweep;
    for (double t : {1.0, 0.5, 0.25}) {
        std::vector<Interval> intervals;
        for (const Interval& i : g.config().positive_intervals()) {
            const double c = i.midpoint(), r = i.length() / 2;
            intervals.push_back({c - t * r, c + t * r});
        }
        sweep.push_back(estimate_dimension_pressure(build_group(SchottkyConfig(intervals))).value);
    }
    o.require(sweep[0] > sweep[1] && sweep[1] > sweep[2], "shrink sweep not strictly decreasing");
    if (o.pass)
        o.detail = format("pressure %.4f, box count %.4f, gap %.4f; sweep %.4f > %.4f > %.4f; delta<=1/2: %s", p, b,
                          std::abs(p - b), sweep[0], sweep[1], sweep[2], p <= 0.5 ? "yes" : "no");
    return o;
}

Outcome collar_identity()
{
    Outcome o;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double l = std::pow(10.0, -3.0 + 5.0 * i / 49);
        worst = std::max(worst, std::abs(std::sinh(collar(l).width) * std::sinh(l / 2) - 1.0));
    }
    o.require(worst <= 1e-12, format("identity residual %.3g", worst));
    const double self = std::abs(collar(2 * std::asinh(1.0)).width - std::asinh(1.0));
    o.require(self <= 1e-12, format("w(2 asinh 1) off by %.3g", self));
    if (o.pass)
        o.detail = format("50-point grid, max residual %.3g", worst);
    return o;
}

int run_cli(const std::vector<std::string>& args, std::string& out)
{
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    out = o.str();
    return code;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome counter_example(const fs::path& data)
{
    Outcome o;
    const std::vector<ExtendedMobiusMap> gamma2 = {ExtendedMobiusMap(1, 2, 0, 1), ExtendedMobiusMap(1, 0, 2, 1)};
    const auto r = is_fuchsian_schottky(gamma2, 6);
    o.require(!r.fuchsian_schottky, "accepted as Fuchsian Schottky");
    o.require(r.offending_word && *r.offending_word == Word({1}) && r.offending_kind == IsometryKind::Parabolic,
              "offending parabolic generator not identified");
    std::string out;
    const int code = run_cli({"verify", "--raw-generators", (data / "gamma2.json").string()}, out);
    o.require(code == cli::CheckFailed, format("CLI exit %d, expected 1", code));
    if (o.pass)
        o.detail = r.note;
    return o;
}

Outcome determinism(const fs::path& data, const fs::path& scratch)
{
    Outcome o;
    fs::create_directories(scratch);
    const std::string worked_cfg = (data / "worked.json").string();
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> commands = {
        {{"verify", worked_cfg}, {}},
        {{"verify", "--raw-generators", (data / "gamma2.json").string()}, {}},
        {{"verify", (data / "reversing.json").string()}, {}},
        {{"limitset", worked_cfg, "--depth", "5", "--svg", "@limitset.svg"}, {"limitset.svg"}},
        {{"dimension", worked_cfg, "--depth", "8"}, {}},
        {{"topology", worked_cfg}, {}},
        {{"topology", "--rank", "6"}, {}},
        {{"pants", worked_cfg}, {}},
        {{"pants", "--rank", "4"}, {}},
        {{"render", worked_cfg, "--depth", "2", "--svg", "@render.svg"}, {"render.svg"}},
    };
    int files = 0;
    for (const auto& [args, svgs] : commands) {
        std::vector<std::string> resolved;
        for (const auto& a : args)
            resolved.push_back(a.starts_with("@") ? (scratch / a.substr(1)).string() : a);
        std::string first, second;
        std::vector<std::string> first_svgs;
        run_cli(resolved, first);
        for (const auto& s : svgs)
            first_svgs.push_back(slurp(scratch / s));
        run_cli(resolved, second);
        o.require(!first.empty() && first == second, args[0] + ": report differs between runs");
        for (std::size_t i = 0; i < svgs.size(); ++i) {
            o.require(!first_svgs[i].empty() && first_svgs[i] == slurp(scratch / svgs[i]),
                      args[0] + ": SVG differs between runs");
            ++files;
        }
    }
    if (o.pass)
        o.detail = format("%zu invocations, %d SVGs byte-identical", commands.size(), files);
    return o;
}

} // namespace

int main()
{
    const fs::path data = FUNNELGROUP_TEST_DATA;
    const fs::path scratch = fs::path(FUNNELGROUP_TEST_SCRATCH) / "acceptance";

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"genus and funnels by rank", topology_rows},
        {"classical funnel options", classical_rows},
        {"funnel bound comparison", funnel_bounds},
        {"pants decomposition counts", pants_counts},
        {"generator correctness on (2,8)", generator},
        {"ping-pong and freeness", ping_pong},
        {"refinement invariants", refinement},
        {"dimension estimators", dimension},
        {"collar identity", collar_identity},
        {"counter-example gate", [&] { return counter_example(data); }},
        {"determinism", [&] { return determinism(data, scratch); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += !o.pass;
        std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
