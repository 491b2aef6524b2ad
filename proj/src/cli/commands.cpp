#include "funnelgroup/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>

namespace funnelgroup::cli {

namespace {

constexpr int default_freeness_depth = 8;

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw SchemaError("cannot write " + path);
    file << text;
}

void emit(const Json& report, const std::string& path, std::ostream& out)
{
    if (path.empty())
        out << dump(report);
    else
        write_text(path, dump(report));
}

Json generators_json(const SchottkyGroup& group)
{
    Json list = Json::array();
    for (int k = 1; k <= group.rank(); ++k) {
        Json g = to_json(group.generator(k));
        g["axis"] = to_json(axis(group.generator(k), group.tolerance()));
        list.push_back(g);
    }
    return list;
}

std::optional<double> pressure_or_nothing(const SchottkyGroup& group, double resolution)
{
    try {
        PressureOptions options;
        options.resolution = resolution;
        return estimate_dimension_pressure(group, options).value;
    } catch (const NoBracket&) {
        return std::nullopt;
    }
}

// Largest depth <= wanted whose reduced-word count fits under the cap.
int clip_depth(int rank, int wanted, std::size_t cap)
{
    int depth = wanted;
    while (depth > 1 && reduced_word_count(rank, depth) > cap)
        --depth;
    return depth;
}

struct VerifyArgs {
    std::string config;
    std::string raw;
    int depth = 0;
    int freeness_depth = default_freeness_depth;
    std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    if (a.config.empty() == a.raw.empty())
        throw SchemaError("verify: give exactly one of CONFIG or --raw-generators");
    const std::size_t cap = word_cap_from_env();
    Json report = report_header("verify");

    if (!a.raw.empty()) {
        const RawGenerators raw = load_raw_generators(a.raw);
        const int depth = a.depth > 0 ? a.depth : raw.depth.value_or(6);
        const ClassificationReport cls = is_fuchsian_schottky(raw.generators, depth, std::nullopt, raw.tolerance, cap);
        Json gens = Json::array();
        for (const ExtendedMobiusMap& g : raw.generators)
            gens.push_back(to_json(g));
        report["mode"] = "raw-generators";
        report["generators"] = gens;
        report["classification"] = to_json(cls);
        report["passed"] = cls.fuchsian_schottky;
        emit(report, a.out, out);
        return cls.fuchsian_schottky ? Success : CheckFailed;
    }

    const RunConfig rc = load_run_config(a.config);
    const SchottkyGroup group = build_group(rc.schottky());
    const int depth = a.depth > 0 ? a.depth : rc.depth;
    const int free_depth = clip_depth(group.rank(), a.freeness_depth, cap);

    const VerificationReport ver = verify_schottky_condition(group);
    const HyperbolicSample hyp = purely_hyperbolic_sample(group.generators(), depth, group.tolerance(), cap);
    const FreenessSample free = freeness_sample(group.generators(), free_depth, group.tolerance(), cap);
    const ClassificationReport cls =
        is_fuchsian_schottky(group, depth, pressure_or_nothing(group, rc.resolution), cap);

    report["mode"] = "config";
    report["config"] = to_json(rc);
    report["generators"] = generators_json(group);
    report["verification"] = to_json(ver);
    report["purely_hyperbolic"] = to_json(hyp);
    Json freeness = to_json(free);
    freeness["depth"] = free_depth;
    report["freeness"] = freeness;
    report["classification"] = to_json(cls);

    if (rc.reversing && std::any_of(rc.reversing->begin(), rc.reversing->end(), [](bool b) { return b; })) {
        const ExtendedSchottkyGroup ext = build_extended_group(rc.schottky(), *rc.reversing);
        const int sample_depth = clip_depth(ext.rank(), std::min(depth, 4), cap);
        const auto sample = orientation_subgroup_sample(ext, sample_depth, cap);
        Json gens = Json::array();
        for (int k = 1; k <= ext.rank(); ++k) {
            Json g = to_json(ext.generator(k));
            g["reversing"] = static_cast<bool>(ext.reversing()[static_cast<std::size_t>(k - 1)]);
            gens.push_back(g);
        }
        bool all_hyperbolic = true;
        for (const SampledElement& e : sample)
            all_hyperbolic = all_hyperbolic && classify(e.map, ext.tolerance()) == IsometryKind::Hyperbolic;
        Json extended;
        extended["generators"] = gens;
        extended["orientation_subgroup_index"] = ext.orientation_subgroup_index();
        extended["sample_depth"] = sample_depth;
        extended["orientation_preserving_words"] = sample.size();
        extended["sample_purely_hyperbolic"] = all_hyperbolic;
        report["extended"] = extended;
    }

    const bool passed = ver.passed() && hyp.all_hyperbolic && free.free && cls.fuchsian_schottky;
    report["passed"] = passed;
    emit(report, a.out, out);
    return passed ? Success : CheckFailed;
}

struct LimitsetArgs {
    std::string config;
    int depth = 0;
    std::string svg;
    std::string out;
};

int cmd_limitset(const LimitsetArgs& a, std::ostream& out)
{
    const RunConfig rc = load_run_config(a.config);
    const SchottkyGroup group = build_group(rc.schottky());
    const int depth = a.depth > 0 ? a.depth : rc.depth;
    const std::size_t cap = word_cap_from_env();

    const auto layers = refine_layers(group, depth, cap);
    const LimitSetSample sample = sample_points(group, depth, cap);

    Json report = report_header("limitset");
    report["config"] = to_json(rc);
    report["depth"] = depth;
    Json summary = Json::array();
    Json lengths = Json::array();
    for (const RefinementLayer& layer : layers) {
        summary.push_back(to_json(layer, false));
        lengths.push_back(layer.total_length);
    }
    report["layers"] = summary;
    report["total_length"] = lengths;
    report["cells"] = to_json(layers.back(), true)["cells"];
    report["sample"] = to_json(sample);

    if (!a.svg.empty())
        write_text(a.svg, render_limitset_svg(group, layers.back(), sample));
    emit(report, a.out, out);
    return Success;
}

struct DimensionArgs {
    std::string config;
    std::string method = "both";
    int depth = 0;
    int partition_depth = 1;
    std::string out;
};

int cmd_dimension(const DimensionArgs& a, std::ostream& out)
{
    const RunConfig rc = load_run_config(a.config);
    const SchottkyGroup group = build_group(rc.schottky());
    const int depth = a.depth > 0 ? a.depth : std::max(rc.depth, 3);
    const std::size_t cap = word_cap_from_env();

    Json report = report_header("dimension");
    report["config"] = to_json(rc);
    report["method"] = a.method;

    std::optional<DimensionEstimate> pressure;
    std::optional<DimensionEstimate> box;
    if (a.method == "pressure" || a.method == "both") {
        PressureOptions options;
        options.resolution = rc.resolution;
        options.partition_depth = a.partition_depth;
        pressure = estimate_dimension_pressure(group, options);
        report["pressure"] = to_json(*pressure);
    }
    if (a.method == "boxcount" || a.method == "both") {
        box = estimate_dimension_boxcount(group, depth, cap);
        report["boxcount"] = to_json(*box);
    }
    if (pressure && box)
        report["cross_method_gap"] = std::abs(pressure->value - box->value);
    report["convergence"] = to_json(convergence_type_report(pressure ? *pressure : *box));
    emit(report, a.out, out);
    return Success;
}

struct SurfaceArgs {
    std::string config;
    int rank = 0;
    std::string out;
};

std::optional<SchottkyGroup> group_for(const SurfaceArgs& a, int& rank)
{
    if (a.config.empty() == (a.rank == 0))
        throw SchemaError("give exactly one of CONFIG or --rank");
    if (a.config.empty()) {
        rank = a.rank;
        return std::nullopt;
    }
    SchottkyGroup group = build_group(load_run_config(a.config).schottky());
    rank = group.rank();
    return group;
}

int cmd_topology(const SurfaceArgs& a, std::ostream& out)
{
    int rank = 0;
    const auto group = group_for(a, rank);
    const SurfaceTopology topo = fuchsian_topology(rank);

    Json report = report_header("topology");
    report["topology"] = to_json(topo);
    report["classical_funnels"] = to_json(classical_funnels(rank));
    report["funnel_bound"] = rank >= 2 ? to_json(funnel_bound_comparison(rank, rank).front()) : Json(nullptr);
    if (group)
        report["ends"] = to_json(end_decomposition(*group, topo));
    emit(report, a.out, out);
    return Success;
}

int cmd_pants(const SurfaceArgs& a, std::ostream& out)
{
    int rank = 0;
    const auto group = group_for(a, rank);
    const PantsReport pants = group ? pants_report(*group) : pants_report(rank);

    Json report = report_header("pants");
    report["pants"] = to_json(pants);
    emit(report, a.out, out);
    return Success;
}

struct RenderArgs {
    std::string config;
    int depth = 1;
    std::string svg;
    std::string out;
};

int cmd_render(const RenderArgs& a, std::ostream& out)
{
    const RunConfig rc = load_run_config(a.config);
    const SchottkyGroup group = build_group(rc.schottky());
    const std::size_t cap = word_cap_from_env();

    std::optional<NielsenBoundary> boundary;
    if (group.rank() >= 2)
        boundary = nielsen_boundary(group, a.depth, cap);
    const LimitSetSample sample = sample_points(group, a.depth + 1, cap);
    write_text(a.svg, render_domain_svg(group, boundary ? &*boundary : nullptr, sample));

    Json report = report_header("render");
    report["config"] = to_json(rc);
    report["svg"] = a.svg;
    report["nielsen_boundary"] = boundary ? to_json(*boundary) : Json(nullptr);
    report["points"] = sample.points.size();
    emit(report, a.out, out);
    return Success;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fuchsian Schottky groups: verification, limit sets, dimension and surface topology",
                 "funnelgroup"};
    app.require_subcommand(1);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "check the Schottky conditions of a configuration");
    verify_cmd->add_option("config", verify.config, "configuration file");
    verify_cmd->add_option("--raw-generators", verify.raw, "file of explicit coefficient quadruples");
    verify_cmd->add_option("--depth", verify.depth, "word length for the hyperbolicity sample")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--freeness-depth", verify.freeness_depth, "word length for the freeness sample")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--out", verify.out, "report file (stdout if absent)");

    LimitsetArgs limitset;
    auto* limitset_cmd = app.add_subcommand("limitset", "nested-interval approximation of the limit set");
    limitset_cmd->add_option("config", limitset.config, "configuration file")->required();
    limitset_cmd->add_option("--depth", limitset.depth, "refinement depth")->check(CLI::PositiveNumber);
    limitset_cmd->add_option("--svg", limitset.svg, "SVG output");
    limitset_cmd->add_option("--out", limitset.out, "report file (stdout if absent)");

    DimensionArgs dimension;
    auto* dimension_cmd = app.add_subcommand("dimension", "Hausdorff dimension estimates");
    dimension_cmd->add_option("config", dimension.config, "configuration file")->required();
    dimension_cmd->add_option("--method", dimension.method, "pressure, boxcount or both")
        ->check(CLI::IsMember({"pressure", "boxcount", "both"}));
    dimension_cmd->add_option("--depth", dimension.depth, "refinement depth for box counting")
        ->check(CLI::Range(3, 64));
    dimension_cmd->add_option("--partition-depth", dimension.partition_depth, "Markov partition word length")
        ->check(CLI::Range(1, 16));
    dimension_cmd->add_option("--out", dimension.out, "report file (stdout if absent)");

    SurfaceArgs topology;
    auto* topology_cmd = app.add_subcommand("topology", "quotient surface topology and funnel counts");
    topology_cmd->add_option("config", topology.config, "configuration file");
    topology_cmd->add_option("--rank", topology.rank, "rank without a configuration");
    topology_cmd->add_option("--out", topology.out, "report file (stdout if absent)");

    SurfaceArgs pants;
    auto* pants_cmd = app.add_subcommand("pants", "pants decomposition and Fenchel-Nielsen counts");
    pants_cmd->add_option("config", pants.config, "configuration file");
    pants_cmd->add_option("--rank", pants.rank, "rank without a configuration");
    pants_cmd->add_option("--out", pants.out, "report file (stdout if absent)");

    RenderArgs render;
    auto* render_cmd = app.add_subcommand("render", "SVG of the pairing semicircles and Nielsen boundary");
    render_cmd->add_option("config", render.config, "configuration file")->required();
    render_cmd->add_option("--svg", render.svg, "SVG output")->required();
    render_cmd->add_option("--depth", render.depth, "Nielsen boundary depth")->check(CLI::NonNegativeNumber);
    render_cmd->add_option("--out", render.out, "report file (stdout if absent)");

    std::vector<std::string> storage{"funnelgroup"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& s : storage)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Success;
    } catch (const CLI::ParseError& e) {
        err << "funnelgroup: " << e.what() << "\n";
        return InputError;
    }

    try {
        if (verify_cmd->parsed())
            return cmd_verify(verify, out);
        if (limitset_cmd->parsed())
            return cmd_limitset(limitset, out);
        if (dimension_cmd->parsed())
            return cmd_dimension(dimension, out);
        if (topology_cmd->parsed())
            return cmd_topology(topology, out);
        if (pants_cmd->parsed())
            return cmd_pants(pants, out);
        if (render_cmd->parsed())
            return cmd_render(render, out);
    } catch (const SchemaError& e) {
        err << "funnelgroup: " << e.what() << "\n";
        return InputError;
    } catch (const InvalidConfig& e) {
        err << "funnelgroup: invalid configuration: " << e.what() << "\n";
        return InputError;
    } catch (const RankTooSmall& e) {
        err << "funnelgroup: " << e.what() << "\n";
        return InputError;
    } catch (const std::invalid_argument& e) {
        err << "funnelgroup: " << e.what() << "\n";
        return InputError;
    } catch (const std::exception& e) {
        err << "funnelgroup: " << e.what() << "\n";
        return CheckFailed;
    }
    return InputError;
}

} // namespace funnelgroup::cli
