#pragma once

// Configuration files, JSON reports, SVG figures and subcommand dispatch for
// the `funnelgroup` command-line tool.

#include "funnelgroup/limitset.hpp"
#include "funnelgroup/schottky.hpp"
#include "funnelgroup/surface.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace funnelgroup::cli {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

enum ExitCode : int { Success = 0, CheckFailed = 1, InputError = 2 };

/// Malformed configuration or generator file.
class SchemaError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    int rank = 0;
    std::vector<Interval> intervals;
    double tolerance = default_tolerance;
    std::optional<std::vector<bool>> reversing;
    int depth = 6;
    double resolution = 1e-4;

    SchottkyConfig schottky() const { return SchottkyConfig(intervals, tolerance); }
};

/// Schema: {"rank": int, "intervals": [[a,b],...], "tolerance"?: number,
/// "reversing"?: [bool,...], "depth"?: int, "resolution"?: number}.
RunConfig parse_run_config(const Json& j);
RunConfig load_run_config(const std::filesystem::path& path);
Json to_json(const RunConfig& config);

struct RawGenerators {
    std::vector<ExtendedMobiusMap> generators;
    double tolerance = default_tolerance;
    std::optional<int> depth;
};

/// Schema: {"generators": [[a,b,c,d],...], "tolerance"?: number, "depth"?: int}.
RawGenerators parse_raw_generators(const Json& j);
RawGenerators load_raw_generators(const std::filesystem::path& path);

/// FUNNELGROUP_WORD_CAP, or the library default.  Throws SchemaError on garbage.
std::size_t word_cap_from_env();

Json read_json_file(const std::filesystem::path& path);
/// Two-space indent, trailing newline.
std::string dump(const Json& j);

// Report sections.
Json to_json(const Interval& i);
Json to_json(const ExtendedMobiusMap& m);
Json to_json(const Axis& a);
Json to_json(const VerificationReport& r);
Json to_json(const HyperbolicSample& s);
Json to_json(const FreenessSample& s);
Json to_json(const ClassificationReport& r);
Json to_json(const RefinementLayer& layer, bool with_cells);
Json to_json(const LimitSetSample& s);
Json to_json(const DimensionEstimate& e);
Json to_json(const ConvergenceReport& r);
Json to_json(const SurfaceTopology& t);
Json to_json(const ClassicalFunnelSet& s);
Json to_json(const FunnelBoundRow& r);
Json to_json(const PantsReport& r);
Json to_json(const CollarSpec& c);
Json to_json(const EndDecomposition& d);
Json to_json(const NielsenBoundary& b);

/// Empty report object carrying schema_version and command name.
Json report_header(const std::string& command);

struct SvgStyle {
    double margin = 10.0;
};

/// Boundary line horizontal, 100 units across the span [-b_n, b_n], semicircles upward.
/// Draws the configured semicircles, depth-k cells as ticks on the axis and the sample points.
std::string render_limitset_svg(const SchottkyGroup& group, const RefinementLayer& layer,
                                const LimitSetSample& sample, const SvgStyle& style = {});

/// Configured semicircles, Nielsen gap geodesics, generator axes and sample points.
std::string render_domain_svg(const SchottkyGroup& group, const NielsenBoundary* boundary,
                              const LimitSetSample& sample, const SvgStyle& style = {});

/// Entry point shared by the executable and the tests.  `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace funnelgroup::cli
