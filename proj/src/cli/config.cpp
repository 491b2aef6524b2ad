#include "funnelgroup/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace funnelgroup::cli {

namespace {

void require_keys(const Json& j, const std::set<std::string>& allowed, const std::string& what)
{
    if (!j.is_object())
        throw SchemaError(what + ": top level must be an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.contains(key))
            throw SchemaError(what + ": unknown key \"" + key + "\"");
}

double number(const Json& j, const std::string& what)
{
    if (!j.is_number())
        throw SchemaError(what + " must be a number");
    return j.get<double>();
}

int positive_integer(const Json& j, const std::string& what)
{
    if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > 1'000'000)
        throw SchemaError(what + " must be a positive integer");
    return j.get<int>();
}

double positive_number(const Json& j, const std::string& what)
{
    const double v = number(j, what);
    if (!(v > 0.0))
        throw SchemaError(what + " must be positive");
    return v;
}

} // namespace

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot read " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

RunConfig parse_run_config(const Json& j)
{
    require_keys(j, {"rank", "intervals", "tolerance", "reversing", "depth", "resolution"}, "config");
    if (!j.contains("rank") || !j.contains("intervals"))
        throw SchemaError("config: \"rank\" and \"intervals\" are required");

    RunConfig c;
    c.rank = positive_integer(j["rank"], "rank");
    const Json& intervals = j["intervals"];
    if (!intervals.is_array())
        throw SchemaError("intervals must be an array");
    if (intervals.size() != static_cast<std::size_t>(c.rank))
        throw SchemaError("intervals: expected " + std::to_string(c.rank) + " pairs, got "
                          + std::to_string(intervals.size()));
    for (const Json& pair : intervals) {
        if (!pair.is_array() || pair.size() != 2)
            throw SchemaError("each interval must be a pair [a, b]");
        c.intervals.push_back({number(pair[0], "interval endpoint"), number(pair[1], "interval endpoint")});
    }
    if (j.contains("tolerance"))
        c.tolerance = positive_number(j["tolerance"], "tolerance");
    if (j.contains("reversing")) {
        const Json& flags = j["reversing"];
        if (!flags.is_array() || flags.size() != static_cast<std::size_t>(c.rank))
            throw SchemaError("reversing must be an array of " + std::to_string(c.rank) + " booleans");
        std::vector<bool> out;
        for (const Json& f : flags) {
            if (!f.is_boolean())
                throw SchemaError("reversing entries must be booleans");
            out.push_back(f.get<bool>());
        }
        c.reversing = std::move(out);
    }
    if (j.contains("depth"))
        c.depth = positive_integer(j["depth"], "depth");
    if (j.contains("resolution"))
        c.resolution = positive_number(j["resolution"], "resolution");

    // Ordering and overlap are part of the schema contract.
    (void)c.schottky();
    return c;
}

RunConfig load_run_config(const std::filesystem::path& path) { return parse_run_config(read_json_file(path)); }

Json to_json(const RunConfig& config)
{
    Json j;
    j["rank"] = config.rank;
    Json intervals = Json::array();
    for (const Interval& i : config.intervals)
        intervals.push_back(Json::array({i.lo, i.hi}));
    j["intervals"] = intervals;
    j["tolerance"] = config.tolerance;
    if (config.reversing) {
        Json flags = Json::array();
        for (bool b : *config.reversing)
            flags.push_back(b);
        j["reversing"] = flags;
    }
    j["depth"] = config.depth;
    j["resolution"] = config.resolution;
    return j;
}

RawGenerators parse_raw_generators(const Json& j)
{
    require_keys(j, {"generators", "tolerance", "depth"}, "generator file");
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        throw SchemaError("generator file: \"generators\" must be a nonempty array");
    RawGenerators raw;
    for (const Json& g : j["generators"]) {
        if (!g.is_array() || g.size() != 4)
            throw SchemaError("each generator must be [a, b, c, d]");
        try {
            raw.generators.emplace_back(number(g[0], "a"), number(g[1], "b"), number(g[2], "c"), number(g[3], "d"));
        } catch (const std::invalid_argument& e) {
            throw SchemaError(std::string("generator: ") + e.what());
        }
    }
    if (j.contains("tolerance"))
        raw.tolerance = positive_number(j["tolerance"], "tolerance");
    if (j.contains("depth"))
        raw.depth = positive_integer(j["depth"], "depth");
    return raw;
}

RawGenerators load_raw_generators(const std::filesystem::path& path)
{
    return parse_raw_generators(read_json_file(path));
}

std::size_t word_cap_from_env()
{
    const char* value = std::getenv("FUNNELGROUP_WORD_CAP");
    if (value == nullptr || *value == '\0')
        return default_word_cap;
    std::istringstream in(value);
    unsigned long long cap = 0;
    if (!(in >> cap) || !in.eof() || cap == 0)
        throw SchemaError(std::string("FUNNELGROUP_WORD_CAP must be a positive integer, got \"") + value + "\"");
    return static_cast<std::size_t>(cap);
}

} // namespace funnelgroup::cli
