#include "funnelgroup/cli.hpp"

#include <cmath>

namespace funnelgroup::cli {

namespace {

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json optional_word(const std::optional<Word>& w) { return w ? Json(w->str()) : Json(nullptr); }

} // namespace

Json report_header(const std::string& command)
{
    Json j;
    j["schema_version"] = schema_version;
    j["command"] = command;
    return j;
}

Json to_json(const Interval& i) { return Json::array({i.lo, i.hi}); }

Json to_json(const ExtendedMobiusMap& m)
{
    Json j;
    j["coefficients"] = Json::array({m.a(), m.b(), m.c(), m.d()});
    j["orientation"] = m.orientation();
    j["class"] = std::string(to_string(classify(m)));
    return j;
}

Json to_json(const Axis& a)
{
    Json j;
    j["repelling"] = a.repelling;
    j["attracting"] = a.attracting;
    j["translation_length"] = a.translation_length;
    return j;
}

Json to_json(const VerificationReport& r)
{
    Json j;
    j["passed"] = r.passed();
    j["disjoint"] = r.disjoint;
    j["min_gap"] = r.min_gap;
    j["nesting"] = r.nesting;
    j["non_tangent"] = r.non_tangent;
    j["tangency_margin"] = r.tangency_margin;
    Json checks = Json::array();
    for (const NestingCheck& c : r.nesting_checks) {
        Json e;
        e["letter"] = Word({c.letter}).str();
        e["interval"] = to_json(c.interval);
        e["image"] = c.nested || std::isfinite(c.margin) ? to_json(c.image) : Json(nullptr);
        e["target"] = to_json(c.target);
        e["nested"] = c.nested;
        e["margin"] = finite_or_null(c.margin);
        checks.push_back(e);
    }
    j["nesting_checks"] = checks;
    return j;
}

Json to_json(const HyperbolicSample& s)
{
    Json j;
    j["all_hyperbolic"] = s.all_hyperbolic;
    j["offending_word"] = optional_word(s.offending);
    j["offending_class"] = s.offending ? Json(std::string(to_string(s.offending_kind))) : Json(nullptr);
    j["words_checked"] = s.words_checked;
    return j;
}

Json to_json(const FreenessSample& s)
{
    Json j;
    j["free"] = s.free;
    j["offending_word"] = optional_word(s.offending);
    j["min_identity_distance"] = finite_or_null(s.min_identity_distance);
    j["words_checked"] = s.words_checked;
    return j;
}

Json to_json(const ClassificationReport& r)
{
    Json j;
    j["rank"] = r.rank;
    j["verdict"] = r.fuchsian_schottky ? "Fuchsian Schottky" : "not Fuchsian Schottky";
    j["fuchsian_schottky"] = r.fuchsian_schottky;
    j["note"] = r.note;
    j["sample_depth"] = r.sample_depth;
    j["orientation_preserving"] = r.orientation_preserving;
    j["purely_hyperbolic_sample"] = r.purely_hyperbolic_sample;
    j["offending_word"] = optional_word(r.offending_word);
    j["offending_class"] = r.offending_word ? Json(std::string(to_string(r.offending_kind))) : Json(nullptr);
    j["disjoint_semicircles"] = r.disjoint_semicircles;
    j["semicircle_gap"] = r.semicircle_gap ? finite_or_null(*r.semicircle_gap) : Json(nullptr);
    Json circles = Json::array();
    for (const Interval& i : r.isometric_circles)
        circles.push_back(to_json(i));
    j["isometric_circles"] = circles;
    j["dimension_estimate"] = r.dimension_estimate ? Json(*r.dimension_estimate) : Json(nullptr);
    j["dimension_at_most_half"] = r.dimension_at_most_half ? Json(*r.dimension_at_most_half) : Json(nullptr);
    return j;
}

Json to_json(const RefinementLayer& layer, bool with_cells)
{
    Json j;
    j["depth"] = layer.depth;
    j["cell_count"] = layer.cells.size();
    j["total_length"] = layer.total_length;
    j["max_cell_length"] = layer.max_cell_length();
    if (with_cells) {
        Json cells = Json::array();
        for (const Cell& c : layer.cells)
            cells.push_back(Json::array({c.word.str(), c.interval.lo, c.interval.hi}));
        j["cells"] = cells;
    }
    return j;
}

Json to_json(const LimitSetSample& s)
{
    Json j;
    j["depth"] = s.depth;
    Json points = Json::array();
    for (std::size_t i = 0; i < s.points.size(); ++i)
        points.push_back(Json::array({s.words[i].str(), s.points[i]}));
    j["points"] = points;
    return j;
}

Json to_json(const DimensionEstimate& e)
{
    Json j;
    j["method"] = std::string(to_string(e.method));
    j["value"] = e.value;
    j["bracket"] = to_json(e.bracket);
    j["depth"] = e.depth;
    if (e.method == DimensionMethod::SpectralPressure) {
        j["spectral_radius"] = e.spectral_radius;
    } else {
        Json table = Json::array();
        for (const ScaleRow& r : e.table) {
            Json row;
            row["layer"] = r.layer;
            row["scale"] = r.scale;
            row["cover_size"] = r.cover_size;
            row["log_inverse_scale"] = r.log_inverse_scale;
            row["log_count"] = r.log_count;
            table.push_back(row);
        }
        j["table"] = table;
    }
    return j;
}

Json to_json(const ConvergenceReport& r)
{
    Json j;
    j["value"] = r.value;
    j["convergence_type"] = r.convergence_type;
    j["green_function_exists"] = r.green_function_exists;
    j["dimension_at_most_half"] = r.dimension_at_most_half;
    return j;
}

Json to_json(const SurfaceTopology& t)
{
    Json j;
    j["rank"] = t.rank;
    j["genus"] = t.genus;
    j["funnels"] = t.funnels;
    j["cusps"] = t.cusps;
    j["euler"] = t.euler;
    j["name"] = t.name;
    return j;
}

Json to_json(const ClassicalFunnelSet& s)
{
    Json j;
    j["rank"] = s.rank;
    j["genus"] = s.genus;
    Json options = Json::array();
    for (const FunnelOption& o : s.options) {
        Json e;
        e["divisor"] = o.divisor;
        e["funnels"] = o.funnels;
        e["relation_n_eq_2g_plus_f_minus_1"] = o.relation_holds;
        options.push_back(e);
    }
    j["options"] = options;
    return j;
}

Json to_json(const FunnelBoundRow& r)
{
    Json j;
    j["rank"] = r.rank;
    j["fuchsian_max"] = r.fuchsian_max;
    j["classical_min"] = r.classical_min;
    j["classical_max"] = r.classical_max;
    j["equality"] = r.equality;
    j["prime"] = r.prime;
    j["classical_options"] = r.classical_options;
    return j;
}

Json to_json(const PantsReport& r)
{
    Json j;
    j["rank"] = r.rank;
    j["num_pants"] = r.num_pants;
    j["twist_count"] = r.twist_count;
    j["signature"] = Json::array({r.signature.first, r.signature.second});
    j["fn_length_count"] = r.fn_length_count;
    j["fn_twist_count"] = r.fn_twist_count;
    j["bers_bound"] = r.bers_bound;
    j["euler"] = r.euler;
    Json edges = Json::array();
    for (const GluingEdge& e : r.gluing)
        edges.push_back(Json::array({e.a.str(), e.b.str(), e.twist}));
    j["gluing_graph"] = edges;
    Json free = Json::array();
    for (const BoundaryLabel& b : r.unmatched)
        free.push_back(b.str());
    j["unmatched_boundaries"] = free;
    Json lengths = Json::array();
    for (const CurveLength& c : r.curve_lengths) {
        Json e;
        e["word"] = c.word;
        e["length"] = c.length;
        e["collar_width"] = collar(c.length).width;
        lengths.push_back(e);
    }
    j["curve_lengths"] = lengths;
    Json flags = Json::array();
    for (const ConsistencyFlag& f : r.consistency_flags) {
        Json e;
        e["name"] = f.name;
        e["stated"] = f.stated;
        e["computed"] = f.computed;
        e["detail"] = f.detail;
        flags.push_back(e);
    }
    j["consistency_flags"] = flags;
    return j;
}

Json to_json(const CollarSpec& c)
{
    Json j;
    j["boundary_length"] = c.boundary_length;
    j["width"] = c.width;
    return j;
}

Json to_json(const EndDecomposition& d)
{
    Json j;
    j["funnels"] = d.funnels;
    j["cusps"] = d.cusps;
    j["convex_cocompact"] = d.convex_cocompact;
    j["compact_core"] = d.compact_core;
    j["core_geodesic_length"] = d.core_geodesic_length ? Json(*d.core_geodesic_length) : Json(nullptr);
    j["hull_span"] = to_json(d.hull_span);
    Json ends = Json::array();
    for (const FunnelEnd& e : d.ends) {
        Json f;
        f["index"] = e.index;
        f["core_length"] = e.core_length ? Json(*e.core_length) : Json(nullptr);
        ends.push_back(f);
    }
    j["ends"] = ends;
    return j;
}

Json to_json(const NielsenBoundary& b)
{
    Json j;
    j["depth"] = b.depth;
    j["hull_span"] = to_json(b.hull_span);
    Json gaps = Json::array();
    for (const Interval& g : b.gaps)
        gaps.push_back(to_json(g));
    j["gaps"] = gaps;
    return j;
}

} // namespace funnelgroup::cli
