#include "funnelgroup/cli.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace funnelgroup::cli {

namespace {

std::string fmt(double v)
{
    if (std::abs(v) < 5e-5)
        v = 0.0;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

// Maps boundary coordinates to SVG units: the span [-b_n, b_n] is 100 units
// wide, the boundary line sits at the bottom and y grows upward.
class Canvas {
public:
    Canvas(const SchottkyConfig& config, const SvgStyle& style)
        : span_(config.span()), margin_(style.margin), unit_(100.0 / span_.length())
    {
        width_ = 100.0 + 2 * margin_;
        height_ = 50.0 + 2 * margin_;
        baseline_ = 50.0 + margin_;
    }

    double x(double t) const { return margin_ + (t - span_.lo) * unit_; }
    double y(double h) const { return baseline_ - h * unit_; }
    double scale(double len) const { return len * unit_; }

    void open(std::ostringstream& s, const std::string& title) const
    {
        s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width_ * 10) << "\" height=\""
          << fmt(height_ * 10) << "\" viewBox=\"0 0 " << fmt(width_) << " " << fmt(height_) << "\">\n"
          << "<title>" << title << "</title>\n"
          << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width_) << "\" height=\"" << fmt(height_)
          << "\" fill=\"white\"/>\n"
          << "<line id=\"boundary\" x1=\"0\" y1=\"" << fmt(baseline_) << "\" x2=\"" << fmt(width_) << "\" y2=\""
          << fmt(baseline_) << "\" stroke=\"black\" stroke-width=\"0.15\"/>\n";
    }

    /// Upper half of the circle over [lo, hi].
    void semicircle(std::ostringstream& s, const Interval& i, const std::string& attrs) const
    {
        const double r = scale(i.length() / 2);
        s << "<path d=\"M " << fmt(x(i.lo)) << " " << fmt(baseline_) << " A " << fmt(r) << " " << fmt(r)
          << " 0 0 1 " << fmt(x(i.hi)) << " " << fmt(baseline_) << "\" fill=\"none\" " << attrs << "/>\n";
    }

    void tick(std::ostringstream& s, const Interval& i) const
    {
        s << "<line x1=\"" << fmt(x(i.lo)) << "\" y1=\"" << fmt(baseline_ + 1.0) << "\" x2=\"" << fmt(x(i.hi))
          << "\" y2=\"" << fmt(baseline_ + 1.0) << "\" stroke=\"#1f5fa8\" stroke-width=\"0.6\"/>\n";
    }

    void point(std::ostringstream& s, double t) const
    {
        s << "<circle cx=\"" << fmt(x(t)) << "\" cy=\"" << fmt(baseline_) << "\" r=\"0.25\" fill=\"#c0392b\"/>\n";
    }

private:
    Interval span_;
    double margin_;
    double unit_;
    double width_ = 0;
    double height_ = 0;
    double baseline_ = 0;
};

const char* pair_colour(int k)
{
    static const char* palette[] = {"#2c7fb8", "#d95f0e", "#31a354", "#756bb1", "#e7298a", "#636363"};
    return palette[static_cast<std::size_t>(k - 1) % (sizeof palette / sizeof *palette)];
}

void draw_configuration(std::ostringstream& s, const Canvas& canvas, const SchottkyConfig& config)
{
    s << "<g id=\"semicircles\">\n";
    for (int k = 1; k <= config.rank(); ++k) {
        const std::string attrs = std::string("stroke=\"") + pair_colour(k) + "\" stroke-width=\"0.3\"";
        canvas.semicircle(s, config.mirrored(k), attrs);
        canvas.semicircle(s, config.positive(k), attrs);
    }
    s << "</g>\n";
}

void draw_points(std::ostringstream& s, const Canvas& canvas, const LimitSetSample& sample)
{
    s << "<g id=\"limit-points\">\n";
    for (double p : sample.points)
        canvas.point(s, p);
    s << "</g>\n";
}

} // namespace

std::string render_limitset_svg(const SchottkyGroup& group, const RefinementLayer& layer,
                                const LimitSetSample& sample, const SvgStyle& style)
{
    const Canvas canvas(group.config(), style);
    std::ostringstream s;
    canvas.open(s, "limit set, depth " + std::to_string(layer.depth));
    draw_configuration(s, canvas, group.config());
    s << "<g id=\"cells\">\n";
    for (const Cell& c : layer.cells)
        canvas.tick(s, c.interval);
    s << "</g>\n";
    draw_points(s, canvas, sample);
    s << "</svg>\n";
    return s.str();
}

std::string render_domain_svg(const SchottkyGroup& group, const NielsenBoundary* boundary,
                              const LimitSetSample& sample, const SvgStyle& style)
{
    const Canvas canvas(group.config(), style);
    std::ostringstream s;
    canvas.open(s, "fundamental domain");
    draw_configuration(s, canvas, group.config());
    s << "<g id=\"axes\">\n";
    for (int k = 1; k <= group.rank(); ++k) {
        const Axis a = axis(group.generator(k), group.tolerance());
        canvas.semicircle(s, {std::min(a.repelling, a.attracting), std::max(a.repelling, a.attracting)},
                          "stroke=\"#999999\" stroke-width=\"0.15\" stroke-dasharray=\"0.8 0.8\"");
    }
    s << "</g>\n";
    if (boundary != nullptr) {
        s << "<g id=\"nielsen-boundary\">\n";
        for (const Interval& g : boundary->gaps)
            canvas.semicircle(s, g, "stroke=\"#444444\" stroke-width=\"0.2\"");
        canvas.semicircle(s, boundary->hull_span, "stroke=\"#444444\" stroke-width=\"0.2\"");
        s << "</g>\n";
    }
    draw_points(s, canvas, sample);
    s << "</svg>\n";
    return s.str();
}

} // namespace funnelgroup::cli
