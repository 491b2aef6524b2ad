#include "funnelgroup/limitset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace funnelgroup {

namespace {

// evaluate(word) for each cell of a layer; the child w*l is maps[w](target(l)).
struct LayerState {
    std::vector<ExtendedMobiusMap> maps;
};

void check_disjoint(const RefinementLayer& layer)
{
    std::vector<Interval> sorted;
    sorted.reserve(layer.cells.size());
    for (const Cell& c : layer.cells)
        sorted.push_back(c.interval);
    std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (!(sorted[i - 1].hi < sorted[i].lo))
            throw NestingViolation("refine: cells overlap at depth " + std::to_string(layer.depth));
}

} // namespace

double RefinementLayer::max_cell_length() const
{
    double m = 0.0;
    for (const Cell& c : cells)
        m = std::max(m, c.interval.length());
    return m;
}

std::vector<RefinementLayer> refine_layers(const SchottkyGroup& group, int depth, std::size_t cap)
{
    if (depth < 1)
        throw std::invalid_argument("refine: depth must be >= 1");
    const int rank = group.rank();
    const std::size_t count = reduced_word_count(rank, depth);
    if (count > cap)
        throw DepthOverflow(count, cap);

    const SchottkyConfig& config = group.config();
    const double eps = group.tolerance();

    std::vector<ExtendedMobiusMap> letters;
    for (int i = 0; i < 2 * rank; ++i)
        letters.push_back(group.letter(letter_from_index(i)));

    std::vector<RefinementLayer> layers;
    RefinementLayer first;
    first.depth = 1;
    LayerState state;
    for (int i = 0; i < 2 * rank; ++i) {
        const Letter l = letter_from_index(i);
        first.cells.push_back({Word({l}), config.target(l)});
        state.maps.push_back(letters[static_cast<std::size_t>(i)]);
    }
    first.total_length = std::accumulate(first.cells.begin(), first.cells.end(), 0.0,
                                         [](double s, const Cell& c) { return s + c.interval.length(); });
    check_disjoint(first);
    layers.push_back(std::move(first));

    for (int k = 2; k <= depth; ++k) {
        const RefinementLayer& parent = layers.back();
        RefinementLayer next;
        next.depth = k;
        next.cells.reserve(reduced_word_count(rank, k));
        LayerState next_state;
        next_state.maps.reserve(next.cells.capacity());
        for (std::size_t p = 0; p < parent.cells.size(); ++p) {
            const Cell& cell = parent.cells[p];
            const ExtendedMobiusMap& m = state.maps[p];
            for (int i = 0; i < 2 * rank; ++i) {
                const Letter l = letter_from_index(i);
                if (l == -cell.word.back())
                    continue;
                Interval child;
                try {
                    child = image_interval(m, config.target(l), eps);
                } catch (const PoleInsideInterval& e) {
                    throw NestingViolation(std::string("refine: ") + e.what());
                }
                if (!cell.interval.strictly_contains(child))
                    throw NestingViolation("refine: cell " + cell.word.appended(l).str()
                                           + " is not strictly inside its parent");
                next.cells.push_back({cell.word.appended(l), child});
                next.total_length += child.length();
                next_state.maps.push_back(compose(m, letters[static_cast<std::size_t>(i)]));
            }
        }
        check_disjoint(next);
        layers.push_back(std::move(next));
        state = std::move(next_state);
    }
    return layers;
}

RefinementLayer refine(const SchottkyGroup& group, int depth, std::size_t cap)
{
    auto layers = refine_layers(group, depth, cap);
    return std::move(layers.back());
}

double cell_length(const SchottkyGroup& group, const Word& word)
{
    if (word.empty())
        throw std::invalid_argument("cell_length: empty word");
    const Interval target = group.config().target(word.back());
    double x = target.lo;
    double y = target.hi;
    double dx = 1.0;
    double dy = 1.0;
    const double eps = group.tolerance();
    for (std::size_t i = word.size() - 1; i-- > 0;) {
        const ExtendedMobiusMap& g = group.letter(word.letters()[i]);
        dx *= std::abs(derivative(g, x));
        dy *= std::abs(derivative(g, y));
        x = apply_boundary(g, x, eps);
        y = apply_boundary(g, y, eps);
    }
    return target.length() * std::sqrt(dx * dy);
}

std::vector<std::vector<double>> cell_lengths(const SchottkyGroup& group, int depth, std::size_t cap)
{
    if (depth < 1)
        throw std::invalid_argument("cell_lengths: depth must be >= 1");
    const std::size_t count = reduced_word_count(group.rank(), depth);
    if (count > cap)
        throw DepthOverflow(count, cap);
    std::vector<std::vector<double>> out;
    for (int k = 1; k <= depth; ++k) {
        const WordLayer layer = enumerate(group.rank(), k, cap);
        std::vector<double> lengths;
        lengths.reserve(layer.words.size());
        for (const Word& w : layer.words)
            lengths.push_back(cell_length(group, w));
        out.push_back(std::move(lengths));
    }
    return out;
}

LimitSetSample sample_points(const SchottkyGroup& group, int depth, std::size_t cap)
{
    const RefinementLayer layer = refine(group, depth, cap);
    const double eps = group.tolerance();

    std::vector<double> letter_points;
    for (int i = 0; i < 2 * group.rank(); ++i)
        letter_points.push_back(axis(group.letter(letter_from_index(i)), eps).attracting);

    LimitSetSample sample;
    sample.depth = depth;
    for (const Cell& cell : layer.cells) {
        const Word prefix = cell.word.prefix(cell.word.size() - 1);
        const double seed = letter_points[static_cast<std::size_t>(letter_index(cell.word.back()))];
        sample.words.push_back(cell.word);
        sample.points.push_back(apply_boundary(evaluate(prefix, group.generators()), seed, eps));
    }
    return sample;
}

ConvergenceReport convergence_type_report(const DimensionEstimate& estimate)
{
    ConvergenceReport r;
    r.value = estimate.value;
    r.convergence_type = estimate.value < 1.0;
    r.green_function_exists = r.convergence_type;
    r.dimension_at_most_half = estimate.value <= 0.5;
    return r;
}

} // namespace funnelgroup
