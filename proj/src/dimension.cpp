#include "funnelgroup/limitset.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace funnelgroup {

TransferSystem::TransferSystem(std::span<const ExtendedMobiusMap> generators, int partition_depth, double eps)
{
    const int rank = static_cast<int>(generators.size());
    if (partition_depth < 1)
        throw std::invalid_argument("TransferSystem: partition depth must be >= 1");

    std::vector<ExtendedMobiusMap> letters;
    std::vector<double> letter_points;
    for (int i = 0; i < 2 * rank; ++i) {
        letters.push_back(letter_map(generators, letter_from_index(i)));
        letter_points.push_back(axis(letters.back(), eps).attracting);
    }

    words_ = enumerate(rank, partition_depth).words;
    std::map<Word, Eigen::Index> index;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const Word& u = words_[i];
        index.emplace(u, static_cast<Eigen::Index>(i));
        const double seed = letter_points[static_cast<std::size_t>(letter_index(u.back()))];
        points_.push_back(apply_boundary(evaluate(u.prefix(u.size() - 1), generators), seed, eps));
    }

    for (std::size_t j = 0; j < words_.size(); ++j) {
        const Word& u = words_[j];
        const Word tail = u.prefix(u.size() - 1);
        for (int i = 0; i < 2 * rank; ++i) {
            const Letter l = letter_from_index(i);
            if (l == -u.front())
                continue;
            std::vector<Letter> shifted{l};
            shifted.insert(shifted.end(), tail.letters().begin(), tail.letters().end());
            const Eigen::Index to = index.at(Word(std::move(shifted)));
            const double contraction = std::abs(derivative(letters[static_cast<std::size_t>(i)], points_[j]));
            transitions_.push_back({static_cast<Eigen::Index>(j), to, contraction});
        }
    }
}

Eigen::MatrixXd TransferSystem::matrix(double s) const
{
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(states(), states());
    for (const Transition& t : transitions_)
        m(t.to, t.from) += std::pow(t.contraction, s);
    return m;
}

double spectral_radius(const Eigen::MatrixXd& m, double rel_tol, int max_iterations)
{
    Eigen::VectorXd x = Eigen::VectorXd::Ones(m.rows());
    double lower = 0.0;
    double upper = 0.0;
    for (int it = 0; it < max_iterations; ++it) {
        const Eigen::VectorXd y = m * x;
        lower = std::numeric_limits<double>::infinity();
        upper = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            const double ratio = y(i) / x(i);
            lower = std::min(lower, ratio);
            upper = std::max(upper, ratio);
        }
        if (upper - lower <= rel_tol * upper)
            break;
        x = y / y.maxCoeff();
    }
    return (lower + upper) / 2;
}

DimensionEstimate estimate_dimension_pressure(std::span<const ExtendedMobiusMap> generators,
                                              const PressureOptions& options, double eps)
{
    DimensionEstimate est;
    est.method = DimensionMethod::SpectralPressure;
    est.depth = options.partition_depth;
    if (generators.size() < 2) {
        est.value = 0.0;
        est.bracket = {0.0, 0.0};
        est.spectral_radius = 1.0;
        return est;
    }

    const TransferSystem system(generators, options.partition_depth, eps);
    const auto radius = [&](double s) { return spectral_radius(system.matrix(s)); };

    double lo = options.s_min;
    double hi = options.s_max;
    if (radius(lo) <= 1.0)
        throw NoBracket("pressure: spectral radius at s = " + std::to_string(lo) + " is already <= 1");
    if (radius(hi) >= 1.0)
        throw NoBracket("pressure: spectral radius at s = " + std::to_string(hi) + " is still >= 1");
    while (hi - lo > options.resolution) {
        const double mid = (lo + hi) / 2;
        if (radius(mid) > 1.0)
            lo = mid;
        else
            hi = mid;
    }
    est.bracket = {lo, hi};
    est.value = (lo + hi) / 2;
    est.spectral_radius = radius(est.value);
    return est;
}

DimensionEstimate estimate_dimension_pressure(const SchottkyGroup& group, const PressureOptions& options)
{
    return estimate_dimension_pressure(group.generators(), options, group.tolerance());
}

DimensionEstimate estimate_dimension_boxcount(const SchottkyGroup& group, int depth, std::size_t cap)
{
    DimensionEstimate est;
    est.method = DimensionMethod::BoxCounting;
    est.depth = depth;
    if (group.rank() < 2) {
        est.value = 0.0;
        est.bracket = {0.0, 0.0};
        return est;
    }
    if (depth < 3)
        throw std::invalid_argument("boxcount: depth must be >= 3");

    const std::vector<std::vector<double>> layers = cell_lengths(group, depth, cap);
    // Children of parent p occupy indices [p*(2n-1), (p+1)*(2n-1)) in the next layer.
    const std::size_t branch = static_cast<std::size_t>(2 * group.rank() - 1);

    for (std::size_t k = 0; k < layers.size(); ++k) {
        const double scale = *std::max_element(layers[k].begin(), layers[k].end());
        std::size_t cover = 0;
        for (std::size_t j = 0; j < layers.size(); ++j) {
            const auto& lengths = layers[j];
            for (std::size_t c = 0; c < lengths.size(); ++c) {
                if (lengths[c] > scale)
                    continue;
                if (j == 0 || layers[j - 1][c / branch] > scale)
                    ++cover;
            }
        }
        est.table.push_back({static_cast<int>(k + 1), scale, cover, -std::log(scale),
                             std::log(static_cast<double>(cover))});
    }

    // Fit log N = slope * log(1/eps) + intercept over layers 2..depth.
    const Eigen::Index rows = static_cast<Eigen::Index>(est.table.size()) - 1;
    Eigen::MatrixXd design(rows, 2);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const ScaleRow& row = est.table[static_cast<std::size_t>(r + 1)];
        design(r, 0) = row.log_inverse_scale;
        design(r, 1) = 1.0;
        rhs(r) = row.log_count;
    }
    const Eigen::Vector2d fit = design.colPivHouseholderQr().solve(rhs);
    est.value = fit(0);
    est.bracket = {est.value, est.value};
    return est;
}

} // namespace funnelgroup
