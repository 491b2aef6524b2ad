#pragma once

// Nested-interval approximations of the limit set and two independent
// Hausdorff-dimension estimators: a transfer-matrix pressure zero and a
// box-counting slope over the refinement layers.

#include "funnelgroup/mobius.hpp"
#include "funnelgroup/schottky.hpp"
#include "funnelgroup/words.hpp"

#include <Eigen/Dense>

#include <span>
#include <string_view>
#include <vector>

namespace funnelgroup {

struct Cell {
    Word word;
    Interval interval;
};

/// Cells of the words of length `depth`: evaluate(l_1 .. l_{k-1}) applied to
/// the target interval of l_k.  Cells are in canonical word order.
struct RefinementLayer {
    int depth = 0;
    std::vector<Cell> cells;
    double total_length = 0.0;

    double max_cell_length() const;
};

/// Layers 1..depth.  Throws DepthOverflow past the word cap and
/// NestingViolation if a child cell is not strictly inside its parent or two
/// cells of one layer overlap.
std::vector<RefinementLayer> refine_layers(const SchottkyGroup& group, int depth,
                                           std::size_t cap = default_word_cap);

RefinementLayer refine(const SchottkyGroup& group, int depth, std::size_t cap = default_word_cap);

/// Length of the cell of `word` from |g(I)| = |I| sqrt(|g'(lo) g'(hi)|), with
/// g' taken as a product along the word.  Keeps full relative precision after
/// the cell itself has shrunk below the spacing of doubles.
double cell_length(const SchottkyGroup& group, const Word& word);

/// cell_length for every word of lengths 1..depth, canonical order per layer.
std::vector<std::vector<double>> cell_lengths(const SchottkyGroup& group, int depth,
                                              std::size_t cap = default_word_cap);

/// One limit point per depth-k cell: the attracting fixed point of
/// prefix * l_k * prefix^-1, i.e. evaluate(prefix) applied to the attracting
/// fixed point of l_k.  Always inside the cell.
struct LimitSetSample {
    int depth = 0;
    std::vector<Word> words;
    std::vector<double> points;
};

LimitSetSample sample_points(const SchottkyGroup& group, int depth, std::size_t cap = default_word_cap);

enum class DimensionMethod { SpectralPressure, BoxCounting };

inline std::string_view to_string(DimensionMethod m)
{
    return m == DimensionMethod::SpectralPressure ? "SpectralPressure" : "BoxCounting";
}

struct ScaleRow {
    int layer = 0;
    double scale = 0.0;            // max cell length of the layer
    std::size_t cover_size = 0;    // cells of length <= scale whose parent is longer
    double log_inverse_scale = 0.0;
    double log_count = 0.0;
};

struct DimensionEstimate {
    double value = 0.0;
    DimensionMethod method = DimensionMethod::SpectralPressure;
    Interval bracket;
    int depth = 0;                 // partition depth (pressure) or refinement depth (box count)
    double spectral_radius = 1.0;  // at `value`; pressure method only
    std::vector<ScaleRow> table;   // box count only
};

struct PressureOptions {
    double resolution = 1e-4;
    /// Markov states are reduced words of this length; 1 is one point per letter.
    int partition_depth = 1;
    double s_min = 0.001;
    double s_max = 0.999;
};

/// Nonnegative transfer matrix over reduced words u of length d: the entry from
/// u to l*u[0..d-2] is |l'(x_u)|^s for every letter l != u[0]^-1, with x_u the
/// sample point of u.
class TransferSystem {
public:
    TransferSystem(std::span<const ExtendedMobiusMap> generators, int partition_depth,
                   double eps = default_tolerance);

    Eigen::MatrixXd matrix(double s) const;
    Eigen::Index states() const { return static_cast<Eigen::Index>(words_.size()); }
    const std::vector<Word>& words() const { return words_; }
    const std::vector<double>& points() const { return points_; }

private:
    struct Transition {
        Eigen::Index from;
        Eigen::Index to;
        double contraction;
    };
    std::vector<Word> words_;
    std::vector<double> points_;
    std::vector<Transition> transitions_;
};

/// Perron root of a nonnegative primitive matrix by power iteration with
/// Collatz-Wielandt stopping bounds.
double spectral_radius(const Eigen::MatrixXd& m, double rel_tol = 1e-13, int max_iterations = 200000);

/// Bisects s on [s_min, s_max] until the bracket is below the resolution.
/// Rank 1 returns exactly 0.  Throws NoBracket when the radius does not cross 1.
DimensionEstimate estimate_dimension_pressure(std::span<const ExtendedMobiusMap> generators,
                                              const PressureOptions& options = {},
                                              double eps = default_tolerance);
DimensionEstimate estimate_dimension_pressure(const SchottkyGroup& group, const PressureOptions& options = {});

/// Least-squares slope of log N(eps_k) against log(1/eps_k) for layers 2..depth,
/// where eps_k is the largest cell of layer k and N the stopping-time cover at
/// that scale.  Rank 1 returns 0.  Requires depth >= 3.
DimensionEstimate estimate_dimension_boxcount(const SchottkyGroup& group, int depth,
                                              std::size_t cap = default_word_cap);

struct ConvergenceReport {
    double value = 0.0;
    bool convergence_type = true;
    bool dimension_at_most_half = true;
    /// Existence of a Green function follows from convergence type; reported only.
    bool green_function_exists = true;
};

ConvergenceReport convergence_type_report(const DimensionEstimate& estimate);

} // namespace funnelgroup
