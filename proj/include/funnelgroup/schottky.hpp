#pragma once

// Rank-n Fuchsian Schottky groups from mirror-symmetric semicircle
// configurations: the semicircle over (-b_k, -a_k) is paired with the
// semicircle over (a_k, b_k) by the composition of the reflection in the first
// semicircle with the reflection in the imaginary axis.

#include "funnelgroup/mobius.hpp"
#include "funnelgroup/words.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace funnelgroup {

class SchottkyConfig {
public:
    /// Throws InvalidConfig unless 0 < a_1 < b_1 < a_2 < ... < b_n with finite endpoints.
    /// Positive gaps smaller than the tolerance are accepted here and reported by
    /// verify_schottky_condition.
    explicit SchottkyConfig(std::vector<Interval> positive_intervals, double tolerance = default_tolerance);

    int rank() const { return static_cast<int>(positive_.size()); }
    double tolerance() const { return tolerance_; }
    const std::vector<Interval>& positive_intervals() const { return positive_; }

    /// (a_k, b_k), 1-based.
    Interval positive(int k) const;
    /// (-b_k, -a_k), 1-based.
    Interval mirrored(int k) const;

    /// Interval whose interior letter l maps the exterior of source(l) into.
    Interval target(Letter l) const { return l > 0 ? positive(l) : mirrored(-l); }
    Interval source(Letter l) const { return target(-l); }

    /// All 2n intervals in ascending order.
    std::vector<Interval> all_intervals() const;

    /// [-b_n, b_n].
    Interval span() const;

private:
    std::vector<Interval> positive_;
    double tolerance_;
};

/// The pairing map for (a, b): x -> (c x + c^2 - r^2)/(x + c), c = (a+b)/2, r = (b-a)/2.
ExtendedMobiusMap pairing_generator(const Interval& positive);

class SchottkyGroup {
public:
    const SchottkyConfig& config() const { return config_; }
    int rank() const { return config_.rank(); }
    double tolerance() const { return config_.tolerance(); }

    std::span<const ExtendedMobiusMap> generators() const { return generators_; }
    /// 1-based.
    const ExtendedMobiusMap& generator(int k) const { return generators_.at(static_cast<std::size_t>(k - 1)); }
    ExtendedMobiusMap letter(Letter l) const { return letter_map(generators_, l); }

private:
    friend SchottkyGroup build_group(const SchottkyConfig& config);
    explicit SchottkyGroup(SchottkyConfig config) : config_(std::move(config)) {}

    SchottkyConfig config_;
    std::vector<ExtendedMobiusMap> generators_;
};

SchottkyGroup build_group(const SchottkyConfig& config);

struct NestingCheck {
    Letter letter = 0;
    Interval interval;   // configured interval J being mapped
    Interval image;      // letter(J); zero-width when the pole lies in J
    Interval target;
    bool nested = false;
    double margin = 0.0; // distance from image to the target's endpoints
};

struct VerificationReport {
    bool disjoint = false;
    double min_gap = 0.0;
    bool nesting = false;
    std::vector<NestingCheck> nesting_checks;
    bool non_tangent = false;
    double tangency_margin = 0.0;

    bool passed() const { return disjoint && nesting && non_tangent; }
};

/// Disjointness, ping-pong nesting for every letter and every configured
/// interval other than its source, and the non-tangency margin.  Failures are
/// recorded, never thrown.
VerificationReport verify_schottky_condition(const SchottkyGroup& group);

class ExtendedSchottkyGroup {
public:
    const SchottkyGroup& base() const { return base_; }
    const SchottkyConfig& config() const { return base_.config(); }
    int rank() const { return base_.rank(); }
    double tolerance() const { return base_.tolerance(); }

    std::span<const ExtendedMobiusMap> generators() const { return generators_; }
    const ExtendedMobiusMap& generator(int k) const { return generators_.at(static_cast<std::size_t>(k - 1)); }
    const std::vector<bool>& reversing() const { return reversing_; }

    /// The orientation-preserving subgroup has index 2: words with an even
    /// number of reversing letters.
    int orientation_subgroup_index() const { return 2; }
    std::vector<int> reversing_generators() const;

private:
    friend ExtendedSchottkyGroup build_extended_group(const SchottkyConfig&, const std::vector<bool>&);
    ExtendedSchottkyGroup(SchottkyGroup base, std::vector<bool> reversing)
        : base_(std::move(base)), reversing_(std::move(reversing)) {}

    SchottkyGroup base_;
    std::vector<ExtendedMobiusMap> generators_;
    std::vector<bool> reversing_;
};

/// Reversing generator k is generator_k composed with the reflection in its
/// own axis (the semicircle of radius sqrt(a_k b_k) about 0): a glide reflection.
/// Throws InvalidConfig on a flag-count mismatch and UseBaseBuilder when no flag is set.
ExtendedSchottkyGroup build_extended_group(const SchottkyConfig& config, const std::vector<bool>& reversing);

struct SampledElement {
    Word word;
    ExtendedMobiusMap map;
};

/// Reduced words of length 1..depth whose image preserves orientation.
std::vector<SampledElement> orientation_subgroup_sample(const ExtendedSchottkyGroup& group, int depth,
                                                        std::size_t cap = default_word_cap);

struct NielsenBoundary {
    int depth = 0;
    /// Complement components between consecutive refinement cells, ascending.
    std::vector<Interval> gaps;
    /// [leftmost cell lo, rightmost cell hi]; everything beyond is outer region.
    Interval hull_span;

    struct Geodesic {
        double center;
        double radius;
    };
    std::vector<Geodesic> geodesics() const;
};

/// Depth k uses the depth-(k+1) refinement layer, so depth 0 is bounded by the
/// 2n configured intervals.  Throws DegenerateRankOne for rank 1.
NielsenBoundary nielsen_boundary(const SchottkyGroup& group, int depth, std::size_t cap = default_word_cap);

struct ClassificationReport {
    int rank = 0;
    int sample_depth = 0;

    bool orientation_preserving = true;
    bool purely_hyperbolic_sample = false;
    std::optional<Word> offending_word;
    IsometryKind offending_kind = IsometryKind::Hyperbolic;

    /// Isometric circles of each generator and its inverse, ascending.
    bool disjoint_semicircles = false;
    std::vector<Interval> isometric_circles;
    std::optional<double> semicircle_gap;

    std::optional<double> dimension_estimate;
    std::optional<bool> dimension_at_most_half;

    bool fuchsian_schottky = false;
    std::string note;
};

/// Works on any generator list.  The pairing semicircles are taken to be the
/// isometric circles of the generators and their inverses.  The dimension flag
/// is reported but does not enter the verdict.
ClassificationReport is_fuchsian_schottky(std::span<const ExtendedMobiusMap> generators, int depth,
                                          std::optional<double> dimension_estimate = std::nullopt,
                                          double eps = default_tolerance, std::size_t cap = default_word_cap);

ClassificationReport is_fuchsian_schottky(const SchottkyGroup& group, int depth,
                                          std::optional<double> dimension_estimate = std::nullopt,
                                          std::size_t cap = default_word_cap);

} // namespace funnelgroup
