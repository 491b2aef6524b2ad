#pragma once

// Reduced words in the free group on n generators.  A letter is a signed
// generator index: +k is generator k, -k its inverse (k is 1-based).
// Canonical letter order is +1 < -1 < +2 < -2 < ...

#include "funnelgroup/mobius.hpp"

#include <compare>
#include <cstddef>
#include <limits>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace funnelgroup {

using Letter = int;

inline constexpr std::size_t default_word_cap = 1'000'000;

/// Position of a letter in canonical order (0-based).
inline int letter_index(Letter l) { return 2 * ((l > 0 ? l : -l) - 1) + (l < 0 ? 1 : 0); }
inline Letter letter_from_index(int i) { return (i % 2 == 0) ? (i / 2 + 1) : -(i / 2 + 1); }

class Word {
public:
    Word() = default;
    /// Throws NotReduced on an adjacent (+k,-k) pair and std::invalid_argument on letter 0.
    explicit Word(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }

    /// Appends a letter; throws NotReduced if it cancels the last one.
    Word appended(Letter l) const;
    Word prefix(std::size_t n) const;

    /// "+1-2+1" style; "e" for the empty word.
    std::string str() const;

    /// Canonical order: lexicographic by letter_index.
    std::strong_ordering operator<=>(const Word& other) const;
    bool operator==(const Word& other) const = default;

private:
    std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

struct WordLayer {
    int depth = 0;
    std::vector<Word> words;
};

/// 2n(2n-1)^(k-1), saturating at SIZE_MAX.
std::size_t reduced_word_count(int rank, int depth);

/// All reduced words of length exactly `depth`, in canonical order.
WordLayer enumerate(int rank, int depth, std::size_t cap = default_word_cap);

/// Generator or inverse map for a letter.
ExtendedMobiusMap letter_map(std::span<const ExtendedMobiusMap> generators, Letter l);

/// Left-to-right product of the letter maps.
ExtendedMobiusMap evaluate(const Word& word, std::span<const ExtendedMobiusMap> generators);

/// Visits every reduced word of length 1..max_depth with its evaluated map,
/// shortest first and canonical order within a length.  Returning false from
/// the visitor stops the enumeration.  Throws DepthOverflow when the longest
/// layer exceeds `cap`.
void for_each_reduced_word(std::span<const ExtendedMobiusMap> generators, int max_depth,
                           const std::function<bool(const Word&, const ExtendedMobiusMap&)>& visit,
                           std::size_t cap = default_word_cap);

struct HyperbolicSample {
    bool all_hyperbolic = true;
    std::optional<Word> offending;
    IsometryKind offending_kind = IsometryKind::Hyperbolic;
    std::size_t words_checked = 0;
};

/// Classifies every reduced word of length 1..depth; reports the first
/// non-hyperbolic word in canonical (length, then lexicographic) order.
HyperbolicSample purely_hyperbolic_sample(std::span<const ExtendedMobiusMap> generators, int depth,
                                          double eps = default_tolerance, std::size_t cap = default_word_cap);

struct FreenessSample {
    bool free = true;
    std::optional<Word> offending;
    double min_identity_distance = std::numeric_limits<double>::infinity();
    std::size_t words_checked = 0;
};

/// Numerical freeness check: no nonempty reduced word up to `depth` is +-identity within eps.
FreenessSample freeness_sample(std::span<const ExtendedMobiusMap> generators, int depth,
                               double eps = default_tolerance, std::size_t cap = default_word_cap);

} // namespace funnelgroup
