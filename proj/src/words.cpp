#include "funnelgroup/words.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace funnelgroup {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters))
{
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] == 0)
            throw std::invalid_argument("Word: letter 0 is not a generator");
        if (i > 0 && letters_[i] == -letters_[i - 1])
            throw NotReduced("Word: letters " + std::to_string(letters_[i - 1]) + "," + std::to_string(letters_[i])
                             + " cancel at position " + std::to_string(i));
    }
}

Word Word::appended(Letter l) const
{
    if (l == 0)
        throw std::invalid_argument("Word: letter 0 is not a generator");
    if (!letters_.empty() && letters_.back() == -l)
        throw NotReduced("Word: appending " + std::to_string(l) + " to " + str() + " cancels");
    Word w = *this;
    w.letters_.push_back(l);
    return w;
}

Word Word::prefix(std::size_t n) const
{
    Word w;
    w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(n, letters_.size())));
    return w;
}

std::string Word::str() const
{
    if (letters_.empty())
        return "e";
    std::string s;
    for (Letter l : letters_) {
        s += l > 0 ? '+' : '-';
        s += std::to_string(l > 0 ? l : -l);
    }
    return s;
}

std::strong_ordering Word::operator<=>(const Word& other) const
{
    const std::size_t n = std::min(letters_.size(), other.letters_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int a = letter_index(letters_[i]);
        const int b = letter_index(other.letters_[i]);
        if (a != b)
            return a <=> b;
    }
    return letters_.size() <=> other.letters_.size();
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

std::size_t reduced_word_count(int rank, int depth)
{
    if (rank < 1 || depth < 0)
        return 0;
    if (depth == 0)
        return 1;
    constexpr std::size_t max = std::numeric_limits<std::size_t>::max();
    std::size_t count = 2 * static_cast<std::size_t>(rank);
    const std::size_t branch = count - 1;
    for (int k = 1; k < depth; ++k) {
        if (branch != 0 && count > max / branch)
            return max;
        count *= branch;
    }
    return count;
}

namespace {

void check_arguments(int rank, int depth)
{
    if (rank < 1)
        throw std::invalid_argument("rank must be >= 1");
    if (depth < 1)
        throw std::invalid_argument("depth must be >= 1");
}

} // namespace

WordLayer enumerate(int rank, int depth, std::size_t cap)
{
    check_arguments(rank, depth);
    const std::size_t count = reduced_word_count(rank, depth);
    if (count > cap)
        throw DepthOverflow(count, cap);

    std::vector<Word> layer;
    layer.reserve(2 * static_cast<std::size_t>(rank));
    for (int i = 0; i < 2 * rank; ++i)
        layer.emplace_back(std::vector<Letter>{letter_from_index(i)});

    for (int k = 2; k <= depth; ++k) {
        std::vector<Word> next;
        next.reserve(reduced_word_count(rank, k));
        for (const Word& w : layer)
            for (int i = 0; i < 2 * rank; ++i) {
                const Letter l = letter_from_index(i);
                if (l != -w.back())
                    next.push_back(w.appended(l));
            }
        layer = std::move(next);
    }
    return {depth, std::move(layer)};
}

ExtendedMobiusMap letter_map(std::span<const ExtendedMobiusMap> generators, Letter l)
{
    const int k = l > 0 ? l : -l;
    if (k < 1 || static_cast<std::size_t>(k) > generators.size())
        throw std::out_of_range("letter " + std::to_string(l) + " has no generator");
    const ExtendedMobiusMap& g = generators[static_cast<std::size_t>(k - 1)];
    return l > 0 ? g : inverse(g);
}

ExtendedMobiusMap evaluate(const Word& word, std::span<const ExtendedMobiusMap> generators)
{
    ExtendedMobiusMap m;
    for (Letter l : word.letters())
        m = compose(m, letter_map(generators, l));
    return m;
}

void for_each_reduced_word(std::span<const ExtendedMobiusMap> generators, int max_depth,
                           const std::function<bool(const Word&, const ExtendedMobiusMap&)>& visit,
                           std::size_t cap)
{
    const int rank = static_cast<int>(generators.size());
    check_arguments(rank, max_depth);
    const std::size_t count = reduced_word_count(rank, max_depth);
    if (count > cap)
        throw DepthOverflow(count, cap);

    std::vector<ExtendedMobiusMap> letters;
    for (int i = 0; i < 2 * rank; ++i)
        letters.push_back(letter_map(generators, letter_from_index(i)));

    std::vector<std::pair<Word, ExtendedMobiusMap>> layer;
    for (int i = 0; i < 2 * rank; ++i) {
        layer.emplace_back(Word({letter_from_index(i)}), letters[static_cast<std::size_t>(i)]);
        if (!visit(layer.back().first, layer.back().second))
            return;
    }
    for (int k = 2; k <= max_depth; ++k) {
        std::vector<std::pair<Word, ExtendedMobiusMap>> next;
        next.reserve(reduced_word_count(rank, k));
        for (const auto& [w, m] : layer)
            for (int i = 0; i < 2 * rank; ++i) {
                const Letter l = letter_from_index(i);
                if (l == -w.back())
                    continue;
                next.emplace_back(w.appended(l), compose(m, letters[static_cast<std::size_t>(i)]));
                if (!visit(next.back().first, next.back().second))
                    return;
            }
        layer = std::move(next);
    }
}

HyperbolicSample purely_hyperbolic_sample(std::span<const ExtendedMobiusMap> generators, int depth, double eps,
                                          std::size_t cap)
{
    HyperbolicSample out;
    for_each_reduced_word(
        generators, depth,
        [&](const Word& w, const ExtendedMobiusMap& m) {
            ++out.words_checked;
            const IsometryKind kind = classify(m, eps);
            if (kind != IsometryKind::Hyperbolic) {
                out.all_hyperbolic = false;
                out.offending = w;
                out.offending_kind = kind;
                return false;
            }
            return true;
        },
        cap);
    return out;
}

FreenessSample freeness_sample(std::span<const ExtendedMobiusMap> generators, int depth, double eps, std::size_t cap)
{
    FreenessSample out;
    for_each_reduced_word(
        generators, depth,
        [&](const Word& w, const ExtendedMobiusMap& m) {
            ++out.words_checked;
            const double dist = coefficient_distance(m, ExtendedMobiusMap::identity());
            out.min_identity_distance = std::min(out.min_identity_distance, dist);
            if (dist <= eps) {
                out.free = false;
                out.offending = w;
                return false;
            }
            return true;
        },
        cap);
    return out;
}

} // namespace funnelgroup
