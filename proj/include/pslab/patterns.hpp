#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pslab/core.hpp"

namespace pslab {

// A deduplicated set of partition patterns in canonical order: the five
// partitions of [3] in the fixed sequence 1/2/3, 1/23, 13/2, 12/3, 123;
// other sizes ordered by (n, word).
class PatternSet {
public:
    explicit PatternSet(std::vector<SetPartition> patterns);
    // Comma-separated slash forms, e.g. "13/2,12/3".
    static PatternSet parse(std::string_view text);

    const std::vector<SetPartition>& patterns() const { return patterns_; }
    const std::vector<Rgf>& words() const { return words_; }
    std::size_t size() const { return patterns_.size(); }
    std::string to_text() const;  // canonical comma-joined form

    bool operator==(const PatternSet&) const = default;

private:
    std::vector<SetPartition> patterns_;
    std::vector<Rgf> words_;  // w(pi) per pattern, same order
};

// Partition-sense containment: some restriction of sigma standardizes to pat.
// Conventions for the edges the definition leaves open: every partition
// contains the empty pattern, and a pattern larger than [n] is never contained.
bool contains_partition(const SetPartition& sigma, const SetPartition& pat);
bool avoids_all(const SetPartition& sigma, const PatternSet& pats);

// Word-level containment test used by the enumerators: does w have a
// subsequence whose equal-letters pattern matches pat_word (an RGF)?  When
// required_last >= 0 the subsequence must end at that 0-based position, which
// is the incremental form used for prefix pruning.
bool word_contains(std::span<const std::uint8_t> w, std::span<const std::uint8_t> pat_word,
                   int required_last = -1);

// RGF-subsequence containment: some subsequence of w standardizes (by value
// rank) to v.  v is any nonempty positive-integer sequence.
bool contains_rgf_subsequence(const Rgf& w, const std::vector<int>& v);

// Visits, in lexicographic order, the words of R_n(P) extending the given
// prefix.  With pruning, a prefix that already contains some pattern is never
// extended; valid because prefixes of RGFs are RGFs and containment is
// monotone under extension.  Without pruning, every word is generated and
// filtered at the leaf, which exists to validate the pruned path in tests.
template <typename Visitor>
void for_each_avoiding_extending(std::span<const std::uint8_t> prefix, int n, const PatternSet& pats,
                                 Visitor&& visit, bool prune = true, int limit = kDefaultEnumLimit) {
    auto contains_any = [&pats](std::span<const std::uint8_t> w, int last) {
        for (const auto& pw : pats.words())
            if (word_contains(w, pw.letters(), last)) return true;
        return false;
    };
    if (prune) {
        if (contains_any(prefix, -1)) return;
        for_each_rgf_extending(
            prefix, n, visit,
            [&](std::span<const std::uint8_t> head) {
                return !contains_any(head, static_cast<int>(head.size()) - 1);
            },
            limit);
    } else {
        for_each_rgf_extending(
            prefix, n,
            [&](std::span<const std::uint8_t> w) {
                if (!contains_any(w, -1)) visit(w);
            },
            [](std::span<const std::uint8_t>) { return true; }, limit);
    }
}

template <typename Visitor>
void for_each_avoiding(int n, const PatternSet& pats, Visitor&& visit, bool prune = true,
                       int limit = kDefaultEnumLimit) {
    for_each_avoiding_extending(std::span<const std::uint8_t>{}, n, pats,
                                std::forward<Visitor>(visit), prune, limit);
}

std::vector<Rgf> avoidance_class(int n, const PatternSet& pats, bool prune = true,
                                 int limit = kDefaultEnumLimit);

// The word shapes with a direct structural description, one per supported
// pattern (or pattern pair).  Each predicate is a plain scan over the word,
// sharing no logic with the containment search.
enum class WordShape {
    ones_and_twos,           // 1/2/3
    single_extra_one,        // 1/23
    layered,                 // 13/2
    run_with_constant_tail,  // 12/3
    no_letter_thrice,        // 123
    spaced_dales,            // 14/2/3
    dale_then_two_values,    // the pair {14/2/3, 13/2/4}
};

bool characterizes(const Rgf& w, WordShape shape);
// Maps a pattern set onto its shape when one of the supported sets.
std::optional<WordShape> shape_for(const PatternSet& pats);

// A dale is a position whose value sits exactly one below the running maximum.
struct Dale {
    int index;   // 1-based
    int height;  // the letter value at the dale

    bool operator==(const Dale&) const = default;
};

std::vector<Dale> dales(const Rgf& w);
// (index, value) pairs of the strict running maxima, 1-based, in index order.
std::vector<std::pair<int, int>> left_right_maxima(const Rgf& w);

// Segments of words avoiding 14/2/3: either a plateau a^len or a dale
// section (a-1)^{l_0} a^{j_1} (a-1)^{l_1} ... a^{j_t} (a-1)^{l_t}.
struct Plateau {
    int value;
    int length;

    bool operator==(const Plateau&) const = default;
};

struct DaleSection {
    int top;                     // the letter a; the dale height is a-1
    std::vector<int> low_runs;   // l_0 .. l_t (l_t may be 0)
    std::vector<int> high_runs;  // j_1 .. j_t

    bool operator==(const DaleSection&) const = default;
};

using Segment = std::variant<Plateau, DaleSection>;

// Splits w into maximal plateaus and dale sections whose concatenation is w.
// Rejects words outside the spaced-dales shape.
std::vector<Segment> decompose(const Rgf& w);

}  // namespace pslab
