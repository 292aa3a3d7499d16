#include "pslab/patterns.hpp"

#include <algorithm>
#include <array>

#include "pslab/stats.hpp"

namespace pslab {

namespace {

// Display rank of the partitions of [3]: 1/2/3, 1/23, 13/2, 12/3, 123,
// whose words are 123, 122, 121, 112, 111.
int pi3_rank(const Rgf& word) {
    static const std::array<Letters, 5> order = {Letters{1, 2, 3}, Letters{1, 2, 2}, Letters{1, 2, 1},
                                                 Letters{1, 1, 2}, Letters{1, 1, 1}};
    for (std::size_t i = 0; i < order.size(); ++i)
        if (std::ranges::equal(word.letters(), order[i])) return static_cast<int>(i);
    return -1;
}

bool pattern_less(const SetPartition& a, const SetPartition& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    Rgf wa = to_rgf(a), wb = to_rgf(b);
    if (a.n() == 3) return pi3_rank(wa) < pi3_rank(wb);
    return wa < wb;
}

}  // namespace

PatternSet::PatternSet(std::vector<SetPartition> patterns) {
    if (patterns.empty()) throw std::invalid_argument("PatternSet: empty");
    std::sort(patterns.begin(), patterns.end(), pattern_less);
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    patterns_ = std::move(patterns);
    words_.reserve(patterns_.size());
    for (const auto& p : patterns_) words_.push_back(to_rgf(p));
}

PatternSet PatternSet::parse(std::string_view text) {
    std::vector<SetPartition> pats;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.empty()) throw std::invalid_argument("PatternSet: empty pattern in list");
        pats.push_back(parse_partition(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return PatternSet(std::move(pats));
}

std::string PatternSet::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
        if (i > 0) out += ',';
        out += to_string(patterns_[i]);
    }
    return out;
}

namespace {

// Backtracking match of the pattern's equal-letters structure against a
// subsequence of w.  assigned[c] is the word value bound to pattern letter
// c+1, or 0.  Distinct pattern letters must bind distinct word values; the
// first-occurrence relabeling then agrees automatically because pattern words
// are RGFs.
struct ContainMatcher {
    std::span<const std::uint8_t> w;
    std::span<const std::uint8_t> pat;
    int required_last;
    std::array<std::uint8_t, kMaxN + 1> assigned{};
    std::uint64_t used = 0;  // word values already bound

    bool search(int pi, int from) {
        if (pi == static_cast<int>(pat.size())) return true;
        std::uint8_t c = pat[static_cast<std::size_t>(pi)];
        bool last = pi + 1 == static_cast<int>(pat.size());
        int hi = last && required_last >= 0 ? required_last + 1 : static_cast<int>(w.size());
        for (int i = from; i < hi; ++i) {
            if (last && required_last >= 0 && i != required_last) continue;
            std::uint8_t v = w[static_cast<std::size_t>(i)];
            std::uint8_t bound = assigned[c];
            if (bound != 0) {
                if (bound != v) continue;
                if (search(pi + 1, i + 1)) return true;
            } else {
                if (used & (std::uint64_t{1} << (v - 1))) continue;
                assigned[c] = v;
                used |= std::uint64_t{1} << (v - 1);
                if (search(pi + 1, i + 1)) return true;
                assigned[c] = 0;
                used &= ~(std::uint64_t{1} << (v - 1));
            }
        }
        return false;
    }
};

}  // namespace

bool word_contains(std::span<const std::uint8_t> w, std::span<const std::uint8_t> pat_word,
                   int required_last) {
    if (pat_word.empty()) return true;
    if (pat_word.size() > w.size()) return false;
    ContainMatcher m{w, pat_word, required_last};
    return m.search(0, 0);
}

bool contains_partition(const SetPartition& sigma, const SetPartition& pat) {
    if (pat.n() == 0) return true;
    if (pat.n() > sigma.n()) return false;
    Rgf w = to_rgf(sigma);
    Rgf pw = to_rgf(pat);
    return word_contains(w.letters(), pw.letters());
}

bool avoids_all(const SetPartition& sigma, const PatternSet& pats) {
    Rgf w = to_rgf(sigma);
    for (const auto& pw : pats.words())
        if (pw.size() == 0 || word_contains(w.letters(), pw.letters())) return false;
    return true;
}

namespace {

// Value-rank matcher: bindings of pattern values to word values must be
// strictly increasing in the pattern value.
struct SubseqMatcher {
    std::span<const std::uint8_t> w;
    const std::vector<int>& pat;
    std::vector<int> values;      // sorted distinct pattern values
    std::vector<int> bound;       // word value per pattern rank, 0 = unbound

    bool ok(int rank, int v) const {
        for (int r = rank - 1; r >= 0; --r)
            if (bound[static_cast<std::size_t>(r)] != 0)
                return bound[static_cast<std::size_t>(r)] < v;
        return true;
    }

    bool ok_above(int rank, int v) const {
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < bound.size(); ++r)
            if (bound[r] != 0) return v < bound[r];
        return true;
    }

    bool search(std::size_t pi, int from) {
        if (pi == pat.size()) return true;
        auto it = std::lower_bound(values.begin(), values.end(), pat[pi]);
        int rank = static_cast<int>(it - values.begin());
        for (int i = from; i < static_cast<int>(w.size()); ++i) {
            int v = w[static_cast<std::size_t>(i)];
            int& slot = bound[static_cast<std::size_t>(rank)];
            if (slot != 0) {
                if (slot != v) continue;
                if (search(pi + 1, i + 1)) return true;
            } else {
                if (!ok(rank, v) || !ok_above(rank, v)) continue;
                slot = v;
                if (search(pi + 1, i + 1)) return true;
                slot = 0;
            }
        }
        return false;
    }
};

}  // namespace

bool contains_rgf_subsequence(const Rgf& w, const std::vector<int>& v) {
    if (v.empty()) throw std::invalid_argument("contains_rgf_subsequence: empty pattern");
    if (v.size() > static_cast<std::size_t>(w.size())) return false;
    for (int x : v)
        if (x < 1) throw std::invalid_argument("contains_rgf_subsequence: nonpositive value");
    SubseqMatcher m{w.letters(), v, {}, {}};
    m.values.assign(v.begin(), v.end());
    std::sort(m.values.begin(), m.values.end());
    m.values.erase(std::unique(m.values.begin(), m.values.end()), m.values.end());
    m.bound.assign(m.values.size(), 0);
    return m.search(0, 0);
}

std::vector<Rgf> avoidance_class(int n, const PatternSet& pats, bool prune, int limit) {
    std::vector<Rgf> out;
    for_each_avoiding(
        n, pats,
        [&](std::span<const std::uint8_t> w) { out.push_back(Rgf::unchecked(Letters(w.begin(), w.end()))); },
        prune, limit);
    return out;
}

namespace {

bool shape_ones_and_twos(std::span<const std::uint8_t> w) {
    return max_value(w) <= 2;
}

// One letter value per block beyond 1, plus at most one late 1: exactly the
// words obtained by inserting a single 1 into 1^l 23...m.
bool shape_single_extra_one(std::span<const std::uint8_t> w) {
    std::array<int, kMaxN + 1> count{};
    for (auto a : w) ++count[a];
    int m = max_value(w);
    for (int v = 2; v <= m; ++v)
        if (count[static_cast<std::size_t>(v)] != 1) return false;
    int late_ones = 0;
    bool seen_two = false;
    for (auto a : w) {
        if (a >= 2) seen_two = true;
        else if (seen_two) ++late_ones;
    }
    return late_ones <= 1;
}

bool shape_run_with_constant_tail(std::span<const std::uint8_t> w) {
    int p = initial_run_length(w);
    for (std::size_t i = static_cast<std::size_t>(p); i < w.size(); ++i) {
        if (w[i] > p) return false;
        if (i > static_cast<std::size_t>(p) && w[i] != w[i - 1]) return false;
    }
    return true;
}

bool shape_no_letter_thrice(std::span<const std::uint8_t> w) {
    std::array<int, kMaxN + 1> count{};
    for (auto a : w)
        if (++count[a] > 2) return false;
    return true;
}

// Every letter within one of the running maximum, and no dales at two
// consecutive heights.
bool shape_spaced_dales(std::span<const std::uint8_t> w) {
    int runmax = 0;
    std::uint64_t dale_heights = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int a = w[i];
        if (i > 0 && a < runmax - 1) return false;
        if (i > 0 && a == runmax - 1) dale_heights |= std::uint64_t{1} << a;
        runmax = std::max(runmax, a);
    }
    return (dale_heights & (dale_heights >> 1)) == 0;
}

// Same first restriction, but after a dale of height a only a and a+1 occur.
bool shape_dale_then_two_values(std::span<const std::uint8_t> w) {
    int runmax = 0;
    int dale_height = 0;  // 0 = none seen yet
    for (std::size_t i = 0; i < w.size(); ++i) {
        int a = w[i];
        if (i > 0 && a < runmax - 1) return false;
        if (dale_height != 0 && a != dale_height && a != dale_height + 1) return false;
        if (i > 0 && a == runmax - 1) dale_height = a;
        runmax = std::max(runmax, a);
    }
    return true;
}

}  // namespace

bool characterizes(const Rgf& w, WordShape shape) {
    auto word = w.letters();
    switch (shape) {
        case WordShape::ones_and_twos: return shape_ones_and_twos(word);
        case WordShape::single_extra_one: return shape_single_extra_one(word);
        case WordShape::layered: return is_layered(word);
        case WordShape::run_with_constant_tail: return shape_run_with_constant_tail(word);
        case WordShape::no_letter_thrice: return shape_no_letter_thrice(word);
        case WordShape::spaced_dales: return shape_spaced_dales(word);
        default: return shape_dale_then_two_values(word);
    }
}

std::optional<WordShape> shape_for(const PatternSet& pats) {
    if (pats.size() == 1) {
        const Rgf& pw = pats.words()[0];
        switch (pi3_rank(pw)) {
            case 0: return WordShape::ones_and_twos;
            case 1: return WordShape::single_extra_one;
            case 2: return WordShape::layered;
            case 3: return WordShape::run_with_constant_tail;
            case 4: return WordShape::no_letter_thrice;
            default: break;
        }
        if (std::ranges::equal(pw.letters(), Letters{1, 2, 3, 1})) return WordShape::spaced_dales;
        return std::nullopt;
    }
    if (pats.size() == 2) {
        // {14/2/3, 13/2/4} as words: 1231 and 1213.
        if (std::ranges::equal(pats.words()[0].letters(), Letters{1, 2, 1, 3}) &&
            std::ranges::equal(pats.words()[1].letters(), Letters{1, 2, 3, 1}))
            return WordShape::dale_then_two_values;
    }
    return std::nullopt;
}

std::vector<Dale> dales(const Rgf& w) {
    std::vector<Dale> out;
    int runmax = 0;
    for (int i = 0; i < w.size(); ++i) {
        int a = w[i];
        if (i > 0 && a == runmax - 1) out.push_back(Dale{i + 1, a});
        runmax = std::max(runmax, a);
    }
    return out;
}

std::vector<std::pair<int, int>> left_right_maxima(const Rgf& w) {
    std::vector<std::pair<int, int>> out;
    int runmax = 0;
    for (int i = 0; i < w.size(); ++i) {
        int a = w[i];
        if (a > runmax) out.emplace_back(i + 1, a);
        runmax = std::max(runmax, a);
    }
    return out;
}

std::vector<Segment> decompose(const Rgf& w) {
    if (!characterizes(w, WordShape::spaced_dales))
        throw std::invalid_argument("decompose: word has no plateau/dale-section split");
    std::uint64_t dale_heights = 0;
    for (const auto& d : dales(w)) dale_heights |= std::uint64_t{1} << d.height;

    auto word = w.letters();
    std::vector<Segment> out;
    std::size_t i = 0;
    while (i < word.size()) {
        int v = word[i];
        if (v < 64 && ((dale_heights >> v) & 1)) {
            // Dale section over values {v, v+1}, starting with the first v.
            DaleSection sec;
            sec.top = v + 1;
            std::size_t j = i;
            while (j < word.size() && (word[j] == v || word[j] == v + 1)) ++j;
            std::size_t k = i;
            bool low = true;  // runs alternate low (v), high (v+1), low, ...
            while (k < j) {
                int target = low ? v : v + 1;
                int len = 0;
                while (k < j && word[k] == target) ++k, ++len;
                if (low) sec.low_runs.push_back(len);
                else sec.high_runs.push_back(len);
                low = !low;
            }
            if (low) sec.low_runs.push_back(0);  // ended on a high run: l_t = 0
            out.emplace_back(std::move(sec));
            i = j;
        } else {
            std::size_t j = i;
            while (j < word.size() && word[j] == v) ++j;
            out.emplace_back(Plateau{v, static_cast<int>(j - i)});
            i = j;
        }
    }
    return out;
}

}  // namespace pslab
