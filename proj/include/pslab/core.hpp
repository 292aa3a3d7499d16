#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pslab {

// Ground-set sizes are capped so letters fit in a byte and value sets fit in
// one 64-bit mask.
inline constexpr int kMaxN = 64;

// Full enumeration walks a Bell-number-sized space; 14 is the practical
// ceiling for that on a desktop.  Avoidance classes may go higher because
// pruning collapses the tree, so the limit is a parameter everywhere.
inline constexpr int kDefaultEnumLimit = 14;

class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

using Letters = std::vector<std::uint8_t>;

// A restricted growth function a_1...a_n: a_1 = 1 and every later letter is
// at most one more than the running maximum.  Immutable value object.
class Rgf {
public:
    Rgf() = default;  // the empty word (n = 0)
    explicit Rgf(Letters letters);

    static bool is_valid(std::span<const std::uint8_t> letters);
    // Skips validation; callers guarantee the invariant.
    static Rgf unchecked(Letters letters);

    int size() const { return static_cast<int>(word_.size()); }
    bool empty() const { return word_.empty(); }
    std::span<const std::uint8_t> letters() const { return word_; }
    std::uint8_t operator[](int i) const { return word_[static_cast<std::size_t>(i)]; }  // 0-based

    int max_value() const;           // m, the number of blocks
    int initial_run_length() const;  // longest prefix of the form 12...p

    auto operator<=>(const Rgf&) const = default;

private:
    Letters word_;
};

int max_value(std::span<const std::uint8_t> word);
int initial_run_length(std::span<const std::uint8_t> word);

// Blocks of disjoint positive integers, not necessarily covering [n].
struct GenericPartition {
    std::vector<std::vector<int>> blocks;  // each sorted; blocks ordered by minimum
};

// A set partition of [n] in standard form: blocks sorted by their minima,
// elements sorted inside each block.
class SetPartition {
public:
    SetPartition() = default;  // the empty partition (n = 0)
    // Validates and normalizes: blocks must be nonempty, disjoint, and cover [n].
    static SetPartition of(int n, std::vector<std::vector<int>> blocks);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    bool operator==(const SetPartition&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

Rgf to_rgf(const SetPartition& sigma);
SetPartition from_rgf(const Rgf& w);

// Order-isomorphic relabeling of the elements onto [n]; block structure kept.
SetPartition standardize_partition(const GenericPartition& p);

// The subpartition induced by S: nonempty intersections block ∩ S.
GenericPartition restrict_to(const SetPartition& sigma, const std::vector<int>& s);

// Replaces every copy of the smallest value by 1, of the next smallest by 2, ...
std::vector<int> standardize_sequence(const std::vector<int>& s);

namespace detail {

inline void check_enum_capacity(const char* who, int n, int limit) {
    if (n < 0) throw std::invalid_argument(std::string(who) + ": negative length");
    if (n > limit || n > kMaxN)
        throw capacity_error(std::string(who) + ": n=" + std::to_string(n) +
                             " exceeds enumeration limit " + std::to_string(std::min(limit, kMaxN)));
}

inline void check_prefix(const char* who, std::span<const std::uint8_t> prefix, int n) {
    if (static_cast<int>(prefix.size()) > n)
        throw std::invalid_argument(std::string(who) + ": prefix longer than n");
    if (!Rgf::is_valid(prefix))
        throw std::invalid_argument(std::string(who) + ": prefix is not an RGF");
}

}  // namespace detail

// Visits, in lexicographic order, every RGF of length n that extends the
// given prefix (itself a valid RGF).  The span passed to the visitor is a
// scratch buffer, valid only during the call.  step(head) sees each freshly
// extended prefix and may veto that whole subtree by returning false.
template <typename Visitor, typename Step>
void for_each_rgf_extending(std::span<const std::uint8_t> prefix, int n, Visitor&& visit,
                            Step&& step, int limit = kDefaultEnumLimit) {
    detail::check_enum_capacity("for_each_rgf", n, limit);
    detail::check_prefix("for_each_rgf", prefix, n);
    Letters buf(prefix.begin(), prefix.end());
    buf.resize(static_cast<std::size_t>(n));
    const int base = static_cast<int>(prefix.size());
    if (base == n) {
        visit(std::span<const std::uint8_t>{buf.data(), buf.size()});
        return;
    }
    // DFS by position; letters tried in increasing order gives lex order.
    std::vector<std::uint8_t> runmax(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < base; ++i)
        runmax[static_cast<std::size_t>(i) + 1] =
            std::max(runmax[static_cast<std::size_t>(i)], buf[static_cast<std::size_t>(i)]);
    int pos = base;
    buf[static_cast<std::size_t>(pos)] = 0;  // incremented on entry
    while (pos >= base) {
        std::uint8_t next = static_cast<std::uint8_t>(buf[static_cast<std::size_t>(pos)] + 1);
        std::uint8_t cap = static_cast<std::uint8_t>(runmax[static_cast<std::size_t>(pos)] + 1);
        if (next > cap) {
            --pos;
            continue;
        }
        buf[static_cast<std::size_t>(pos)] = next;
        runmax[static_cast<std::size_t>(pos) + 1] = std::max(runmax[static_cast<std::size_t>(pos)], next);
        std::span<const std::uint8_t> head{buf.data(), static_cast<std::size_t>(pos) + 1};
        if (!step(head)) continue;
        if (pos + 1 == n) {
            visit(std::span<const std::uint8_t>{buf.data(), buf.size()});
        } else {
            ++pos;
            buf[static_cast<std::size_t>(pos)] = 0;
        }
    }
}

// Visits every RGF of length n exactly once, in lexicographic order.
template <typename Visitor>
void for_each_rgf(int n, Visitor&& visit, int limit = kDefaultEnumLimit) {
    for_each_rgf_extending(
        std::span<const std::uint8_t>{}, n, std::forward<Visitor>(visit),
        [](std::span<const std::uint8_t>) { return true; }, limit);
}

// Materialized variant; only sensible for small n.
std::vector<Rgf> enumerate_rgfs(int n, int limit = kDefaultEnumLimit);
std::vector<SetPartition> enumerate_partitions(int n, int limit = kDefaultEnumLimit);

// Text forms.  RGFs print as digit strings ("122132"); any letter >= 10
// switches the whole word to comma-separated ("1,2,...,10").  Partitions
// print in slash form ("14/236/5"), comma-separating block elements as soon
// as any element of the partition is >= 10 ("1,10/2").
std::string to_string(const Rgf& w);
std::string to_string(const SetPartition& sigma);
std::string to_string(const GenericPartition& p);
Rgf parse_rgf(std::string_view text);
SetPartition parse_partition(std::string_view text);

}  // namespace pslab
