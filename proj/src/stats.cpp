#include "pslab/stats.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace pslab {

std::string to_string(StatKind k) {
    switch (k) {
        case StatKind::lb: return "lb";
        case StatKind::ls: return "ls";
        case StatKind::rb: return "rb";
        default: return "rs";
    }
}

StatKind parse_stat_kind(std::string_view name) {
    if (name == "lb") return StatKind::lb;
    if (name == "ls") return StatKind::ls;
    if (name == "rb") return StatKind::rb;
    if (name == "rs") return StatKind::rs;
    throw std::invalid_argument("unknown statistic '" + std::string(name) + "' (expected lb|ls|rb|rs)");
}

namespace {

// Bit v-1 marks the value v.
inline std::uint64_t value_bit(std::uint8_t v) { return std::uint64_t{1} << (v - 1); }

inline int bigger_count(std::uint64_t mask, std::uint8_t v) {
    return std::popcount(mask >> v);
}

inline int smaller_count(std::uint64_t mask, std::uint8_t v) {
    return std::popcount(mask & (value_bit(v) - 1));
}

}  // namespace

int statistic_at(const Rgf& w, int j, StatKind k) {
    if (j < 1 || j > w.size()) throw std::invalid_argument("statistic_at: position out of range");
    auto word = w.letters();
    std::uint64_t mask = 0;
    if (k == StatKind::lb || k == StatKind::ls) {
        for (int i = 0; i < j - 1; ++i) mask |= value_bit(word[static_cast<std::size_t>(i)]);
    } else {
        for (int i = j; i < w.size(); ++i) mask |= value_bit(word[static_cast<std::size_t>(i)]);
    }
    std::uint8_t v = word[static_cast<std::size_t>(j - 1)];
    return (k == StatKind::lb || k == StatKind::rb) ? bigger_count(mask, v) : smaller_count(mask, v);
}

int statistic(const Rgf& w, StatKind k) {
    switch (k) {
        case StatKind::lb: return stat_quad(w).lb;
        case StatKind::ls: return stat_quad(w).ls;
        case StatKind::rb: return stat_quad(w).rb;
        default: return stat_quad(w).rs;
    }
}

StatQuad stat_quad(std::span<const std::uint8_t> word) {
    StatQuad q;
    const int n = static_cast<int>(word.size());
    if (n == 0) return q;
    // Suffix value sets first, then one left-to-right pass.
    std::array<std::uint64_t, kMaxN + 1> suffix{};
    suffix[static_cast<std::size_t>(n)] = 0;
    for (int i = n - 1; i >= 0; --i)
        suffix[static_cast<std::size_t>(i)] =
            suffix[static_cast<std::size_t>(i) + 1] | value_bit(word[static_cast<std::size_t>(i)]);
    std::uint64_t prefix = 0;
    for (int i = 0; i < n; ++i) {
        std::uint8_t v = word[static_cast<std::size_t>(i)];
        std::uint64_t after = suffix[static_cast<std::size_t>(i) + 1];
        q.lb += bigger_count(prefix, v);
        q.ls += smaller_count(prefix, v);
        q.rb += bigger_count(after, v);
        q.rs += smaller_count(after, v);
        prefix |= value_bit(v);
    }
    return q;
}

bool is_layered(std::span<const std::uint8_t> word) {
    for (std::size_t i = 1; i < word.size(); ++i) {
        if (word[i] != word[i - 1] && word[i] != word[i - 1] + 1) return false;
    }
    return true;
}

}  // namespace pslab
