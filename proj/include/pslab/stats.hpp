#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "pslab/core.hpp"

namespace pslab {

enum class StatKind : int { lb = 0, ls = 1, rb = 2, rs = 3 };

inline constexpr StatKind kAllStats[] = {StatKind::lb, StatKind::ls, StatKind::rb, StatKind::rs};

std::string to_string(StatKind k);
StatKind parse_stat_kind(std::string_view name);

// The exponent quadruple (lb, ls, rb, rs) of one word.
struct StatQuad {
    int lb = 0;
    int ls = 0;
    int rb = 0;
    int rs = 0;

    bool operator==(const StatQuad&) const = default;
    int get(StatKind k) const {
        switch (k) {
            case StatKind::lb: return lb;
            case StatKind::ls: return ls;
            case StatKind::rb: return rb;
            default: return rs;
        }
    }
};

// Number of DISTINCT values before/after position j (1-based) that are
// bigger/smaller than a_j; repeated values count once.
int statistic_at(const Rgf& w, int j, StatKind k);
int statistic(const Rgf& w, StatKind k);

StatQuad stat_quad(std::span<const std::uint8_t> word);
inline StatQuad stat_quad(const Rgf& w) { return stat_quad(w.letters()); }

// Exactly the words of the form 1^{n_1} 2^{n_2} ... m^{n_m}.
bool is_layered(std::span<const std::uint8_t> word);
inline bool is_layered(const Rgf& w) { return is_layered(w.letters()); }

}  // namespace pslab
