#include "pslab/stats.hpp"

#include <set>

#include "doctest.h"

using namespace pslab;

namespace {

// Definition-level reference: per letter, collect the distinct qualifying
// values into a set and take its size.  Kept free of the bitset code paths.
int reference_statistic(const Rgf& w, StatKind k) {
    int total = 0;
    for (int j = 0; j < w.size(); ++j) {
        std::set<int> values;
        for (int i = 0; i < w.size(); ++i) {
            bool left = i < j, bigger = w[i] > w[j], smaller = w[i] < w[j];
            if (k == StatKind::lb && left && bigger) values.insert(w[i]);
            if (k == StatKind::ls && left && smaller) values.insert(w[i]);
            if (k == StatKind::rb && !left && i > j && bigger) values.insert(w[i]);
            if (k == StatKind::rs && !left && i > j && smaller) values.insert(w[i]);
        }
        total += static_cast<int>(values.size());
    }
    return total;
}

}  // namespace

TEST_CASE("worked per-letter example") {
    Rgf w = parse_rgf("1223142");
    CHECK(statistic(w, StatKind::lb) == 4);  // 0+0+0+0+2+0+2
    CHECK(statistic_at(w, 5, StatKind::lb) == 2);
    CHECK_THROWS_AS(statistic_at(w, 0, StatKind::lb), std::invalid_argument);
    CHECK_THROWS_AS(statistic_at(w, 8, StatKind::lb), std::invalid_argument);
}

TEST_CASE("statistic quadruples of small words") {
    StatQuad q = stat_quad(parse_rgf("122132"));
    CHECK(q == StatQuad{2, 5, 6, 3});

    CHECK(stat_quad(parse_rgf("121")) == StatQuad{1, 1, 1, 1});
    CHECK(stat_quad(parse_rgf("111")) == StatQuad{0, 0, 0, 0});
    CHECK(stat_quad(Rgf{}) == StatQuad{0, 0, 0, 0});

    // Constant words score zero on all four statistics.
    CHECK(stat_quad(parse_rgf("11111")) == StatQuad{0, 0, 0, 0});

    // The strictly increasing word: ls and rb are n choose 2.
    Rgf inc = parse_rgf("123456");
    CHECK(stat_quad(inc) == StatQuad{0, 15, 15, 0});
}

TEST_CASE("aggregate equals per-letter sum") {
    for (const char* text : {"1223142", "122132", "1211", "123121"}) {
        Rgf w = parse_rgf(text);
        for (StatKind k : kAllStats) {
            int sum = 0;
            for (int j = 1; j <= w.size(); ++j) sum += statistic_at(w, j, k);
            CHECK(statistic(w, k) == sum);
        }
    }
}

TEST_CASE("bitset pass agrees with the set-based reference") {
    for (int n = 0; n <= 8; ++n) {
        for_each_rgf(n, [&](std::span<const std::uint8_t> letters) {
            Rgf w = Rgf::unchecked(Letters(letters.begin(), letters.end()));
            StatQuad q = stat_quad(w);
            CHECK(q.lb == reference_statistic(w, StatKind::lb));
            CHECK(q.ls == reference_statistic(w, StatKind::ls));
            CHECK(q.rb == reference_statistic(w, StatKind::rb));
            CHECK(q.rs == reference_statistic(w, StatKind::rs));
        });
    }
}

TEST_CASE("ls is the letter sum shifted down") {
    for (int n = 0; n <= 10; ++n) {
        for_each_rgf(n, [&](std::span<const std::uint8_t> letters) {
            int sum = 0;
            for (auto a : letters) sum += a - 1;
            CHECK(stat_quad(letters).ls == sum);
        });
    }
}

TEST_CASE("lb vanishes exactly with rs, exactly on layered words") {
    for (int n = 0; n <= 10; ++n) {
        for_each_rgf(n, [&](std::span<const std::uint8_t> letters) {
            StatQuad q = stat_quad(letters);
            bool layered = is_layered(letters);
            CHECK((q.lb == 0) == layered);
            CHECK((q.rs == 0) == layered);
        });
    }
}

TEST_CASE("stat kind names") {
    CHECK(parse_stat_kind("lb") == StatKind::lb);
    CHECK(parse_stat_kind("rs") == StatKind::rs);
    CHECK(to_string(StatKind::ls) == "ls");
    CHECK_THROWS_AS(parse_stat_kind("maj"), std::invalid_argument);
}
