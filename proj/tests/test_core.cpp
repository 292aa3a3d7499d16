#include "pslab/core.hpp"

#include <set>

#include "doctest.h"
#include "pslab/formulas.hpp"

using namespace pslab;

TEST_CASE("partition to word and back") {
    SetPartition sigma = parse_partition("14/236/5");
    CHECK(sigma.n() == 6);
    CHECK(to_string(to_rgf(sigma)) == "122132");
    CHECK(from_rgf(parse_rgf("122132")) == sigma);

    CHECK(to_string(to_rgf(parse_partition("1/2/3"))) == "123");
    CHECK(to_string(to_rgf(parse_partition("123"))) == "111");
    CHECK(to_string(from_rgf(parse_rgf("111"))) == "123");
    CHECK(to_string(from_rgf(parse_rgf("121"))) == "13/2");
}

TEST_CASE("round trip over all of Pi_n") {
    for (int n = 0; n <= 10; ++n) {
        unsigned long mismatches = 0;
        for_each_rgf(n, [&](std::span<const std::uint8_t> w) {
            Rgf word = Rgf::unchecked(Letters(w.begin(), w.end()));
            if (to_rgf(from_rgf(word)) != word) ++mismatches;
        });
        CHECK(mismatches == 0);
    }
}

TEST_CASE("invalid words are rejected") {
    CHECK_THROWS_AS(parse_rgf("211"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rgf("131"), std::invalid_argument);  // skips 2
    CHECK_THROWS_AS(parse_rgf("10"), std::invalid_argument);   // letter 0
    CHECK_NOTHROW(parse_rgf("1231"));
    CHECK(parse_rgf("").size() == 0);
}

TEST_CASE("standardize partition") {
    GenericPartition sub;
    sub.blocks = {{2, 6}, {4}};
    CHECK(to_string(standardize_partition(sub)) == "13/2");

    GenericPartition singles;
    singles.blocks = {{5}, {7}, {9}};
    CHECK(to_string(standardize_partition(singles)) == "1/2/3");

    // Already on [6]: standardization is the identity.
    SetPartition sigma = parse_partition("14/236/5");
    GenericPartition same;
    same.blocks = sigma.blocks();
    CHECK(standardize_partition(same) == sigma);

    GenericPartition empty;
    CHECK_THROWS_AS(standardize_partition(empty), std::invalid_argument);
}

TEST_CASE("standardize partition is idempotent") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& sigma : enumerate_partitions(n)) {
            if (sigma.n() == 0) continue;
            GenericPartition g;
            g.blocks = sigma.blocks();
            CHECK(standardize_partition(g) == sigma);
        }
    }
}

TEST_CASE("restriction to a subset") {
    SetPartition sigma = parse_partition("14/236/5");
    CHECK(to_string(restrict_to(sigma, {2, 4, 6})) == "26/4");
    CHECK(to_string(restrict_to(sigma, {5})) == "5");

    GenericPartition whole = restrict_to(sigma, {1, 2, 3, 4, 5, 6});
    CHECK(whole.blocks == sigma.blocks());

    CHECK_THROWS_AS(restrict_to(sigma, {7}), std::invalid_argument);
    CHECK_THROWS_AS(restrict_to(sigma, {0}), std::invalid_argument);
}

TEST_CASE("standardize sequence") {
    CHECK(standardize_sequence({2, 3, 3, 2}) == std::vector<int>{1, 2, 2, 1});
    CHECK(standardize_sequence({1, 2, 3}) == std::vector<int>{1, 2, 3});
    CHECK(standardize_sequence({7, 7, 7}) == std::vector<int>{1, 1, 1});
    CHECK_THROWS_AS(standardize_sequence({}), std::invalid_argument);

    // Idempotent.
    std::vector<int> s = {9, 4, 9, 2, 4};
    CHECK(standardize_sequence(standardize_sequence(s)) == standardize_sequence(s));
}

TEST_CASE("enumeration is lexicographic and Bell-counted") {
    std::vector<std::string> r3;
    for (const auto& w : enumerate_rgfs(3)) r3.push_back(to_string(w));
    CHECK(r3 == std::vector<std::string>{"111", "112", "121", "122", "123"});

    CHECK(enumerate_rgfs(0).size() == 1);
    CHECK(enumerate_rgfs(0)[0].size() == 0);
    CHECK(enumerate_rgfs(1).size() == 1);

    for (int n = 0; n <= 12; ++n) {
        unsigned long count = 0;
        for_each_rgf(n, [&](std::span<const std::uint8_t>) { ++count; });
        CHECK(bell_number(n) == static_cast<long>(count));
    }
}

TEST_CASE("enumeration rejects sizes beyond the limit") {
    CHECK_THROWS_AS(enumerate_rgfs(15), capacity_error);
    CHECK_THROWS_AS(enumerate_rgfs(9, 8), capacity_error);
    CHECK_NOTHROW(enumerate_rgfs(8, 8));
}

TEST_CASE("every prefix of an RGF is an RGF") {
    for_each_rgf(7, [&](std::span<const std::uint8_t> w) {
        for (std::size_t len = 0; len <= w.size(); ++len) CHECK(Rgf::is_valid(w.subspan(0, len)));
    });
}

TEST_CASE("prefix extension enumerates exactly the words with that prefix") {
    Letters prefix = {1, 2, 1};
    std::set<std::string> extended;
    for_each_rgf_extending(
        prefix, 5, [&](std::span<const std::uint8_t> w) {
            extended.insert(to_string(Rgf::unchecked(Letters(w.begin(), w.end()))));
        },
        [](std::span<const std::uint8_t>) { return true; });
    std::set<std::string> filtered;
    for_each_rgf(5, [&](std::span<const std::uint8_t> w) {
        if (w[0] == 1 && w[1] == 2 && w[2] == 1)
            filtered.insert(to_string(Rgf::unchecked(Letters(w.begin(), w.end()))));
    });
    CHECK(extended == filtered);
    CHECK(!extended.empty());
}

TEST_CASE("run length and maximum") {
    CHECK(parse_rgf("122132").max_value() == 3);
    CHECK(parse_rgf("122132").initial_run_length() == 2);
    CHECK(parse_rgf("12345").initial_run_length() == 5);
    CHECK(parse_rgf("11111").initial_run_length() == 1);
    CHECK(parse_rgf("11111").max_value() == 1);
    CHECK(Rgf{}.max_value() == 0);
    CHECK(Rgf{}.initial_run_length() == 0);
}

TEST_CASE("text forms with large elements") {
    std::vector<std::vector<int>> blocks = {{1, 10}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}};
    SetPartition sigma = SetPartition::of(10, blocks);
    CHECK(to_string(sigma) == "1,10/2/3/4/5/6/7/8/9");
    CHECK(parse_partition("1,10/2/3/4/5/6/7/8/9") == sigma);

    // Letters stay below 10 here, so the word prints as a plain digit string.
    Rgf w = to_rgf(sigma);
    CHECK(to_string(w) == "1234567891");
    CHECK(parse_rgf("1234567891") == w);

    // A letter reaching 10 switches the word to comma form.
    Rgf tall = to_rgf(parse_partition("1/2/3/4/5/6/7/8/9/10"));
    CHECK(to_string(tall) == "1,2,3,4,5,6,7,8,9,10");
    CHECK(parse_rgf("1,2,3,4,5,6,7,8,9,10") == tall);

    CHECK(to_string(parse_partition("14/236/5")) == "14/236/5");
    CHECK_THROWS_AS(parse_partition("12/2"), std::invalid_argument);   // repeated element
    CHECK_THROWS_AS(parse_partition("13"), std::invalid_argument);     // gap: misses 2
    CHECK_THROWS_AS(parse_partition("1//2"), std::invalid_argument);   // empty block
}
