#include "pslab/bijections.hpp"

#include "doctest.h"
#include "pslab/patterns.hpp"
#include "pslab/stats.hpp"

using namespace pslab;

TEST_CASE("complement-reverse map on two-letter words") {
    CHECK(to_string(phi_123(parse_rgf("1212"))) == "1121");
    CHECK(stat_quad(parse_rgf("1212")).lb == stat_quad(parse_rgf("1121")).rs);
    // The all-ones word swaps with 1222...; both carry lb = rs = 0.
    CHECK(to_string(phi_123(parse_rgf("1111"))) == "1222");
    CHECK(to_string(phi_123(parse_rgf("1222"))) == "1111");
    CHECK(phi_123(parse_rgf("1")) == parse_rgf("1"));
    CHECK(phi_123(Rgf{}) == Rgf{});
    CHECK_THROWS_AS(phi_123(parse_rgf("123")), std::invalid_argument);

    for (const auto& v : avoidance_class(8, PatternSet::parse("1/2/3")))
        CHECK(phi_123(phi_123(v)) == v);
}

TEST_CASE("prefix complement-reverse map") {
    CHECK(to_string(psi_123(parse_rgf("122"))) == "112");
    CHECK(stat_quad(parse_rgf("122")).ls == 2);
    CHECK(stat_quad(parse_rgf("112")).rb == 2);
    CHECK(psi_123(parse_rgf("11111")) == parse_rgf("11111"));
    CHECK(psi_123(parse_rgf("1211")) == parse_rgf("1211"));
    CHECK_THROWS_AS(psi_123(parse_rgf("123")), std::invalid_argument);

    for (const auto& v : avoidance_class(8, PatternSet::parse("1/2/3")))
        CHECK(psi_123(psi_123(v)) == v);
}

TEST_CASE("layered words to distinct partitions") {
    DistinctPartition lambda = phi_layered(parse_rgf("1122"));
    CHECK(lambda.parts == std::vector<int>{2});
    CHECK(lambda.weight() == 2);
    CHECK(lambda.complement_weight() == 2);
    CHECK(to_string(lambda) == "(2)");

    CHECK(phi_layered(parse_rgf("1111")).parts.empty());
    CHECK(phi_layered(parse_rgf("12345")).parts == std::vector<int>{1, 2, 3, 4});
    CHECK(stat_quad(parse_rgf("12345")).rb == 10);  // C(5,2) = |(1,2,3,4)|

    CHECK_THROWS_AS(phi_layered(parse_rgf("121")), std::invalid_argument);

    for (const auto& w : avoidance_class(9, PatternSet::parse("13/2"))) {
        DistinctPartition l = phi_layered(w);
        CHECK(phi_layered_inv(l) == w);
        StatQuad q = stat_quad(w);
        CHECK(q.rb == l.weight());
        CHECK(q.ls == l.complement_weight());
    }

    DistinctPartition bad;
    bad.ambient_n = 4;
    bad.parts = {2, 2};
    CHECK_THROWS_AS(phi_layered_inv(bad), std::invalid_argument);
    bad.parts = {4};
    CHECK_THROWS_AS(phi_layered_inv(bad), std::invalid_argument);
}

TEST_CASE("dale-section exponent swap") {
    CHECK(to_string(phi_dale(parse_rgf("1211"))) == "1221");
    CHECK(stat_quad(parse_rgf("1211")).lb == 2);
    CHECK(stat_quad(parse_rgf("1221")).rs == 2);
    CHECK(phi_dale(parse_rgf("121")) == parse_rgf("121"));
    CHECK(phi_dale(parse_rgf("112233")) == parse_rgf("112233"));  // plateaus only
    CHECK(phi_dale(parse_rgf("12122")) == parse_rgf("12122"));    // trailing high run kept
    CHECK(to_string(phi_dale(parse_rgf("122111"))) == "122211");
    CHECK_THROWS_AS(phi_dale(parse_rgf("1231")), std::invalid_argument);

    PatternSet pats = PatternSet::parse("14/2/3");
    for (int n = 0; n <= 8; ++n) {
        for (const auto& w : avoidance_class(n, pats)) {
            Rgf image = phi_dale(w);
            CHECK(phi_dale(image) == w);
            CHECK(stat_quad(w).lb == stat_quad(image).rs);
            CHECK(w.max_value() == image.max_value());
        }
    }
}

TEST_CASE("class-to-class map exchanging the statistic pairs") {
    CHECK(to_string(phi_1_23_to_12_3(parse_rgf("1121"))) == "1211");
    CHECK(phi_1_23_to_12_3(parse_rgf("12345")) == parse_rgf("12345"));
    CHECK(phi_1_23_to_12_3(parse_rgf("1111")) == parse_rgf("1111"));
    CHECK_THROWS_AS(phi_1_23_to_12_3(parse_rgf("122")), std::invalid_argument);

    PatternSet target = PatternSet::parse("12/3");
    for (int n = 0; n <= 9; ++n) {
        for (const auto& w : avoidance_class(n, PatternSet::parse("1/23"))) {
            Rgf image = phi_1_23_to_12_3(w);
            CHECK(avoids_all(from_rgf(image), target));
            StatQuad a = stat_quad(w), b = stat_quad(image);
            CHECK(a.lb == b.rs);
            CHECK(a.ls == b.rb);
        }
    }
}

TEST_CASE("exhaustive verification reports") {
    BijectionReport phi = verify_bijection("bij.phi_123", 6);
    CHECK(phi.success());
    CHECK(phi.domain_size == 32);

    BijectionReport cross = verify_bijection("bij.phi_1_23_to_12_3", 6);
    CHECK(cross.success());
    CHECK(cross.domain_size == 16);
    CHECK(cross.codomain_size == 16);

    BijectionReport layered = verify_bijection("bij.phi_layered", 5);
    CHECK(layered.success());
    CHECK(layered.domain_size == 16);
    CHECK(layered.codomain_size == 16);

    for (const auto& id : bijection_ids())
        for (int n = 0; n <= 6; ++n) CHECK(verify_bijection(id, n).success());

    CHECK_THROWS_AS(verify_bijection("bij.nope", 4), std::domain_error);
}
