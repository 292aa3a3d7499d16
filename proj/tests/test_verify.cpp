#include "pslab/verify.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace pslab;

TEST_CASE("suite runs every check and reports pass") {
    VerifySuiteResult suite = run_verify_suite(4);
    CHECK(suite.checks.size() == verify_check_ids().size());
    CHECK(suite.ok());
    for (const auto& check : suite.checks) CHECK(check.status != CheckStatus::fail);
}

TEST_CASE("filter selects checks by id substring") {
    VerifySuiteResult one = run_verify_suite(4, "cardinalities");
    REQUIRE(one.checks.size() == 1);
    CHECK(one.checks[0].id == "cardinalities");
    CHECK(one.checks[0].status == CheckStatus::pass);

    CHECK(run_verify_suite(4, "no-such-check").checks.empty());
}

TEST_CASE("corrected closed forms carry their discrepancy records") {
    VerifySuiteResult pairs = run_verify_suite(4, "closed.pairs");
    REQUIRE(pairs.checks.size() == 1);
    CHECK(pairs.checks[0].status == CheckStatus::corrected);
    CHECK(!pairs.checks[0].discrepancies.empty());
    CHECK(pairs.checks[0].discrepancies[0].formula == "f.pair.1_2_3+12_3");
    CHECK(pairs.ok());  // corrected still counts as passing
}

TEST_CASE("status names and bad arguments") {
    CHECK(to_string(CheckStatus::pass) == "pass");
    CHECK(to_string(CheckStatus::fail) == "fail");
    CHECK(to_string(CheckStatus::corrected) == "corrected");
    CHECK_THROWS_AS(run_verify_suite(-1), std::invalid_argument);
}
