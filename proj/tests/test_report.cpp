#include "kothe/report.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace kothe;

TEST_CASE("reproduction report verdicts") {
    ReproduceConfig config;
    config.kmax = 3;
    config.dmax = 6;
    config.horizon = 2000;
    const Json report = reproduce_counterexample(config);

    const Json& verdicts = report["verdicts"];
    CHECK(verdicts["family_legal"] == true);
    CHECK(verdicts["family_directed"] == true);
    CHECK(verdicts["bounded_subsequence_rows"] == true);
    CHECK(verdicts["locally_bounded_ai"] == true);
    CHECK(verdicts["bounded_ai_obstruction"] == true);
    CHECK(verdicts["overall"] == true);

    CHECK(report["config"]["kmax"] == 3);
    CHECK(report["family"]["weights"].size() == 3);
    CHECK(report["family"]["horizon"] == 2000);
    CHECK(report["weight_floor"]["all_ge_one"] == true);
    CHECK(report["directedness"]["directed"] == true);
}

TEST_CASE("reproduction report details") {
    ReproduceConfig config;
    config.kmax = 2;
    config.dmax = 5;
    config.horizon = 1500;
    const Json report = reproduce_counterexample(config);

    const Json& rows = report["bounded_subsequences"]["rows"];
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["k"] == 1);
    CHECK(rows[0]["witness_indices"].size() == 10);
    CHECK(rows[0]["constant"] == "2/1");
    CHECK(rows[0]["constant_ok"] == true);
    CHECK(rows[0]["row_one_unbounded"] == true);
    CHECK(rows[0]["row_one_values"][9] == "10/1");
    CHECK(rows[1]["constant"] == "3/1");

    const Json& lbai = report["lbai_certificates"];
    CHECK(lbai["all_pass"] == true);
    CHECK(lbai["eps"] == "0/1");
    REQUIRE(lbai["entries"].size() == 2);
    // The fixed test family tops out at e_10, so each witness sits on the
    // first row-(k+1) index past 10.
    CHECK(lbai["entries"][0]["witness_index"] == phi(2, 4));
    CHECK(lbai["entries"][0]["bound"] == "2/1");
    CHECK(lbai["entries"][1]["witness_index"] == phi(3, 3));
    CHECK(lbai["entries"][1]["bound"] == "3/1");
    CHECK(lbai["entries"][0]["check"]["pass"] == true);

    const Json& growth = report["growth"];
    CHECK(growth["pass"] == true);
    REQUIRE(growth["rows"].size() == 3);
    CHECK(growth["rows"][0]["value"] == "2/1");
    CHECK(growth["rows"][2]["value"] == "4/1");
}

TEST_CASE("reproduction is deterministic") {
    ReproduceConfig config;
    config.kmax = 2;
    config.dmax = 5;
    config.horizon = 800;
    const std::string once = reproduce_counterexample(config).dump(2);
    const std::string twice = reproduce_counterexample(config).dump(2);
    CHECK(once == twice);
    CHECK(!once.empty());
}

TEST_CASE("reproduction validates its configuration") {
    CHECK_THROWS_AS(reproduce_counterexample({0, 12, 100}),
                    std::invalid_argument);
    CHECK_THROWS_AS(reproduce_counterexample({2, 2, 100}),
                    std::invalid_argument);
    CHECK_THROWS_AS(reproduce_counterexample({2, 12, 0}),
                    std::invalid_argument);
}
