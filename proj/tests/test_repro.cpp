#include <doctest.h>
#include <cstdlib>
#include "rfkn/repro.hpp"

using namespace rfkn;

TEST_CASE("reference path") {
    CHECK(default_reference_path().find("reference_values.json") != std::string::npos);
}

TEST_CASE("coverage thresholds pick the right survey row") {
    // n >= 70: every q >= 11 works
    CHECK(ceil_to_printed(table1_coverage_threshold(70), "ceil_int") == "11");
    CHECK(ceil_to_printed(table1_coverage_threshold(100), "ceil_int") == "11");
    // 44 <= n < 70
    CHECK(ceil_to_printed(table1_coverage_threshold(44), "ceil_int") == "16");
    CHECK(ceil_to_printed(table1_coverage_threshold(69), "ceil_int") == "16");
    // 19 <= n < 44
    CHECK(ceil_to_printed(table1_coverage_threshold(19), "ceil_int") == "107");
    CHECK(ceil_to_printed(table1_coverage_threshold(43), "ceil_int") == "107");
    // the dedicated small-n rows
    CHECK(ceil_to_printed(table1_coverage_threshold(13), "ceil_int") == "211");
    CHECK(ceil_to_printed(table1_coverage_threshold(12), "ceil_int") == "980");
    CHECK(ceil_to_printed(table1_coverage_threshold(11), "ceil_int") == "14459");
    CHECK(ceil_to_printed(table1_coverage_threshold(10), "ceil_sig3") == "3.63e6");
    CHECK(ceil_to_printed(table1_coverage_threshold(9), "ceil_sig3") == "2.24e13");
    CHECK(ceil_to_printed(table1_coverage_threshold(8), "ceil_sig3") == "7.05e21");
    // n = 7 falls to the two-parameter window row
    CHECK(ceil_to_printed(table1_coverage_threshold(7), "ceil_sig3") == "8.66e184");
}

TEST_CASE("proof constants reproduce") {
    repro_result r = reproduce_proof_constants();
    CHECK(r.all_match);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].printed == "6.88e51");
    CHECK(r.rows[1].printed == "5.71e3157");
}

TEST_CASE("lemma chain reproduces") {
    repro_result r = reproduce_lemma_constants();
    for (const repro_row& row : r.rows) {
        INFO(row.label << ": " << row.computed << " -> " << row.printed << " vs "
                       << row.published);
        CHECK(row.match);
    }
    CHECK(r.all_match);
}
