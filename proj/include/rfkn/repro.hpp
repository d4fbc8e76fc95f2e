#pragma once

#include <string>
#include <vector>
#include "rfkn/criteria.hpp"

namespace rfkn {

// comparison of one recomputed quantity against its published value
struct repro_row {
    std::string label;
    std::string computed;  // exact value, enough digits to see the rounding
    std::string printed;   // computed value after the published rounding rule
    std::string published;
    bool match = false;
    std::string citation;
    std::string note;
};

struct repro_result {
    std::string suite;
    std::vector<repro_row> rows;
    bool all_match = true;
};

std::string default_reference_path(); // RFKN_REFERENCE_VALUES or the bundled file

// the ten distinct survey rows: recompute each q-threshold from (t) or (t, u)
// with r = k = 3 and the row's smallest n, round per the row's rule, compare
repro_result reproduce_table1(const std::string& refpath = default_reference_path());

// the two single-t constants quoted in the survey proposition's proof
repro_result reproduce_proof_constants(const std::string& refpath = default_reference_path());

// the n=7 refinement chain: v*, S_v, delta, Delta gate, final threshold
repro_result reproduce_lemma_constants(const std::string& refpath = default_reference_path());

struct sn_pair {
    unsigned s, n;
    bool operator==(const sn_pair&) const = default;
    auto operator<=>(const sn_pair&) const = default;
};

struct corollary_outcome {
    std::vector<sn_pair> grid;            // finite pairs checked at n >= 8
    std::vector<sn_pair> exceptions;      // direct-test failures at n >= 8
    std::vector<unsigned> n7_direct_pass; // s values passing direct at n = 7
    std::vector<sn_pair> sieve_successes;
    std::vector<sn_pair> residual;        // left for explicit search
    std::vector<sn_pair> f_sensitive;     // direct verdict depends on which f
    repro_result rows;
};

// replays the characteristic-11 survey: enumerate the finite (s, n) grid not
// covered by the threshold rows, run the direct test, sieve the failures,
// and compare all three resulting sets against the published ones
corollary_outcome reproduce_corollary11(const std::string& refpath = default_reference_path(),
                                        const factor_table* table = factor_table::bundled());

// smallest q the threshold rows admit for this n (the row with the largest
// applicable n_low wins); used to decide which pairs the grid must test
BigReal table1_coverage_threshold(unsigned n, const std::string& refpath = default_reference_path());

std::string format_repro(const repro_result& r);

} // namespace rfkn
