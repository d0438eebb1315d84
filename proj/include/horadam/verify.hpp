#pragma once

#include <string>
#include <vector>

#include "horadam/params.hpp"

namespace horadam {

// Parameter grid a verification suite sweeps, plus the instance caps that
// keep brute-force oracles desk-scale.
struct GridSpec {
    int a_min = 1;
    int a_max = 4;
    int b_min = 1;
    int b_max = 4;
    int n_max = 8;
    std::size_t vertex_cap = 20000;
    std::size_t pairwise_cap = 2000;
    std::size_t median_cap = 300;
};

struct CheckResult {
    enum class Status { pass, fail, skipped };

    std::string name;
    Status status = Status::pass;
    std::string observed;
    std::string expected;
    std::string note; // flagged discrepancies and skip reasons
};

struct VerificationReport {
    std::string suite;
    std::string grid;
    std::vector<CheckResult> checks;
    double duration_ms = 0.0;

    bool ok() const;
    std::size_t failures() const;
};

// Suites runnable from the CLI; "all" concatenates every one of them.
std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& name, const GridSpec& grid);
std::vector<VerificationReport> run_suites(const std::string& name_or_all,
                                           const GridSpec& grid);

// Timings are excluded by default so identical runs serialize identically.
std::string report_to_json(const std::vector<VerificationReport>& reports,
                           bool include_timings = false);

} // namespace horadam
