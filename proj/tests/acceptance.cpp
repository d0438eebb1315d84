// Acceptance suite: every guaranteed property is exercised over its full
// parameter grid at exact equality, one summary line per criterion.

#include <cstdio>
#include <string>
#include <vector>

#include "horadam/verify.hpp"

using namespace horadam;

namespace {

struct Criterion {
    std::string title;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::size_t flagged = 0;
    double ms = 0.0;
};

void fold(Criterion& c, const VerificationReport& rep) {
    c.checks += rep.checks.size();
    c.failures += rep.failures();
    for (const auto& chk : rep.checks)
        if (chk.status == CheckResult::Status::skipped) ++c.flagged;
    c.ms += rep.duration_ms;
}

// Splits the edges suite: the special-case identities are their own
// criterion.
void fold_edges(Criterion& formulas, Criterion& identities,
                const VerificationReport& rep) {
    formulas.ms += rep.duration_ms;
    for (const auto& chk : rep.checks) {
        bool identity = chk.name.find("special-case identity") != std::string::npos;
        Criterion& c = identity ? identities : formulas;
        ++c.checks;
        if (chk.status == CheckResult::Status::fail) ++c.failures;
    }
}

} // namespace

int main() {
    std::vector<Criterion> criteria(10);
    criteria[1].title = "sequence identities (s_n routes, grid [1,4]^2 x n<=25)";
    criteria[2].title = "edge formulas (four routes + brute scan, grid [1,4]^2 x n<=25)";
    criteria[3].title = "a=2 and a=1 edge identities (grid [1,4]^2 x n<=25)";
    criteria[4].title = "degree tables vs histograms + published rows (n<=8)";
    criteria[5].title = "cube coefficients vs brute subcube counts + published rows";
    criteria[6].title = "structure: coloring, grids, quotient, embedding (|V|<=5000)";
    criteria[7].title = "median closure (|V|<=300) and the (3,2,3) anchor";
    criteria[8].title = "hamiltonian paths and cycles (grid [1,4]^2 x n<=7)";
    criteria[9].title = "bivariate generating functions to order 12 ([1,3]^2)";

    GridSpec wide{1, 4, 1, 4, 25, 20000, 2000, 300};
    fold(criteria[1], run_suite("sequences", wide));
    fold_edges(criteria[2], criteria[3], run_suite("edges", wide));

    GridSpec degrees{1, 4, 1, 4, 8, 20000, 2000, 300};
    fold(criteria[4], run_suite("degrees", degrees));

    GridSpec cubes{1, 3, 1, 3, 5, 20000, 2000, 300};
    fold(criteria[5], run_suite("cubes", cubes));

    GridSpec structure{1, 4, 1, 4, 8, 5000, 2000, 300};
    fold(criteria[6], run_suite("structure", structure));
    fold(criteria[6], run_suite("grids", structure));
    fold(criteria[6], run_suite("quotient", structure));
    fold(criteria[6], run_suite("embedding", structure));

    GridSpec median{1, 4, 1, 4, 8, 20000, 2000, 300};
    fold(criteria[7], run_suite("median", median));

    GridSpec hamilton{1, 4, 1, 4, 7, 20000, 2000, 300};
    fold(criteria[8], run_suite("hamilton", hamilton));

    GridSpec series{1, 3, 1, 3, 12, 20000, 2000, 300};
    fold(criteria[9], run_suite("series", series));

    bool all_ok = true;
    for (std::size_t i = 1; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        bool ok = c.failures == 0 && c.checks > 0;
        all_ok = all_ok && ok;
        std::printf("[%s] criterion %zu: %s  (%zu checks", ok ? "PASS" : "FAIL", i,
                    c.title.c_str(), c.checks);
        if (c.failures) std::printf(", %zu failed", c.failures);
        if (c.flagged) std::printf(", %zu flagged table cells", c.flagged);
        std::printf(", %.0f ms)\n", c.ms);
    }
    std::printf("%s\n", all_ok ? "acceptance: all criteria passed"
                               : "acceptance: FAILURES present");
    return all_ok ? 0 : 1;
}
