#include <cstdio>
#include <string>
#include <vector>

#include "cpa/suite.hpp"

namespace {

struct Criterion {
    int number;
    std::string title;
    std::string group;
    double budget_seconds;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "identity suite", "identities", 5},
        {2, "depolarization", "depolarization", 1},
        {3, "cohomology tables", "cohomology", 5},
        {4, "extensions", "extensions", 5},
        {5, "orbit dimensions", "orbits", 10},
        {6, "degenerations", "degenerations", 60},
        {7, "non-degeneration certificates", "certificates", 5},
        {8, "strict derivation inequality", "strict", 60},
        {9, "perfectness corollaries", "perfectness", 5},
        {10, "numeric/exact cross-validation", "crossval", 60},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        cpa::suite::SuiteResult r = cpa::suite::run({c.group});
        std::size_t pass = r.count(cpa::suite::Status::Pass);
        bool in_budget = r.seconds <= c.budget_seconds;
        bool ok = r.ok() && r.count(cpa::suite::Status::Inconclusive) == 0 && in_budget && !r.claims.empty();
        if (!ok) ++failed;
        std::printf("criterion %2d %-32s %s  %zu/%zu claims  %.2fs (budget %.0fs)\n", c.number, c.title.c_str(),
                    ok ? "PASS" : "FAIL", pass, r.claims.size(), r.seconds, c.budget_seconds);
        for (const auto& claim : r.claims)
            if (claim.status != cpa::suite::Status::Pass)
                std::printf("    %s %s: %s\n", cpa::suite::to_string(claim.status).c_str(), claim.id.c_str(),
                            claim.details.substr(0, claim.details.find('\n')).c_str());
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed ? 1 : 0;
}
