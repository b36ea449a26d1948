#include <doctest.h>

#include <set>

#include "csp/verify.hpp"

using namespace csp;

TEST_CASE("all property suites pass on seeded families") {
    VerifyConfig cfg;
    cfg.seeds = 3;
    cfg.dump_dir = ".";
    const auto results = verify_all(cfg);

    std::set<std::string> names;
    for (const auto& res : results) {
        CHECK(res.pass);
        CHECK(res.counterexample.empty());
        names.insert(res.name);
    }
    const std::set<std::string> expected = {
        "oracle-agreement",   "cost-bounds",        "addition-monotonicity",
        "prune-equivalence",  "decompose-additivity", "extension-identity",
        "additive-bound",     "ptas-ratio",         "ptas-exactness-at-t",
        "reopt-dominance",    "reopt-ratio",
    };
    CHECK(names == expected);
}
