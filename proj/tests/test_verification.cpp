#include "doctest.h"
#include "gfq/verification.hpp"

using namespace gfq;

namespace {
void require_pass(const SuiteReport& r) {
    INFO(r.text());
    CHECK(r.passed());
    CHECK_FALSE(r.checks.empty());
}
}  // namespace

TEST_CASE("structural suites") {
    require_pass(suite_kernel(7, 20));
    require_pass(suite_objectivity(7));
    require_pass(suite_anchor(7));
    require_pass(suite_counterexample());
    require_pass(suite_wb_balance());
    require_pass(suite_counting());
}

TEST_CASE("conservation and stationarity, shortened") {
    require_pass(suite_conservation(3, 20, 100));
    require_pass(suite_stationarity(10));
}

TEST_CASE("a check passes or fails by its direction") {
    CHECK(Check{"a", 1.0, 2.0, false}.passed());
    CHECK_FALSE(Check{"a", 3.0, 2.0, false}.passed());
    CHECK(Check{"a", 3.0, 2.0, true}.passed());
    CHECK_THROWS(run_suite("bogus", 1));
}
