#include <gtest/gtest.h>

#include "elast/verify.hpp"

using namespace elast;

namespace {

void expect_all_pass(const std::vector<verify::CheckResult>& results) {
    ASSERT_FALSE(results.empty());
    for (const auto& r : results) EXPECT_TRUE(r.passed) << r.suite << ": " << r.name << " " << r.detail;
}

}  // namespace

TEST(Verify, CoreSuitePasses) { expect_all_pass(verify::run_suite("core")); }
TEST(Verify, ArithSuitePasses) { expect_all_pass(verify::run_suite("arith")); }
TEST(Verify, ProfileSuitePasses) { expect_all_pass(verify::run_suite("profile")); }

TEST(Verify, InjectedFaultIsCaught) {
    const auto results = verify::core_suite({true});
    std::size_t failed = 0;
    for (const auto& r : results) failed += !r.passed;
    EXPECT_GE(failed, 1u);
}

TEST(Verify, UnknownSuiteRejected) { EXPECT_THROW(verify::run_suite("nope"), Error); }
