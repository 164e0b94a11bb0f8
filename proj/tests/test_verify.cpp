#include <gtest/gtest.h>

#include "dihedral/verify.hpp"

using namespace dihedral;

TEST(Verify, SweepPasses) {
    VerifyOptions options;
    options.max_n = 20;
    options.max_k = 4;
    options.equivalence_max_n = 16;
    const VerifyReport report = verify_sweep(options);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.failures(), 0u);
    ASSERT_FALSE(report.results.empty());
    EXPECT_EQ(report.results.front().n, 3);
    EXPECT_EQ(report.results.back().n, 20);
    for (const auto& r : report.results) EXPECT_TRUE(r.ok) << r.n << " " << r.check << ": " << r.detail;
}

TEST(Verify, ResultsAreOrderedByN) {
    VerifyOptions options;
    options.min_n = 5;
    options.max_n = 9;
    const VerifyReport report = verify_sweep(options);
    for (std::size_t i = 1; i < report.results.size(); ++i)
        EXPECT_LE(report.results[i - 1].n, report.results[i].n);
}

TEST(Verify, SingleModulus) {
    VerifyOptions options;
    const auto results = verify_modulus(Modulus(12), options);
    ASSERT_FALSE(results.empty());
    for (const auto& r : results) {
        EXPECT_EQ(r.n, 12);
        EXPECT_TRUE(r.ok) << r.check << ": " << r.detail;
        EXPECT_TRUE(r.detail.empty());
    }
}
