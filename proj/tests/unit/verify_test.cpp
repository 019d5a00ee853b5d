#include <patterncount/error.hpp>
#include <patterncount/verify.hpp>

#include <gtest/gtest.h>

using namespace patcount;

TEST(Verify, SuitesPassAtReducedSize)
{
    for (auto name : suite_names()) {
        std::int64_t cap = 40;
        if (name == "katherine")
            cap = 200;
        else if (name == "jacob")
            cap = 96;
        else if (name == "imogene")
            cap = 6;
        auto r = run_suite(name, cap);
        EXPECT_FALSE(r.cases.empty()) << name;
        for (auto const& c : r.cases)
            EXPECT_TRUE(c.passed) << name << "/" << c.name << ": " << c.detail;
    }
}

TEST(Verify, UnknownSuite)
{
    EXPECT_THROW(run_suite("nope"), Error);
}
