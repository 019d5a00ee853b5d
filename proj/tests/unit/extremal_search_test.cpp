#include "oracle.hpp"

#include <patterncount/error.hpp>
#include <patterncount/extremal_search.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace patcount;

namespace {

LinePointSet ints(std::vector<long> xs)
{
    std::vector<Rat> v;
    for (long x : xs)
        v.emplace_back(x);
    return LinePointSet(std::move(v));
}

LinePattern pat(std::vector<long> xs)
{
    std::vector<Rat> v;
    for (long x : xs)
        v.emplace_back(x);
    return LinePattern::from_points(std::move(v));
}

bool has(std::vector<LinePointSet> const& ws, LinePointSet const& v)
{
    auto c = canonical_line_set(v);
    return std::find(ws.begin(), ws.end(), c) != ws.end();
}

SearchSpec line_spec(SearchMode mode, std::size_t n, int k, std::int64_t d)
{
    SearchSpec s;
    s.mode = mode;
    s.n = n;
    s.k = k;
    s.diameter = d;
    return s;
}

}  // namespace

TEST(BruteCount, Basics)
{
    EXPECT_EQ(brute_count(ints({0, 1, 3, 4}), pat({0, 1, 3})), 1u);
    EXPECT_THROW(brute_count(gen_ap(200), pat({0, 1, 2, 3, 4}), false, 1000), Error);
}

TEST(Canonical, Form)
{
    EXPECT_EQ(canonical_line_set(ints({4, 6, 10})), ints({0, 1, 3}));
    EXPECT_EQ(canonical_line_set(ints({0, 2, 3})), ints({0, 1, 3}));
    EXPECT_EQ(canonical_line_set(ints({0, 1, 3})), ints({0, 1, 3}));
}

TEST(LineMax, SevenPointsK3)
{
    auto r = line_max_search(line_spec(SearchMode::LineMaxAP, 7, 3, 12));
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.maximum, 9u);
    EXPECT_TRUE(has(r.line_witnesses, gen_ap(7)));
    EXPECT_TRUE(has(r.line_witnesses, ints({0, 2, 3, 4, 5, 6, 8})));
}

TEST(LineMax, NinePointsK4)
{
    auto r = line_max_search(line_spec(SearchMode::LineMaxAP, 9, 4, 12));
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(static_cast<std::int64_t>(r.maximum), sap_max(9, 4));
    EXPECT_EQ(r.maximum, 9u);
    EXPECT_TRUE(has(r.line_witnesses, gen_ap(9)));
    EXPECT_TRUE(has(r.line_witnesses, ints({0, 2, 3, 4, 5, 6, 7, 8, 9})));
    EXPECT_TRUE(has(r.line_witnesses, ints({0, 1, 2, 3, 4, 5, 6, 7, 9})));
}

TEST(LineMax, TrivialAndBudget)
{
    EXPECT_EQ(line_max_search(line_spec(SearchMode::LineMaxAP, 4, 4, 6)).maximum, 1u);
    auto spec = line_spec(SearchMode::LineMaxAP, 8, 3, 30);
    spec.budget = 100;
    auto r = line_max_search(spec);
    EXPECT_FALSE(r.exhaustive);
    EXPECT_LE(r.states_explored, 100u);
}

TEST(LineMax, PatternMode)
{
    auto spec = line_spec(SearchMode::LineMaxPattern, 7, 3, 12);
    spec.pattern = pat({0, 1, 3});
    auto r = line_max_search(spec);
    EXPECT_TRUE(r.exhaustive);
    for (auto const& w : r.line_witnesses)
        EXPECT_EQ(count_instances(w, *spec.pattern), r.maximum);
    EXPECT_LE(static_cast<std::int64_t>(r.maximum), general_upper_bound(7, 3));
}

TEST(LineMax, ThreadsAgree)
{
    auto spec = line_spec(SearchMode::LineMaxAP, 8, 3, 16);
    auto a = line_max_search(spec);
    spec.jobs = 3;
    auto b = line_max_search(spec);
    EXPECT_EQ(a.maximum, b.maximum);
    EXPECT_EQ(a.line_witnesses, b.line_witnesses);
    EXPECT_EQ(a.states_explored, b.states_explored);
}

TEST(EnumerateOptimal, FiveK3IsEoFamily)
{
    auto r = enumerate_optimal(line_spec(SearchMode::LineEnumerateOptimal, 5, 3, 10));
    EXPECT_TRUE(r.exhaustive);
    for (auto const& w : r.line_witnesses) {
        auto c = classify_optimal(w, 3);
        EXPECT_TRUE(c.kind == OptimalKind::AP || c.kind == OptimalKind::EO) << c.label();
    }
    std::vector<LinePointSet> expected;
    for (std::size_t e = 1; e < 5; ++e) {
        auto v = gen_eo(5, e);
        if (static_cast<std::int64_t>(count_kap(v, 3)) == sap_max(5, 3))
            expected.push_back(canonical_line_set(v));
    }
    expected.push_back(canonical_line_set(gen_ap(5)));
    std::sort(expected.begin(), expected.end(), [](auto const& a, auto const& b) {
        return std::lexicographical_compare(a.points().begin(), a.points().end(), b.points().begin(),
                                            b.points().end());
    });
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    EXPECT_EQ(r.line_witnesses.size(), expected.size());
    for (auto const& e : expected)
        EXPECT_TRUE(has(r.line_witnesses, e));
}

TEST(EnumerateOptimal, EightK4OnlyAp)
{
    auto r = enumerate_optimal(line_spec(SearchMode::LineEnumerateOptimal, 8, 4, 14));
    ASSERT_EQ(r.line_witnesses.size(), 1u);
    EXPECT_EQ(r.line_witnesses[0], gen_ap(8));
}

TEST(EnumerateOptimal, SixK3NearlyConcentric)
{
    auto r = enumerate_optimal(line_spec(SearchMode::LineEnumerateOptimal, 6, 3, 12));
    int eo = 0;
    for (auto const& w : r.line_witnesses) {
        auto c = classify_optimal(w, 3);
        if (c.kind == OptimalKind::EO) {
            ++eo;
            EXPECT_FALSE(c.concentric);
        }
    }
    EXPECT_GT(eo, 0);
}

TEST(PlaneSearch, SmallExhaustive)
{
    SearchSpec s;
    s.mode = SearchMode::PlaneLatticeMax;
    s.radius = 2;
    s.n = 3;
    EXPECT_EQ(plane_lattice_max(s).maximum, 1u);
    s.n = 4;
    auto four = plane_lattice_max(s);
    EXPECT_EQ(four.maximum, 2u);
    EXPECT_TRUE(four.exhaustive);
    s.n = 7;
    auto seven = plane_lattice_max(s);
    EXPECT_GE(seven.maximum, 8u);
    ASSERT_FALSE(seven.plane_witnesses.empty());
    EXPECT_EQ(oracle::count_triangles(seven.plane_witnesses[0]), seven.maximum);
}

TEST(PlaneSearch, HeuristicNeverExceedsBound)
{
    SearchSpec s;
    s.mode = SearchMode::PlaneLatticeMax;
    s.radius = 3;
    s.n = 20;
    s.budget = 10'000;
    auto r = plane_lattice_max(s);
    EXPECT_FALSE(r.exhaustive);
    EXPECT_GE(r.maximum, count_equilateral(gen_triangular_disk(20)));
    EXPECT_LE(static_cast<std::int64_t>(r.maximum), katherine_bound(20));
}
