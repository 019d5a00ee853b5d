#include "oracle.hpp"

#include <patterncount/error.hpp>
#include <patterncount/extremal_search.hpp>
#include <patterncount/line_patterns.hpp>

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace patcount;

namespace {

LinePointSet ints(std::vector<long> xs)
{
    std::vector<Rat> v;
    for (long x : xs)
        v.emplace_back(x);
    return LinePointSet(std::move(v));
}

std::vector<long> range(long lo, long hi)
{
    std::vector<long> v(static_cast<std::size_t>(hi - lo));
    std::iota(v.begin(), v.end(), lo);
    return v;
}

LinePattern pat(std::vector<long> xs)
{
    std::vector<Rat> v;
    for (long x : xs)
        v.emplace_back(x);
    return LinePattern::from_points(std::move(v));
}

}  // namespace

TEST(LinePointSet, SortsAndRejectsDuplicates)
{
    auto v = ints({3, 1, 2});
    EXPECT_EQ(v[0], Rat(1));
    EXPECT_EQ(v.index_of(Rat(3)), 2u);
    EXPECT_EQ(v.index_of(Rat(9)), LinePointSet::npos);
    try {
        ints({1, 2, 1});
        FAIL();
    } catch (Error const& e) {
        EXPECT_EQ(e.code(), ErrorCode::DuplicatePoint);
    }
}

TEST(CountKap, SmallCases)
{
    EXPECT_EQ(count_kap(ints({0, 1, 2, 3, 4}), 3), 4u);
    EXPECT_EQ(count_kap(ints({0, 1, 3}), 3), 0u);
    EXPECT_EQ(count_kap(ints({0, 1, 3, 7, 9}), 2), 10u);
    EXPECT_EQ(count_kap(ints({}), 3), 0u);
    EXPECT_THROW(count_kap(ints({0, 1}), 1), Error);
}

TEST(CountKap, MatchesSubsetEnumeration)
{
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> d(-15, 15);
    for (int t = 0; t < 300; ++t) {
        std::vector<long> pts;
        std::size_t n = 3 + static_cast<std::size_t>(rng() % 10);
        while (pts.size() < n) {
            long x = d(rng);
            if (std::find(pts.begin(), pts.end(), x) == pts.end())
                pts.push_back(x);
        }
        for (std::size_t k = 2; k <= 5; ++k)
            ASSERT_EQ(count_kap(ints(pts), static_cast<int>(k)), oracle::count_aps(pts, k));
    }
}

TEST(CountKap, ThreadedAgrees)
{
    auto v = gen_eo(41, 21);
    EXPECT_EQ(count_kap(v, 3, 4), count_kap(v, 3, 1));
}

TEST(SapMax, Formula)
{
    EXPECT_EQ(sap_max(7, 3), 9);
    EXPECT_EQ(sap_max(4, 3), 2);
    EXPECT_EQ(sap_max(9, 4), 9);
    for (int k = 2; k <= 8; ++k)
        EXPECT_EQ(sap_max(k, k), 1);
    EXPECT_EQ(sap_max(0, 3), 0);
    EXPECT_EQ(general_upper_bound(50, 5), sap_max(50, 5));
}

TEST(CountInstances, Direct)
{
    EXPECT_EQ(count_instances(ints({0, 1, 3, 4}), pat({0, 1, 3})), 1u);
    // Mirror {0,2,3} sits at 1,3,4.
    EXPECT_EQ(count_instances(ints({0, 1, 3, 4}), pat({0, 1, 3}), true), 2u);
    EXPECT_EQ(count_instances(ints(range(0, 9)), pat({0, 1, 2}), true), count_kap(ints(range(0, 9)), 3));
}

TEST(CountInstances, MatchesBruteForce)
{
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<long> d(0, 20);
    std::vector<LinePattern> pats = {pat({0, 1, 3}), pat({0, 2, 3, 7}), pat({0, 1}), pat({0, 1, 2})};
    for (int t = 0; t < 100; ++t) {
        std::vector<long> pts;
        while (pts.size() < 12) {
            long x = d(rng);
            if (std::find(pts.begin(), pts.end(), x) == pts.end())
                pts.push_back(x);
        }
        auto v = ints(pts);
        for (auto const& p : pats)
            for (bool refl : {false, true})
                ASSERT_EQ(count_instances(v, p, refl), brute_count(v, p, refl));
    }
}

TEST(NormalizePattern, Canonical)
{
    EXPECT_EQ(pat({5, 7, 11}).str(), "{0,1,3}");
    EXPECT_EQ(pat({0, 1, 3}), pat({0, 1, 3}));
    EXPECT_EQ(pat({0, 1, 3}).reflected(), pat({0, 2, 3}));
    EXPECT_TRUE(pat({0, 1, 2}).is_arithmetic_progression());
    EXPECT_TRUE(pat({0, 1, 3, 4}).is_reflection_symmetric());
    EXPECT_THROW(pat({1}), Error);
    EXPECT_THROW(pat({1, 1}), Error);

    auto two = normalize_pattern(std::vector<QSqrt3>{QSqrt3(0), QSqrt3::sqrt3()});
    EXPECT_TRUE(two.commensurable);
    EXPECT_EQ(two.pattern()->str(), "{0,1}");

    auto irr = normalize_pattern(std::vector<QSqrt3>{QSqrt3(0), QSqrt3(1), QSqrt3::sqrt3()});
    EXPECT_FALSE(irr.commensurable);
    EXPECT_FALSE(irr.pattern().has_value());
    EXPECT_EQ(irr.points[1], QSqrt3(1));
}

TEST(EnvelopingLength, Examples)
{
    EXPECT_EQ(enveloping_length(pat({0, 1, 3})), 4);
    EXPECT_EQ(enveloping_length(pat({0, 2, 6})), 4);
    for (long k = 2; k <= 9; ++k)
        EXPECT_EQ(enveloping_length(pat(range(0, k))), k);
    EXPECT_THROW(enveloping_length(std::vector<QSqrt3>{QSqrt3(0), QSqrt3(1), QSqrt3::sqrt3()}), Error);
}

TEST(JacobBounds, Mary96)
{
    auto b = jacob_bounds(96, pat({0, 1, 3}));
    EXPECT_EQ(b.lower, 1488);
    EXPECT_EQ(b.upper, 2256);
    EXPECT_EQ(b.envelope_length, 4);
    auto big = jacob_bounds(6000, pat({0, 1, 3}));
    EXPECT_NEAR(double(big.lower) / (6000.0 * 6000.0), 1.0 / 6, 1e-3);
    EXPECT_NEAR(double(big.upper) / (6000.0 * 6000.0), 1.0 / 4, 1e-3);
}

TEST(OrderlyDecomposition, Balanced)
{
    auto d = orderly_decomposition(6, 2);
    EXPECT_EQ(d.block_sizes, (std::vector<std::size_t>{3, 3}));
    d = orderly_decomposition(7, 2);
    EXPECT_EQ(d.block_sizes, (std::vector<std::size_t>{4, 3}));
    d = orderly_decomposition(6, 5);
    EXPECT_EQ(d.block_sizes, (std::vector<std::size_t>{2, 1, 1, 1, 1}));
    EXPECT_TRUE(d.balanced());
    EXPECT_EQ(d.total(), 6u);
    EXPECT_EQ(d.block_of(2), 2u);
    EXPECT_EQ(d.block_of(5), 5u);
    EXPECT_FALSE(orderly_decomposition(6, 2, std::vector<std::size_t>{4, 2}).balanced());
    EXPECT_THROW(orderly_decomposition(6, 2, std::vector<std::size_t>{4, 1}), Error);
    EXPECT_THROW(francis_check(gen_ap(6), 3, std::vector<std::size_t>{4, 2}), Error);
}

TEST(Echelons, Examples)
{
    // Blocks {}, {p1}, {p2,p3}, {p4,p5}, {p6}.
    auto d = orderly_decomposition(6, 5, std::vector<std::size_t>{0, 1, 2, 2, 1});
    std::vector<std::size_t> pos = {0, 1, 2, 3, 4, 5};
    EXPECT_EQ(echelons(pos, d), (std::vector<int>{4}));

    auto single = orderly_decomposition(5, 1);
    std::vector<std::size_t> two = {1, 3};
    EXPECT_EQ(echelons(two, single), (std::vector<int>{1}));

    auto d4 = orderly_decomposition(4, 3);
    std::vector<std::size_t> all = {0, 1, 2, 3};
    EXPECT_EQ(echelons(all, d4), (std::vector<int>{1}));
    std::vector<std::size_t> short_pos = {0, 1};
    EXPECT_THROW(echelons(short_pos, d4), Error);
}

TEST(Francis, OptimalityCriterion)
{
    EXPECT_TRUE(francis_check(ints(range(0, 7)), 3).optimal);
    EXPECT_TRUE(francis_check(ints({-4, -2, -1, 0, 1, 2, 4}), 3).optimal);
    // {0,1,2} and {0,2,4}: two progressions, the maximum for four points.
    EXPECT_TRUE(francis_check(ints({0, 1, 2, 4}), 3).optimal);
    auto bad = francis_check(ints({0, 1, 3, 4}), 3);
    EXPECT_FALSE(bad.optimal);
    EXPECT_FALSE(bad.violations.empty());
}

TEST(Francis, AgreesWithCounting)
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> d(0, 14);
    for (int t = 0; t < 400; ++t) {
        std::vector<long> pts;
        std::size_t n = 4 + static_cast<std::size_t>(rng() % 6);
        while (pts.size() < n) {
            long x = d(rng);
            if (std::find(pts.begin(), pts.end(), x) == pts.end())
                pts.push_back(x);
        }
        for (int k = 3; k <= 4; ++k) {
            if (static_cast<std::size_t>(k) > n)
                continue;
            bool opt = static_cast<std::int64_t>(oracle::count_aps(pts, static_cast<std::size_t>(k))) ==
                       sap_max(static_cast<std::int64_t>(n), k);
            ASSERT_EQ(francis_check(ints(pts), k).optimal, opt);
        }
    }
}

TEST(Classify, Examples)
{
    auto eo = classify_optimal(ints({-4, -2, -1, 0, 1, 2, 4}), 3);
    EXPECT_EQ(eo.kind, OptimalKind::EO);
    EXPECT_EQ(eo.e_size, 5u);
    EXPECT_EQ(eo.o_size, 2u);
    EXPECT_TRUE(eo.concentric);
    EXPECT_TRUE(eo.optimal_by_count);

    auto drop = classify_optimal(ints({0, 2, 3, 4, 5, 6, 7, 8, 9}), 4);
    EXPECT_EQ(drop.kind, OptimalKind::APMinusSecond);
    EXPECT_TRUE(drop.optimal_by_count);

    auto not_opt = classify_optimal(ints({0, 2, 3, 4, 5, 6, 7, 8, 9, 10}), 4);
    EXPECT_EQ(not_opt.kind, OptimalKind::NotOptimal);
    EXPECT_FALSE(not_opt.optimal_by_count);

    EXPECT_EQ(classify_optimal(ints({3, 5, 7, 9}), 3).kind, OptimalKind::AP);
}

TEST(Generators, Shapes)
{
    EXPECT_EQ(gen_ap(5), ints({0, 1, 2, 3, 4}));
    EXPECT_EQ(gen_ap(3, Rat(2), Rat(mpz_class(1), mpz_class(2))).points()[2], Rat(3));
    EXPECT_EQ(gen_eo(7, 5), ints({-4, -2, -1, 0, 1, 2, 4}));
    EXPECT_EQ(gen_oliver(9, 4, OliverVariant::DropSecond), ints({0, 2, 3, 4, 5, 6, 7, 8, 9}));
    EXPECT_EQ(gen_oliver(9, 4, OliverVariant::DropPenultimate), ints({0, 1, 2, 3, 4, 5, 6, 7, 9}));
    EXPECT_EQ(gen_oliver(9, 4, OliverVariant::Full), ints(range(0, 9)));
}

TEST(Generators, EoIsOptimal)
{
    for (std::size_t n = 3; n <= 40; ++n) {
        for (std::size_t e = 1; e < n; ++e) {
            auto v = gen_eo(n, e);
            if (static_cast<std::int64_t>(count_kap(v, 3)) != sap_max(static_cast<std::int64_t>(n), 3))
                continue;
            auto c = classify_optimal(v, 3);
            ASSERT_TRUE(c.kind == OptimalKind::EO || c.kind == OptimalKind::AP) << n << " " << e;
        }
    }
}

TEST(Mary, CountAndTable)
{
    auto v = construction_mary(1);
    EXPECT_EQ(v.size(), 96u);
    EXPECT_EQ(count_instances(v, pat({0, 1, 3})), 1680u);
    auto rows = residue_table(1);
    ASSERT_GE(rows.size(), 14u);
    auto find = [&](std::array<int, 3> r) {
        for (auto const& row : rows)
            if (row.residues == r)
                return row.count;
        return std::uint64_t(0);
    };
    EXPECT_EQ(find({0, 0, 0}), 51u);
    EXPECT_EQ(find({3, 3, 3}), 442u);
    std::uint64_t total = 0;
    for (auto const& row : rows)
        total += row.count;
    EXPECT_EQ(total, 1680u);
    EXPECT_EQ(mary_closed_forms().size(), 14u);
}
