#include "oracle.hpp"

#include <patterncount/error.hpp>
#include <patterncount/extremal_search.hpp>
#include <patterncount/plane_equilateral.hpp>

#include <gtest/gtest.h>

using namespace patcount;

namespace {

QSqrt3 q(long a, long b = 0)
{
    return {Rat(a), Rat(b)};
}

Point2 pt(QSqrt3 x, QSqrt3 y)
{
    return {std::move(x), std::move(y)};
}

Point2 origin()
{
    return pt(q(0), q(0));
}

PlanePointSet hexagon_with_center()
{
    std::vector<Point2> pts{origin()};
    Point2 p = Point2::one();
    for (int j = 0; j < 6; ++j) {
        pts.push_back(p);
        p = p * Point2::zeta6();
    }
    return PlanePointSet(std::move(pts));
}

}  // namespace

TEST(PlanePointSet, RejectsDuplicates)
{
    EXPECT_THROW(PlanePointSet({Point2::one(), Point2::i(), Point2::one()}), Error);
    PlanePointSet s({Point2::one(), origin(), Point2::i()});
    EXPECT_EQ(s[0], origin());
    EXPECT_EQ(s[1], Point2::i());
    EXPECT_TRUE(s.contains(Point2::one()));
}

TEST(Reconstruction, BoundaryArguments)
{
    EXPECT_FALSE(admits_reconstruction(pt(q(0, 1), q(1))));    // pi/6
    EXPECT_TRUE(admits_reconstruction(pt(q(0, -1), q(1))));    // 5pi/6
    EXPECT_TRUE(admits_reconstruction(pt(q(0, 1), q(-1))));    // -pi/6
    EXPECT_FALSE(admits_reconstruction(pt(q(0, -1), q(-1))));  // -5pi/6
    EXPECT_FALSE(admits_reconstruction(Point2::one()));
    EXPECT_TRUE(admits_reconstruction(Point2::i()));
    EXPECT_THROW(admits_reconstruction(origin()), Error);
}

TEST(Reconstruction, FirstAndLast)
{
    QSqrt3 half{Rat(mpz_class(1), mpz_class(2)), Rat(0)};
    QSqrt3 half_s3{Rat(0), Rat(mpz_class(1), mpz_class(2))};
    auto w = reconstruct_first(origin(), Point2::i());
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(*w, pt(half_s3, half));
    auto last = reconstruct_last(origin(), Point2::i());
    ASSERT_TRUE(last.has_value());
    EXPECT_EQ(*last, pt(-half_s3, half));

    EXPECT_FALSE(reconstruct_first(origin(), Point2::one()).has_value());
    EXPECT_FALSE(reconstruct_last(origin(), Point2::one()).has_value());
    EXPECT_FALSE(reconstruct_first(origin(), pt(q(0, 1), q(1))).has_value());
    EXPECT_THROW(reconstruct_first(Point2::one(), origin()), Error);

    // A shallow pair: neither reconstructs.
    Point2 u = origin(), v = pt(q(4), q(1));
    EXPECT_FALSE(reconstruct_first(u, v).has_value());
    EXPECT_FALSE(reconstruct_last(u, v).has_value());
}

TEST(Reconstruction, LastExample)
{
    // Steep pair pointing down: u = 0, v = 1 - 2i has Arg in (-5pi/6, -pi/6].
    Point2 u = origin(), v = pt(q(1), q(-2));
    auto first = reconstruct_first(u, v);
    auto last = reconstruct_last(u, v);
    EXPECT_TRUE(first.has_value());
    EXPECT_TRUE(last.has_value());
    auto [w, w2] = third_vertices(u, v);
    if (first) {
        EXPECT_TRUE(*first == w || *first == w2);
        EXPECT_TRUE(lex_cmp(*first, v) > 0);
    }
    if (last) {
        EXPECT_TRUE(*last == w || *last == w2);
        EXPECT_TRUE(lex_cmp(*last, u) < 0);
    }
}

TEST(Reconstruction, RandomPairsMatchArgument)
{
    oracle::PlaneSampler s(31);
    for (int t = 0; t < 3000; ++t) {
        Point2 u{s.coord(10), s.coord(10)};
        Point2 v{s.coord(10), s.coord(10)};
        if (u == v)
            continue;
        if (lex_cmp(u, v) > 0)
            std::swap(u, v);
        // Directions on an endpoint are decided by the half-open rule:
        // -pi/6 and 5pi/6 belong to A, pi/6 and -5pi/6 do not.
        oracle::Big theta = oracle::arg(v - u);
        bool in_a = oracle::in_a(theta);
        for (int j : {-5, -1, 1, 5})
            if (abs(theta - j * oracle::pi() / 6) < oracle::Big("1e-60"))
                in_a = (j == -1 || j == 5);
        auto first = reconstruct_first(u, v);
        auto last = reconstruct_last(u, v);
        ASSERT_EQ(admits_reconstruction(v - u), in_a) << u.str() << " " << v.str();
        ASSERT_EQ(first.has_value(), in_a);
        ASSERT_EQ(last.has_value(), in_a);
        auto [w, w2] = third_vertices(u, v);
        if (first) {
            ASSERT_TRUE(*first == w || *first == w2);
            ASSERT_TRUE(lex_cmp(*first, v) > 0);
        }
        if (last) {
            ASSERT_TRUE(*last == w || *last == w2);
            ASSERT_TRUE(lex_cmp(*last, u) < 0);
        }
        // The third vertex lies between u and v exactly when neither applies.
        if (!in_a) {
            bool between = (lex_cmp(u, w) < 0 && lex_cmp(w, v) < 0) || (lex_cmp(u, w2) < 0 && lex_cmp(w2, v) < 0);
            ASSERT_TRUE(between);
        }
    }
}

TEST(CountEquilateral, SmallShapes)
{
    PlanePointSet tri({origin(), Point2::one(), Point2::zeta6()});
    EXPECT_EQ(count_equilateral(tri), 1u);
    EXPECT_EQ(count_equilateral(hexagon_with_center()), 8u);
    PlanePointSet rhombus({origin(), Point2::one(), Point2::zeta6(), Point2::one() + Point2::zeta6()});
    EXPECT_EQ(count_equilateral(rhombus), 2u);
    EXPECT_EQ(count_equilateral(PlanePointSet{}), 0u);
}

TEST(CountEquilateral, MethodsAgreeWithOracle)
{
    oracle::PlaneSampler s(32);
    for (int t = 0; t < 150; ++t) {
        auto v = (t % 2) ? s.lattice_like(4 + t % 12, 3) : s.generic(4 + t % 12, 4);
        std::uint64_t expected = oracle::count_triangles(v);
        CountOptions exact_only{1, false};
        ASSERT_EQ(count_equilateral_pairwise(v), expected);
        ASSERT_EQ(count_equilateral_reconstruct(v), expected);
        ASSERT_EQ(count_equilateral_pairwise(v, exact_only), expected);
        ASSERT_EQ(count_equilateral_reconstruct(v, exact_only), expected);
        ASSERT_EQ(brute_count_equilateral(v), expected);
    }
}

TEST(CountEquilateral, InvariantUnderSimilarity)
{
    auto disk = gen_triangular_disk(40);
    auto base = count_equilateral(disk);
    Point2 scale = pt(QSqrt3{Rat(mpz_class(3), mpz_class(7)), Rat(1)}, q(2, -1));
    Point2 shift = pt(q(5, 3), QSqrt3{Rat(mpz_class(-1), mpz_class(3)), Rat(0)});
    EXPECT_EQ(count_equilateral(disk.transformed(scale, shift)), base);
    EXPECT_EQ(count_equilateral(disk, CountOptions{3, true}), base);
}

TEST(Bounds, KatherineAndAbrego)
{
    EXPECT_EQ(katherine_bound(7), 9);
    EXPECT_EQ(abrego_bound(7), 9);
    EXPECT_EQ(katherine_bound(2), 0);
    EXPECT_EQ(katherine_bound(1000), 221944);
    EXPECT_EQ(katherine_bound(4), 2);
    for (std::int64_t n = 1; n <= 500; ++n)
        ASSERT_LE(katherine_bound(n), abrego_bound(n)) << n;
}

TEST(Bounds, KatherineAlgebra)
{
    for (std::int64_t n = 1; n <= 200; ++n) {
        auto a = katherine_algebra(n);
        ASSERT_EQ(6 * a.q + 2 * a.r + a.s, n - 1);
        ASSERT_TRUE(a.r >= 0 && a.r <= 2 && a.s >= 0 && a.s <= 1);
        ASSERT_EQ(a.bound, a.piecewise) << n;
        Rat closed = Rat(mpz_class((4 * n - 1) * (n - 1)), mpz_class(18));
        ASSERT_LE(a.bound, closed) << n;
        if (n % 6 == 1)
            ASSERT_EQ(a.bound, closed) << n;
        // Six compartments as equal as possible, by direct minimization.
        std::int64_t best = -1;
        std::int64_t m = n - 1;
        std::int64_t base = m / 6, extra = m % 6;
        best = (6 - extra) * base * (base - 1) / 2 + extra * (base + 1) * base / 2;
        ASSERT_EQ(a.min_intracompartmental, best) << n;
        std::int64_t hi = (n + 1) / 2, lo = n / 2;
        ASSERT_EQ(a.same_side_pairs, hi * (hi - 1) / 2 + lo * (lo - 1) / 2);
    }
}

TEST(Halving, MedianAndCertificate)
{
    PlanePointSet two({origin(), Point2::one()});
    Point2 m = zeta_median(two, Direction::i());
    EXPECT_EQ(m, pt(QSqrt3(Rat(mpz_class(1), mpz_class(2))), q(0)));
    auto disk = gen_triangular_disk(19);
    for (int j = 0; j < 12; ++j) {
        auto cert = halving_line(disk, Direction::zeta12(j));
        EXPECT_EQ(cert.left_count, 10u);
        EXPECT_EQ(cert.right_count, 9u);
    }
}

TEST(Halving, SinglePoint)
{
    PlanePointSet one({Point2::i()});
    auto h = find_concurrent_direction(one);
    EXPECT_EQ(h.residual, 0.0);
    auto p = compartments(one, h);
    std::size_t total = 0;
    for (auto s : p.sizes)
        total += s;
    EXPECT_EQ(total, 1u);
}

TEST(Halving, SymmetricSetConcurrentAtCenter)
{
    auto disk = gen_triangular_disk(37);
    Point2 shift = pt(q(3), q(0, 1));
    auto moved = disk.transformed(Point2::one(), shift);
    auto h = find_concurrent_direction(moved);
    EXPECT_LT(h.residual, 1e-9);
    EXPECT_NEAR(h.intersection_x, 3.0, 1e-9);
    EXPECT_NEAR(h.intersection_y, std::sqrt(3.0), 1e-9);
}

TEST(Halving, RandomSetsCertify)
{
    oracle::PlaneSampler s(33);
    for (int t = 0; t < 40; ++t) {
        auto v = s.generic(10, 20);
        auto h = find_concurrent_direction(v);
        ASSERT_LT(h.residual, 1e-9);
        for (auto const& line : h.lines) {
            ASSERT_EQ(line.left_count, 5u);
            ASSERT_EQ(line.right_count, 5u);
        }
        auto p = compartments(v, h);
        std::size_t total = 0;
        for (auto x : p.sizes)
            total += x;
        ASSERT_EQ(total, 10u);
        ASSERT_LE(p.sizes[6], 1u);
    }
}

TEST(Terence, HexagonProfile)
{
    auto r = terence_analysis(hexagon_with_center());
    std::size_t total = 0;
    for (auto x : r.profile.sizes)
        total += x;
    EXPECT_EQ(total, 7u);
    EXPECT_LE(r.profile.sizes[6], 1u);
    EXPECT_GE(r.bound, 8);
    EXPECT_LE(r.bound, katherine_bound(7));
    EXPECT_LE(r.refined_min, r.bound);
    EXPECT_GE(r.refined_min, 8);
}

TEST(Terence, BoundFromCompartmentSizes)
{
    oracle::PlaneSampler s(35);
    for (int t = 0; t < 20; ++t) {
        auto v = s.generic(5 + t, 12);
        auto r = terence_analysis(v);
        std::int64_t n = static_cast<std::int64_t>(v.size());
        std::int64_t hi = (n + 1) / 2, lo = n / 2;
        std::int64_t same = hi * (hi - 1) / 2 + lo * (lo - 1) / 2;
        std::int64_t sum = 0;
        for (int j = 0; j < 6; ++j) {
            auto x = static_cast<std::int64_t>(r.profile.sizes[static_cast<std::size_t>(j)]);
            sum += x * (x - 1) / 2;
        }
        ASSERT_EQ(r.exact_bound, Rat(same) - Rat(mpz_class(sum), mpz_class(3)));
        ASSERT_EQ(r.bound, same - (sum + 2) / 3);
        std::uint64_t outside = r.profile.outside_a_by_rotation[static_cast<std::size_t>(r.profile.rotation_chosen)];
        for (auto o : r.profile.outside_a_by_rotation)
            ASSERT_LE(o, outside);
    }
}

TEST(Terence, ChainOnRandomSets)
{
    oracle::PlaneSampler s(34);
    for (int t = 0; t < 30; ++t) {
        auto v = s.lattice_like(6 + t % 20, 4);
        auto r = terence_analysis(v);
        auto c = static_cast<std::int64_t>(count_equilateral(v));
        ASSERT_LE(c, r.refined_min);
        ASSERT_LE(r.refined_min, r.bound);
        ASSERT_LE(r.bound, katherine_bound(static_cast<std::int64_t>(v.size())));
    }
}

TEST(Disk, SmallSizes)
{
    EXPECT_EQ(gen_triangular_disk(3).size(), 3u);
    EXPECT_EQ(count_equilateral(gen_triangular_disk(3)), 1u);
    EXPECT_EQ(count_equilateral(gen_triangular_disk(7)), 8u);
    EXPECT_EQ(gen_triangular_disk(7), hexagon_with_center());
    EXPECT_EQ(lattice_point(1, 1), Point2::one() + Point2::zeta6());
}
