#include "oracle.hpp"

#include <patterncount/error.hpp>
#include <patterncount/point2.hpp>
#include <patterncount/qsqrt3.hpp>

#include <gtest/gtest.h>

#include <random>

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

}  // namespace

TEST(Rat, ParsesAndReduces)
{
    EXPECT_EQ(Rat::parse("6/4"), Rat(mpz_class(3), mpz_class(2)));
    EXPECT_EQ(Rat::parse("-7").str(), "-7");
    EXPECT_EQ(Rat::parse("+2/6").str(), "1/3");
    EXPECT_THROW(Rat::parse("1/0"), Error);
    EXPECT_THROW(Rat::parse("abc"), Error);
    EXPECT_THROW(Rat::parse(""), Error);
}

TEST(QSqrt3, SignSmallCases)
{
    EXPECT_EQ(qs3_sign(q(0, 0)), 0);
    EXPECT_EQ(qs3_sign(q(-2, 1)), -1);
    EXPECT_EQ(qs3_sign(q(-1, 1)), 1);
    EXPECT_EQ(qs3_sign(q(2, -1)), 1);
    EXPECT_EQ(qs3_sign(q(1, -1)), -1);
}

TEST(QSqrt3, SignMatchesHighPrecision)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-1'000'000, 1'000'000);
    std::uniform_int_distribution<long> den(1, 1'000'000);
    for (int i = 0; i < 20'000; ++i) {
        QSqrt3 v{Rat(mpz_class(d(rng)), mpz_class(den(rng))), Rat(mpz_class(d(rng)), mpz_class(den(rng)))};
        ASSERT_EQ(v.sign(), oracle::sign(oracle::big(v))) << v.str();
    }
}

TEST(QSqrt3, SignNearCancellation)
{
    // Convergents of sqrt(3): p/q with p^2 - 3q^2 = +-2 or 1.
    long p = 1, qq = 1;
    for (int i = 0; i < 25; ++i) {
        QSqrt3 v{Rat(p), Rat(-qq)};
        EXPECT_EQ(v.sign(), oracle::sign(oracle::big(v))) << p << " " << qq;
        long np = p + 3 * qq, nq = p + qq;
        p = np;
        qq = nq;
        if (p > (1L << 40))
            break;
    }
}

TEST(QSqrt3, FieldArithmetic)
{
    QSqrt3 s = QSqrt3::sqrt3();
    EXPECT_EQ(s * s, q(3));
    QSqrt3 x = q(2, 1);
    EXPECT_EQ(x * x.conjugate(), q(1));
    EXPECT_EQ(q(1) / x, x.conjugate());
    EXPECT_EQ(x.norm(), Rat(1));
    EXPECT_THROW(x / q(0), Error);
}

TEST(QSqrt3, Parse)
{
    EXPECT_EQ(QSqrt3::parse("1/2+3√3"), (QSqrt3{Rat(mpz_class(1), mpz_class(2)), Rat(3)}));
    EXPECT_EQ(QSqrt3::parse("-√3"), q(0, -1));
    EXPECT_EQ(QSqrt3::parse("2sqrt3"), q(0, 2));
    EXPECT_EQ(QSqrt3::parse("4-1/3√3"), (QSqrt3{Rat(4), Rat(mpz_class(-1), mpz_class(3))}));
    EXPECT_THROW(QSqrt3::parse("√2"), Error);
}

TEST(QSqrt3, OrderingAgreesWithSign)
{
    EXPECT_GT(q(0, 1), (QSqrt3{Rat(mpz_class(17), mpz_class(10)), Rat(0)}));
    EXPECT_LT(q(0, 1), (QSqrt3{Rat(mpz_class(7), mpz_class(4)), Rat(0)}));
}

TEST(Point2, LexOrder)
{
    EXPECT_EQ(lex_cmp(pt(q(0), q(0)), pt(q(1), q(0))), std::strong_ordering::less);
    EXPECT_EQ(lex_cmp(Point2::i(), Point2::one()), std::strong_ordering::less);
    EXPECT_EQ(lex_cmp(pt(q(0, 1), q(0)), pt(QSqrt3(Rat(mpz_class(17), mpz_class(10))), q(0))),
              std::strong_ordering::greater);
    EXPECT_EQ(lex_cmp(pt(q(1), q(-5)), pt(q(1), q(2))), std::strong_ordering::less);
    EXPECT_EQ(lex_cmp(Point2::one(), Point2::one()), std::strong_ordering::equal);
    EXPECT_TRUE(lex_positive(Point2::i()));
    EXPECT_FALSE(lex_positive(-Point2::i()));
    EXPECT_FALSE(lex_positive(pt(q(0), q(0))));
}

TEST(Point2, RootsOfUnity)
{
    Point2 z = Point2::zeta6();
    Point2 p = Point2::one();
    for (int j = 0; j < 6; ++j)
        p = p * z;
    EXPECT_EQ(p, Point2::one());
    EXPECT_EQ(z * z, Point2::omega());
    EXPECT_EQ(z.norm2(), q(1));
}

TEST(Direction, DirCmp)
{
    Point2 zero = pt(q(0), q(0));
    Point2 y = Point2::i();
    Point2 two_i = pt(q(0), q(2));
    EXPECT_EQ(dir_cmp(Direction::i(), zero, Point2::one()), std::strong_ordering::less);
    EXPECT_EQ(dir_cmp(Direction::i().negated(), zero, Point2::one()), std::strong_ordering::greater);
    // i * conj(1) * y = iy: i -> -1, 2i -> -2, so i comes after 2i.
    EXPECT_EQ(dir_cmp(Direction::zeta12(0), y, two_i), std::strong_ordering::greater);
}

TEST(Direction, IMatchesLexOnRandomPairs)
{
    oracle::PlaneSampler s(11);
    for (int i = 0; i < 2000; ++i) {
        Point2 a{s.coord(6), s.coord(6)};
        Point2 b{s.coord(6), s.coord(6)};
        ASSERT_EQ(dir_cmp(Direction::i(), a, b), lex_cmp(a, b));
    }
}

TEST(Direction, ApproximateAgreesWithExact)
{
    oracle::PlaneSampler s(12);
    for (int j = 0; j < 12; ++j) {
        Direction exact = Direction::zeta12(j);
        Direction approx = Direction::from_angle(exact.angle() + 1e-15);
        for (int t = 0; t < 200; ++t) {
            Point2 a{s.coord(8), s.coord(8)};
            Point2 b{s.coord(8), s.coord(8)};
            auto e = dir_cmp(exact, a, b);
            try {
                ASSERT_EQ(dir_cmp(approx, a, b), e);
            } catch (Error const& err) {
                ASSERT_EQ(err.code(), ErrorCode::AmbiguousComparison);
            }
        }
    }
}

TEST(Direction, ExactRequiresUnit)
{
    EXPECT_THROW(Direction::exact(pt(q(2), q(0))), Error);
    EXPECT_TRUE(Direction::zeta12(1).is_exact());
    EXPECT_NEAR(Direction::zeta12(1).angle(), M_PI / 6, 1e-15);
    EXPECT_NEAR(Direction::zeta12(7).angle(), -5 * M_PI / 6, 1e-15);
}

TEST(ThirdVertices, UnitSegment)
{
    auto [w, w2] = third_vertices(pt(q(0), q(0)), Point2::one());
    QSqrt3 half{Rat(mpz_class(1), mpz_class(2)), Rat(0)};
    QSqrt3 half_s3{Rat(0), Rat(mpz_class(1), mpz_class(2))};
    // w = conj(zeta6) * v lies below the segment, w' above it.
    EXPECT_EQ(w, pt(half, -half_s3));
    EXPECT_EQ(w2, pt(half, half_s3));
    EXPECT_TRUE(is_equilateral(pt(q(0), q(0)), Point2::one(), w));
}

TEST(ThirdVertices, VerticalSegment)
{
    auto [w, w2] = third_vertices(pt(q(0), q(0)), Point2::i());
    QSqrt3 half{Rat(mpz_class(1), mpz_class(2)), Rat(0)};
    QSqrt3 half_s3{Rat(0), Rat(mpz_class(1), mpz_class(2))};
    EXPECT_EQ(w, pt(half_s3, half));
    EXPECT_EQ(w2, pt(-half_s3, half));
    EXPECT_THROW(third_vertices(Point2::i(), Point2::i()), Error);
}

TEST(ThirdVertices, RandomPairsAreEquilateral)
{
    oracle::PlaneSampler s(13);
    for (int i = 0; i < 500; ++i) {
        Point2 u{s.coord(9), s.coord(9)};
        Point2 v{s.coord(9), s.coord(9)};
        if (u == v)
            continue;
        auto [w, w2] = third_vertices(u, v);
        ASSERT_TRUE(is_equilateral(u, v, w));
        ASSERT_TRUE(oracle::equilateral(u, v, w2));
        ASSERT_NE(w, w2);
    }
}
