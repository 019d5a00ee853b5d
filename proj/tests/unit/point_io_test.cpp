#include <patterncount/error.hpp>
#include <patterncount/plane_equilateral.hpp>
#include <patterncount/point_io.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

using namespace patcount;

TEST(LineIo, ParsesCommentsAndFractions)
{
    auto v = parse_line_points("# header\n3\n\n-1/2  # tail\n 7 \n", "f.txt");
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v[0], Rat(mpz_class(-1), mpz_class(2)));
    EXPECT_EQ(render_line_points(v), "-1/2\n3\n7\n");
}

TEST(LineIo, ErrorsNameLine)
{
    try {
        parse_line_points("1\n2\nx\n", "f.txt");
        FAIL();
    } catch (Error const& e) {
        EXPECT_EQ(e.code(), ErrorCode::Parse);
        EXPECT_NE(std::string(e.what()).find("f.txt:3"), std::string::npos);
    }
    try {
        parse_line_points("1\n2/4\n1/2\n", "g.txt");
        FAIL();
    } catch (Error const& e) {
        EXPECT_EQ(e.code(), ErrorCode::DuplicatePoint);
        EXPECT_NE(std::string(e.what()).find("g.txt:3"), std::string::npos);
    }
}

TEST(PlaneIo, RoundTrip)
{
    auto disk = gen_triangular_disk(12);
    auto text = render_plane_points(disk);
    EXPECT_EQ(parse_plane_points(text), disk);
    auto v = parse_plane_points("1/2 0 0 1/2\n0 0 0 0\n");
    EXPECT_EQ(v[1].y, (QSqrt3{Rat(0), Rat(mpz_class(1), mpz_class(2))}));
    EXPECT_THROW(parse_plane_points("1 2 3\n"), Error);
}

TEST(PatternIo, InlineAndLines)
{
    auto a = parse_pattern_values("{0, 1, 3}");
    ASSERT_EQ(a.size(), 3u);
    EXPECT_EQ(a[2], QSqrt3(3));
    auto b = parse_pattern_values("0\n√3\n");
    EXPECT_EQ(b[1], QSqrt3::sqrt3());
    EXPECT_THROW(parse_pattern_values("{0, 1"), Error);
}

TEST(FileIo, WriteRead)
{
    auto path = std::filesystem::temp_directory_path() / "patterncount_io_test.txt";
    write_text_file(path.string(), "5\n6\n");
    EXPECT_EQ(read_text_file(path.string()), "5\n6\n");
    std::filesystem::remove(path);
    try {
        read_text_file((path / "missing").string());
        FAIL();
    } catch (Error const& e) {
        EXPECT_EQ(e.code(), ErrorCode::Io);
    }
}
