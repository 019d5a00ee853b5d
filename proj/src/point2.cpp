#include "patterncount/point2.hpp"

#include "patterncount/error.hpp"

#include <cmath>
#include <numbers>

namespace patcount {
namespace {

std::strong_ordering from_sign(int s)
{
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

double normalize_angle(double t)
{
    constexpr double two_pi = 2 * std::numbers::pi;
    t = std::fmod(t, two_pi);
    if (t <= -std::numbers::pi)
        t += two_pi;
    else if (t > std::numbers::pi)
        t -= two_pi;
    return t;
}

}  // namespace

Point2 Point2::zeta6()
{
    return {QSqrt3(Rat(mpq_class(1, 2))),
            QSqrt3(Rat(0), Rat(mpq_class(1, 2)))};
}

Point2 Point2::omega()
{
    return {QSqrt3(Rat(mpq_class(-1, 2))), QSqrt3(Rat(0), Rat(mpq_class(1, 2)))};
}

std::string Point2::str() const
{
    return "(" + x.str() + ", " + y.str() + ")";
}

std::size_t Point2::hash() const
{
    return x.hash() * 0x9e3779b97f4a7c15ull ^ y.hash();
}

std::strong_ordering lex_cmp(Point2 const& y, Point2 const& z)
{
    int sx = (y.x - z.x).sign();
    if (sx != 0)
        return from_sign(sx);
    return from_sign((y.y - z.y).sign());
}

bool lex_positive(Point2 const& z)
{
    int sx = z.x.sign();
    return sx > 0 || (sx == 0 && z.y.sign() > 0);
}

Direction Direction::exact(Point2 unit)
{
    if (unit.norm2() != QSqrt3(1))
        fail(ErrorCode::InvalidArgument, "direction " + unit.str() + " is not a unit vector");
    Direction d;
    auto [c, s] = unit.to_double();
    d.theta_ = std::atan2(s, c);
    d.c_ = std::cos(d.theta_);
    d.s_ = std::sin(d.theta_);
    d.exact_ = std::move(unit);
    return d;
}

Direction Direction::from_angle(double theta)
{
    Direction d;
    d.theta_ = normalize_angle(theta);
    d.c_ = std::cos(d.theta_);
    d.s_ = std::sin(d.theta_);
    return d;
}

Direction Direction::zeta12(int j)
{
    j = ((j % 12) + 12) % 12;
    Rat half(mpq_class(1, 2));
    // cos(j pi/6) and sin(j pi/6) as Q(sqrt 3) values.
    static int const kCosA[12] = {2, 0, 1, 0, -1, 0, -2, 0, -1, 0, 1, 0};
    static int const kCosB[12] = {0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1};
    auto entry = [&](int idx) {
        return QSqrt3(half * Rat(kCosA[idx]), half * Rat(kCosB[idx]));
    };
    QSqrt3 c = entry(j);
    QSqrt3 s = entry((j + 9) % 12);  // sin(t) = cos(t - pi/2)
    return exact(Point2{c, s});
}

Direction Direction::negated() const
{
    if (exact_)
        return exact(-*exact_);
    return from_angle(theta_ + std::numbers::pi);
}

Direction Direction::rotated_by_omega(int j) const
{
    j = ((j % 3) + 3) % 3;
    if (exact_) {
        Point2 p = *exact_;
        for (int t = 0; t < j; ++t)
            p = p * Point2::omega();
        return exact(std::move(p));
    }
    return from_angle(theta_ + j * 2 * std::numbers::pi / 3);
}

std::string Direction::str() const
{
    if (exact_)
        return exact_->str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "angle %.17g", theta_);
    return buf;
}

std::strong_ordering dir_cmp(Direction const& zeta, Point2 const& y, Point2 const& z)
{
    Point2 d = z - y;
    if (d.is_zero())
        return std::strong_ordering::equal;
    if (zeta.is_exact()) {
        Point2 rot = Point2::i() * zeta.exact_value()->conj();
        return lex_positive(rot * d) ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
    }
    long double dx = d.x.to_long_double();
    long double dy = d.y.to_long_double();
    long double s = zeta.sin();
    long double c = zeta.cos();
    long double re = s * dx - c * dy;
    long double mag = std::hypot(dx, dy);
    if (std::fabs(re) <= Direction::kTieTolerance * mag)
        fail(ErrorCode::AmbiguousComparison,
             "points " + y.str() + " and " + z.str() + " are nearly on a common line in direction " +
                 zeta.str());
    return re > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::pair<Point2, Point2> third_vertices(Point2 const& u, Point2 const& v)
{
    if (u == v)
        fail(ErrorCode::DegeneratePair, "third vertices of a degenerate pair " + u.str());
    Point2 z6 = Point2::zeta6();
    Point2 z6c = z6.conj();
    return {z6 * u + z6c * v, z6c * u + z6 * v};
}

bool is_equilateral(Point2 const& a, Point2 const& b, Point2 const& c)
{
    QSqrt3 ab = (a - b).norm2();
    if (ab.is_zero())
        return false;
    return ab == (b - c).norm2() && ab == (a - c).norm2();
}

}  // namespace patcount
