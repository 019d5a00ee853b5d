#pragma once

#include "qsqrt3.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>

namespace patcount {

/// Plane point x + iy with both coordinates in Q(sqrt 3). The set of such
/// points is closed under multiplication by the sixth roots of unity.
struct Point2 {
    QSqrt3 x;
    QSqrt3 y;

    static Point2 zeta6();  ///< e^{i pi/3}
    static Point2 omega();  ///< e^{2 pi i/3}
    static Point2 i() { return {QSqrt3(0), QSqrt3(1)}; }
    static Point2 one() { return {QSqrt3(1), QSqrt3(0)}; }

    Point2 conj() const { return {x, -y}; }
    /// |z|^2, exact.
    QSqrt3 norm2() const { return x * x + y * y; }
    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    std::pair<double, double> to_double() const { return {x.to_double(), y.to_double()}; }
    std::string str() const;
    std::size_t hash() const;

    Point2& operator+=(Point2 const& o) { x += o.x; y += o.y; return *this; }
    Point2& operator-=(Point2 const& o) { x -= o.x; y -= o.y; return *this; }

    friend Point2 operator+(Point2 a, Point2 const& b) { return a += b; }
    friend Point2 operator-(Point2 a, Point2 const& b) { return a -= b; }
    friend Point2 operator-(Point2 const& a) { return {-a.x, -a.y}; }
    /// Complex multiplication.
    friend Point2 operator*(Point2 const& a, Point2 const& b)
    {
        return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
    }
    friend Point2 operator*(QSqrt3 const& s, Point2 const& p) { return {s * p.x, s * p.y}; }
    friend Point2 operator/(Point2 const& p, QSqrt3 const& s) { return {p.x / s, p.y / s}; }

    friend bool operator==(Point2 const& a, Point2 const& b) = default;
};

/// Lexicographic order: real parts first, imaginary parts break ties.
std::strong_ordering lex_cmp(Point2 const& y, Point2 const& z);

inline std::strong_ordering operator<=>(Point2 const& a, Point2 const& b)
{
    return lex_cmp(a, b);
}

/// True iff z is lexicographically greater than zero.
bool lex_positive(Point2 const& z);

/// Unit complex number. Exact when the unit vector has Q(sqrt 3)
/// coordinates, otherwise carried as a double angle.
class Direction {
  public:
    /// Relative tolerance below which approximate comparisons are refused.
    static constexpr double kTieTolerance = 1e-9;

    /// Throws Error(InvalidArgument) unless |unit|^2 == 1 exactly.
    static Direction exact(Point2 unit);
    static Direction from_angle(double theta);
    static Direction i() { return exact(Point2::i()); }
    /// e^{i j pi/6}, exact.
    static Direction zeta12(int j);

    bool is_exact() const { return exact_.has_value(); }
    std::optional<Point2> const& exact_value() const { return exact_; }
    /// Angle in (-pi, pi].
    double angle() const { return theta_; }
    double cos() const { return c_; }
    double sin() const { return s_; }

    Direction negated() const;
    /// Multiplied by omega^j = e^{2 pi i j/3}.
    Direction rotated_by_omega(int j) const;
    std::string str() const;

  private:
    Direction() = default;
    std::optional<Point2> exact_;
    double theta_ = 0.0;
    double c_ = 1.0;
    double s_ = 0.0;
};

/// y ≺_ζ z iff i·conj(ζ)·y ≺ i·conj(ζ)·z. Exact for exact ζ; otherwise
/// throws Error(AmbiguousComparison) when the margin is below tolerance.
std::strong_ordering dir_cmp(Direction const& zeta, Point2 const& y, Point2 const& z);

/// Third vertices of the two equilateral triangles on u, v:
/// w = ζ6 u + conj(ζ6) v and w' = conj(ζ6) u + ζ6 v.
/// Throws Error(DegeneratePair) when u == v.
std::pair<Point2, Point2> third_vertices(Point2 const& u, Point2 const& v);

/// Exact test that all three squared side lengths agree.
bool is_equilateral(Point2 const& a, Point2 const& b, Point2 const& c);

}  // namespace patcount

template <>
struct std::hash<patcount::Point2> {
    std::size_t operator()(patcount::Point2 const& p) const { return p.hash(); }
};
