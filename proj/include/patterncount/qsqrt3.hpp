#pragma once

#include "rat.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace patcount {

/// Element a + b*sqrt(3) of the real quadratic field Q(sqrt 3).
class QSqrt3 {
  public:
    QSqrt3() = default;
    QSqrt3(Rat a) : a_(std::move(a)) {}
    template <std::integral T>
    QSqrt3(T a) : a_(a) {}
    QSqrt3(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt3 sqrt3() { return {Rat(0), Rat(1)}; }
    /// Accepts "a", "a+b√3", "a-b√3", "b√3" ("sqrt3" is accepted for "√3").
    static QSqrt3 parse(std::string_view text);

    Rat const& rational_part() const { return a_; }
    Rat const& sqrt3_part() const { return b_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Exact sign of a + b*sqrt(3).
    int sign() const;
    QSqrt3 conjugate() const { return {a_, -b_}; }
    /// a^2 - 3 b^2, the field norm.
    Rat norm() const { return a_ * a_ - Rat(3) * b_ * b_; }
    double to_double() const;
    long double to_long_double() const;
    std::string str() const;
    std::size_t hash() const;

    QSqrt3& operator+=(QSqrt3 const& o);
    QSqrt3& operator-=(QSqrt3 const& o);
    QSqrt3& operator*=(QSqrt3 const& o);
    /// Throws Error(InvalidArgument) on a zero divisor.
    QSqrt3& operator/=(QSqrt3 const& o);

    friend QSqrt3 operator+(QSqrt3 a, QSqrt3 const& b) { return a += b; }
    friend QSqrt3 operator-(QSqrt3 a, QSqrt3 const& b) { return a -= b; }
    friend QSqrt3 operator*(QSqrt3 a, QSqrt3 const& b) { return a *= b; }
    friend QSqrt3 operator/(QSqrt3 a, QSqrt3 const& b) { return a /= b; }
    friend QSqrt3 operator-(QSqrt3 const& a) { return {-a.a_, -a.b_}; }

    friend bool operator==(QSqrt3 const& x, QSqrt3 const& y) = default;
    friend std::strong_ordering operator<=>(QSqrt3 const& x, QSqrt3 const& y)
    {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater
                              : std::strong_ordering::equal);
    }

  private:
    Rat a_;
    Rat b_;
};

/// Sign of a + b*sqrt(3) decided from the signs of a, b and a^2 versus 3b^2.
int qs3_sign(QSqrt3 const& v);

}  // namespace patcount

template <>
struct std::hash<patcount::QSqrt3> {
    std::size_t operator()(patcount::QSqrt3 const& v) const { return v.hash(); }
};
