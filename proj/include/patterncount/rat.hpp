#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace patcount {

/// Arbitrary-precision rational, always held in lowest terms with a positive
/// denominator. Equality and hashing act on that reduced form.
class Rat {
  public:
    Rat() = default;

    template <std::signed_integral T>
    Rat(T v) : v_(static_cast<long>(v)) {}

    template <std::unsigned_integral T>
    Rat(T v) : v_(static_cast<unsigned long>(v)) {}

    explicit Rat(mpz_class const& num, mpz_class const& den = 1);
    explicit Rat(mpq_class v);

    /// Accepts "p", "p/q", optional leading sign. Throws Error(Parse).
    static Rat parse(std::string_view text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    mpq_class const& value() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    Rat abs() const;
    double to_double() const { return v_.get_d(); }
    long double to_long_double() const;

    /// "p" when the denominator is one, otherwise "p/q".
    std::string str() const;
    std::size_t hash() const;

    Rat& operator+=(Rat const& o) { v_ += o.v_; return *this; }
    Rat& operator-=(Rat const& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(Rat const& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(Rat const& o);

    friend Rat operator+(Rat a, Rat const& b) { return a += b; }
    friend Rat operator-(Rat a, Rat const& b) { return a -= b; }
    friend Rat operator*(Rat a, Rat const& b) { return a *= b; }
    friend Rat operator/(Rat a, Rat const& b) { return a /= b; }
    friend Rat operator-(Rat const& a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(Rat const& a, Rat const& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(Rat const& a, Rat const& b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater
                              : std::strong_ordering::equal);
    }

  private:
    mpq_class v_;
};

std::size_t hash_mpz(mpz_class const& z);

}  // namespace patcount

template <>
struct std::hash<patcount::Rat> {
    std::size_t operator()(patcount::Rat const& r) const { return r.hash(); }
};
