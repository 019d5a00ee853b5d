#include "patterncount/qsqrt3.hpp"

#include "patterncount/error.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace patcount {
namespace {

constexpr long double kSqrt3 = 1.732050807568877293527446341505872366943L;

std::string strip(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return std::string(s);
}

}  // namespace

int qs3_sign(QSqrt3 const& v)
{
    int sa = v.rational_part().sign();
    int sb = v.sqrt3_part().sign();
    if (sb == 0)
        return sa;
    if (sa == 0 || sa == sb)
        return sb;
    // Opposite signs: the larger of a^2 and 3b^2 wins. They are never equal
    // because sqrt(3) is irrational.
    Rat a2 = v.rational_part() * v.rational_part();
    Rat b2 = Rat(3) * v.sqrt3_part() * v.sqrt3_part();
    return a2 > b2 ? sa : sb;
}

int QSqrt3::sign() const
{
    return qs3_sign(*this);
}

QSqrt3 QSqrt3::parse(std::string_view text)
{
    std::string s = strip(text);
    for (std::string const& alias : {std::string("sqrt3"), std::string("r3")}) {
        for (auto pos = s.find(alias); pos != std::string::npos; pos = s.find(alias))
            s.replace(pos, alias.size(), "√3");
    }
    static std::string const kRoot = "√3";
    auto root = s.find(kRoot);
    if (root == std::string::npos)
        return QSqrt3(Rat::parse(s));
    if (root + kRoot.size() != s.size())
        fail(ErrorCode::Parse, "trailing text after √3 in '" + s + "'");
    std::string body = s.substr(0, root);
    // The separator is the last sign that follows a digit: "1/2-3/4√3",
    // "1+-2√3". A leading sign belongs to the coefficient.
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && std::isdigit(static_cast<unsigned char>(body[i - 1]))) {
            split = i;
            break;
        }
    }
    Rat a(0);
    std::string b_text = body;
    if (split != std::string::npos) {
        a = Rat::parse(body.substr(0, split));
        b_text = body.substr(split);
    }
    if (!b_text.empty() && b_text[0] == '+')
        b_text.erase(0, 1);
    if (b_text.empty() || b_text == "-")
        b_text += "1";
    return QSqrt3(std::move(a), Rat::parse(b_text));
}

double QSqrt3::to_double() const
{
    return static_cast<double>(to_long_double());
}

long double QSqrt3::to_long_double() const
{
    long double a = a_.to_long_double();
    long double b = b_.to_long_double() * kSqrt3;
    long double sum = a + b;
    // Heavy cancellation: fall back to the conjugate form (a^2-3b^2)/(a-b√3).
    if (sum != 0.0L && std::fabs(sum) < 1e-6L * std::fabs(a)) {
        long double den = a - b;
        return norm().to_long_double() / den;
    }
    return sum;
}

std::string QSqrt3::str() const
{
    if (b_.is_zero())
        return a_.str();
    std::string out = a_.str();
    if (b_.sign() >= 0)
        out += "+";
    return out + b_.str() + "√3";
}

std::size_t QSqrt3::hash() const
{
    return a_.hash() * 1000003u ^ b_.hash();
}

QSqrt3& QSqrt3::operator+=(QSqrt3 const& o)
{
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QSqrt3& QSqrt3::operator-=(QSqrt3 const& o)
{
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QSqrt3& QSqrt3::operator*=(QSqrt3 const& o)
{
    if (o.b_.is_zero() && b_.is_zero()) {
        a_ *= o.a_;
        return *this;
    }
    Rat a = a_ * o.a_ + Rat(3) * b_ * o.b_;
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QSqrt3& QSqrt3::operator/=(QSqrt3 const& o)
{
    if (o.is_zero())
        fail(ErrorCode::InvalidArgument, "division by zero in Q(√3)");
    if (o.b_.is_zero()) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    Rat n = o.norm();
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
}

}  // namespace patcount
