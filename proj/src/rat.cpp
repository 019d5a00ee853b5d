#include "patterncount/rat.hpp"

#include "patterncount/error.hpp"

#include <cctype>

namespace patcount {
namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!is_integer_literal(s))
        fail(ErrorCode::Parse, "not an integer: '" + std::string(s) + "'");
    if (s[0] == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(mpz_class const& num, mpz_class const& den)
{
    if (den == 0)
        fail(ErrorCode::InvalidArgument, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v))
{
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_integer(text));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        fail(ErrorCode::Parse, "signed denominator: '" + std::string(text) + "'");
    mpz_class den = parse_integer(den_text);
    if (den == 0)
        fail(ErrorCode::Parse, "zero denominator: '" + std::string(text) + "'");
    return Rat(parse_integer(text.substr(0, slash)), den);
}

Rat Rat::abs() const
{
    return Rat(mpq_class(::abs(v_)));
}

long double Rat::to_long_double() const
{
    double head = v_.get_d();
    mpq_class h;
    mpq_set_d(h.get_mpq_t(), head);
    mpq_class tail = v_ - h;
    return static_cast<long double>(head) + static_cast<long double>(tail.get_d());
}

std::string Rat::str() const
{
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t hash_mpz(mpz_class const& z)
{
    std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(sgn(z) + 1);
    mpz_srcptr p = z.get_mpz_t();
    std::size_t limbs = mpz_size(p);
    for (std::size_t i = 0; i < limbs; ++i) {
        h ^= static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i)));
        h *= 1099511628211ull;
        h ^= h >> 29;
    }
    return h;
}

std::size_t Rat::hash() const
{
    std::size_t h = hash_mpz(v_.get_num());
    return h * 31 + hash_mpz(v_.get_den());
}

Rat& Rat::operator/=(Rat const& o)
{
    if (o.is_zero())
        fail(ErrorCode::InvalidArgument, "division by zero");
    v_ /= o.v_;
    return *this;
}

}  // namespace patcount
