#pragma once

#include "patterncount/rat.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace patcount::detail {

/// Least common multiple of all denominators.
inline mpz_class common_denominator(std::span<Rat const> values)
{
    mpz_class l = 1;
    for (auto const& v : values) {
        mpz_class d = v.den();
        if (d != 1)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

/// values * common denominator, when every product has magnitude <= limit.
inline std::optional<std::vector<std::int64_t>> scale_to_int64(std::span<Rat const> values,
                                                              mpz_class const& denom,
                                                              std::int64_t limit)
{
    std::vector<std::int64_t> out;
    out.reserve(values.size());
    mpz_class lim = static_cast<long>(limit);
    for (auto const& v : values) {
        mpz_class scaled = v.num() * (denom / v.den());
        if (abs(scaled) > lim)
            return std::nullopt;
        out.push_back(scaled.get_si());
    }
    return out;
}

}  // namespace patcount::detail
