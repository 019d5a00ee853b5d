#include "detail/parallel.hpp"
#include "detail/scaling.hpp"
#include "patterncount/error.hpp"
#include "patterncount/line_patterns.hpp"

#include <algorithm>
#include <unordered_set>

namespace patcount {
namespace {

using i128 = __int128;

constexpr std::int64_t kValueLimit = std::int64_t(1) << 53;
constexpr std::int64_t kPatternLimit = std::int64_t(1) << 40;

bool int_member(std::vector<std::int64_t> const& x, std::size_t& pos, i128 target)
{
    auto it = std::lower_bound(x.begin() + static_cast<std::ptrdiff_t>(pos) + 1, x.end(),
                               static_cast<std::int64_t>(target));
    if (it == x.end() || *it != target)
        return false;
    pos = static_cast<std::size_t>(it - x.begin());
    return true;
}

/// Counts direct copies of an integer pattern p (p[0] == 0) inside sorted x.
std::uint64_t count_int(std::vector<std::int64_t> const& x, std::vector<std::int64_t> const& p,
                        unsigned jobs)
{
    std::size_t const n = x.size();
    std::size_t const k = p.size();
    i128 const maxv = x.back();
    i128 const p1 = p[1];
    i128 const plast = p.back();
    return detail::parallel_sum(n, jobs, [&](std::size_t i) -> std::uint64_t {
        std::uint64_t c = 0;
        i128 const base = x[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            i128 g = static_cast<i128>(x[j]) - base;
            if (base * p1 + g * plast > maxv * p1)
                break;
            bool ok = true;
            std::size_t pos = j;
            for (std::size_t t = 2; t < k && ok; ++t) {
                i128 num = g * p[t];
                if (num % p1 != 0) {
                    ok = false;
                    break;
                }
                ok = int_member(x, pos, base + num / p1);
            }
            c += ok ? 1 : 0;
        }
        return c;
    });
}

std::uint64_t count_rat(LinePointSet const& v, std::span<Rat const> p, unsigned jobs)
{
    std::unordered_set<Rat> index(v.points().begin(), v.points().end());
    std::size_t const n = v.size();
    std::size_t const k = p.size();
    Rat const& maxv = v[n - 1];
    return detail::parallel_sum(n, jobs, [&](std::size_t i) -> std::uint64_t {
        std::uint64_t c = 0;
        Rat const& u = v[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat scale = (v[j] - u) / p[1];
            if (u + scale * p[k - 1] > maxv)
                break;
            bool ok = true;
            for (std::size_t t = 2; t < k && ok; ++t)
                ok = index.count(u + scale * p[t]) != 0;
            c += ok ? 1 : 0;
        }
        return c;
    });
}

std::uint64_t count_direct(LinePointSet const& v, std::span<Rat const> p, unsigned jobs)
{
    if (v.size() < p.size())
        return 0;
    mpz_class den = detail::common_denominator(v.points());
    auto xs = detail::scale_to_int64(v.points(), den, kValueLimit);
    auto ps = detail::scale_to_int64(p, mpz_class(1), kPatternLimit);
    bool integral_pattern =
        std::all_of(p.begin(), p.end(), [](Rat const& r) { return r.is_integer(); });
    if (xs && ps && integral_pattern)
        return count_int(*xs, *ps, jobs);
    return count_rat(v, p, jobs);
}

}  // namespace

std::uint64_t count_kap(LinePointSet const& v, int k, unsigned jobs)
{
    if (k < 2)
        fail(ErrorCode::BadArity, "arithmetic progressions need k >= 2, got " + std::to_string(k));
    std::uint64_t n = v.size();
    if (k == 2)
        return n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<Rat> ap;
    for (int t = 0; t < k; ++t)
        ap.emplace_back(t);
    return count_direct(v, ap, jobs);
}

std::int64_t sap_max(std::int64_t n, std::int64_t k)
{
    if (k < 2)
        fail(ErrorCode::BadArity, "k must be at least 2, got " + std::to_string(k));
    if (n < 0)
        fail(ErrorCode::InvalidArgument, "n must be nonnegative");
    i128 r = n % (k - 1);
    i128 value = (static_cast<i128>(n) - r) * (static_cast<i128>(n) + r - k + 1) / (2 * k - 2);
    return static_cast<std::int64_t>(value);
}

std::int64_t general_upper_bound(std::int64_t n, std::int64_t k)
{
    return sap_max(n, k);
}

std::uint64_t count_instances(LinePointSet const& v, LinePattern const& p, bool allow_reflection,
                              unsigned jobs)
{
    std::uint64_t total = count_direct(v, p.points(), jobs);
    if (allow_reflection && !p.is_reflection_symmetric()) {
        LinePattern mirror = p.reflected();
        total += count_direct(v, mirror.points(), jobs);
    }
    return total;
}

JacobBounds jacob_bounds(std::int64_t n, LinePattern const& p)
{
    JacobBounds b;
    b.envelope_length = enveloping_length(p);
    b.lower = sap_max(n, b.envelope_length);
    b.upper = sap_max(n, static_cast<std::int64_t>(p.size()));
    return b;
}

}  // namespace patcount
