#include "patterncount/error.hpp"
#include "patterncount/line_patterns.hpp"

#include <algorithm>

namespace patcount {

LinePointSet::LinePointSet(std::vector<Rat> points) : points_(std::move(points))
{
    std::sort(points_.begin(), points_.end());
    auto dup = std::adjacent_find(points_.begin(), points_.end());
    if (dup != points_.end())
        fail(ErrorCode::DuplicatePoint, "repeated point " + dup->str());
}

bool LinePointSet::contains(Rat const& x) const
{
    return std::binary_search(points_.begin(), points_.end(), x);
}

std::size_t LinePointSet::index_of(Rat const& x) const
{
    auto it = std::lower_bound(points_.begin(), points_.end(), x);
    if (it == points_.end() || *it != x)
        return npos;
    return static_cast<std::size_t>(it - points_.begin());
}

LinePointSet LinePointSet::transformed(Rat const& a, Rat const& b) const
{
    if (a.is_zero())
        fail(ErrorCode::InvalidArgument, "degenerate affine map (scale 0)");
    std::vector<Rat> out;
    out.reserve(points_.size());
    for (auto const& p : points_)
        out.push_back(a * p + b);
    return LinePointSet(std::move(out));
}

LinePointSet LinePointSet::without_index(std::size_t i) const
{
    std::vector<Rat> out;
    out.reserve(points_.size());
    for (std::size_t j = 0; j < points_.size(); ++j) {
        if (j != i)
            out.push_back(points_[j]);
    }
    return LinePointSet(std::move(out));
}

NormalizedPattern normalize_pattern(std::vector<QSqrt3> points)
{
    if (points.size() < 2)
        fail(ErrorCode::BadArity, "a pattern needs at least two points");
    std::sort(points.begin(), points.end());
    auto dup = std::adjacent_find(points.begin(), points.end());
    if (dup != points.end())
        fail(ErrorCode::DuplicatePoint, "repeated pattern point " + dup->str());

    NormalizedPattern out;
    out.offset = points.front();
    QSqrt3 first_gap = points[1] - points[0];
    std::vector<QSqrt3> ratios;
    ratios.reserve(points.size());
    out.commensurable = true;
    for (auto const& p : points) {
        ratios.push_back((p - out.offset) / first_gap);
        if (!ratios.back().is_rational())
            out.commensurable = false;
    }
    if (!out.commensurable) {
        out.points = std::move(ratios);
        out.scale = QSqrt3(1) / first_gap;
        return out;
    }
    mpz_class l = 1;
    for (auto const& r : ratios) {
        mpz_class d = r.rational_part().den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    mpz_class g = 0;
    std::vector<mpz_class> ints;
    ints.reserve(ratios.size());
    for (auto const& r : ratios) {
        Rat scaled = r.rational_part() * Rat(l);
        ints.push_back(scaled.num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    for (auto const& v : ints)
        out.points.emplace_back(Rat(mpz_class(v / g)));
    out.scale = QSqrt3(Rat(l, g)) / first_gap;
    return out;
}

NormalizedPattern normalize_pattern(std::span<Rat const> points)
{
    return normalize_pattern(std::vector<QSqrt3>(points.begin(), points.end()));
}

std::optional<LinePattern> NormalizedPattern::pattern() const
{
    if (!commensurable)
        return std::nullopt;
    std::vector<Rat> pts;
    pts.reserve(points.size());
    for (auto const& p : points)
        pts.push_back(p.rational_part());
    return LinePattern::from_points(std::move(pts));
}

LinePattern LinePattern::from_points(std::vector<Rat> points)
{
    if (points.size() < 2)
        fail(ErrorCode::BadArity, "a pattern needs at least two points");
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        fail(ErrorCode::DuplicatePoint, "repeated pattern point");
    Rat lo = points.front();
    mpz_class l = 1;
    for (auto& p : points) {
        p -= lo;
        mpz_class d = p.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    mpz_class g = 0;
    for (auto& p : points) {
        p *= Rat(l);
        mpz_class n = p.num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    LinePattern out;
    out.points_.reserve(points.size());
    for (auto const& p : points)
        out.points_.push_back(p / Rat(g));
    return out;
}

LinePattern LinePattern::reflected() const
{
    LinePattern out;
    Rat hi = points_.back();
    out.points_.reserve(points_.size());
    for (auto it = points_.rbegin(); it != points_.rend(); ++it)
        out.points_.push_back(hi - *it);
    return out;
}

bool LinePattern::is_arithmetic_progression() const
{
    for (std::size_t i = 2; i < points_.size(); ++i) {
        if (points_[i] - points_[i - 1] != points_[1] - points_[0])
            return false;
    }
    return true;
}

std::string LinePattern::str() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i)
            out += ",";
        out += points_[i].str();
    }
    return out + "}";
}

std::int64_t enveloping_length(LinePattern const& p)
{
    auto pts = p.points();
    mpz_class g = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        mpz_class gap = (pts[i] - pts[i - 1]).num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gap.get_mpz_t());
    }
    mpz_class span = (pts.back() - pts.front()).num();
    mpz_class len = span / g + 1;
    if (!len.fits_slong_p())
        fail(ErrorCode::TooLarge, "enveloping progression length overflows");
    return len.get_si();
}

std::int64_t enveloping_length(std::vector<QSqrt3> const& p)
{
    NormalizedPattern n = normalize_pattern(p);
    auto pattern = n.pattern();
    if (!pattern)
        fail(ErrorCode::Incommensurable, "pattern has an irrational distance ratio");
    return enveloping_length(*pattern);
}

}  // namespace patcount
