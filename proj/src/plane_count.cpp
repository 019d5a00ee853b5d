#include "patterncount/plane_equilateral.hpp"

#include "detail/parallel.hpp"
#include "detail/scaling.hpp"
#include "patterncount/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

namespace patcount {
namespace {

constexpr std::int64_t kIntLimit = std::int64_t{1} << 40;

// a + b*sqrt(3) with integer a, b.
int int_sign(__int128 a, __int128 b)
{
    int sa = (a > 0) - (a < 0);
    int sb = (b > 0) - (b < 0);
    if (sa == sb || sb == 0)
        return sa;
    if (sa == 0)
        return sb;
    __int128 a2 = a * a;
    __int128 b2 = 3 * b * b;
    if (a2 == b2)
        return 0;
    return a2 > b2 ? sa : sb;
}

struct Quad {
    std::int64_t xa, xb, ya, yb;
    bool operator==(Quad const&) const = default;
};

bool quad_less(Quad const& p, Quad const& q)
{
    int s = int_sign(__int128(q.xa) - p.xa, __int128(q.xb) - p.xb);
    if (s != 0)
        return s > 0;
    return int_sign(__int128(q.ya) - p.ya, __int128(q.yb) - p.yb) > 0;
}

std::uint64_t mix(std::uint64_t h)
{
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    h *= 0xc4ceb9fe1a85ec53ull;
    h ^= h >> 33;
    return h;
}

std::uint64_t quad_hash(Quad const& q)
{
    std::uint64_t h = mix(static_cast<std::uint64_t>(q.xa));
    h = mix(h ^ static_cast<std::uint64_t>(q.xb));
    h = mix(h ^ static_cast<std::uint64_t>(q.ya));
    return mix(h ^ static_cast<std::uint64_t>(q.yb));
}

// Open-addressing membership table; read-only after construction.
class QuadTable {
  public:
    explicit QuadTable(std::vector<Quad> const& pts)
    {
        std::size_t cap = 16;
        while (cap < 2 * pts.size() + 2)
            cap <<= 1;
        mask_ = cap - 1;
        slots_.assign(cap, {});
        used_.assign(cap, 0);
        for (auto const& p : pts) {
            std::size_t h = quad_hash(p) & mask_;
            while (used_[h])
                h = (h + 1) & mask_;
            slots_[h] = p;
            used_[h] = 1;
        }
    }

    bool contains(Quad const& p) const
    {
        std::size_t h = quad_hash(p) & mask_;
        while (used_[h]) {
            if (slots_[h] == p)
                return true;
            h = (h + 1) & mask_;
        }
        return false;
    }

  private:
    std::size_t mask_ = 0;
    std::vector<Quad> slots_;
    std::vector<char> used_;
};

std::optional<std::vector<Quad>> to_quads(PlanePointSet const& v)
{
    std::vector<Rat> coords;
    coords.reserve(4 * v.size());
    for (auto const& p : v.points()) {
        coords.push_back(p.x.rational_part());
        coords.push_back(p.x.sqrt3_part());
        coords.push_back(p.y.rational_part());
        coords.push_back(p.y.sqrt3_part());
    }
    mpz_class denom = detail::common_denominator(coords);
    auto scaled = detail::scale_to_int64(coords, denom, kIntLimit);
    if (!scaled)
        return std::nullopt;
    std::vector<Quad> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = {(*scaled)[4 * i], (*scaled)[4 * i + 1], (*scaled)[4 * i + 2], (*scaled)[4 * i + 3]};
    return out;
}

// Doubled third vertices 2w and 2w' of the pair (u, v).
std::pair<Quad, Quad> doubled_thirds(Quad const& u, Quad const& v)
{
    std::int64_t dxa = u.xa - v.xa, dxb = u.xb - v.xb;
    std::int64_t dya = u.ya - v.ya, dyb = u.yb - v.yb;
    std::int64_t sxa = u.xa + v.xa, sxb = u.xb + v.xb;
    std::int64_t sya = u.ya + v.ya, syb = u.yb + v.yb;
    Quad w{sxa - 3 * dyb, sxb - dya, sya + 3 * dxb, syb + dxa};
    Quad wp{sxa + 3 * dyb, sxb + dya, sya - 3 * dxb, syb - dxa};
    return {w, wp};
}

bool halve(Quad& q)
{
    if ((q.xa | q.xb | q.ya | q.yb) & 1)
        return false;
    q.xa /= 2;
    q.xb /= 2;
    q.ya /= 2;
    q.yb /= 2;
    return true;
}

std::uint64_t int_pairwise(std::vector<Quad> const& pts, unsigned jobs)
{
    QuadTable table(pts);
    std::uint64_t total = detail::parallel_sum(pts.size(), jobs, [&](std::size_t i) {
        std::uint64_t c = 0;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            auto [w, wp] = doubled_thirds(pts[i], pts[j]);
            if (halve(w) && table.contains(w))
                ++c;
            if (halve(wp) && table.contains(wp))
                ++c;
        }
        return c;
    });
    if (total % 3 != 0)
        fail(ErrorCode::MethodMismatch, "pairwise third-vertex total is not divisible by 3");
    return total / 3;
}

std::uint64_t int_reconstruct(std::vector<Quad> const& pts, unsigned jobs)
{
    QuadTable table(pts);
    return detail::parallel_sum(pts.size(), jobs, [&](std::size_t i) {
        std::uint64_t c = 0;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Quad const& v = pts[j];
            Quad v2{2 * v.xa, 2 * v.xb, 2 * v.ya, 2 * v.yb};
            auto [w, wp] = doubled_thirds(pts[i], v);
            Quad cand;
            if (quad_less(v2, w))
                cand = w;
            else if (quad_less(v2, wp))
                cand = wp;
            else
                continue;
            if (halve(cand) && table.contains(cand))
                ++c;
        }
        return c;
    });
}

std::uint64_t exact_pairwise(PlanePointSet const& v, unsigned jobs)
{
    std::unordered_set<Point2> index(v.points().begin(), v.points().end());
    std::uint64_t total = detail::parallel_sum(v.size(), jobs, [&](std::size_t i) {
        std::uint64_t c = 0;
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            auto [w, wp] = third_vertices(v[i], v[j]);
            c += index.count(w) + index.count(wp);
        }
        return c;
    });
    if (total % 3 != 0)
        fail(ErrorCode::MethodMismatch, "pairwise third-vertex total is not divisible by 3");
    return total / 3;
}

std::uint64_t exact_reconstruct(PlanePointSet const& v, unsigned jobs)
{
    std::unordered_set<Point2> index(v.points().begin(), v.points().end());
    return detail::parallel_sum(v.size(), jobs, [&](std::size_t i) {
        std::uint64_t c = 0;
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            auto w = reconstruct_first(v[i], v[j]);
            if (w && index.count(*w))
                ++c;
        }
        return c;
    });
}

std::int64_t choose2(std::int64_t m)
{
    return m * (m - 1) / 2;
}

}  // namespace

PlanePointSet::PlanePointSet(std::vector<Point2> points) : points_(std::move(points))
{
    std::sort(points_.begin(), points_.end());
    auto dup = std::adjacent_find(points_.begin(), points_.end());
    if (dup != points_.end())
        fail(ErrorCode::DuplicatePoint, "point " + dup->str() + " appears more than once");
}

bool PlanePointSet::contains(Point2 const& p) const
{
    return std::binary_search(points_.begin(), points_.end(), p);
}

PlanePointSet PlanePointSet::transformed(Point2 const& scale, Point2 const& shift) const
{
    if (scale.is_zero())
        fail(ErrorCode::InvalidArgument, "zero scale factor");
    std::vector<Point2> out;
    out.reserve(points_.size());
    for (auto const& p : points_)
        out.push_back(scale * p + shift);
    return PlanePointSet(std::move(out));
}

bool admits_reconstruction(Point2 const& d)
{
    if (d.is_zero())
        fail(ErrorCode::DegeneratePair, "zero difference has no argument");
    Point2 e = lex_positive(d) ? d : -d;
    Point2 z6 = Point2::zeta6();
    Point2 z6c = z6.conj();
    bool first = lex_positive(z6c * e) && lex_positive(-(z6 * e));
    bool second = lex_positive(z6 * e) && lex_positive(-(z6c * e));
    return first || second;
}

std::optional<Point2> reconstruct_first(Point2 const& u, Point2 const& v)
{
    if (!(u < v))
        fail(ErrorCode::NotOrdered, u.str() + " does not precede " + v.str());
    Point2 d = v - u;
    Point2 z6 = Point2::zeta6();
    Point2 z6c = z6.conj();
    // w - v = -ζ6 d and w - u = conj(ζ6) d; w' swaps the roles.
    if (lex_positive(z6c * d) && lex_positive(-(z6 * d)))
        return z6 * u + z6c * v;
    if (lex_positive(z6 * d) && lex_positive(-(z6c * d)))
        return z6c * u + z6 * v;
    return std::nullopt;
}

std::optional<Point2> reconstruct_last(Point2 const& u, Point2 const& v)
{
    if (!(u < v))
        fail(ErrorCode::NotOrdered, u.str() + " does not precede " + v.str());
    Point2 d = v - u;
    Point2 z6 = Point2::zeta6();
    Point2 z6c = z6.conj();
    if (lex_positive(-(z6c * d)) && lex_positive(z6 * d))
        return z6 * u + z6c * v;
    if (lex_positive(-(z6 * d)) && lex_positive(z6c * d))
        return z6c * u + z6 * v;
    return std::nullopt;
}

std::uint64_t count_equilateral_pairwise(PlanePointSet const& v, CountOptions const& opt)
{
    if (opt.allow_integer_kernel) {
        if (auto q = to_quads(v))
            return int_pairwise(*q, opt.jobs);
    }
    return exact_pairwise(v, opt.jobs);
}

std::uint64_t count_equilateral_reconstruct(PlanePointSet const& v, CountOptions const& opt)
{
    if (opt.allow_integer_kernel) {
        if (auto q = to_quads(v))
            return int_reconstruct(*q, opt.jobs);
    }
    return exact_reconstruct(v, opt.jobs);
}

std::uint64_t count_equilateral(PlanePointSet const& v, CountOptions const& opt)
{
    std::uint64_t a = count_equilateral_pairwise(v, opt);
    std::uint64_t b = count_equilateral_reconstruct(v, opt);
    if (a != b)
        fail(ErrorCode::MethodMismatch, "pairwise count " + std::to_string(a) +
                                            " differs from reconstruction count " + std::to_string(b));
    return a;
}

std::int64_t katherine_bound(std::int64_t n)
{
    if (n < 0)
        fail(ErrorCode::InvalidArgument, "negative n");
    if (n == 0)
        return 0;
    return (4 * n - 1) * (n - 1) / 18;
}

std::int64_t abrego_bound(std::int64_t n)
{
    if (n < 0)
        fail(ErrorCode::InvalidArgument, "negative n");
    if (n == 0)
        return 0;
    return (n - 1) * (n - 1) / 4;
}

KatherineAlgebra katherine_algebra(std::int64_t n)
{
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "katherine algebra needs n >= 1");
    KatherineAlgebra k;
    std::int64_t m = n - 1;
    k.q = m / 6;
    k.r = (m % 6) / 2;
    k.s = m % 2;
    k.min_intracompartmental =
        (2 * k.r + k.s) * choose2(k.q + 1) + (6 - 2 * k.r - k.s) * choose2(k.q);
    k.same_side_pairs = choose2((n + 1) / 2) + choose2(n / 2);
    k.bound = Rat(mpq_class(8 * k.q * (3 * k.q + 2 * k.r + k.s) + 3 * k.q + 3 * k.r * (k.r + k.s), 3));
    static long const kOffsetNum[6] = {-6, 1, -6, -3, -8, -3};
    Rat nn(n);
    k.piecewise = Rat(mpq_class(2, 9)) * nn * nn - Rat(mpq_class(5, 18)) * nn +
                  Rat(mpq_class(kOffsetNum[n % 6], 18));
    return k;
}

Point2 lattice_point(long a, long b)
{
    Rat half(mpq_class(1, 2));
    return {QSqrt3(Rat(a) + half * Rat(b)), QSqrt3(Rat(0), half * Rat(b))};
}

PlanePointSet gen_triangular_disk(std::size_t n)
{
    if (n == 0)
        fail(ErrorCode::InfeasibleParameters, "triangular disk needs n >= 1");
    struct Cand {
        long a, b, norm;
    };
    std::vector<Cand> cands;
    long bound = 1;
    for (;;) {
        cands.clear();
        long span = 2;
        while (span * span < 4 * bound / 3 + 1)
            ++span;
        ++span;
        for (long a = -span; a <= span; ++a) {
            for (long b = -span; b <= span; ++b) {
                long nm = a * a + a * b + b * b;
                if (nm <= bound)
                    cands.push_back({a, b, nm});
            }
        }
        if (cands.size() >= n)
            break;
        bound *= 2;
    }
    // Scaled coordinates (2a + b, b) share the angle of a + bζ6 up to a
    // vertical stretch, which preserves angular order.
    auto half = [](Cand const& c) {
        long X = 2 * c.a + c.b, Y = c.b;
        return (Y > 0 || (Y == 0 && X > 0)) ? 0 : 1;
    };
    std::sort(cands.begin(), cands.end(), [&](Cand const& p, Cand const& q) {
        if (p.norm != q.norm)
            return p.norm < q.norm;
        int hp = half(p), hq = half(q);
        if (hp != hq)
            return hp < hq;
        long cross = (2 * p.a + p.b) * q.b - (2 * q.a + q.b) * p.b;
        if (cross != 0)
            return cross > 0;
        return lattice_point(p.a, p.b) < lattice_point(q.a, q.b);
    });
    std::vector<Point2> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back(lattice_point(cands[i].a, cands[i].b));
    return PlanePointSet(std::move(pts));
}

}  // namespace patcount
