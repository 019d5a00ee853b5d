#include "patterncount/plane_equilateral.hpp"

#include "patterncount/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace patcount {
namespace {

using ld = long double;
constexpr ld kPi = std::numbers::pi_v<ld>;
// Critical directions closer than this are treated as one cluster.
constexpr ld kMergeGap = 1e-12L;
// Cell midpoints stay at least kMergeGap / 2 from every critical direction,
// so internal order decisions only need to beat rounding.
constexpr ld kCellTolerance = 1e-14L;

struct P2 {
    ld x = 0, y = 0;
};

P2 approx(Point2 const& p)
{
    return {p.x.to_long_double(), p.y.to_long_double()};
}

ld cross(P2 a, P2 b)
{
    return a.x * b.y - a.y * b.x;
}

QSqrt3 cross(Point2 const& a, Point2 const& b)
{
    return a.x * b.y - a.y * b.x;
}

class Approximations {
  public:
    explicit Approximations(PlanePointSet const& v) : v_(v)
    {
        pts_.reserve(v.size());
        for (auto const& p : v.points()) {
            pts_.push_back(approx(p));
            scale_ = std::max({scale_, std::fabs(pts_.back().x), std::fabs(pts_.back().y)});
        }
    }

    P2 const& operator[](std::size_t i) const { return pts_[i]; }
    ld scale() const { return scale_; }

    P2 diff(std::size_t i, std::size_t j) const
    {
        P2 d{pts_[j].x - pts_[i].x, pts_[j].y - pts_[i].y};
        ld mag = std::max(std::fabs(d.x), std::fabs(d.y));
        ld big = std::max({std::fabs(pts_[i].x), std::fabs(pts_[i].y), std::fabs(pts_[j].x),
                           std::fabs(pts_[j].y)});
        if (mag < 1e-4L * big)
            return approx(v_[j] - v_[i]);
        return d;
    }

  private:
    PlanePointSet const& v_;
    std::vector<P2> pts_;
    ld scale_ = 1;
};

// Indices of v sorted under ≺_θ; throws on comparisons within tolerance.
std::vector<std::size_t> approx_order(Approximations const& ap, std::size_t n, ld theta, ld tol)
{
    ld c = std::cos(theta), s = std::sin(theta);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (a == b)
            return false;
        P2 d = ap.diff(a, b);
        ld re = s * d.x - c * d.y;
        if (std::fabs(re) <= tol * std::hypot(d.x, d.y))
            fail(ErrorCode::AmbiguousComparison,
                 "two points are nearly aligned with direction angle " + std::to_string(double(theta)));
        return re > 0;
    });
    return idx;
}

std::vector<std::size_t> exact_order(PlanePointSet const& v, Point2 const& zeta)
{
    Point2 rho = Point2::i() * zeta.conj();
    std::vector<Point2> keys;
    keys.reserve(v.size());
    for (auto const& p : v.points())
        keys.push_back(rho * p);
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    return idx;
}

std::vector<std::size_t> order_for(PlanePointSet const& v, Direction const& zeta, ld tol)
{
    if (zeta.is_exact())
        return exact_order(v, *zeta.exact_value());
    Approximations ap(v);
    return approx_order(ap, v.size(), zeta.angle(), tol);
}

Point2 median_of(PlanePointSet const& v, std::vector<std::size_t> const& order)
{
    std::size_t n = order.size();
    if (n % 2 == 1)
        return v[order[(n - 1) / 2]];
    return (v[order[n / 2 - 1]] + v[order[n / 2]]) / QSqrt3(2);
}

HalvingCertificate certificate_from_order(PlanePointSet const& v, Direction const& dir,
                                          std::vector<std::size_t> const& order)
{
    HalvingCertificate cert;
    cert.direction = dir;
    cert.median = median_of(v, order);
    std::size_t n = v.size();
    std::size_t left = (n + 1) / 2;
    cert.formally_left.assign(n, false);
    for (std::size_t r = 0; r < left; ++r)
        cert.formally_left[order[r]] = true;
    cert.left_count = left;
    cert.right_count = n - left;
    return cert;
}

// Approximate median of the cell order at angle theta (fast path).
P2 approx_median(Approximations const& ap, std::size_t n, ld theta)
{
    auto order = approx_order(ap, n, theta, kCellTolerance);
    if (n % 2 == 1)
        return ap[order[(n - 1) / 2]];
    P2 a = ap[order[n / 2 - 1]], b = ap[order[n / 2]];
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

using Medians = std::array<P2, 3>;

Medians medians_at(Approximations const& ap, std::size_t n, ld theta)
{
    Medians m;
    for (int j = 0; j < 3; ++j)
        m[j] = approx_median(ap, n, theta + j * 2 * kPi / 3);
    return m;
}

P2 unit(ld theta)
{
    return {std::cos(theta), std::sin(theta)};
}

P2 intersect(Medians const& m, ld theta)
{
    P2 d1 = unit(theta + 2 * kPi / 3), d2 = unit(theta + 4 * kPi / 3);
    P2 w{m[2].x - m[1].x, m[2].y - m[1].y};
    ld t = cross(d2, w) / cross(d2, d1);
    return {m[1].x + t * d1.x, m[1].y + t * d1.y};
}

// Signed side of M ∩ N relative to L, positive when to the left.
ld side_value(Medians const& m, ld theta)
{
    P2 x = intersect(m, theta);
    return cross(unit(theta), P2{x.x - m[0].x, x.y - m[0].y});
}

int sgn(ld v)
{
    return (v > 0) - (v < 0);
}

// Root of f on [a, b] given sign(f(a)) != sign(f(b)).
template <class F>
ld bisect(F const& f, ld a, ld b)
{
    int sa = sgn(f(a));
    for (int it = 0; it < 200 && b - a > 1e-18L * std::max<ld>(1, std::fabs(a)); ++it) {
        ld mid = (a + b) / 2;
        if (mid <= a || mid >= b)
            break;
        int sm = sgn(f(mid));
        if (sm == 0)
            return mid;
        if (sm == sa)
            a = mid;
        else
            b = mid;
    }
    return std::fabs(f(a)) <= std::fabs(f(b)) ? a : b;
}

struct Cluster {
    ld lo, hi;
};

std::vector<Cluster> critical_clusters(Approximations const& ap, std::size_t n)
{
    std::vector<ld> angles;
    angles.reserve(3 * n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            P2 d = ap.diff(i, j);
            ld phi = std::atan2(d.y, d.x);
            for (int m = 0; m < 3; ++m) {
                ld a = std::fmod(phi - m * 2 * kPi / 3, kPi);
                if (a < 0)
                    a += kPi;
                if (a >= kPi)
                    a -= kPi;
                angles.push_back(a);
            }
        }
    }
    std::sort(angles.begin(), angles.end());
    std::vector<Cluster> out;
    for (ld a : angles) {
        if (!out.empty() && a - out.back().hi <= kMergeGap)
            out.back().hi = a;
        else
            out.push_back({a, a});
    }
    // The angle space is a circle of length π.
    if (out.size() > 1 && out.front().lo + kPi - out.back().hi <= kMergeGap) {
        out.front().lo = out.back().lo - kPi;
        out.pop_back();
    }
    return out;
}

ConcurrentHalving finish(PlanePointSet const& v, Direction const& dir, Direction const& witness,
                         bool exact, double residual, std::size_t critical)
{
    ConcurrentHalving h;
    h.direction = dir;
    h.order_witness = witness;
    h.exact = exact;
    h.residual = residual;
    h.critical_directions = critical;
    for (int m = 0; m < 3; ++m) {
        Direction wm = witness.rotated_by_omega(m);
        auto order = order_for(v, wm, kCellTolerance);
        h.lines[m] = certificate_from_order(v, dir.rotated_by_omega(m), order);
    }
    Medians med;
    for (int m = 0; m < 3; ++m)
        med[m] = approx(h.lines[m].median);
    P2 x = intersect(med, dir.angle());
    h.intersection_x = static_cast<double>(x.x);
    h.intersection_y = static_cast<double>(x.y);
    return h;
}

std::optional<ConcurrentHalving> try_exact(PlanePointSet const& v)
{
    for (int j = 0; j < 6; ++j) {
        Direction zeta = Direction::zeta12(j);
        std::array<Point2, 3> c;
        std::array<Point2, 3> dirs;
        for (int m = 0; m < 3; ++m) {
            Direction zm = zeta.rotated_by_omega(m);
            dirs[m] = *zm.exact_value();
            c[m] = median_of(v, exact_order(v, dirs[m]));
        }
        QSqrt3 t = cross(dirs[2], c[2] - c[1]) / cross(dirs[2], dirs[1]);
        Point2 x = c[1] + t * dirs[1];
        if (cross(dirs[0], x - c[0]).is_zero())
            return finish(v, zeta, zeta, true, 0.0, 0);
    }
    return std::nullopt;
}

}  // namespace

Point2 zeta_median(PlanePointSet const& v, Direction const& zeta)
{
    if (v.empty())
        fail(ErrorCode::InvalidArgument, "median of an empty set");
    return median_of(v, order_for(v, zeta, Direction::kTieTolerance));
}

HalvingCertificate halving_line(PlanePointSet const& v, Direction const& zeta)
{
    if (v.empty())
        fail(ErrorCode::InvalidArgument, "halving line of an empty set");
    return certificate_from_order(v, zeta, order_for(v, zeta, Direction::kTieTolerance));
}

ConcurrentHalving find_concurrent_direction(PlanePointSet const& v, double tolerance)
{
    std::size_t n = v.size();
    if (n == 0)
        fail(ErrorCode::InvalidArgument, "halving lines of an empty set");
    if (auto h = try_exact(v))
        return *h;

    Approximations ap(v);
    auto clusters = critical_clusters(ap, n);
    std::size_t k = clusters.size();
    if (k == 0)
        fail(ErrorCode::NoSignChange, "no critical directions for a set of " + std::to_string(n) + " points");
    // Cell i lies between cluster i and cluster i + 1; cell k - 1 wraps.
    auto cell_mid = [&](std::size_t i) {
        ld a = clusters[i].hi;
        ld b = i + 1 < k ? clusters[i + 1].lo : clusters[0].lo + kPi;
        return (a + b) / 2;
    };
    auto residual_scale = std::max<ld>(1, ap.scale());

    struct Cell {
        ld mid;
        Medians med;
        ld f;
    };
    auto eval = [&](std::size_t i) {
        Cell c;
        c.mid = cell_mid(i);
        c.med = medians_at(ap, n, c.mid);
        c.f = side_value(c.med, c.mid);
        return c;
    };
    auto report = [&](ld theta, ld witness, Medians const& med) {
        ld r = std::fabs(side_value(med, theta)) / residual_scale;
        if (!(r <= tolerance))
            fail(ErrorCode::NoSignChange, "concurrency residual " + std::to_string(double(r)) +
                                              " exceeds tolerance at angle " +
                                              std::to_string(double(theta)) + " after " +
                                              std::to_string(k) + " critical directions");
        return finish(v, Direction::from_angle(double(theta)), Direction::from_angle(double(witness)),
                      false, double(r), k);
    };

    Cell first = eval(0);
    if (first.f == 0)
        return report(first.mid, first.mid, first.med);
    // f(θ + π) = -f(θ), so the value at index k is -f(cell 0).
    std::size_t lo = 0, hi = k;
    Cell clo = first;
    Cell chi{first.mid + kPi, first.med, -first.f};
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        Cell cm = eval(mid);
        if (cm.f == 0)
            return report(cm.mid, cm.mid, cm.med);
        if (sgn(cm.f) == sgn(clo.f)) {
            lo = mid;
            clo = cm;
        } else {
            hi = mid;
            chi = cm;
        }
    }
    // The sign change happens across cluster hi (mod k).
    Cluster cl = clusters[hi % k];
    ld shift = hi >= k ? kPi : 0;
    ld c_lo = cl.lo + shift, c_hi = cl.hi + shift;
    auto f_lo = [&](ld t) { return side_value(clo.med, t); };
    auto f_hi = [&](ld t) { return side_value(chi.med, t); };
    if (sgn(f_lo(c_hi)) != sgn(clo.f))
        return report(bisect(f_lo, clo.mid, c_hi), clo.mid, clo.med);
    if (sgn(f_hi(c_lo)) != sgn(chi.f))
        return report(bisect(f_hi, c_lo, chi.mid), chi.mid, chi.med);
    ld t = (c_lo + c_hi) / 2;
    if (std::fabs(f_lo(t)) <= std::fabs(f_hi(t)))
        return report(t, clo.mid, clo.med);
    return report(t, chi.mid, chi.med);
}

CompartmentProfile compartments(PlanePointSet const& v, ConcurrentHalving const& h)
{
    CompartmentProfile p;
    p.compartment_of.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        bool l = h.lines[0].formally_left[i];
        bool m = h.lines[1].formally_left[i];
        bool nn = h.lines[2].formally_left[i];
        int label;
        if (l == m && m == nn)
            label = 7;
        else if (l)
            label = !m && nn ? 1 : (!m ? 2 : 3);
        else
            label = m && !nn ? 4 : (m ? 5 : 6);
        p.compartment_of[i] = label;
        ++p.sizes[label - 1];
    }
    return p;
}

int choose_rotation(PlanePointSet const& v, ConcurrentHalving const& h, CompartmentProfile& profile)
{
    std::array<std::uint64_t, 3> outside{};
    std::uint64_t pairs = 0;
    Direction const& w = h.order_witness;
    std::array<Point2, 3> rho;
    if (w.is_exact()) {
        for (int m = 0; m < 3; ++m)
            rho[m] = Point2::i() * w.rotated_by_omega(m).exact_value()->conj();
    }
    Approximations ap(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
        int ci = profile.compartment_of[i];
        if (ci == 7)
            continue;
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (profile.compartment_of[j] != ci)
                continue;
            ++pairs;
            int hits = 0;
            if (w.is_exact()) {
                Point2 d = v[j] - v[i];
                for (int m = 0; m < 3; ++m) {
                    if (!admits_reconstruction(rho[m] * d)) {
                        ++outside[m];
                        ++hits;
                    }
                }
            } else {
                P2 d = ap.diff(i, j);
                ld phi = std::atan2(d.y, d.x);
                for (int m = 0; m < 3; ++m) {
                    // Argument of i·conj(ζ_m)·d, reduced into (-π/6, 5π/6].
                    ld a = kPi / 2 + phi - (ld(w.angle()) + m * 2 * kPi / 3);
                    a = std::fmod(a + kPi / 6, kPi);
                    if (a <= 0)
                        a += kPi;
                    a -= kPi / 6;
                    if (std::fabs(a - kPi / 6) < 1e-13L || std::fabs(a + kPi / 6) < 1e-13L ||
                        std::fabs(a - 5 * kPi / 6) < 1e-13L)
                        fail(ErrorCode::AmbiguousComparison,
                             "pair difference lies on a reconstruction boundary");
                    if (a <= kPi / 6) {
                        ++outside[m];
                        ++hits;
                    }
                }
            }
            if (hits != 1)
                fail(ErrorCode::MethodMismatch, "intracompartmental pair outside A for " +
                                                    std::to_string(hits) + " rotations");
        }
    }
    int best = 0;
    for (int m = 1; m < 3; ++m) {
        if (outside[m] > outside[best])
            best = m;
    }
    profile.outside_a_by_rotation = outside;
    profile.intracompartmental_pairs = pairs;
    profile.rotation_chosen = best;
    profile.intracompartmental_outside_a = outside[best];
    return best;
}

TerenceReport terence_analysis(PlanePointSet const& v, double tolerance)
{
    TerenceReport t;
    t.halving = find_concurrent_direction(v, tolerance);
    t.profile = compartments(v, t.halving);
    choose_rotation(v, t.halving, t.profile);
    std::int64_t n = static_cast<std::int64_t>(v.size());
    auto choose2 = [](std::int64_t m) { return m * (m - 1) / 2; };
    std::int64_t same = choose2((n + 1) / 2) + choose2(n / 2);
    std::int64_t sum = 0;
    for (int j = 0; j < 6; ++j)
        sum += choose2(static_cast<std::int64_t>(t.profile.sizes[j]));
    t.exact_bound = Rat(same) - Rat(mpq_class(sum, 3));
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.exact_bound.num().get_mpz_t(), t.exact_bound.den().get_mpz_t());
    t.bound = fl.get_si();
    for (int m = 0; m < 3; ++m)
        t.refined_by_rotation[m] = same - static_cast<std::int64_t>(t.profile.outside_a_by_rotation[m]);
    t.refined_min = *std::min_element(t.refined_by_rotation.begin(), t.refined_by_rotation.end());
    return t;
}

std::int64_t terence_bound(PlanePointSet const& v)
{
    return terence_analysis(v).bound;
}

}  // namespace patcount
