#pragma once

#include "point2.hpp"
#include "rat.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace patcount {

/// Finite set of distinct plane points, kept sorted under lex_cmp.
class PlanePointSet {
  public:
    PlanePointSet() = default;
    /// Throws Error(DuplicatePoint) on repeated points.
    explicit PlanePointSet(std::vector<Point2> points);

    std::span<Point2 const> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    Point2 const& operator[](std::size_t i) const { return points_[i]; }
    bool contains(Point2 const& p) const;
    /// Image under z -> scale * z + shift; scale must be nonzero.
    PlanePointSet transformed(Point2 const& scale, Point2 const& shift) const;

    friend bool operator==(PlanePointSet const&, PlanePointSet const&) = default;

  private:
    std::vector<Point2> points_;
};

/// Arg(d) ∈ (-5π/6, -π/6] ∪ (π/6, 5π/6], decided exactly.
/// Throws Error(DegeneratePair) for d == 0.
bool admits_reconstruction(Point2 const& d);

/// The w making u ≺ v ≺ w equilateral, if any. Throws Error(NotOrdered)
/// unless u ≺ v.
std::optional<Point2> reconstruct_first(Point2 const& u, Point2 const& v);
/// The w making w ≺ u ≺ v equilateral, if any. Throws Error(NotOrdered)
/// unless u ≺ v.
std::optional<Point2> reconstruct_last(Point2 const& u, Point2 const& v);

struct CountOptions {
    unsigned jobs = 1;
    /// Use the scaled 64-bit integer kernel when coordinates allow it.
    bool allow_integer_kernel = true;
};

/// Pairs (u, v) test both third vertices; the total is divided by three.
std::uint64_t count_equilateral_pairwise(PlanePointSet const& v, CountOptions const& opt = {});
/// Pairs u ≺ v test reconstruct_first only; each triangle is seen once.
std::uint64_t count_equilateral_reconstruct(PlanePointSet const& v, CountOptions const& opt = {});
/// Both methods; throws Error(MethodMismatch) if they disagree.
std::uint64_t count_equilateral(PlanePointSet const& v, CountOptions const& opt = {});

/// floor((4n - 1)(n - 1) / 18)
std::int64_t katherine_bound(std::int64_t n);
/// floor((n - 1)^2 / 4)
std::int64_t abrego_bound(std::int64_t n);

/// Split n - 1 = 6q + 2r + s with r in {0,1,2}, s in {0,1}, and the
/// algebra that turns the compartment bound into the closed form.
struct KatherineAlgebra {
    std::int64_t q = 0;
    std::int64_t r = 0;
    std::int64_t s = 0;
    /// Lower bound on the sum of C(|Vj|, 2) over six compartments.
    std::int64_t min_intracompartmental = 0;
    /// C(ceil(n/2), 2) + C(floor(n/2), 2)
    std::int64_t same_side_pairs = 0;
    /// (8q(3q + 2r + s) + 3q + 3r(r + s)) / 3
    Rat bound;
    /// 2/9 n^2 - 5/18 n + c(n mod 6)
    Rat piecewise;
};

/// Requires n >= 1.
KatherineAlgebra katherine_algebra(std::int64_t n);

/// v_{(n+1)/2} for odd n, (v_{n/2} + v_{n/2+1}) / 2 for even n, under ≺_ζ.
Point2 zeta_median(PlanePointSet const& v, Direction const& zeta);

struct HalvingCertificate {
    Direction direction = Direction::i();
    Point2 median;
    std::size_t left_count = 0;
    std::size_t right_count = 0;
    /// formally_left[i] refers to v[i].
    std::vector<bool> formally_left;
};

/// Points z ⪯_ζ median are formally left.
HalvingCertificate halving_line(PlanePointSet const& v, Direction const& zeta);

struct ConcurrentHalving {
    /// Direction of L; M and N use omega * zeta and omega^2 * zeta.
    Direction direction = Direction::i();
    /// Direction whose orders define the formal sides. Equal to `direction`
    /// when exact, otherwise a point of the open angular cell at the root.
    Direction order_witness = Direction::i();
    bool exact = false;
    double intersection_x = 0;
    double intersection_y = 0;
    /// |signed distance of M ∩ N from L| / max(1, max |coordinate|)
    double residual = 0;
    std::size_t critical_directions = 0;
    std::array<HalvingCertificate, 3> lines;
};

/// Direction whose halving lines at angles 0, 2π/3, 4π/3 are concurrent.
/// Throws Error(NoSignChange) if no root with residual <= tolerance is found.
ConcurrentHalving find_concurrent_direction(PlanePointSet const& v, double tolerance = 1e-9);

struct CompartmentProfile {
    std::array<std::size_t, 7> sizes{};
    /// 1..7 for each point of v.
    std::vector<int> compartment_of;
    /// Index m of the rotation by 2πm/3 that puts line m on the y-axis.
    int rotation_chosen = 0;
    std::uint64_t intracompartmental_pairs = 0;
    std::uint64_t intracompartmental_outside_a = 0;
    std::array<std::uint64_t, 3> outside_a_by_rotation{};
};

CompartmentProfile compartments(PlanePointSet const& v, ConcurrentHalving const& h);

/// Fills the rotation fields of `profile` and returns the chosen index:
/// the rotation with the most intracompartmental pairs outside A.
int choose_rotation(PlanePointSet const& v, ConcurrentHalving const& h, CompartmentProfile& profile);

struct TerenceReport {
    ConcurrentHalving halving;
    CompartmentProfile profile;
    /// C(ceil(n/2),2) + C(floor(n/2),2) - (1/3) Σ C(|Vj|,2)
    Rat exact_bound;
    std::int64_t bound = 0;
    /// Same-side pairs minus the actual unproductive pairs, per rotation.
    std::array<std::int64_t, 3> refined_by_rotation{};
    std::int64_t refined_min = 0;
};

TerenceReport terence_analysis(PlanePointSet const& v, double tolerance = 1e-9);
std::int64_t terence_bound(PlanePointSet const& v);

/// The n points a + bζ6 of the triangular lattice nearest the origin; ties
/// by angle in [0, 2π), then lexicographically.
PlanePointSet gen_triangular_disk(std::size_t n);

/// Triangular lattice point a + bζ6 as an exact plane point.
Point2 lattice_point(long a, long b);

}  // namespace patcount
