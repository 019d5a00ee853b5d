#pragma once

#include "qsqrt3.hpp"
#include "rat.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace patcount {

/// Finite subset of the line, strictly increasing.
class LinePointSet {
  public:
    LinePointSet() = default;
    /// Sorts the input. Throws Error(DuplicatePoint) on a repeated value.
    explicit LinePointSet(std::vector<Rat> points);

    std::span<Rat const> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    Rat const& operator[](std::size_t i) const { return points_[i]; }
    bool contains(Rat const& x) const;
    /// Index of x, or npos.
    std::size_t index_of(Rat const& x) const;
    /// Image under x -> a*x + b; a must be nonzero.
    LinePointSet transformed(Rat const& a, Rat const& b) const;
    LinePointSet without_index(std::size_t i) const;

    friend bool operator==(LinePointSet const&, LinePointSet const&) = default;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    std::vector<Rat> points_;
};

/// Pattern on the line in canonical form: least point 0, coprime integer
/// entries, strictly increasing, at least two points.
class LinePattern {
  public:
    /// Normalizes any >= 2 distinct rationals. Throws BadArity / DuplicatePoint.
    static LinePattern from_points(std::vector<Rat> points);

    std::span<Rat const> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    /// Canonical form of the mirror image.
    LinePattern reflected() const;
    bool is_reflection_symmetric() const { return reflected() == *this; }
    bool is_arithmetic_progression() const;
    std::string str() const;

    friend bool operator==(LinePattern const&, LinePattern const&) = default;

  private:
    std::vector<Rat> points_;
};

struct NormalizedPattern {
    /// Least point 0. Coprime integers when commensurable; otherwise scaled
    /// so that the first gap is 1.
    std::vector<QSqrt3> points;
    bool commensurable = false;
    /// canonical = (original - offset) * scale
    QSqrt3 offset;
    QSqrt3 scale;

    std::optional<LinePattern> pattern() const;
};

/// Translate the minimum to 0 and rescale. Throws BadArity when fewer than
/// two points are given, DuplicatePoint on repeats.
NormalizedPattern normalize_pattern(std::vector<QSqrt3> points);
NormalizedPattern normalize_pattern(std::span<Rat const> points);

/// Number of k-subsets of V forming an arithmetic progression.
std::uint64_t count_kap(LinePointSet const& v, int k, unsigned jobs = 1);

/// (n - r)(n + r - k + 1) / (2k - 2) with r = n mod (k - 1).
std::int64_t sap_max(std::int64_t n, std::int64_t k);
/// The general bound for any k-pattern on the line; equal to sap_max.
std::int64_t general_upper_bound(std::int64_t n, std::int64_t k);

/// Instances a*P + b (a > 0) inside V; with reflection also a < 0, counted
/// once when P is mirror-symmetric.
std::uint64_t count_instances(LinePointSet const& v, LinePattern const& p,
                              bool allow_reflection = false, unsigned jobs = 1);

/// Cardinality of the smallest arithmetic progression containing P.
std::int64_t enveloping_length(LinePattern const& p);
/// Throws Error(Incommensurable) for incommensurable patterns.
std::int64_t enveloping_length(std::vector<QSqrt3> const& p);

struct JacobBounds {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    std::int64_t envelope_length = 0;
};

JacobBounds jacob_bounds(std::int64_t n, LinePattern const& p);

/// Split of a sorted set into consecutive (possibly empty) blocks.
struct OrderlyDecomposition {
    std::vector<std::size_t> block_sizes;

    std::size_t blocks() const { return block_sizes.size(); }
    std::size_t total() const;
    bool balanced() const;
    /// 1-based block number of the position-th point (0-based position).
    std::size_t block_of(std::size_t position) const;
    /// Positions [first, last) of block j (1-based).
    std::pair<std::size_t, std::size_t> block_range(std::size_t j) const;
};

/// Orderly ell-decomposition of n points. Without explicit sizes it is
/// balanced with the larger blocks first; explicit sizes must sum to n.
OrderlyDecomposition orderly_decomposition(std::size_t n, std::size_t ell,
                                           std::optional<std::vector<std::size_t>> sizes = {});

/// All echelons j (1-based) of the k-subset given by sorted positions.
/// Throws Error(ArityMismatch) unless |positions| == blocks + 1.
std::vector<int> echelons(std::span<std::size_t const> positions, OrderlyDecomposition const& d);

struct FrancisViolation {
    int block = 0;
    Rat first;
    Rat second;
    std::string reason;
};

struct FrancisResult {
    bool optimal = false;
    OrderlyDecomposition decomposition;
    std::vector<FrancisViolation> violations;
};

/// Optimality criterion for k-APs via a balanced orderly (k-1)-decomposition.
FrancisResult francis_check(LinePointSet const& v, int k,
                            std::optional<std::vector<std::size_t>> sizes = {});

enum class OptimalKind {
    AP,
    EO,
    APMinusSecond,
    APMinusPenultimate,
    NotOptimal,
    Unclassified,
};

struct Classification {
    OptimalKind kind = OptimalKind::NotOptimal;
    std::size_t e_size = 0;
    std::size_t o_size = 0;
    bool concentric = false;
    bool reflected = false;
    /// True iff count_kap(V, k) == sap_max(n, k).
    bool optimal_by_count = false;

    std::string label() const;
};

/// Up to similarity: AP, E ∪ O (k = 3), AP minus second/penultimate point
/// (k >= 4, optimal only when k - 1 divides n), or NotOptimal.
Classification classify_optimal(LinePointSet const& v, int k);

LinePointSet gen_ap(std::size_t n, Rat const& start = 0, Rat const& gap = 1);
/// Consecutive evens E (|E| = e_size) and odds O, concentric for odd n and
/// nearly concentric (bary O = bary E + 1) for even n.
LinePointSet gen_eo(std::size_t n, std::size_t e_size);

enum class OliverVariant { Full, DropSecond, DropPenultimate };
LinePointSet gen_oliver(std::size_t n, int k, OliverVariant variant);

/// The 96k-point set M0 ∪ M1 ∪ M3 ∪ M5 built from residues mod 6.
LinePointSet construction_mary(int k);

struct ResidueRow {
    std::array<int, 3> residues{};
    std::uint64_t count = 0;
};

/// Direct copies of {0,1,3} in construction_mary(k), split by the residues
/// of their points mod 6. The 14 tabulated classes come first, in table
/// order; any other class with a nonzero count is appended.
std::vector<ResidueRow> residue_table(int k);

struct MaryClosedForm {
    std::array<int, 3> residues;
    std::int64_t k2;
    std::int64_t k1;
    std::int64_t k0;

    std::int64_t at(std::int64_t k) const { return k2 * k * k + k1 * k + k0; }
};

/// Closed forms for the 14 residue classes.
std::span<MaryClosedForm const> mary_closed_forms();

}  // namespace patcount
