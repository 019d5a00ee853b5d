#pragma once

#include "line_patterns.hpp"
#include "plane_equilateral.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace patcount {

enum class SearchMode { LineMaxAP, LineMaxPattern, LineEnumerateOptimal, PlaneLatticeMax };

struct SearchSpec {
    SearchMode mode = SearchMode::LineMaxAP;
    std::size_t n = 0;
    int k = 3;
    /// Required for LineMaxPattern; LineEnumerateOptimal uses it when set.
    std::optional<LinePattern> pattern;
    bool allow_reflection = false;
    /// Line modes search subsets of {0, ..., diameter}.
    std::int64_t diameter = 0;
    /// Plane mode pools lattice points a + bζ6 with |a + bζ6| <= radius.
    std::int64_t radius = 0;
    unsigned jobs = 1;
    /// Candidate sets to examine before giving up exhaustiveness.
    std::uint64_t budget = 200'000'000;
};

struct SearchResult {
    std::uint64_t maximum = 0;
    std::vector<LinePointSet> line_witnesses;
    std::vector<PlanePointSet> plane_witnesses;
    std::uint64_t states_explored = 0;
    bool exhaustive = false;
};

/// Naive count over all |p|-subsets. Throws Error(TooLarge) when the number
/// of subsets exceeds `budget`.
std::uint64_t brute_count(LinePointSet const& v, LinePattern const& p, bool allow_reflection = false,
                          std::uint64_t budget = 50'000'000);
/// Naive count of equilateral triples.
std::uint64_t brute_count_equilateral(PlanePointSet const& v, std::uint64_t budget = 50'000'000);

/// Maximum count over canonical n-subsets of {0..D}: least point 0, gcd 1,
/// lexicographically no larger than the mirror image. Witnesses are all
/// canonical sets attaining the maximum, sorted.
SearchResult line_max_search(SearchSpec const& spec);
/// All canonical sets attaining the maximum within the diameter.
SearchResult enumerate_optimal(SearchSpec const& spec);
/// Best equilateral count over n-subsets of the lattice pool. Exhaustive when
/// the pool is small enough for the budget, otherwise greedy disk plus local
/// swaps.
SearchResult plane_lattice_max(SearchSpec const& spec);

/// Line set in canonical search form (least point 0, gcd 1, no larger than
/// its mirror image). Requires integer points.
LinePointSet canonical_line_set(LinePointSet const& v);

}  // namespace patcount
