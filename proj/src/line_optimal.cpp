#include "patterncount/error.hpp"
#include "patterncount/line_patterns.hpp"

#include <algorithm>
#include <numeric>

namespace patcount {

std::size_t OrderlyDecomposition::total() const
{
    return std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
}

bool OrderlyDecomposition::balanced() const
{
    if (block_sizes.empty())
        return false;
    auto [lo, hi] = std::minmax_element(block_sizes.begin(), block_sizes.end());
    return *hi - *lo <= 1;
}

std::size_t OrderlyDecomposition::block_of(std::size_t position) const
{
    std::size_t end = 0;
    for (std::size_t j = 0; j < block_sizes.size(); ++j) {
        end += block_sizes[j];
        if (position < end)
            return j + 1;
    }
    fail(ErrorCode::InvalidArgument, "position " + std::to_string(position) + " beyond decomposition");
}

std::pair<std::size_t, std::size_t> OrderlyDecomposition::block_range(std::size_t j) const
{
    if (j < 1 || j > block_sizes.size())
        fail(ErrorCode::InvalidArgument, "no block " + std::to_string(j));
    std::size_t first = 0;
    for (std::size_t t = 0; t + 1 < j; ++t)
        first += block_sizes[t];
    return {first, first + block_sizes[j - 1]};
}

OrderlyDecomposition orderly_decomposition(std::size_t n, std::size_t ell,
                                           std::optional<std::vector<std::size_t>> sizes)
{
    if (ell < 1)
        fail(ErrorCode::InvalidArgument, "a decomposition needs at least one block");
    OrderlyDecomposition d;
    if (sizes) {
        d.block_sizes = std::move(*sizes);
        if (d.block_sizes.size() != ell || d.total() != n)
            fail(ErrorCode::InvalidArgument, "block sizes are not a split of " +
                                                 std::to_string(n) + " into " +
                                                 std::to_string(ell) + " blocks");
        return d;
    }
    std::size_t q = n / ell;
    std::size_t r = n % ell;
    d.block_sizes.assign(ell, q);
    for (std::size_t j = 0; j < r; ++j)
        ++d.block_sizes[j];
    return d;
}

std::vector<int> echelons(std::span<std::size_t const> positions, OrderlyDecomposition const& d)
{
    if (positions.size() != d.blocks() + 1)
        fail(ErrorCode::ArityMismatch, "subset of size " + std::to_string(positions.size()) +
                                           " against " + std::to_string(d.blocks()) + " blocks");
    std::vector<int> out;
    for (std::size_t j = 1; j <= d.blocks(); ++j) {
        if (d.block_of(positions[j - 1]) == j && d.block_of(positions[j]) == j)
            out.push_back(static_cast<int>(j));
    }
    return out;
}

FrancisResult francis_check(LinePointSet const& v, int k, std::optional<std::vector<std::size_t>> sizes)
{
    if (k < 2)
        fail(ErrorCode::BadArity, "k must be at least 2");
    FrancisResult res;
    res.decomposition = orderly_decomposition(v.size(), static_cast<std::size_t>(k - 1), std::move(sizes));
    if (!res.decomposition.balanced())
        fail(ErrorCode::InvalidArgument, "the optimality criterion needs a balanced decomposition");
    auto const& d = res.decomposition;
    std::vector<std::size_t> positions(static_cast<std::size_t>(k));
    for (std::size_t j = 1; j <= d.blocks(); ++j) {
        auto [first, last] = d.block_range(j);
        for (std::size_t a = first; a < last; ++a) {
            for (std::size_t b = a + 1; b < last; ++b) {
                Rat gap = v[b] - v[a];
                bool complete = true;
                for (int t = 1; t <= k && complete; ++t) {
                    Rat term = v[a] + gap * Rat(t - static_cast<int>(j));
                    std::size_t idx = v.index_of(term);
                    if (idx == LinePointSet::npos) {
                        res.violations.push_back({static_cast<int>(j), v[a], v[b],
                                                  "term " + term.str() + " missing"});
                        complete = false;
                    } else {
                        positions[static_cast<std::size_t>(t - 1)] = idx;
                    }
                }
                if (!complete)
                    continue;
                auto ech = echelons(positions, d);
                if (ech.size() != 1) {
                    std::string list;
                    for (int e : ech)
                        list += (list.empty() ? "" : ",") + std::to_string(e);
                    res.violations.push_back({static_cast<int>(j), v[a], v[b],
                                              "reconstruction has echelons {" + list + "}"});
                }
            }
        }
    }
    res.optimal = res.violations.empty();
    return res;
}

std::string Classification::label() const
{
    switch (kind) {
    case OptimalKind::AP: return "AP";
    case OptimalKind::EO:
        return "EO(" + std::to_string(e_size) + "," + std::to_string(o_size) + "," +
               (concentric ? "concentric" : "nearly-concentric") + ")";
    case OptimalKind::APMinusSecond: return "AP-minus-second";
    case OptimalKind::APMinusPenultimate: return "AP-minus-penultimate";
    case OptimalKind::NotOptimal: return "NotOptimal";
    case OptimalKind::Unclassified: return "Unclassified";
    }
    return "?";
}

namespace {

/// Structural family of V; ignores optimality except where the family
/// itself decides it (the drop variants need (k-1) | n).
Classification classify_structure(LinePointSet const& v, int k)
{
    Classification c;
    std::size_t n = v.size();
    Rat min_gap = v[1] - v[0];
    for (std::size_t i = 2; i < n; ++i)
        min_gap = std::min(min_gap, v[i] - v[i - 1]);
    std::vector<mpz_class> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat t = (v[i] - v[0]) / min_gap;
        if (!t.is_integer())
            return c;
        x.push_back(t.num());
    }
    std::vector<mpz_class> gaps;
    for (std::size_t i = 1; i < n; ++i)
        gaps.push_back(x[i] - x[i - 1]);
    if (std::all_of(gaps.begin(), gaps.end(), [](mpz_class const& g) { return g == 1; })) {
        c.kind = OptimalKind::AP;
        return c;
    }
    if (k == 3) {
        std::vector<mpz_class> even, odd;
        for (auto const& t : x)
            (mpz_even_p(t.get_mpz_t()) ? even : odd).push_back(t);
        if (even.empty() || odd.empty())
            return c;
        auto consecutive = [](std::vector<mpz_class> const& cls) {
            for (std::size_t i = 1; i < cls.size(); ++i) {
                if (cls[i] - cls[i - 1] != 2)
                    return false;
            }
            return true;
        };
        if (!consecutive(even) || !consecutive(odd))
            return c;
        // Barycenters doubled, to stay integral.
        mpz_class be2 = even.front() + even.back();
        mpz_class bo2 = odd.front() + odd.back();
        bool big_even = even.size() >= odd.size();
        mpz_class diff2 = big_even ? bo2 - be2 : be2 - bo2;  // 2 (bary small - bary big)
        if (n % 2 == 1 && diff2 != 0)
            return c;
        if (n % 2 == 0 && abs(diff2) != 2)
            return c;
        c.kind = OptimalKind::EO;
        c.e_size = std::max(even.size(), odd.size());
        c.o_size = std::min(even.size(), odd.size());
        c.concentric = (n % 2 == 1);
        c.reflected = diff2 < 0;
        return c;
    }
    bool inner_unit = true;
    for (std::size_t i = 1; i + 1 < gaps.size(); ++i)
        inner_unit = inner_unit && gaps[i] == 1;
    bool divides = n % static_cast<std::size_t>(k - 1) == 0;
    if (inner_unit && gaps.front() == 2 && gaps.back() == 1 && divides)
        c.kind = OptimalKind::APMinusSecond;
    else if (inner_unit && gaps.back() == 2 && gaps.front() == 1 && divides)
        c.kind = OptimalKind::APMinusPenultimate;
    return c;
}

}  // namespace

Classification classify_optimal(LinePointSet const& v, int k)
{
    if (k < 3)
        fail(ErrorCode::BadArity, "classification needs k >= 3");
    if (v.size() < static_cast<std::size_t>(k))
        fail(ErrorCode::InvalidArgument, "classification needs n >= k");
    Classification c = classify_structure(v, k);
    std::int64_t n = static_cast<std::int64_t>(v.size());
    c.optimal_by_count = count_kap(v, k) == static_cast<std::uint64_t>(sap_max(n, k));
    bool family_optimal = c.kind != OptimalKind::NotOptimal;
    if (family_optimal != c.optimal_by_count)
        c.kind = OptimalKind::Unclassified;
    return c;
}

LinePointSet gen_ap(std::size_t n, Rat const& start, Rat const& gap)
{
    if (n >= 2 && gap.is_zero())
        fail(ErrorCode::InfeasibleParameters, "progression gap must be nonzero");
    std::vector<Rat> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back(start + gap * Rat(i));
    return LinePointSet(std::move(pts));
}

LinePointSet gen_eo(std::size_t n, std::size_t e_size)
{
    if (n < 2 || e_size < 1 || e_size + 1 > n)
        fail(ErrorCode::InfeasibleParameters,
             "E ∪ O needs 1 <= |E| <= n-1 (n=" + std::to_string(n) + ", |E|=" + std::to_string(e_size) + ")");
    std::size_t o_size = n - e_size;
    long ce = 0;
    long co = 0;
    if (n % 2 == 1) {
        ce = co = (e_size % 2 == 1) ? 0 : 1;
    } else if (e_size % 2 == 1) {
        ce = 0;
        co = 1;
    } else {
        ce = -1;
        co = 0;
    }
    std::vector<Rat> pts;
    pts.reserve(n);
    auto emit = [&](long center, std::size_t size) {
        long first = center - static_cast<long>(size) + 1;
        for (std::size_t i = 0; i < size; ++i)
            pts.emplace_back(first + 2 * static_cast<long>(i));
    };
    emit(ce, e_size);
    emit(co, o_size);
    return LinePointSet(std::move(pts));
}

LinePointSet gen_oliver(std::size_t n, int k, OliverVariant variant)
{
    if (k < 2)
        fail(ErrorCode::BadArity, "k must be at least 2");
    if (variant == OliverVariant::Full)
        return gen_ap(n);
    if (n < 2 || n % static_cast<std::size_t>(k - 1) != 0)
        fail(ErrorCode::InfeasibleParameters,
             "dropping a point needs k-1 | n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    std::size_t skip = variant == OliverVariant::DropSecond ? 1 : n - 1;
    std::vector<Rat> pts;
    for (std::size_t i = 0; i <= n; ++i) {
        if (i != skip)
            pts.emplace_back(i);
    }
    return LinePointSet(std::move(pts));
}

}  // namespace patcount
