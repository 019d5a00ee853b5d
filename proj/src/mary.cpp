#include "patterncount/error.hpp"
#include "patterncount/line_patterns.hpp"

#include <algorithm>
#include <map>

namespace patcount {
namespace {

constexpr MaryClosedForm kMaryTable[] = {
    {{0, 0, 0}, 54, -3, 0},   {{0, 1, 3}, 171, 6, 0},  {{0, 3, 3}, 270, 9, 0},
    {{0, 5, 3}, 171, 3, -1},  {{1, 1, 1}, 24, -6, 0},  {{1, 3, 1}, 24, 2, 0},
    {{1, 5, 1}, 24, -2, 0},   {{3, 0, 0}, 54, 3, 0},   {{3, 1, 3}, 189, -6, 0},
    {{3, 3, 3}, 486, -45, 1}, {{3, 5, 3}, 189, -3, 0}, {{5, 1, 5}, 24, 2, 0},
    {{5, 3, 5}, 24, -2, 0},   {{5, 5, 5}, 24, -6, 0},
};

}  // namespace

std::span<MaryClosedForm const> mary_closed_forms()
{
    return kMaryTable;
}

LinePointSet construction_mary(int k)
{
    if (k < 1)
        fail(ErrorCode::InfeasibleParameters, "the construction needs k >= 1");
    long const K = k;
    std::vector<Rat> pts;
    pts.reserve(static_cast<std::size_t>(96 * K));
    for (long a = 0; a <= 18 * K; ++a)
        pts.emplace_back(6 * a);
    for (long a = 12 * K; a <= 24 * K - 1; ++a)
        pts.emplace_back(6 * a + 1);
    for (long a = 0; a <= 54 * K - 2; ++a)
        pts.emplace_back(6 * a + 3);
    for (long a = 12 * K; a <= 24 * K - 1; ++a)
        pts.emplace_back(6 * a - 1);
    return LinePointSet(std::move(pts));
}

std::vector<ResidueRow> residue_table(int k)
{
    LinePointSet v = construction_mary(k);
    std::vector<long> x;
    x.reserve(v.size());
    for (auto const& p : v.points())
        x.push_back(p.num().get_si());
    std::map<std::array<int, 3>, std::uint64_t> buckets;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            long third = x[i] + 3 * (x[j] - x[i]);
            if (third > x.back())
                break;
            if (!std::binary_search(x.begin() + static_cast<std::ptrdiff_t>(j), x.end(), third))
                continue;
            auto mod6 = [](long t) { return static_cast<int>(((t % 6) + 6) % 6); };
            ++buckets[{mod6(x[i]), mod6(x[j]), mod6(third)}];
        }
    }
    std::vector<ResidueRow> rows;
    for (auto const& form : kMaryTable) {
        auto it = buckets.find(form.residues);
        rows.push_back({form.residues, it == buckets.end() ? 0 : it->second});
        if (it != buckets.end())
            buckets.erase(it);
    }
    for (auto const& [res, count] : buckets)
        rows.push_back({res, count});
    return rows;
}

}  // namespace patcount
