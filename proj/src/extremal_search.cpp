#include "patterncount/extremal_search.hpp"

#include "patterncount/error.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace patcount {
namespace {

// Saturating binomial coefficient.
std::uint64_t binom(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

// Runs task(i) for i in [0, count) on up to `jobs` threads, i going to
// worker i % jobs.
template <class Fn>
void run_tasks(std::size_t count, unsigned jobs, Fn const& task)
{
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            task(i);
        return;
    }
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += jobs)
                    task(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& w : workers)
        w.join();
    for (auto const& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }
}

bool similar_direct(std::vector<Rat> const& s, std::span<Rat const> p)
{
    Rat base = s[1] - s[0];
    Rat pbase = p[1] - p[0];
    for (std::size_t i = 2; i < s.size(); ++i) {
        if ((s[i] - s[0]) * pbase != (p[i] - p[0]) * base)
            return false;
    }
    return true;
}

template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit const& visit)
{
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

// Integer pattern forms used by the bitmask counter.
struct MaskCounter {
    std::vector<std::vector<std::int64_t>> forms;
    bool ap = false;
    int k = 0;

    std::uint64_t count(std::uint64_t mask, std::int64_t diameter) const
    {
        std::int64_t pts[64];
        int m = 0;
        for (std::uint64_t b = mask; b; b &= b - 1)
            pts[m++] = std::countr_zero(b);
        std::uint64_t total = 0;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                std::int64_t a = pts[i], g = pts[j] - pts[i];
                if (ap) {
                    if (a + (k - 1) * g > diameter)
                        break;
                    int t = 2;
                    while (t < k && (mask >> (a + t * g) & 1))
                        ++t;
                    total += t == k;
                    continue;
                }
                for (auto const& f : forms) {
                    std::int64_t q1 = f[1];
                    bool ok = true;
                    for (std::size_t t = 2; t < f.size() && ok; ++t) {
                        std::int64_t num = g * f[t];
                        if (num % q1 != 0) {
                            ok = false;
                            break;
                        }
                        std::int64_t x = a + num / q1;
                        ok = x <= diameter && (mask >> x & 1);
                    }
                    total += ok;
                }
            }
        }
        return total;
    }
};

MaskCounter make_counter(SearchSpec const& spec)
{
    MaskCounter c;
    bool use_pattern = spec.mode == SearchMode::LineMaxPattern ||
                       (spec.mode == SearchMode::LineEnumerateOptimal && spec.pattern);
    if (!use_pattern) {
        if (spec.k < 2)
            fail(ErrorCode::BadArity, "k must be at least 2");
        c.ap = true;
        c.k = spec.k;
        return c;
    }
    if (!spec.pattern)
        fail(ErrorCode::InvalidArgument, "pattern search needs a pattern");
    auto to_ints = [](LinePattern const& p) {
        std::vector<std::int64_t> out;
        for (auto const& x : p.points()) {
            if (!x.num().fits_slong_p() || abs(x.num()) > 62)
                fail(ErrorCode::TooLarge, "pattern " + p.str() + " does not fit the search window");
            out.push_back(x.num().get_si());
        }
        return out;
    };
    c.k = static_cast<int>(spec.pattern->size());
    c.forms.push_back(to_ints(*spec.pattern));
    if (spec.allow_reflection && !spec.pattern->is_reflection_symmetric())
        c.forms.push_back(to_ints(spec.pattern->reflected()));
    return c;
}

std::vector<std::int64_t> mask_points(std::uint64_t mask)
{
    std::vector<std::int64_t> out;
    for (std::uint64_t b = mask; b; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

bool canonical_mask(std::uint64_t mask)
{
    auto pts = mask_points(mask);
    std::int64_t g = 0;
    for (auto x : pts)
        g = std::gcd(g, x);
    if (pts.size() > 1 && g != 1)
        return false;
    std::int64_t hi = pts.back();
    std::size_t m = pts.size();
    for (std::size_t i = 0; i < m; ++i) {
        std::int64_t r = hi - pts[m - 1 - i];
        if (pts[i] != r)
            return pts[i] < r;
    }
    return true;
}

LinePointSet mask_set(std::uint64_t mask)
{
    std::vector<Rat> pts;
    for (auto x : mask_points(mask))
        pts.emplace_back(x);
    return LinePointSet(std::move(pts));
}

struct TaskResult {
    std::uint64_t best = 0;
    std::vector<std::uint64_t> masks;
    std::uint64_t states = 0;
};

SearchResult line_search_core(SearchSpec const& spec)
{
    if (spec.n == 0)
        fail(ErrorCode::InvalidArgument, "n must be positive");
    if (spec.diameter < static_cast<std::int64_t>(spec.n) - 1)
        fail(ErrorCode::InfeasibleParameters, "diameter " + std::to_string(spec.diameter) +
                                                  " cannot hold " + std::to_string(spec.n) + " points");
    if (spec.diameter > 62)
        fail(ErrorCode::TooLarge, "diameter above 62 is not supported");
    MaskCounter counter = make_counter(spec);
    std::int64_t D = spec.diameter;
    std::size_t n = spec.n;

    SearchResult res;
    if (n == 1) {
        res.maximum = 0;
        res.line_witnesses.push_back(mask_set(1));
        res.states_explored = 1;
        res.exhaustive = true;
        return res;
    }
    // Task s enumerates sets {0, s, ...}; it holds C(D - s, n - 2) sets.
    std::vector<std::int64_t> tasks;
    std::uint64_t planned = 0;
    res.exhaustive = true;
    for (std::int64_t s = 1; s <= D; ++s) {
        std::uint64_t size = binom(static_cast<std::uint64_t>(D - s), n - 2);
        if (size == 0)
            continue;
        if (planned + size > spec.budget || planned + size < planned) {
            res.exhaustive = false;
            break;
        }
        planned += size;
        tasks.push_back(s);
    }
    std::vector<TaskResult> results(tasks.size());
    run_tasks(tasks.size(), spec.jobs, [&](std::size_t ti) {
        TaskResult& tr = results[ti];
        std::int64_t s = tasks[ti];
        std::uint64_t base = 1ull | (1ull << s);
        std::size_t need = n - 2;
        std::vector<std::int64_t> pick(need);
        auto leaf = [&](std::uint64_t mask) {
            ++tr.states;
            if (!canonical_mask(mask))
                return;
            std::uint64_t c = counter.count(mask, D);
            if (c > tr.best) {
                tr.best = c;
                tr.masks.clear();
            }
            if (c == tr.best)
                tr.masks.push_back(mask);
        };
        if (need == 0) {
            leaf(base);
            return;
        }
        // Iterative combinations of {s+1..D} of size need.
        std::int64_t lo = s + 1;
        std::int64_t range = D - s;
        for_each_subset(static_cast<std::size_t>(range), need, [&](std::vector<std::size_t> const& idx) {
            std::uint64_t mask = base;
            for (auto i : idx)
                mask |= 1ull << (lo + static_cast<std::int64_t>(i));
            leaf(mask);
        });
    });
    std::vector<std::uint64_t> masks;
    for (auto const& tr : results) {
        res.states_explored += tr.states;
        if (tr.best > res.maximum) {
            res.maximum = tr.best;
            masks.clear();
        }
        if (tr.best == res.maximum)
            masks.insert(masks.end(), tr.masks.begin(), tr.masks.end());
    }
    std::vector<std::vector<std::int64_t>> sets;
    for (auto m : masks)
        sets.push_back(mask_points(m));
    std::sort(sets.begin(), sets.end());
    for (auto const& s : sets) {
        std::vector<Rat> pts(s.begin(), s.end());
        res.line_witnesses.emplace_back(std::move(pts));
    }
    return res;
}

}  // namespace

std::uint64_t brute_count(LinePointSet const& v, LinePattern const& p, bool allow_reflection,
                          std::uint64_t budget)
{
    std::size_t k = p.size();
    if (k < 2)
        fail(ErrorCode::BadArity, "pattern needs at least two points");
    if (v.size() < k)
        return 0;
    if (binom(v.size(), k) > budget)
        fail(ErrorCode::TooLarge, std::to_string(v.size()) + " choose " + std::to_string(k) +
                                      " subsets exceed the budget");
    LinePattern mirror = p.reflected();
    bool check_mirror = allow_reflection && !(mirror == p);
    std::uint64_t total = 0;
    std::vector<Rat> s(k);
    for_each_subset(v.size(), k, [&](std::vector<std::size_t> const& idx) {
        for (std::size_t i = 0; i < k; ++i)
            s[i] = v[idx[i]];
        if (similar_direct(s, p.points()) || (check_mirror && similar_direct(s, mirror.points())))
            ++total;
    });
    return total;
}

std::uint64_t brute_count_equilateral(PlanePointSet const& v, std::uint64_t budget)
{
    if (v.size() < 3)
        return 0;
    if (binom(v.size(), 3) > budget)
        fail(ErrorCode::TooLarge, std::to_string(v.size()) + " choose 3 subsets exceed the budget");
    std::uint64_t total = 0;
    for_each_subset(v.size(), 3, [&](std::vector<std::size_t> const& idx) {
        if (is_equilateral(v[idx[0]], v[idx[1]], v[idx[2]]))
            ++total;
    });
    return total;
}

LinePointSet canonical_line_set(LinePointSet const& v)
{
    if (v.empty())
        return v;
    if (v.size() == 1)
        return LinePointSet(std::vector<Rat>{Rat(0)});
    auto p = LinePattern::from_points(std::vector<Rat>(v.points().begin(), v.points().end()));
    auto r = p.reflected();
    auto a = p.points(), b = r.points();
    bool keep = !std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    auto const& pick = keep ? a : b;
    return LinePointSet(std::vector<Rat>(pick.begin(), pick.end()));
}

SearchResult line_max_search(SearchSpec const& spec)
{
    if (spec.mode == SearchMode::PlaneLatticeMax)
        fail(ErrorCode::InvalidArgument, "line search called with the plane mode");
    return line_search_core(spec);
}

SearchResult enumerate_optimal(SearchSpec const& spec)
{
    SearchSpec s = spec;
    if (s.mode == SearchMode::PlaneLatticeMax)
        fail(ErrorCode::InvalidArgument, "line enumeration called with the plane mode");
    if (s.mode == SearchMode::LineMaxAP)
        s.mode = SearchMode::LineEnumerateOptimal;
    return line_search_core(s);
}

namespace {

struct LatticePool {
    std::vector<Point2> points;
    // tri_by_max[l]: pairs (i, j), i < j < l, with {i, j, l} equilateral.
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> tri_by_max;
    // tri_of[x]: the other two vertices of every triangle through x.
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> tri_of;
};

LatticePool make_pool(std::int64_t radius)
{
    LatticePool pool;
    std::int64_t r2 = radius * radius;
    std::int64_t span = 2 * radius + 2;
    for (std::int64_t a = -span; a <= span; ++a) {
        for (std::int64_t b = -span; b <= span; ++b) {
            if (a * a + a * b + b * b <= r2)
                pool.points.push_back(lattice_point(a, b));
        }
    }
    std::sort(pool.points.begin(), pool.points.end());
    std::unordered_map<Point2, std::uint32_t> index;
    for (std::uint32_t i = 0; i < pool.points.size(); ++i)
        index.emplace(pool.points[i], i);
    std::size_t m = pool.points.size();
    pool.tri_by_max.resize(m);
    pool.tri_of.resize(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = i + 1; j < m; ++j) {
            auto [w, wp] = third_vertices(pool.points[i], pool.points[j]);
            for (auto const& t : {w, wp}) {
                auto it = index.find(t);
                if (it == index.end() || it->second <= j)
                    continue;
                std::uint32_t l = it->second;
                pool.tri_by_max[l].push_back({i, j});
                pool.tri_of[i].push_back({j, l});
                pool.tri_of[j].push_back({i, l});
                pool.tri_of[l].push_back({i, j});
            }
        }
    }
    return pool;
}

PlanePointSet pool_subset(LatticePool const& pool, std::vector<std::uint32_t> const& idx)
{
    std::vector<Point2> pts;
    for (auto i : idx)
        pts.push_back(pool.points[i]);
    return PlanePointSet(std::move(pts));
}

constexpr std::size_t kMaxPlaneWitnesses = 16;

SearchResult plane_exhaustive(LatticePool const& pool, std::size_t n, unsigned jobs)
{
    std::size_t m = pool.points.size();
    struct Best {
        std::uint64_t best = 0;
        std::vector<std::uint64_t> masks;
        std::uint64_t states = 0;
    };
    std::size_t first_max = m - n + 1;
    std::vector<Best> results(first_max);
    run_tasks(first_max, jobs, [&](std::size_t first) {
        Best& b = results[first];
        bool any = false;
        // Depth-first over ascending index sequences starting at `first`.
        std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(first)};
        std::vector<std::uint64_t> counts{0};
        std::uint64_t mask = 1ull << first;
        std::uint32_t next = static_cast<std::uint32_t>(first) + 1;
        for (;;) {
            if (stack.size() == n) {
                ++b.states;
                std::uint64_t c = counts.back();
                if (!any || c > b.best) {
                    b.best = c;
                    b.masks.clear();
                    any = true;
                }
                if (c == b.best && b.masks.size() < kMaxPlaneWitnesses)
                    b.masks.push_back(mask);
            } else if (next + (n - stack.size()) <= m) {
                std::uint32_t l = next;
                std::uint64_t add = 0;
                for (auto [i, j] : pool.tri_by_max[l])
                    add += (mask >> i & 1) & (mask >> j & 1);
                stack.push_back(l);
                counts.push_back(counts.back() + add);
                mask |= 1ull << l;
                next = l + 1;
                continue;
            }
            // Backtrack.
            for (;;) {
                if (stack.size() == 1)
                    return;
                std::uint32_t l = stack.back();
                stack.pop_back();
                counts.pop_back();
                mask &= ~(1ull << l);
                next = l + 1;
                if (next + (n - stack.size()) <= m)
                    break;
            }
        }
    });
    SearchResult res;
    res.exhaustive = true;
    std::vector<std::uint64_t> masks;
    for (auto const& b : results) {
        res.states_explored += b.states;
        if (b.states == 0)
            continue;
        if (b.best > res.maximum) {
            res.maximum = b.best;
            masks.clear();
        }
        if (b.best == res.maximum)
            masks.insert(masks.end(), b.masks.begin(), b.masks.end());
    }
    for (std::size_t w = 0; w < masks.size() && w < kMaxPlaneWitnesses; ++w) {
        std::vector<std::uint32_t> idx;
        for (std::uint64_t x = masks[w]; x; x &= x - 1)
            idx.push_back(static_cast<std::uint32_t>(std::countr_zero(x)));
        res.plane_witnesses.push_back(pool_subset(pool, idx));
    }
    return res;
}

SearchResult plane_local(LatticePool const& pool, std::size_t n, std::uint64_t budget)
{
    std::size_t m = pool.points.size();
    std::unordered_map<Point2, std::uint32_t> index;
    for (std::uint32_t i = 0; i < m; ++i)
        index.emplace(pool.points[i], i);
    std::vector<char> in(m, 0);
    PlanePointSet start = gen_triangular_disk(n);
    for (auto const& p : start.points())
        in[index.at(p)] = 1;
    auto through = [&](std::uint32_t x, std::uint32_t skip) {
        std::uint64_t c = 0;
        for (auto [a, b] : pool.tri_of[x])
            c += in[a] && in[b] && a != skip && b != skip;
        return c;
    };
    std::uint64_t total = 0;
    for (std::uint32_t l = 0; l < m; ++l) {
        if (!in[l])
            continue;
        for (auto [i, j] : pool.tri_by_max[l])
            total += in[i] && in[j];
    }
    SearchResult res;
    std::uint64_t states = 0;
    for (;;) {
        std::int64_t best_gain = 0;
        std::uint32_t best_out = 0, best_in = 0;
        for (std::uint32_t p = 0; p < m; ++p) {
            if (!in[p])
                continue;
            std::int64_t loss = static_cast<std::int64_t>(through(p, p));
            for (std::uint32_t q = 0; q < m; ++q) {
                if (in[q])
                    continue;
                ++states;
                std::int64_t gain = static_cast<std::int64_t>(through(q, p)) - loss;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_out = p;
                    best_in = q;
                }
            }
        }
        if (best_gain <= 0 || states > budget)
            break;
        in[best_out] = 0;
        in[best_in] = 1;
        total += static_cast<std::uint64_t>(best_gain);
    }
    std::vector<std::uint32_t> idx;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (in[i])
            idx.push_back(i);
    }
    res.maximum = total;
    res.states_explored = states;
    res.exhaustive = false;
    res.plane_witnesses.push_back(pool_subset(pool, idx));
    return res;
}

}  // namespace

SearchResult plane_lattice_max(SearchSpec const& spec)
{
    if (spec.n == 0)
        fail(ErrorCode::InvalidArgument, "n must be positive");
    if (spec.radius < 0)
        fail(ErrorCode::InvalidArgument, "negative radius");
    LatticePool pool = make_pool(spec.radius);
    std::size_t m = pool.points.size();
    if (m < spec.n)
        fail(ErrorCode::InfeasibleParameters, "radius " + std::to_string(spec.radius) + " pools only " +
                                                  std::to_string(m) + " lattice points");
    SearchResult res;
    if (m <= 64 && binom(m, spec.n) <= spec.budget)
        res = plane_exhaustive(pool, spec.n, spec.jobs);
    else
        res = plane_local(pool, spec.n, spec.budget);
    auto limit = static_cast<std::uint64_t>(katherine_bound(static_cast<std::int64_t>(spec.n)));
    if (res.maximum > limit)
        fail(ErrorCode::MethodMismatch, "lattice search found " + std::to_string(res.maximum) +
                                            " triangles, above the upper bound " + std::to_string(limit));
    for (auto const& w : res.plane_witnesses) {
        if (count_equilateral(w) != res.maximum)
            fail(ErrorCode::MethodMismatch, "witness does not reproduce the reported count");
    }
    return res;
}

}  // namespace patcount
