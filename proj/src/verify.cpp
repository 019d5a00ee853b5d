#include "patterncount/verify.hpp"

#include "patterncount/error.hpp"
#include "patterncount/extremal_search.hpp"
#include "patterncount/line_patterns.hpp"
#include "patterncount/plane_equilateral.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace patcount {
namespace {

constexpr std::array<std::string_view, 7> kSuites = {"eustace", "thomas",  "imogene",  "oliver",
                                                     "mary",    "jacob",   "katherine"};

// Accumulates one named check; the first failure is kept as the detail.
class Check {
  public:
    explicit Check(std::string name) { c_.name = std::move(name); c_.passed = true; }

    void expect(bool ok, std::string const& what)
    {
        if (!ok && c_.passed) {
            c_.passed = false;
            c_.detail = what;
        }
        ++checked_;
    }
    VerifyCase done()
    {
        if (c_.passed)
            c_.detail = std::to_string(checked_) + " checks";
        return c_;
    }

  private:
    VerifyCase c_;
    std::size_t checked_ = 0;
};

std::int64_t cap(std::int64_t max_n, std::int64_t fallback)
{
    return max_n > 0 ? max_n : fallback;
}

std::set<std::vector<Rat>> canonical_witnesses(SearchResult const& r)
{
    std::set<std::vector<Rat>> out;
    for (auto const& w : r.line_witnesses)
        out.insert(std::vector<Rat>(w.points().begin(), w.points().end()));
    return out;
}

std::vector<Rat> canonical_points(LinePointSet const& v)
{
    auto c = canonical_line_set(v);
    return {c.points().begin(), c.points().end()};
}

bool optimal(LinePointSet const& v, int k)
{
    return static_cast<std::int64_t>(count_kap(v, k)) ==
           sap_max(static_cast<std::int64_t>(v.size()), k);
}

LinePointSet slice(LinePointSet const& v, std::size_t first, std::size_t last)
{
    return LinePointSet(std::vector<Rat>(v.points().begin() + first, v.points().begin() + last));
}

std::vector<LinePointSet> generated_optimal(std::size_t n, int k)
{
    std::vector<LinePointSet> out{gen_ap(n)};
    if (k == 3) {
        for (std::size_t e = 1; e < n; ++e)
            out.push_back(gen_eo(n, e));
    } else if (k >= 4 && n % static_cast<std::size_t>(k - 1) == 0) {
        out.push_back(gen_oliver(n, k, OliverVariant::DropSecond));
        out.push_back(gen_oliver(n, k, OliverVariant::DropPenultimate));
    }
    return out;
}

VerifyReport eustace(std::int64_t max_n, unsigned jobs)
{
    VerifyReport r{"eustace", {}};
    Check per_gap("ap counts by gap, 2<=k<=8, n<=" + std::to_string(cap(max_n, 200)));
    for (int k = 2; k <= 8; ++k) {
        for (std::int64_t n = k; n <= cap(max_n, 200); ++n) {
            std::int64_t by_gap = 0;
            for (std::int64_t s = 1; s * (k - 1) <= n; ++s)
                by_gap += n - s * (k - 1);
            auto c = static_cast<std::int64_t>(count_kap(gen_ap(static_cast<std::size_t>(n)), k, jobs));
            per_gap.expect(c == by_gap && c == sap_max(n, k),
                           "n=" + std::to_string(n) + " k=" + std::to_string(k) + " count " +
                               std::to_string(c) + " gap sum " + std::to_string(by_gap));
        }
    }
    r.cases.push_back(per_gap.done());
    return r;
}

VerifyReport thomas(std::int64_t max_n, unsigned jobs)
{
    VerifyReport r{"thomas", {}};
    Check formula("count_kap on APs equals sap_max, 2<=k<=8, n<=" + std::to_string(cap(max_n, 200)));
    for (int k = 2; k <= 8; ++k) {
        for (std::int64_t n = k; n <= cap(max_n, 200); ++n) {
            auto c = count_kap(gen_ap(static_cast<std::size_t>(n)), k, jobs);
            formula.expect(static_cast<std::int64_t>(c) == sap_max(n, k) &&
                               general_upper_bound(n, k) == sap_max(n, k),
                           "n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    r.cases.push_back(formula.done());

    std::int64_t top = std::min<std::int64_t>(cap(max_n, 10), 10);
    for (auto [k, d] : {std::pair{3, 20}, std::pair{4, 18}}) {
        Check ex("exhaustive maxima k=" + std::to_string(k) + " D=" + std::to_string(d) +
                 " n<=" + std::to_string(top));
        for (std::int64_t n = k; n <= top; ++n) {
            SearchSpec s;
            s.n = static_cast<std::size_t>(n);
            s.k = k;
            s.diameter = d;
            s.jobs = jobs;
            auto res = line_max_search(s);
            ex.expect(res.exhaustive && static_cast<std::int64_t>(res.maximum) == sap_max(n, k),
                      "n=" + std::to_string(n) + " maximum " + std::to_string(res.maximum) +
                          " expected " + std::to_string(sap_max(n, k)));
        }
        r.cases.push_back(ex.done());
    }
    return r;
}

VerifyReport imogene(std::int64_t max_n, unsigned jobs)
{
    VerifyReport r{"imogene", {}};
    std::int64_t top = std::min<std::int64_t>(cap(max_n, 8), 8);
    Check fam("optimal 3-AP sets are exactly EO families, n<=" + std::to_string(top));
    for (std::int64_t n = 3; n <= top; ++n) {
        SearchSpec s;
        s.n = static_cast<std::size_t>(n);
        s.k = 3;
        s.diameter = 2 * n;
        s.jobs = jobs;
        auto res = enumerate_optimal(s);
        fam.expect(static_cast<std::int64_t>(res.maximum) == sap_max(n, 3), "n=" + std::to_string(n) + " maximum");
        auto found = canonical_witnesses(res);
        for (auto const& w : res.line_witnesses) {
            auto c = classify_optimal(w, 3);
            bool ok = c.optimal_by_count && (c.kind == OptimalKind::AP || c.kind == OptimalKind::EO);
            fam.expect(ok, "unexplained witness of size " + std::to_string(n) + ": " + c.label());
        }
        std::set<std::vector<Rat>> expected;
        for (auto const& g : generated_optimal(static_cast<std::size_t>(n), 3))
            expected.insert(canonical_points(g));
        fam.expect(expected == found, "n=" + std::to_string(n) + ": generator family has " +
                                          std::to_string(expected.size()) + " sets, search found " +
                                          std::to_string(found.size()));
    }
    r.cases.push_back(fam.done());

    Check gens("gen_eo optimal and classified, n<=" + std::to_string(cap(max_n, 60)));
    for (std::int64_t n = 3; n <= cap(max_n, 60); ++n) {
        for (std::size_t e = 1; e < static_cast<std::size_t>(n); ++e) {
            auto v = gen_eo(static_cast<std::size_t>(n), e);
            auto c = classify_optimal(v, 3);
            gens.expect(francis_check(v, 3).optimal && c.optimal_by_count &&
                            (c.kind == OptimalKind::EO || c.kind == OptimalKind::AP),
                        "gen_eo(" + std::to_string(n) + "," + std::to_string(e) + ") " + c.label());
        }
    }
    r.cases.push_back(gens.done());

    Check hannah("dropping the leftmost or rightmost point keeps 3-AP optimality, n<=" +
                 std::to_string(cap(max_n, 60)));
    for (std::int64_t n = 4; n <= cap(max_n, 60); ++n) {
        for (auto const& v : generated_optimal(static_cast<std::size_t>(n), 3)) {
            bool left = optimal(slice(v, 1, v.size()), 3);
            bool right = optimal(slice(v, 0, v.size() - 1), 3);
            hannah.expect(left || right, "n=" + std::to_string(n));
        }
    }
    r.cases.push_back(hannah.done());
    return r;
}

VerifyReport oliver(std::int64_t max_n, unsigned jobs)
{
    VerifyReport r{"oliver", {}};
    Check fam("optimal 4-AP sets for n in {8,9} are the AP and its drop variants");
    for (std::int64_t n : {8, 9}) {
        if (max_n > 0 && n > max_n)
            continue;
        SearchSpec s;
        s.n = static_cast<std::size_t>(n);
        s.k = 4;
        s.diameter = 2 * n;
        s.jobs = jobs;
        auto res = enumerate_optimal(s);
        fam.expect(static_cast<std::int64_t>(res.maximum) == sap_max(n, 4), "n=" + std::to_string(n) + " maximum");
        for (auto const& w : res.line_witnesses) {
            auto c = classify_optimal(w, 4);
            bool ok = c.optimal_by_count &&
                      (c.kind == OptimalKind::AP || c.kind == OptimalKind::APMinusSecond ||
                       c.kind == OptimalKind::APMinusPenultimate);
            fam.expect(ok, "unexplained witness: " + c.label());
        }
        std::set<std::vector<Rat>> expected;
        for (auto const& g : generated_optimal(static_cast<std::size_t>(n), 4))
            expected.insert(canonical_points(g));
        fam.expect(expected == canonical_witnesses(res), "n=" + std::to_string(n) + " family mismatch");
    }
    r.cases.push_back(fam.done());

    Check drops("drop variants optimal iff k-1 divides n, 4<=k<=6, n<=" + std::to_string(cap(max_n, 60)));
    for (int k = 4; k <= 6; ++k) {
        for (std::int64_t n = k + 1; n <= cap(max_n, 60); ++n) {
            bool divides = n % (k - 1) == 0;
            // Built directly so non-dividing n can be tested too.
            std::vector<Rat> second, penult;
            for (std::int64_t x = 0; x <= n; ++x) {
                if (x != 1)
                    second.emplace_back(x);
                if (x != n - 1)
                    penult.emplace_back(x);
            }
            bool a = optimal(LinePointSet(second), k);
            bool b = optimal(LinePointSet(penult), k);
            drops.expect(a == divides && b == divides,
                         "k=" + std::to_string(k) + " n=" + std::to_string(n));
            if (divides) {
                auto c = classify_optimal(gen_oliver(static_cast<std::size_t>(n), k, OliverVariant::DropSecond), k);
                drops.expect(c.optimal_by_count && (c.kind == OptimalKind::APMinusSecond ||
                                                    c.kind == OptimalKind::APMinusPenultimate),
                             "classification " + c.label());
            }
        }
    }
    r.cases.push_back(drops.done());

    Check minus("unions of the first or last k-2 blocks are optimal for (k-1)-APs, 3<=k<=6, n<=" +
                std::to_string(cap(max_n, 60)));
    for (int k = 3; k <= 6; ++k) {
        for (std::int64_t n = k; n <= cap(max_n, 60); ++n) {
            for (auto const& v : generated_optimal(static_cast<std::size_t>(n), k)) {
                auto d = orderly_decomposition(v.size(), static_cast<std::size_t>(k - 1));
                auto head = slice(v, 0, d.block_range(static_cast<std::size_t>(k - 2)).second);
                auto tail = slice(v, d.block_range(2).first, v.size());
                minus.expect(optimal(head, k - 1) && optimal(tail, k - 1),
                             "k=" + std::to_string(k) + " n=" + std::to_string(n));
            }
        }
    }
    r.cases.push_back(minus.done());
    return r;
}

VerifyReport mary(std::int64_t, unsigned jobs)
{
    VerifyReport r{"mary", {}};
    auto p = LinePattern::from_points({Rat(0), Rat(1), Rat(3)});
    for (int k = 1; k <= 3; ++k) {
        Check c("construction k=" + std::to_string(k));
        auto v = construction_mary(k);
        std::int64_t expect = 1728LL * k * k - 48LL * k;
        auto total = static_cast<std::int64_t>(count_instances(v, p, false, jobs));
        c.expect(v.size() == static_cast<std::size_t>(96 * k), "size " + std::to_string(v.size()));
        c.expect(total == expect, "count " + std::to_string(total) + " expected " + std::to_string(expect));
        auto rows = residue_table(k);
        auto forms = mary_closed_forms();
        c.expect(rows.size() == forms.size(), std::to_string(rows.size() - forms.size()) + " extra residue classes");
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            sum += static_cast<std::int64_t>(rows[i].count);
            if (i < forms.size()) {
                c.expect(rows[i].residues == forms[i].residues &&
                             static_cast<std::int64_t>(rows[i].count) == forms[i].at(k),
                         "row " + std::to_string(i) + " count " + std::to_string(rows[i].count) +
                             " closed form " + std::to_string(forms[i].at(k)));
            }
        }
        c.expect(sum == expect, "rows sum to " + std::to_string(sum));
        r.cases.push_back(c.done());
    }
    return r;
}

VerifyReport jacob(std::int64_t max_n, unsigned jobs)
{
    VerifyReport r{"jacob", {}};
    auto p = LinePattern::from_points({Rat(0), Rat(1), Rat(3)});
    for (int k = 1; k <= 3; ++k) {
        std::int64_t n = 96LL * k;
        if (max_n > 0 && n > max_n)
            continue;
        Check c("sandwich n=" + std::to_string(n));
        auto b = jacob_bounds(n, p);
        auto count = static_cast<std::int64_t>(count_instances(construction_mary(k), p, false, jobs));
        c.expect(b.lower <= count && count <= b.upper,
                 std::to_string(b.lower) + " <= " + std::to_string(count) + " <= " + std::to_string(b.upper));
        Rat ratio = Rat(count) / Rat(n * n);
        Rat expect = Rat(mpq_class(3, 16)) - Rat(mpq_class(1, 2 * n));
        c.expect(ratio == expect, "count/n^2 = " + ratio.str() + ", expected " + expect.str());
        r.cases.push_back(c.done());
    }
    return r;
}

VerifyReport katherine(std::int64_t max_n, unsigned jobs)
{
    VerifyReport r{"katherine", {}};
    Check alg("Helen/Peter algebra and piecewise form, n<=" + std::to_string(std::min<std::int64_t>(cap(max_n, 200), 200)));
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(cap(max_n, 200), 200); ++n) {
        auto a = katherine_algebra(n);
        std::string tag = "n=" + std::to_string(n);
        alg.expect(a.min_intracompartmental == a.q * (3 * a.q + 2 * a.r + a.s - 3), tag + " Helen");
        alg.expect(a.same_side_pairs == (3 * a.q + a.r) * (3 * a.q + a.r + a.s), tag + " Peter");
        Rat assembled = Rat(a.same_side_pairs) - Rat(mpq_class(a.min_intracompartmental, 3));
        alg.expect(assembled == a.bound && a.bound == a.piecewise, tag + " closed form");
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), a.bound.num().get_mpz_t(), a.bound.den().get_mpz_t());
        Rat envelope(mpq_class((4 * n - 1) * (n - 1), 18));
        alg.expect(a.bound <= envelope && (n % 6 != 1 || a.bound == envelope), tag + " envelope");
        alg.expect(fl <= katherine_bound(n), tag + " floor");
        alg.expect(n < 2 || katherine_bound(n) <= abrego_bound(n), tag + " below prior bound");
    }
    r.cases.push_back(alg.done());

    for (std::int64_t n : {7, 50, 200, 1000}) {
        if (n > cap(max_n, 1000))
            continue;
        Check c("bound chain on the lattice disk n=" + std::to_string(n));
        auto v = gen_triangular_disk(static_cast<std::size_t>(n));
        CountOptions opt;
        opt.jobs = jobs;
        auto count = static_cast<std::int64_t>(count_equilateral(v, opt));
        auto t = terence_analysis(v);
        c.expect(count <= t.refined_by_rotation[t.profile.rotation_chosen] && count <= t.bound &&
                     t.bound <= katherine_bound(n) && katherine_bound(n) <= abrego_bound(n),
                 std::to_string(count) + " <= " + std::to_string(t.bound) + " <= " +
                     std::to_string(katherine_bound(n)) + " <= " + std::to_string(abrego_bound(n)));
        r.cases.push_back(c.done());
    }
    return r;
}

}  // namespace

bool VerifyReport::all_passed() const
{
    return std::all_of(cases.begin(), cases.end(), [](VerifyCase const& c) { return c.passed; });
}

std::span<std::string_view const> suite_names()
{
    return kSuites;
}

VerifyReport run_suite(std::string_view suite, std::int64_t max_n, unsigned jobs)
{
    if (suite == "eustace")
        return eustace(max_n, jobs);
    if (suite == "thomas")
        return thomas(max_n, jobs);
    if (suite == "imogene")
        return imogene(max_n, jobs);
    if (suite == "oliver")
        return oliver(max_n, jobs);
    if (suite == "mary")
        return mary(max_n, jobs);
    if (suite == "jacob")
        return jacob(max_n, jobs);
    if (suite == "katherine")
        return katherine(max_n, jobs);
    fail(ErrorCode::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
}

}  // namespace patcount
