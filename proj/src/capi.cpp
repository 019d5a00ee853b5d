#include "patterncount/patterncount.h"

#include "patterncount/error.hpp"
#include "patterncount/extremal_search.hpp"
#include "patterncount/line_patterns.hpp"
#include "patterncount/plane_equilateral.hpp"
#include "patterncount/point_io.hpp"
#include "patterncount/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

using namespace patcount;

struct pc_line_set {
    LinePointSet v;
};

struct pc_plane_set {
    PlanePointSet v;
};

struct pc_pattern {
    NormalizedPattern norm;
};

struct pc_search_result {
    SearchResult r;
    bool plane = false;
};

struct pc_verify_report {
    VerifyReport r;
};

namespace {

thread_local std::string g_last_error;

template <class Fn>
pc_status guard(Fn&& fn)
{
    try {
        fn();
        g_last_error.clear();
        return PC_OK;
    } catch (Error const& e) {
        g_last_error = e.what();
        return static_cast<pc_status>(static_cast<int>(e.code()));
    } catch (std::bad_alloc const&) {
        g_last_error = "out of memory";
        return PC_ERR_INTERNAL;
    } catch (std::exception const& e) {
        g_last_error = e.what();
        return PC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return PC_ERR_INTERNAL;
    }
}

void require(bool ok, char const* what)
{
    if (!ok)
        fail(ErrorCode::InvalidArgument, what);
}

char* dup_string(std::string const& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void copy_fixed(char* dst, std::size_t cap, std::string const& s)
{
    std::size_t len = std::min(cap - 1, s.size());
    std::memcpy(dst, s.data(), len);
    dst[len] = '\0';
}

std::string source_name(char const* source)
{
    return source ? source : "<input>";
}

LinePattern commensurable(pc_pattern const* p)
{
    auto lp = p->norm.pattern();
    if (!lp)
        fail(ErrorCode::Incommensurable, "pattern has irrational gap ratios");
    return *lp;
}

}  // namespace

extern "C" {

const char* pc_version(void)
{
    return "1.0.0";
}

const char* pc_status_name(pc_status status)
{
    if (status == PC_OK)
        return "Ok";
    if (status == PC_ERR_INTERNAL)
        return "Internal";
    if (status >= PC_ERR_BAD_ARITY && status <= PC_ERR_IO)
        return to_cstring(static_cast<ErrorCode>(static_cast<int>(status)));
    return "Unknown";
}

const char* pc_last_error(void)
{
    return g_last_error.c_str();
}

void pc_string_free(char* s)
{
    std::free(s);
}

pc_status pc_line_set_parse(const char* text, const char* source, pc_line_set** out)
{
    return guard([&] {
        require(text && out, "null argument");
        *out = new pc_line_set{parse_line_points(text, source_name(source))};
    });
}

pc_status pc_line_set_parse_file(const char* path, pc_line_set** out)
{
    return guard([&] {
        require(path && out, "null argument");
        *out = new pc_line_set{parse_line_points(read_text_file(path), path)};
    });
}

pc_status pc_line_set_render(const pc_line_set* set, char** out)
{
    return guard([&] {
        require(set && out, "null argument");
        *out = dup_string(render_line_points(set->v));
    });
}

size_t pc_line_set_size(const pc_line_set* set)
{
    return set ? set->v.size() : 0;
}

void pc_line_set_free(pc_line_set* set)
{
    delete set;
}

pc_status pc_plane_set_parse(const char* text, const char* source, pc_plane_set** out)
{
    return guard([&] {
        require(text && out, "null argument");
        *out = new pc_plane_set{parse_plane_points(text, source_name(source))};
    });
}

pc_status pc_plane_set_parse_file(const char* path, pc_plane_set** out)
{
    return guard([&] {
        require(path && out, "null argument");
        *out = new pc_plane_set{parse_plane_points(read_text_file(path), path)};
    });
}

pc_status pc_plane_set_render(const pc_plane_set* set, char** out)
{
    return guard([&] {
        require(set && out, "null argument");
        *out = dup_string(render_plane_points(set->v));
    });
}

size_t pc_plane_set_size(const pc_plane_set* set)
{
    return set ? set->v.size() : 0;
}

void pc_plane_set_free(pc_plane_set* set)
{
    delete set;
}

pc_status pc_pattern_parse(const char* text, const char* source, pc_pattern** out)
{
    return guard([&] {
        require(text && out, "null argument");
        *out = new pc_pattern{normalize_pattern(parse_pattern_values(text, source_name(source)))};
    });
}

pc_status pc_pattern_parse_file(const char* path, pc_pattern** out)
{
    return guard([&] {
        require(path && out, "null argument");
        *out = new pc_pattern{normalize_pattern(parse_pattern_values(read_text_file(path), path))};
    });
}

size_t pc_pattern_size(const pc_pattern* p)
{
    return p ? p->norm.points.size() : 0;
}

int pc_pattern_commensurable(const pc_pattern* p)
{
    return p && p->norm.commensurable ? 1 : 0;
}

pc_status pc_pattern_str(const pc_pattern* p, char** out)
{
    return guard([&] {
        require(p && out, "null argument");
        std::string s = "{";
        for (std::size_t i = 0; i < p->norm.points.size(); ++i) {
            if (i)
                s += ",";
            s += p->norm.points[i].str();
        }
        *out = dup_string(s + "}");
    });
}

void pc_pattern_free(pc_pattern* p)
{
    delete p;
}

pc_status pc_write_file(const char* path, const char* text)
{
    return guard([&] {
        require(path && text, "null argument");
        write_text_file(path, text);
    });
}

pc_status pc_count_kap(const pc_line_set* set, int k, unsigned jobs, uint64_t* out)
{
    return guard([&] {
        require(set && out, "null argument");
        *out = count_kap(set->v, k, jobs);
    });
}

pc_status pc_count_instances(const pc_line_set* set, const pc_pattern* p, int allow_reflection,
                             unsigned jobs, uint64_t* out)
{
    return guard([&] {
        require(set && p && out, "null argument");
        // A rational set holds no copy of a pattern with irrational gap ratios.
        auto lp = p->norm.pattern();
        *out = lp ? count_instances(set->v, *lp, allow_reflection != 0, jobs) : 0;
    });
}

pc_status pc_brute_count(const pc_line_set* set, const pc_pattern* p, int allow_reflection, uint64_t* out)
{
    return guard([&] {
        require(set && p && out, "null argument");
        *out = brute_count(set->v, commensurable(p), allow_reflection != 0);
    });
}

pc_status pc_count_equilateral(const pc_plane_set* set, unsigned jobs, uint64_t* out)
{
    return guard([&] {
        require(set && out, "null argument");
        CountOptions opt;
        opt.jobs = jobs;
        *out = count_equilateral(set->v, opt);
    });
}

pc_status pc_brute_count_equilateral(const pc_plane_set* set, uint64_t* out)
{
    return guard([&] {
        require(set && out, "null argument");
        *out = brute_count_equilateral(set->v);
    });
}

pc_status pc_sap_max(int64_t n, int64_t k, int64_t* out)
{
    return guard([&] {
        require(out, "null argument");
        *out = sap_max(n, k);
    });
}

pc_status pc_general_upper_bound(int64_t n, int64_t k, int64_t* out)
{
    return guard([&] {
        require(out, "null argument");
        *out = general_upper_bound(n, k);
    });
}

pc_status pc_katherine_bound(int64_t n, int64_t* out)
{
    return guard([&] {
        require(out, "null argument");
        *out = katherine_bound(n);
    });
}

pc_status pc_abrego_bound(int64_t n, int64_t* out)
{
    return guard([&] {
        require(out, "null argument");
        *out = abrego_bound(n);
    });
}

pc_status pc_enveloping_length(const pc_pattern* p, int64_t* out)
{
    return guard([&] {
        require(p && out, "null argument");
        *out = enveloping_length(commensurable(p));
    });
}

pc_status pc_jacob_bounds(int64_t n, const pc_pattern* p, int64_t* lower, int64_t* upper)
{
    return guard([&] {
        require(p && lower && upper, "null argument");
        auto b = jacob_bounds(n, commensurable(p));
        *lower = b.lower;
        *upper = b.upper;
    });
}

pc_status pc_classify_optimal(const pc_line_set* set, int k, pc_classification* out)
{
    return guard([&] {
        require(set && out, "null argument");
        auto c = classify_optimal(set->v, k);
        out->kind = static_cast<pc_optimal_kind>(static_cast<int>(c.kind));
        out->e_size = c.e_size;
        out->o_size = c.o_size;
        out->concentric = c.concentric;
        out->reflected = c.reflected;
        out->optimal_by_count = c.optimal_by_count;
        copy_fixed(out->label, sizeof out->label, c.label());
    });
}

pc_status pc_francis_check(const pc_line_set* set, int k, int* optimal, size_t* violations)
{
    return guard([&] {
        require(set && optimal && violations, "null argument");
        auto r = francis_check(set->v, k);
        *optimal = r.optimal;
        *violations = r.violations.size();
    });
}

pc_status pc_gen_ap(size_t n, const char* start, const char* gap, pc_line_set** out)
{
    return guard([&] {
        require(out, "null argument");
        Rat s = start ? Rat::parse(start) : Rat(0);
        Rat g = gap ? Rat::parse(gap) : Rat(1);
        *out = new pc_line_set{gen_ap(n, s, g)};
    });
}

pc_status pc_gen_eo(size_t n, size_t e_size, pc_line_set** out)
{
    return guard([&] {
        require(out, "null argument");
        *out = new pc_line_set{gen_eo(n, e_size)};
    });
}

pc_status pc_gen_oliver(size_t n, int k, pc_oliver_variant variant, pc_line_set** out)
{
    return guard([&] {
        require(out, "null argument");
        require(variant >= PC_OLIVER_FULL && variant <= PC_OLIVER_DROP_PENULTIMATE, "unknown variant");
        *out = new pc_line_set{gen_oliver(n, k, static_cast<OliverVariant>(static_cast<int>(variant)))};
    });
}

pc_status pc_gen_mary(int k, pc_line_set** out)
{
    return guard([&] {
        require(out, "null argument");
        *out = new pc_line_set{construction_mary(k)};
    });
}

pc_status pc_gen_tridisk(size_t n, pc_plane_set** out)
{
    return guard([&] {
        require(out, "null argument");
        *out = new pc_plane_set{gen_triangular_disk(n)};
    });
}

pc_status pc_residue_table(int k, pc_residue_row* rows, size_t capacity, size_t* count)
{
    return guard([&] {
        require(count && (rows || capacity == 0), "null argument");
        auto table = residue_table(k);
        auto forms = mary_closed_forms();
        *count = table.size();
        for (std::size_t i = 0; i < table.size() && i < capacity; ++i) {
            for (int j = 0; j < 3; ++j)
                rows[i].residues[j] = table[i].residues[j];
            rows[i].count = table[i].count;
            rows[i].has_closed_form = 0;
            rows[i].closed_form = 0;
            for (auto const& f : forms) {
                if (f.residues == table[i].residues) {
                    rows[i].has_closed_form = 1;
                    rows[i].closed_form = f.at(k);
                }
            }
        }
    });
}

pc_status pc_halving_analysis(const pc_plane_set* set, double tolerance, pc_halving_report* out)
{
    return guard([&] {
        require(set && out, "null argument");
        auto t = terence_analysis(set->v, tolerance);
        auto const& h = t.halving;
        out->angle = h.direction.angle();
        out->exact = h.exact;
        copy_fixed(out->direction, sizeof out->direction, h.direction.str());
        out->intersection_x = h.intersection_x;
        out->intersection_y = h.intersection_y;
        out->residual = h.residual;
        out->critical_directions = h.critical_directions;
        for (int m = 0; m < 3; ++m) {
            out->left_counts[m] = h.lines[m].left_count;
            out->right_counts[m] = h.lines[m].right_count;
            out->outside_a_by_rotation[m] = t.profile.outside_a_by_rotation[m];
            out->refined_by_rotation[m] = t.refined_by_rotation[m];
        }
        for (int j = 0; j < 7; ++j)
            out->sizes[j] = t.profile.sizes[j];
        out->rotation_chosen = t.profile.rotation_chosen;
        out->intracompartmental_pairs = t.profile.intracompartmental_pairs;
        copy_fixed(out->exact_bound, sizeof out->exact_bound, t.exact_bound.str());
        out->bound = t.bound;
        out->refined_min = t.refined_min;
    });
}

pc_status pc_search_run(const pc_search_spec* spec, pc_search_result** out)
{
    return guard([&] {
        require(spec && out, "null argument");
        require(spec->mode >= PC_SEARCH_LINE_MAX_AP && spec->mode <= PC_SEARCH_PLANE_LATTICE_MAX,
                "unknown search mode");
        SearchSpec s;
        s.mode = static_cast<SearchMode>(static_cast<int>(spec->mode));
        s.n = spec->n;
        s.k = spec->k;
        if (spec->pattern)
            s.pattern = commensurable(spec->pattern);
        s.allow_reflection = spec->allow_reflection != 0;
        s.diameter = spec->diameter;
        s.radius = spec->radius;
        s.jobs = spec->jobs ? spec->jobs : 1;
        if (spec->budget)
            s.budget = spec->budget;
        auto res = std::make_unique<pc_search_result>();
        res->plane = s.mode == SearchMode::PlaneLatticeMax;
        if (res->plane)
            res->r = plane_lattice_max(s);
        else if (s.mode == SearchMode::LineEnumerateOptimal)
            res->r = enumerate_optimal(s);
        else
            res->r = line_max_search(s);
        *out = res.release();
    });
}

uint64_t pc_search_maximum(const pc_search_result* r)
{
    return r ? r->r.maximum : 0;
}

uint64_t pc_search_states(const pc_search_result* r)
{
    return r ? r->r.states_explored : 0;
}

int pc_search_exhaustive(const pc_search_result* r)
{
    return r && r->r.exhaustive ? 1 : 0;
}

int pc_search_is_plane(const pc_search_result* r)
{
    return r && r->plane ? 1 : 0;
}

size_t pc_search_witness_count(const pc_search_result* r)
{
    if (!r)
        return 0;
    return r->plane ? r->r.plane_witnesses.size() : r->r.line_witnesses.size();
}

pc_status pc_search_witness_render(const pc_search_result* r, size_t i, char** out)
{
    return guard([&] {
        require(r && out, "null argument");
        require(i < pc_search_witness_count(r), "witness index out of range");
        *out = dup_string(r->plane ? render_plane_points(r->r.plane_witnesses[i])
                                   : render_line_points(r->r.line_witnesses[i]));
    });
}

void pc_search_free(pc_search_result* r)
{
    delete r;
}

size_t pc_verify_suite_count(void)
{
    return suite_names().size();
}

const char* pc_verify_suite_name(size_t i)
{
    auto names = suite_names();
    return i < names.size() ? names[i].data() : nullptr;
}

pc_status pc_verify_run(const char* suite, int64_t max_n, unsigned jobs, pc_verify_report** out)
{
    return guard([&] {
        require(suite && out, "null argument");
        *out = new pc_verify_report{run_suite(suite, max_n, jobs ? jobs : 1)};
    });
}

size_t pc_verify_case_count(const pc_verify_report* r)
{
    return r ? r->r.cases.size() : 0;
}

const char* pc_verify_case_name(const pc_verify_report* r, size_t i)
{
    return r && i < r->r.cases.size() ? r->r.cases[i].name.c_str() : nullptr;
}

int pc_verify_case_passed(const pc_verify_report* r, size_t i)
{
    return r && i < r->r.cases.size() && r->r.cases[i].passed ? 1 : 0;
}

const char* pc_verify_case_detail(const pc_verify_report* r, size_t i)
{
    return r && i < r->r.cases.size() ? r->r.cases[i].detail.c_str() : nullptr;
}

int pc_verify_all_passed(const pc_verify_report* r)
{
    return r && r->r.all_passed() ? 1 : 0;
}

void pc_verify_free(pc_verify_report* r)
{
    delete r;
}

}  // extern "C"
