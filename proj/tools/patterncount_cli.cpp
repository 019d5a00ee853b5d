#include <patterncount/patterncount.h>

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct CliError {
    pc_status status;
    std::string message;
};

void check(pc_status s)
{
    if (s != PC_OK)
        throw CliError{s, pc_last_error()};
}

int exit_code_for(pc_status s)
{
    switch (s) {
    case PC_ERR_PARSE:
    case PC_ERR_DUPLICATE_POINT:
    case PC_ERR_IO:
    case PC_ERR_INVALID_ARGUMENT:
    case PC_ERR_BAD_ARITY:
    case PC_ERR_INFEASIBLE_PARAMETERS:
    case PC_ERR_INCOMMENSURABLE:
    case PC_ERR_ARITY_MISMATCH:
        return kUsage;
    default:
        return kFailed;
    }
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using LineSet = std::unique_ptr<pc_line_set, Deleter<pc_line_set, pc_line_set_free>>;
using PlaneSet = std::unique_ptr<pc_plane_set, Deleter<pc_plane_set, pc_plane_set_free>>;
using Pattern = std::unique_ptr<pc_pattern, Deleter<pc_pattern, pc_pattern_free>>;
using Search = std::unique_ptr<pc_search_result, Deleter<pc_search_result, pc_search_free>>;
using Verify = std::unique_ptr<pc_verify_report, Deleter<pc_verify_report, pc_verify_free>>;

std::string take(char* s)
{
    std::string out(s ? s : "");
    pc_string_free(s);
    return out;
}

class Digest {
  public:
    void add(std::string_view bytes)
    {
        for (unsigned char c : bytes) {
            h_ ^= c;
            h_ *= 0x100000001b3ull;
        }
        // Field separator so ("ab","c") and ("a","bc") differ.
        h_ ^= 0xff;
        h_ *= 0x100000001b3ull;
    }
    std::string hex() const
    {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
        return buf;
    }

  private:
    std::uint64_t h_ = 0xcbf29ce484222325ull;
};

std::string read_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CliError{PC_ERR_IO, "cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_lines(std::string const& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty())
            out.push_back(line);
    }
    return out;
}

LineSet load_line(std::string const& path, Digest& d)
{
    std::string text = read_file(path);
    d.add(text);
    pc_line_set* s = nullptr;
    check(pc_line_set_parse(text.c_str(), path.c_str(), &s));
    return LineSet(s);
}

PlaneSet load_plane(std::string const& path, Digest& d)
{
    std::string text = read_file(path);
    d.add(text);
    pc_plane_set* s = nullptr;
    check(pc_plane_set_parse(text.c_str(), path.c_str(), &s));
    return PlaneSet(s);
}

// Inline "{...}" lists are used as given; anything else names a file.
Pattern load_pattern(std::string const& arg, Digest& d)
{
    bool inline_list = arg.find('{') != std::string::npos;
    std::string text = inline_list ? arg : read_file(arg);
    d.add(text);
    pc_pattern* p = nullptr;
    check(pc_pattern_parse(text.c_str(), inline_list ? "<pattern>" : arg.c_str(), &p));
    return Pattern(p);
}

std::string str(std::int64_t v)
{
    return std::to_string(v);
}

std::string str(std::uint64_t v)
{
    return std::to_string(v);
}

unsigned default_jobs()
{
    if (char const* env = std::getenv("PATTERNCOUNT_JOBS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 4096)
            return static_cast<unsigned>(v);
    }
    return 1;
}

json pattern_bounds(std::int64_t n, pc_pattern const* p)
{
    json b;
    std::int64_t k = static_cast<std::int64_t>(pc_pattern_size(p));
    std::int64_t general = 0;
    check(pc_general_upper_bound(n, k, &general));
    b["general"] = str(general);
    if (pc_pattern_commensurable(p)) {
        std::int64_t lo = 0, hi = 0, ell = 0;
        check(pc_jacob_bounds(n, p, &lo, &hi));
        check(pc_enveloping_length(p, &ell));
        b["jacobLower"] = str(lo);
        b["jacobUpper"] = str(hi);
        b["envelopingLength"] = str(ell);
    }
    return b;
}

json eq_bounds(std::int64_t n)
{
    std::int64_t kb = 0, ab = 0;
    check(pc_katherine_bound(n, &kb));
    check(pc_abrego_bound(n, &ab));
    return json{{"katherine", str(kb)}, {"abrego", str(ab)}};
}

json classification(pc_line_set const* s, int k)
{
    pc_classification c{};
    check(pc_classify_optimal(s, k, &c));
    json out{{"label", c.label}, {"optimalByCount", c.optimal_by_count != 0}};
    if (c.kind == PC_KIND_EO) {
        out["eSize"] = str(static_cast<std::uint64_t>(c.e_size));
        out["oSize"] = str(static_cast<std::uint64_t>(c.o_size));
        out["concentric"] = c.concentric != 0;
        out["reflected"] = c.reflected != 0;
    }
    return out;
}

struct Run {
    json report;
    int code = kOk;
};

struct Options {
    std::string input;
    std::string pattern;
    std::string output;
    std::string emit_plot;
    std::string kind;
    std::string mode;
    std::string suite;
    std::string variant = "full";
    std::string start = "0";
    std::string gap = "1";
    int k = 3;
    std::int64_t n = 0;
    std::int64_t e_size = 0;
    std::int64_t diameter = 0;
    std::int64_t radius = 0;
    std::int64_t max_n = 0;
    std::uint64_t budget = 0;
    double tolerance = 1e-9;
    bool allow_reflection = false;
    bool eq = false;
    unsigned jobs = 1;
};

Run count_ap(Options const& o, Digest& d)
{
    auto s = load_line(o.input, d);
    std::uint64_t c = 0;
    check(pc_count_kap(s.get(), o.k, o.jobs, &c));
    std::int64_t n = static_cast<std::int64_t>(pc_line_set_size(s.get()));
    std::int64_t general = 0;
    check(pc_general_upper_bound(n, o.k, &general));
    Run r;
    r.report["n"] = str(n);
    r.report["k"] = str(static_cast<std::int64_t>(o.k));
    r.report["counts"] = {{"arithmeticProgressions", str(c)}};
    r.report["bounds"] = {{"general", str(general)}};
    r.report["optimal"] = static_cast<std::int64_t>(c) == general;
    if (o.k >= 3 && n >= o.k)
        r.report["classification"] = classification(s.get(), o.k);
    return r;
}

Run count_pattern(Options const& o, Digest& d)
{
    auto s = load_line(o.input, d);
    auto p = load_pattern(o.pattern, d);
    std::uint64_t c = 0;
    check(pc_count_instances(s.get(), p.get(), o.allow_reflection, o.jobs, &c));
    std::int64_t n = static_cast<std::int64_t>(pc_line_set_size(s.get()));
    Run r;
    r.report["n"] = str(n);
    r.report["pattern"] = take([&] {
        char* t = nullptr;
        check(pc_pattern_str(p.get(), &t));
        return t;
    }());
    r.report["commensurable"] = pc_pattern_commensurable(p.get()) != 0;
    r.report["allowReflection"] = o.allow_reflection;
    r.report["counts"] = {{"instances", str(c)}};
    r.report["bounds"] = pattern_bounds(n, p.get());
    return r;
}

Run count_eq(Options const& o, Digest& d)
{
    auto s = load_plane(o.input, d);
    std::uint64_t c = 0;
    check(pc_count_equilateral(s.get(), o.jobs, &c));
    std::int64_t n = static_cast<std::int64_t>(pc_plane_set_size(s.get()));
    Run r;
    r.report["n"] = str(n);
    r.report["counts"] = {{"equilateral", str(c)}};
    r.report["bounds"] = eq_bounds(n);
    return r;
}

void write_plot(std::string const& path, std::string const& text)
{
    check(pc_write_file(path.c_str(), text.c_str()));
}

Run bound(Options const& o, Digest& d, bool k_given)
{
    if (o.n < 0)
        throw CliError{PC_ERR_INVALID_ARGUMENT, "--n must be nonnegative"};
    int picked = int(k_given) + int(o.eq) + int(!o.pattern.empty());
    if (picked > 1)
        throw CliError{PC_ERR_INVALID_ARGUMENT, "use at most one of --k, --eq, --pattern"};
    Run r;
    r.report["n"] = str(o.n);
    std::ostringstream plot;
    if (!o.pattern.empty()) {
        auto p = load_pattern(o.pattern, d);
        r.report["pattern"] = take([&] {
            char* t = nullptr;
            check(pc_pattern_str(p.get(), &t));
            return t;
        }());
        r.report["bounds"] = pattern_bounds(o.n, p.get());
        if (!o.emit_plot.empty()) {
            plot << "n\tgeneral";
            bool comm = pc_pattern_commensurable(p.get());
            if (comm)
                plot << "\tjacobLower\tjacobUpper";
            plot << "\n";
            for (std::int64_t m = 1; m <= o.n; ++m) {
                std::int64_t g = 0;
                check(pc_general_upper_bound(m, static_cast<std::int64_t>(pc_pattern_size(p.get())), &g));
                plot << m << "\t" << g;
                if (comm) {
                    std::int64_t lo = 0, hi = 0;
                    check(pc_jacob_bounds(m, p.get(), &lo, &hi));
                    plot << "\t" << lo << "\t" << hi;
                }
                plot << "\n";
            }
        }
    } else if (o.eq) {
        r.report["bounds"] = eq_bounds(o.n);
        if (!o.emit_plot.empty()) {
            plot << "n\ttridiskCount\tkatherine\tabrego\n";
            for (std::int64_t m = 1; m <= o.n; ++m) {
                pc_plane_set* s = nullptr;
                check(pc_gen_tridisk(static_cast<std::size_t>(m), &s));
                PlaneSet owned(s);
                std::uint64_t c = 0;
                check(pc_count_equilateral(s, o.jobs, &c));
                std::int64_t kb = 0, ab = 0;
                check(pc_katherine_bound(m, &kb));
                check(pc_abrego_bound(m, &ab));
                plot << m << "\t" << c << "\t" << kb << "\t" << ab << "\n";
            }
        }
    } else {
        std::int64_t g = 0;
        check(pc_general_upper_bound(o.n, o.k, &g));
        r.report["k"] = str(static_cast<std::int64_t>(o.k));
        r.report["bounds"] = {{"general", str(g)}};
        if (!o.emit_plot.empty()) {
            plot << "n\tgeneral\n";
            for (std::int64_t m = 1; m <= o.n; ++m) {
                check(pc_general_upper_bound(m, o.k, &g));
                plot << m << "\t" << g << "\n";
            }
        }
    }
    if (!o.emit_plot.empty()) {
        write_plot(o.emit_plot, plot.str());
        r.report["plot"] = o.emit_plot;
    }
    return r;
}

Run gen(Options const& o, Digest&, std::string& raw_output)
{
    std::string text;
    std::int64_t n = 0;
    if (o.kind == "tridisk") {
        pc_plane_set* s = nullptr;
        check(pc_gen_tridisk(static_cast<std::size_t>(o.n), &s));
        PlaneSet owned(s);
        char* t = nullptr;
        check(pc_plane_set_render(s, &t));
        text = take(t);
        n = static_cast<std::int64_t>(pc_plane_set_size(s));
    } else {
        pc_line_set* s = nullptr;
        if (o.kind == "ap") {
            check(pc_gen_ap(static_cast<std::size_t>(o.n), o.start.c_str(), o.gap.c_str(), &s));
        } else if (o.kind == "eo") {
            check(pc_gen_eo(static_cast<std::size_t>(o.n), static_cast<std::size_t>(o.e_size), &s));
        } else if (o.kind == "oliver") {
            pc_oliver_variant v = PC_OLIVER_FULL;
            if (o.variant == "dropSecond")
                v = PC_OLIVER_DROP_SECOND;
            else if (o.variant == "dropPenultimate")
                v = PC_OLIVER_DROP_PENULTIMATE;
            check(pc_gen_oliver(static_cast<std::size_t>(o.n), o.k, v, &s));
        } else {
            check(pc_gen_mary(o.k, &s));
        }
        LineSet owned(s);
        char* t = nullptr;
        check(pc_line_set_render(s, &t));
        text = take(t);
        n = static_cast<std::int64_t>(pc_line_set_size(s));
    }
    Run r;
    if (o.output.empty()) {
        raw_output = text;
        return r;
    }
    check(pc_write_file(o.output.c_str(), text.c_str()));
    Digest out;
    out.add(text);
    r.report["kind"] = o.kind;
    r.report["n"] = str(n);
    r.report["output"] = o.output;
    r.report["outputDigest"] = out.hex();
    return r;
}

Run search(Options const& o, Digest& d)
{
    pc_search_spec spec{};
    if (o.mode == "line-max-ap")
        spec.mode = PC_SEARCH_LINE_MAX_AP;
    else if (o.mode == "line-max-pattern")
        spec.mode = PC_SEARCH_LINE_MAX_PATTERN;
    else if (o.mode == "line-enumerate-optimal")
        spec.mode = PC_SEARCH_LINE_ENUMERATE_OPTIMAL;
    else
        spec.mode = PC_SEARCH_PLANE_LATTICE_MAX;
    Pattern p;
    if (!o.pattern.empty())
        p = load_pattern(o.pattern, d);
    spec.n = static_cast<std::size_t>(o.n);
    spec.k = p ? static_cast<int>(pc_pattern_size(p.get())) : o.k;
    spec.pattern = p.get();
    spec.allow_reflection = o.allow_reflection;
    spec.diameter = o.diameter;
    spec.radius = o.radius;
    spec.jobs = o.jobs;
    spec.budget = o.budget;
    pc_search_result* raw = nullptr;
    check(pc_search_run(&spec, &raw));
    Search res(raw);
    Run r;
    r.report["mode"] = o.mode;
    r.report["n"] = str(o.n);
    if (p) {
        char* t = nullptr;
        check(pc_pattern_str(p.get(), &t));
        r.report["pattern"] = take(t);
    } else if (spec.mode != PC_SEARCH_PLANE_LATTICE_MAX) {
        r.report["k"] = str(static_cast<std::int64_t>(o.k));
    }
    if (spec.mode == PC_SEARCH_PLANE_LATTICE_MAX) {
        r.report["radius"] = str(o.radius);
        r.report["bounds"] = eq_bounds(o.n);
    } else {
        r.report["diameter"] = str(o.diameter);
        std::int64_t g = 0;
        check(pc_general_upper_bound(o.n, spec.k, &g));
        r.report["bounds"] = {{"general", str(g)}};
    }
    r.report["maximum"] = str(pc_search_maximum(res.get()));
    r.report["exhaustive"] = pc_search_exhaustive(res.get()) != 0;
    r.report["statesExplored"] = str(pc_search_states(res.get()));
    json ws = json::array();
    for (std::size_t i = 0; i < pc_search_witness_count(res.get()); ++i) {
        char* t = nullptr;
        check(pc_search_witness_render(res.get(), i, &t));
        ws.push_back(split_lines(take(t)));
    }
    r.report["witnesses"] = ws;
    return r;
}

Run halving(Options const& o, Digest& d)
{
    auto s = load_plane(o.input, d);
    pc_halving_report h{};
    check(pc_halving_analysis(s.get(), o.tolerance, &h));
    std::uint64_t c = 0;
    check(pc_count_equilateral(s.get(), o.jobs, &c));
    std::int64_t n = static_cast<std::int64_t>(pc_plane_set_size(s.get()));
    Run r;
    r.report["n"] = str(n);
    json dir{{"exact", h.exact != 0}, {"angle", h.angle}};
    if (h.exact)
        dir["value"] = h.direction;
    r.report["direction"] = dir;
    r.report["intersection"] = {h.intersection_x, h.intersection_y};
    r.report["residuals"] = {{"concurrency", h.residual}};
    r.report["criticalDirections"] = str(static_cast<std::uint64_t>(h.critical_directions));
    json lines = json::array();
    for (int m = 0; m < 3; ++m) {
        lines.push_back({{"left", str(static_cast<std::uint64_t>(h.left_counts[m]))},
                         {"right", str(static_cast<std::uint64_t>(h.right_counts[m]))}});
    }
    r.report["halvingLines"] = lines;
    json sizes = json::array();
    for (auto v : h.sizes)
        sizes.push_back(str(static_cast<std::uint64_t>(v)));
    json outside = json::array(), refined = json::array();
    for (int m = 0; m < 3; ++m) {
        outside.push_back(str(h.outside_a_by_rotation[m]));
        refined.push_back(str(h.refined_by_rotation[m]));
    }
    r.report["compartments"] = {{"sizes", sizes},
                                {"rotationChosen", h.rotation_chosen},
                                {"intracompartmentalPairs", str(h.intracompartmental_pairs)},
                                {"outsideAByRotation", outside}};
    r.report["counts"] = {{"equilateral", str(c)}};
    json b = eq_bounds(n);
    b["terence"] = str(h.bound);
    b["terenceExact"] = h.exact_bound;
    b["refinedByRotation"] = refined;
    b["refinedMin"] = str(h.refined_min);
    r.report["bounds"] = b;
    return r;
}

Run verify(Options const& o, Digest&)
{
    std::vector<std::string> suites;
    if (o.suite == "all") {
        for (std::size_t i = 0; i < pc_verify_suite_count(); ++i)
            suites.emplace_back(pc_verify_suite_name(i));
    } else {
        suites.push_back(o.suite);
    }
    Run r;
    json out = json::array();
    bool all = true;
    for (auto const& name : suites) {
        pc_verify_report* raw = nullptr;
        check(pc_verify_run(name.c_str(), o.max_n, o.jobs, &raw));
        Verify rep(raw);
        json cases = json::array();
        for (std::size_t i = 0; i < pc_verify_case_count(rep.get()); ++i) {
            bool ok = pc_verify_case_passed(rep.get(), i) != 0;
            cases.push_back({{"name", pc_verify_case_name(rep.get(), i)},
                             {"result", ok ? "pass" : "fail"},
                             {"detail", pc_verify_case_detail(rep.get(), i)}});
        }
        bool passed = pc_verify_all_passed(rep.get()) != 0;
        all = all && passed;
        out.push_back({{"suite", name}, {"result", passed ? "pass" : "fail"}, {"cases", cases}});
    }
    r.report["maxN"] = str(o.max_n);
    r.report["suites"] = out;
    r.report["verdict"] = all ? "pass" : "fail";
    r.code = all ? kOk : kFailed;
    return r;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Count similar copies of point patterns on the line and in the plane"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pc_version()));
    Options o;
    o.jobs = default_jobs();

    auto add_jobs = [&](CLI::App* c) {
        c->add_option("--jobs", o.jobs, "Worker threads (default: PATTERNCOUNT_JOBS or 1)")
            ->check(CLI::Range(1u, 4096u));
    };

    auto* c_ap = app.add_subcommand("count-ap", "Count k-term arithmetic progressions in a line point file");
    c_ap->add_option("--input", o.input, "Line point file")->required();
    c_ap->add_option("--k", o.k, "Progression length")->required();
    add_jobs(c_ap);

    auto* c_pat = app.add_subcommand("count-pattern", "Count directly similar copies of a pattern");
    c_pat->add_option("--input", o.input, "Line point file")->required();
    c_pat->add_option("--pattern", o.pattern, "Pattern file or inline list such as {0,1,3}")->required();
    c_pat->add_flag("--allow-reflection", o.allow_reflection, "Also count mirrored copies");
    add_jobs(c_pat);

    auto* c_eq = app.add_subcommand("count-eq", "Count equilateral triangles in a plane point file");
    c_eq->add_option("--input", o.input, "Plane point file")->required();
    add_jobs(c_eq);

    auto* c_bound = app.add_subcommand("bound", "Evaluate upper and lower bound formulas");
    c_bound->add_option("--n", o.n, "Number of points")->required();
    auto* k_opt = c_bound->add_option("--k", o.k, "Arithmetic progression length");
    c_bound->add_flag("--eq", o.eq, "Equilateral triangle bounds");
    c_bound->add_option("--pattern", o.pattern, "Pattern file or inline list");
    c_bound->add_option("--emit-plot", o.emit_plot, "Write n-vs-bound TSV for n = 1..N");
    add_jobs(c_bound);

    auto* c_gen = app.add_subcommand("gen", "Generate an extremal configuration");
    c_gen->add_option("--kind", o.kind, "Configuration kind")
        ->required()
        ->check(CLI::IsMember({"ap", "eo", "oliver", "mary", "tridisk"}));
    c_gen->add_option("--n", o.n, "Number of points (ap, eo, oliver, tridisk)");
    c_gen->add_option("--k", o.k, "Progression length (oliver) or scale (mary)");
    c_gen->add_option("--start", o.start, "First term (ap)");
    c_gen->add_option("--gap", o.gap, "Common difference (ap)");
    c_gen->add_option("--e-size", o.e_size, "Number of even points (eo)");
    c_gen->add_option("--variant", o.variant, "Oliver variant")
        ->check(CLI::IsMember({"full", "dropSecond", "dropPenultimate"}));
    c_gen->add_option("--output", o.output, "Write the point file here and print a report");

    auto* c_search = app.add_subcommand("search", "Search for extremal configurations");
    c_search->add_option("--mode", o.mode, "Search mode")
        ->required()
        ->check(CLI::IsMember({"line-max-ap", "line-max-pattern", "line-enumerate-optimal", "plane-lattice-max"}));
    c_search->add_option("--n", o.n, "Number of points")->required();
    c_search->add_option("--k", o.k, "Progression length");
    c_search->add_option("--pattern", o.pattern, "Pattern file or inline list");
    c_search->add_flag("--allow-reflection", o.allow_reflection, "Count mirrored copies too");
    c_search->add_option("--diameter", o.diameter, "Line modes: search subsets of {0..D}");
    c_search->add_option("--radius", o.radius, "Plane mode: lattice pool radius");
    c_search->add_option("--budget", o.budget, "Candidate sets to examine before giving up exhaustiveness");
    add_jobs(c_search);

    auto* c_half = app.add_subcommand("halving", "Concurrent halving lines, compartments and the compartment bound");
    c_half->add_option("--input", o.input, "Plane point file")->required();
    c_half->add_option("--tolerance", o.tolerance, "Concurrency residual tolerance");
    add_jobs(c_half);

    auto* c_verify = app.add_subcommand("verify", "Run a verification suite");
    c_verify->add_option("--suite", o.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"eustace", "thomas", "imogene", "oliver", "mary", "jacob", "katherine", "all"}));
    c_verify->add_option("--max-n", o.max_n, "Largest n swept (default per suite)");
    add_jobs(c_verify);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    std::string command = sub->get_name();
    Digest digest;
    for (int i = 1; i < argc; ++i)
        digest.add(argv[i]);
    auto t0 = std::chrono::steady_clock::now();
    Run run;
    std::string raw_output;
    try {
        if (command == "count-ap")
            run = count_ap(o, digest);
        else if (command == "count-pattern")
            run = count_pattern(o, digest);
        else if (command == "count-eq")
            run = count_eq(o, digest);
        else if (command == "bound")
            run = bound(o, digest, k_opt->count() > 0);
        else if (command == "gen")
            run = gen(o, digest, raw_output);
        else if (command == "search")
            run = search(o, digest);
        else if (command == "halving")
            run = halving(o, digest);
        else
            run = verify(o, digest);
    } catch (CliError const& e) {
        std::string name = pc_status_name(e.status);
        std::string msg = e.message.rfind(name, 0) == 0 ? e.message : name + ": " + e.message;
        std::cerr << "patterncount " << command << ": " << msg << "\n";
        return exit_code_for(e.status);
    }
    if (command == "gen" && o.output.empty()) {
        std::cout << raw_output;
        return kOk;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    json report;
    report["command"] = command;
    report["inputsDigest"] = digest.hex();
    for (auto& [key, value] : run.report.items())
        report[key] = value;
    report["timingMs"] = ms;
    std::cout << report.dump(2) << "\n";
    return run.code;
}
