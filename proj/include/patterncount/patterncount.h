#ifndef PATTERNCOUNT_H
#define PATTERNCOUNT_H

/* C interface to the patterncount library. Every handle is opaque and owned
 * by the caller once returned; release it with the matching *_free function.
 * Strings returned through char** are released with pc_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define PC_API __declspec(dllexport)
#else
#  define PC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pc_status {
    PC_OK = 0,
    PC_ERR_BAD_ARITY = 1,
    PC_ERR_PARSE = 2,
    PC_ERR_DUPLICATE_POINT = 3,
    PC_ERR_INFEASIBLE_PARAMETERS = 4,
    PC_ERR_INCOMMENSURABLE = 5,
    PC_ERR_AMBIGUOUS_COMPARISON = 6,
    PC_ERR_NO_SIGN_CHANGE = 7,
    PC_ERR_METHOD_MISMATCH = 8,
    PC_ERR_TOO_LARGE = 9,
    PC_ERR_DEGENERATE_PAIR = 10,
    PC_ERR_NOT_ORDERED = 11,
    PC_ERR_ARITY_MISMATCH = 12,
    PC_ERR_INVALID_ARGUMENT = 13,
    PC_ERR_IO = 14,
    PC_ERR_INTERNAL = 99
} pc_status;

PC_API const char* pc_version(void);
PC_API const char* pc_status_name(pc_status status);
/* Message of the most recent failure on the calling thread. */
PC_API const char* pc_last_error(void);
PC_API void pc_string_free(char* s);

/* ---- point sets ------------------------------------------------------ */

typedef struct pc_line_set pc_line_set;
typedef struct pc_plane_set pc_plane_set;
typedef struct pc_pattern pc_pattern;

/* `source` names the input in error messages and may be NULL. */
PC_API pc_status pc_line_set_parse(const char* text, const char* source, pc_line_set** out);
PC_API pc_status pc_line_set_parse_file(const char* path, pc_line_set** out);
PC_API pc_status pc_line_set_render(const pc_line_set* set, char** out);
PC_API size_t pc_line_set_size(const pc_line_set* set);
PC_API void pc_line_set_free(pc_line_set* set);

PC_API pc_status pc_plane_set_parse(const char* text, const char* source, pc_plane_set** out);
PC_API pc_status pc_plane_set_parse_file(const char* path, pc_plane_set** out);
PC_API pc_status pc_plane_set_render(const pc_plane_set* set, char** out);
PC_API size_t pc_plane_set_size(const pc_plane_set* set);
PC_API void pc_plane_set_free(pc_plane_set* set);

/* Inline list "{0,1,3}" or one value per line; values may use sqrt3. */
PC_API pc_status pc_pattern_parse(const char* text, const char* source, pc_pattern** out);
PC_API pc_status pc_pattern_parse_file(const char* path, pc_pattern** out);
PC_API size_t pc_pattern_size(const pc_pattern* p);
PC_API int pc_pattern_commensurable(const pc_pattern* p);
/* Normalized form, e.g. "{0,1,3}". */
PC_API pc_status pc_pattern_str(const pc_pattern* p, char** out);
PC_API void pc_pattern_free(pc_pattern* p);

PC_API pc_status pc_write_file(const char* path, const char* text);

/* ---- counting and bounds --------------------------------------------- */

PC_API pc_status pc_count_kap(const pc_line_set* set, int k, unsigned jobs, uint64_t* out);
PC_API pc_status pc_count_instances(const pc_line_set* set, const pc_pattern* p, int allow_reflection,
                                    unsigned jobs, uint64_t* out);
PC_API pc_status pc_brute_count(const pc_line_set* set, const pc_pattern* p, int allow_reflection,
                                uint64_t* out);
PC_API pc_status pc_count_equilateral(const pc_plane_set* set, unsigned jobs, uint64_t* out);
PC_API pc_status pc_brute_count_equilateral(const pc_plane_set* set, uint64_t* out);

PC_API pc_status pc_sap_max(int64_t n, int64_t k, int64_t* out);
PC_API pc_status pc_general_upper_bound(int64_t n, int64_t k, int64_t* out);
PC_API pc_status pc_katherine_bound(int64_t n, int64_t* out);
PC_API pc_status pc_abrego_bound(int64_t n, int64_t* out);
PC_API pc_status pc_enveloping_length(const pc_pattern* p, int64_t* out);
PC_API pc_status pc_jacob_bounds(int64_t n, const pc_pattern* p, int64_t* lower, int64_t* upper);

/* ---- line optimality --------------------------------------------------- */

typedef enum pc_optimal_kind {
    PC_KIND_AP = 0,
    PC_KIND_EO = 1,
    PC_KIND_AP_MINUS_SECOND = 2,
    PC_KIND_AP_MINUS_PENULTIMATE = 3,
    PC_KIND_NOT_OPTIMAL = 4,
    PC_KIND_UNCLASSIFIED = 5
} pc_optimal_kind;

typedef struct pc_classification {
    pc_optimal_kind kind;
    size_t e_size;
    size_t o_size;
    int concentric;
    int reflected;
    int optimal_by_count;
    char label[96];
} pc_classification;

PC_API pc_status pc_classify_optimal(const pc_line_set* set, int k, pc_classification* out);
PC_API pc_status pc_francis_check(const pc_line_set* set, int k, int* optimal, size_t* violations);

/* ---- generators ---------------------------------------------------------- */

typedef enum pc_oliver_variant {
    PC_OLIVER_FULL = 0,
    PC_OLIVER_DROP_SECOND = 1,
    PC_OLIVER_DROP_PENULTIMATE = 2
} pc_oliver_variant;

/* start and gap are rationals "p" or "p/q"; NULL means 0 and 1. */
PC_API pc_status pc_gen_ap(size_t n, const char* start, const char* gap, pc_line_set** out);
PC_API pc_status pc_gen_eo(size_t n, size_t e_size, pc_line_set** out);
PC_API pc_status pc_gen_oliver(size_t n, int k, pc_oliver_variant variant, pc_line_set** out);
PC_API pc_status pc_gen_mary(int k, pc_line_set** out);
PC_API pc_status pc_gen_tridisk(size_t n, pc_plane_set** out);

typedef struct pc_residue_row {
    int residues[3];
    uint64_t count;
    int has_closed_form;
    int64_t closed_form;
} pc_residue_row;

/* Writes up to `capacity` rows; *count receives the full row count. */
PC_API pc_status pc_residue_table(int k, pc_residue_row* rows, size_t capacity, size_t* count);

/* ---- halving lines and the compartment bound ------------------------------ */

typedef struct pc_halving_report {
    double angle;
    int exact;
    char direction[256];
    double intersection_x;
    double intersection_y;
    double residual;
    size_t critical_directions;
    size_t left_counts[3];
    size_t right_counts[3];
    size_t sizes[7];
    int rotation_chosen;
    uint64_t intracompartmental_pairs;
    uint64_t outside_a_by_rotation[3];
    char exact_bound[64];
    int64_t bound;
    int64_t refined_by_rotation[3];
    int64_t refined_min;
} pc_halving_report;

PC_API pc_status pc_halving_analysis(const pc_plane_set* set, double tolerance, pc_halving_report* out);

/* ---- searches ---------------------------------------------------------------- */

typedef enum pc_search_mode {
    PC_SEARCH_LINE_MAX_AP = 0,
    PC_SEARCH_LINE_MAX_PATTERN = 1,
    PC_SEARCH_LINE_ENUMERATE_OPTIMAL = 2,
    PC_SEARCH_PLANE_LATTICE_MAX = 3
} pc_search_mode;

typedef struct pc_search_spec {
    pc_search_mode mode;
    size_t n;
    int k;
    const pc_pattern* pattern; /* may be NULL */
    int allow_reflection;
    int64_t diameter;
    int64_t radius;
    unsigned jobs;
    uint64_t budget; /* 0 selects the library default */
} pc_search_spec;

typedef struct pc_search_result pc_search_result;

PC_API pc_status pc_search_run(const pc_search_spec* spec, pc_search_result** out);
PC_API uint64_t pc_search_maximum(const pc_search_result* r);
PC_API uint64_t pc_search_states(const pc_search_result* r);
PC_API int pc_search_exhaustive(const pc_search_result* r);
PC_API int pc_search_is_plane(const pc_search_result* r);
PC_API size_t pc_search_witness_count(const pc_search_result* r);
/* Witness i in point-file form. */
PC_API pc_status pc_search_witness_render(const pc_search_result* r, size_t i, char** out);
PC_API void pc_search_free(pc_search_result* r);

/* ---- verification suites ------------------------------------------------------ */

typedef struct pc_verify_report pc_verify_report;

PC_API size_t pc_verify_suite_count(void);
PC_API const char* pc_verify_suite_name(size_t i);
/* max_n <= 0 keeps each suite's default sweep. */
PC_API pc_status pc_verify_run(const char* suite, int64_t max_n, unsigned jobs, pc_verify_report** out);
PC_API size_t pc_verify_case_count(const pc_verify_report* r);
PC_API const char* pc_verify_case_name(const pc_verify_report* r, size_t i);
PC_API int pc_verify_case_passed(const pc_verify_report* r, size_t i);
PC_API const char* pc_verify_case_detail(const pc_verify_report* r, size_t i);
PC_API int pc_verify_all_passed(const pc_verify_report* r);
PC_API void pc_verify_free(pc_verify_report* r);

#ifdef __cplusplus
}
#endif

#endif /* PATTERNCOUNT_H */
