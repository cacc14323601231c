#ifndef HYPEROCT_H
#define HYPEROCT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HYPEROCT_BUILDING)
#    define HYPEROCT_API __declspec(dllexport)
#  else
#    define HYPEROCT_API __declspec(dllimport)
#  endif
#else
#  define HYPEROCT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hyperoct_status {
  HYPEROCT_OK = 0,
  HYPEROCT_INVALID_ARGUMENT = 1,
  HYPEROCT_DEGREE_MISMATCH = 2,
  HYPEROCT_OUT_OF_RANGE = 3,
  HYPEROCT_PRECONDITION_VIOLATION = 4,
  HYPEROCT_NOT_DIVISIBLE = 5,
  HYPEROCT_OVERFLOW = 6,
  HYPEROCT_BUDGET_EXCEEDED = 7,
  HYPEROCT_BUFFER_TOO_SMALL = 8,
  HYPEROCT_INTERNAL = 9
} hyperoct_status;

/* Message of the last failed call on this thread; "" if none. */
HYPEROCT_API const char* hyperoct_last_error(void);
HYPEROCT_API const char* hyperoct_status_name(hyperoct_status status);

/* Subsets of [n-1]_0 = {0, ..., n-1} are passed as bit masks: bit i set
   means i is a member. */

typedef struct hyperoct_perm hyperoct_perm;
typedef struct hyperoct_poly hyperoct_poly;
typedef struct hyperoct_report_list hyperoct_report_list;

/* ---- signed permutations ---------------------------------------------- */

HYPEROCT_API hyperoct_status hyperoct_perm_parse(const char* text,
                                                 hyperoct_perm** out);
HYPEROCT_API hyperoct_status hyperoct_perm_from_window(const int* window,
                                                       unsigned n,
                                                       hyperoct_perm** out);
HYPEROCT_API hyperoct_status hyperoct_perm_identity(unsigned n,
                                                    hyperoct_perm** out);
HYPEROCT_API hyperoct_status hyperoct_perm_generator(unsigned n, unsigned i,
                                                     hyperoct_perm** out);
HYPEROCT_API hyperoct_status hyperoct_perm_longest(unsigned n,
                                                   hyperoct_perm** out);
HYPEROCT_API hyperoct_status hyperoct_perm_clone(const hyperoct_perm* w,
                                                 hyperoct_perm** out);
HYPEROCT_API void hyperoct_perm_free(hyperoct_perm* w);

HYPEROCT_API unsigned hyperoct_perm_degree(const hyperoct_perm* w);
/* Copies w(1..n) into buf; *len receives n. */
HYPEROCT_API hyperoct_status hyperoct_perm_window(const hyperoct_perm* w,
                                                  int* buf, size_t cap,
                                                  size_t* len);
/* NUL-terminated "[a,b,...]"; *len excludes the terminator. */
HYPEROCT_API hyperoct_status hyperoct_perm_format(const hyperoct_perm* w,
                                                  char* buf, size_t cap,
                                                  size_t* len);
HYPEROCT_API int hyperoct_perm_equal(const hyperoct_perm* a,
                                     const hyperoct_perm* b);

/* (ab)(x) = a(b(x)). */
HYPEROCT_API hyperoct_status hyperoct_perm_compose(const hyperoct_perm* a,
                                                   const hyperoct_perm* b,
                                                   hyperoct_perm** out);
HYPEROCT_API hyperoct_status hyperoct_perm_inverse(const hyperoct_perm* w,
                                                   hyperoct_perm** out);

typedef struct hyperoct_stats {
  unsigned inv;
  unsigned neg;
  unsigned nsp;
  unsigned length;
  unsigned L;
  unsigned a;
  unsigned b;
  unsigned c;
  uint64_t descent_mask;
} hyperoct_stats;

HYPEROCT_API hyperoct_status hyperoct_perm_stats(const hyperoct_perm* w,
                                                 hyperoct_stats* out);
/* L by direct count over [+-n]_0, independent of the column formula. */
HYPEROCT_API hyperoct_status hyperoct_perm_L_direct(const hyperoct_perm* w,
                                                    unsigned* out);
HYPEROCT_API hyperoct_status hyperoct_perm_row_pattern(const hyperoct_perm* w,
                                                       int* buf, size_t cap,
                                                       size_t* len);

typedef enum hyperoct_chessboard {
  HYPEROCT_CHESSBOARD_EVEN = 0,
  HYPEROCT_CHESSBOARD_ODD = 1,
  HYPEROCT_CHESSBOARD_NONE = 2
} hyperoct_chessboard;

typedef enum hyperoct_family {
  HYPEROCT_FAMILY_DIAGONAL = 0,
  HYPEROCT_FAMILY_ASCENDING = 1,
  HYPEROCT_FAMILY_E = 2,
  HYPEROCT_FAMILY_M = 3
} hyperoct_family;

HYPEROCT_API hyperoct_status hyperoct_perm_chessboard(const hyperoct_perm* w,
                                                      hyperoct_chessboard* out);
HYPEROCT_API hyperoct_status hyperoct_perm_is_member(const hyperoct_perm* w,
                                                     hyperoct_family family,
                                                     int* out);

HYPEROCT_API hyperoct_status hyperoct_perm_sigma_split(const hyperoct_perm* w,
                                                       hyperoct_perm** odd,
                                                       hyperoct_perm** even);
HYPEROCT_API hyperoct_status hyperoct_perm_star_merge(const hyperoct_perm* odd,
                                                      const hyperoct_perm* even,
                                                      hyperoct_perm** out);

/* w = quotient * part, quotient minimal in its coset w W_I. */
HYPEROCT_API hyperoct_status hyperoct_perm_decompose(const hyperoct_perm* w,
                                                     uint64_t subset_mask,
                                                     hyperoct_perm** quotient,
                                                     hyperoct_perm** part);

typedef struct hyperoct_sandwich {
  unsigned r;
  unsigned h;
  int degenerate;
} hyperoct_sandwich;

HYPEROCT_API hyperoct_status hyperoct_perm_odd_sandwiches(
    const hyperoct_perm* w, hyperoct_sandwich* buf, size_t cap, size_t* len);
/* *out = 1 if the gap structure holds; PRECONDITION_VIOLATION unless w is an
   ascending element of C_{n,0}. */
HYPEROCT_API hyperoct_status hyperoct_perm_ascending_structure(
    const hyperoct_perm* w, int* out);

typedef enum hyperoct_extension_sign {
  HYPEROCT_EXTEND_PLUS = 0,
  HYPEROCT_EXTEND_MINUS = 1
} hyperoct_extension_sign;

HYPEROCT_API hyperoct_status hyperoct_perm_extend_ascending(
    const hyperoct_perm* w, hyperoct_extension_sign sign, hyperoct_perm** out);
HYPEROCT_API hyperoct_status hyperoct_perm_extend_diagonal(
    const hyperoct_perm* v, hyperoct_extension_sign sign, hyperoct_perm** out);

/* ---- involutions ------------------------------------------------------ */

typedef enum hyperoct_involution {
  HYPEROCT_INVOLUTION_STAR = 0,
  HYPEROCT_INVOLUTION_CIRCLE = 1,
  HYPEROCT_INVOLUTION_VEE = 2
} hyperoct_involution;

HYPEROCT_API hyperoct_status hyperoct_involution_in_domain(
    hyperoct_involution kind, const hyperoct_perm* w, int* out);
/* *pivot (optional) receives the generator index i, or mu for vee. */
HYPEROCT_API hyperoct_status hyperoct_involution_apply(
    hyperoct_involution kind, const hyperoct_perm* w, hyperoct_perm** out,
    unsigned* pivot);

typedef struct hyperoct_involution_summary {
  hyperoct_involution kind;
  unsigned n;
  uint64_t domain_size;
  uint64_t fixed_points;
  uint64_t leaves_domain;
  uint64_t square_failures;
  uint64_t L_failures;
  uint64_t parity_failures;
  uint64_t descent_failures;
  uint64_t violations;
  /* Window of the first offending element and what failed; "" if none. */
  char first_counterexample[160];
  char first_failure[256];
} hyperoct_involution_summary;

HYPEROCT_API hyperoct_status hyperoct_involution_check(
    hyperoct_involution kind, unsigned n, hyperoct_involution_summary* out);

/* ---- polynomials ------------------------------------------------------ */

HYPEROCT_API void hyperoct_poly_free(hyperoct_poly* p);
/* -1 for the zero polynomial. */
HYPEROCT_API int hyperoct_poly_degree(const hyperoct_poly* p);
HYPEROCT_API int64_t hyperoct_poly_coeff(const hyperoct_poly* p, unsigned k);
HYPEROCT_API hyperoct_status hyperoct_poly_coefficients(const hyperoct_poly* p,
                                                        int64_t* buf,
                                                        size_t cap,
                                                        size_t* len);
/* Human-readable "1 - X + X^3". */
HYPEROCT_API hyperoct_status hyperoct_poly_format(const hyperoct_poly* p,
                                                  char* buf, size_t cap,
                                                  size_t* len);
/* Coefficient array "[1,-1,0,1]". */
HYPEROCT_API hyperoct_status hyperoct_poly_format_json(const hyperoct_poly* p,
                                                       char* buf, size_t cap,
                                                       size_t* len);
HYPEROCT_API int hyperoct_poly_equal(const hyperoct_poly* a,
                                     const hyperoct_poly* b);
HYPEROCT_API hyperoct_status hyperoct_poly_evaluate(const hyperoct_poly* p,
                                                    int64_t x, int64_t* out);

HYPEROCT_API hyperoct_status hyperoct_f_poly(unsigned n, uint64_t subset_mask,
                                             hyperoct_poly** out);
HYPEROCT_API hyperoct_status hyperoct_q_int(unsigned k, hyperoct_poly** out);
HYPEROCT_API hyperoct_status hyperoct_q_factorial(unsigned n,
                                                  hyperoct_poly** out);
HYPEROCT_API hyperoct_status hyperoct_q_binomial(unsigned a, unsigned b,
                                                 hyperoct_poly** out);
HYPEROCT_API hyperoct_status hyperoct_q_multinomial(unsigned n,
                                                    uint64_t subset_mask,
                                                    hyperoct_poly** out);

typedef enum hyperoct_fg_variant {
  HYPEROCT_FG_F = 0,
  HYPEROCT_FG_G = 1
} hyperoct_fg_variant;

HYPEROCT_API hyperoct_status hyperoct_fg_genfun(unsigned n,
                                                uint64_t subset_mask,
                                                hyperoct_fg_variant variant,
                                                unsigned eta,
                                                hyperoct_poly** out);
/* q^e p(1/q); requires e >= deg p. */
HYPEROCT_API hyperoct_status hyperoct_eval_reciprocal_power(
    const hyperoct_poly* p, int64_t q, unsigned e, int64_t* out);

/* ---- verification reports --------------------------------------------- */

typedef struct hyperoct_report {
  unsigned n;
  uint64_t subset_mask;
  int passed;
  uint64_t element_count;
  double elapsed_seconds;
} hyperoct_report;

typedef enum hyperoct_support_family {
  HYPEROCT_SUPPORT_CHESSBOARD = 0,
  HYPEROCT_SUPPORT_DIAGONAL = 1,
  HYPEROCT_SUPPORT_M = 2,
  HYPEROCT_SUPPORT_E = 3
} hyperoct_support_family;

typedef enum hyperoct_identity {
  HYPEROCT_IDENTITY_STANLEY = 0,
  HYPEROCT_IDENTITY_EVENPERM = 1
} hyperoct_identity;

/* One report per mask, from a single pass over B_n. jobs <= 1 is serial. */
HYPEROCT_API hyperoct_status hyperoct_verify(unsigned n,
                                             const uint64_t* subset_masks,
                                             size_t count, unsigned jobs,
                                             hyperoct_report_list** out);
/* All 2^n subsets in increasing mask order. */
HYPEROCT_API hyperoct_status hyperoct_verify_all(unsigned n, unsigned jobs,
                                                 hyperoct_report_list** out);
HYPEROCT_API hyperoct_status hyperoct_support_admissible(
    unsigned n, uint64_t subset_mask, hyperoct_support_family family,
    int* out);
HYPEROCT_API hyperoct_status hyperoct_support_check(
    unsigned n, uint64_t subset_mask, hyperoct_support_family family,
    hyperoct_report_list** out);
HYPEROCT_API hyperoct_status hyperoct_identity_admissible(
    unsigned n, uint64_t subset_mask, hyperoct_identity kind, int* out);
HYPEROCT_API hyperoct_status hyperoct_identity_check(
    unsigned n, uint64_t subset_mask, hyperoct_identity kind,
    hyperoct_report_list** out);

HYPEROCT_API void hyperoct_report_list_free(hyperoct_report_list* list);
HYPEROCT_API size_t hyperoct_report_list_size(const hyperoct_report_list* list);
HYPEROCT_API hyperoct_status hyperoct_report_get(
    const hyperoct_report_list* list, size_t index, hyperoct_report* out);
/* Caller owns the returned polynomials. */
HYPEROCT_API hyperoct_status hyperoct_report_lhs(
    const hyperoct_report_list* list, size_t index, hyperoct_poly** out);
HYPEROCT_API hyperoct_status hyperoct_report_rhs(
    const hyperoct_report_list* list, size_t index, hyperoct_poly** out);

/* ---- symmetric matrices over F_q ------------------------------------- */

/* Pass 0 for the default enumeration budget. */
HYPEROCT_API hyperoct_status hyperoct_symrank_histogram(unsigned n, int64_t q,
                                                        uint64_t budget,
                                                        uint64_t* buf,
                                                        size_t cap,
                                                        size_t* len);
HYPEROCT_API hyperoct_status hyperoct_symrank_formula(unsigned n, int64_t q,
                                                      unsigned i,
                                                      uint64_t* out);

typedef struct hyperoct_symrank_report {
  unsigned n;
  int64_t q;
  unsigned i;
  uint64_t brute;
  uint64_t formula;
  int passed;
} hyperoct_symrank_report;

HYPEROCT_API hyperoct_status hyperoct_symrank_check(
    unsigned n, int64_t q, unsigned i, uint64_t budget,
    hyperoct_symrank_report* out);

#ifdef __cplusplus
}
#endif

#endif
