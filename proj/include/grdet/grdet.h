/*
 * grdet: integer group determinants of the semidihedral group SD16 and its
 * relatives (SD32, M16, M32, D8).
 *
 * Plain C interface over the C++ core. Objects are opaque handles created by
 * the library and released with the matching *_free function. Integers of
 * arbitrary size cross the boundary as decimal strings; strings returned
 * through a `char**` out-parameter are owned by the caller and released with
 * grdet_string_free. `const char*` return values are static or borrowed from
 * the handle they came from.
 *
 * Every fallible call returns a grdet_status. On failure, grdet_last_error()
 * describes the problem; the message is per thread and valid until the next
 * failing call on that thread.
 */
#ifndef GRDET_GRDET_H
#define GRDET_GRDET_H

#include <stddef.h>
#include <stdint.h>

#if defined(GRDET_BUILDING_LIBRARY)
#define GRDET_API __attribute__((visibility("default")))
#else
#define GRDET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum grdet_status {
  GRDET_OK = 0,
  GRDET_ERR_INVALID_ARGUMENT = 1,
  GRDET_ERR_PARSE = 2,
  GRDET_ERR_NOT_ACHIEVABLE = 3,
  /* The following indicate library bugs, never bad input. */
  GRDET_ERR_FORMULA_MISMATCH = 4,
  GRDET_ERR_VERIFICATION_FAILED = 5,
  GRDET_ERR_INTERNAL = 6
} grdet_status;

typedef enum grdet_family { GRDET_FAMILY_SD = 0, GRDET_FAMILY_M = 1, GRDET_FAMILY_D = 2 } grdet_family;

/* Group of order 2^n. SD and M take 4 <= n <= 6; D takes n = 3 (D8). */
typedef struct grdet_group {
  grdet_family family;
  int n;
} grdet_group;

typedef enum grdet_achievability {
  GRDET_ACHIEVABLE = 0,
  GRDET_NOT_ACHIEVABLE = 1,
  GRDET_UNKNOWN = 2
} grdet_achievability;

typedef enum grdet_reason {
  GRDET_REASON_EVEN_MULTIPLE_OF_1024 = 0,
  GRDET_REASON_EVEN_NOT_MULTIPLE = 1,
  GRDET_REASON_ODD_ONE_MOD_8 = 2,
  GRDET_REASON_ODD_FIVE_WITH_P = 3,
  GRDET_REASON_ODD_FIVE_NO_P = 4,
  GRDET_REASON_ODD_THREE_MOD_4 = 5,
  GRDET_REASON_UNKNOWN_INCOMPLETE_FACTORIZATION = 6
} grdet_reason;

typedef struct grdet_element grdet_element;
typedef struct grdet_factored grdet_factored;
typedef struct grdet_verdict grdet_verdict;
typedef struct grdet_factorization grdet_factorization;
typedef struct grdet_witness grdet_witness;
typedef struct grdet_census_report grdet_census_report;
typedef struct grdet_selftest grdet_selftest;

/* ---- general ---------------------------------------------------------- */

GRDET_API const char* grdet_version(void);
GRDET_API const char* grdet_last_error(void);
GRDET_API const char* grdet_status_name(grdet_status status);
GRDET_API void grdet_string_free(char* text);

/* ---- groups ----------------------------------------------------------- */

/* "sd16", "sd32", "sd64", "m16", "m32", "m64", "d8". */
GRDET_API grdet_status grdet_group_parse(const char* name, grdet_group* out);
GRDET_API grdet_status grdet_group_name(grdet_group group, char** out);

/* Writes order*order entries (row g, column h holds the index of g*h) when
 * `table` is non-null and `capacity` is large enough. `order_out` always
 * receives the group order. Element index of Y^j X^i is i + (order/2) j. */
GRDET_API grdet_status grdet_cayley_table(grdet_group group, uint16_t* table, size_t capacity,
                                          size_t* order_out);

/* ---- group-ring elements ---------------------------------------------- */

/* "a0,...,a_{N-1};b0,...,b_{N-1}": f = sum a_i X^i, g = sum b_i X^i,
 * element f + Y g. */
GRDET_API grdet_status grdet_element_parse(const char* text, grdet_element** out);
GRDET_API grdet_status grdet_element_identity(int n, grdet_element** out);
GRDET_API grdet_status grdet_element_multiply(const grdet_element* lhs, const grdet_element* rhs,
                                              grdet_group group, grdet_element** out);
GRDET_API grdet_status grdet_element_format(const grdet_element* element, char** out);
GRDET_API size_t grdet_element_order(const grdet_element* element);
GRDET_API void grdet_element_free(grdet_element* element);

/* ---- determinants ----------------------------------------------------- */

/* det(a_{g h^-1}) by exact fraction-free elimination. */
GRDET_API grdet_status grdet_determinant(const grdet_element* element, grdet_group group, char** out);

/* Factored determinant. Fields by group:
 *   SD16:     M, A2, A3, U1, V1, U2, V2, product
 *   SD32/64:  M, A2, ..., A{n-1}, product
 *   M16/32/64: M1, A, product
 * The product is compared with grdet_determinant before returning;
 * disagreement yields GRDET_ERR_FORMULA_MISMATCH. D8 is not supported. */
GRDET_API grdet_status grdet_factored_compute(const grdet_element* element, grdet_group group,
                                              grdet_factored** out);
GRDET_API size_t grdet_factored_count(const grdet_factored* factored);
GRDET_API const char* grdet_factored_name(const grdet_factored* factored, size_t index);
GRDET_API grdet_status grdet_factored_value(const grdet_factored* factored, size_t index, char** out);
GRDET_API void grdet_factored_free(grdet_factored* factored);

/* ---- number theory ---------------------------------------------------- */

GRDET_API grdet_status grdet_classify(const char* n, grdet_verdict** out);
GRDET_API grdet_achievability grdet_verdict_achievability(const grdet_verdict* verdict);
GRDET_API grdet_reason grdet_verdict_reason(const grdet_verdict* verdict);
/* Writes the prime p (p = 3 mod 8, p^2 | n) for GRDET_REASON_ODD_FIVE_WITH_P;
 * writes NULL otherwise. */
GRDET_API grdet_status grdet_verdict_prime(const grdet_verdict* verdict, char** out);
GRDET_API const char* grdet_reason_name(grdet_reason reason);
GRDET_API const char* grdet_achievability_name(grdet_achievability value);
GRDET_API void grdet_verdict_free(grdet_verdict* verdict);

/* effort = 0 selects the default Pollard-rho budget. */
GRDET_API grdet_status grdet_factorize(const char* n, uint64_t effort, grdet_factorization** out);
GRDET_API int grdet_factorization_sign(const grdet_factorization* f);
GRDET_API int grdet_factorization_complete(const grdet_factorization* f);
GRDET_API size_t grdet_factorization_count(const grdet_factorization* f);
GRDET_API grdet_status grdet_factorization_prime(const grdet_factorization* f, size_t index, char** out);
GRDET_API unsigned grdet_factorization_exponent(const grdet_factorization* f, size_t index);
GRDET_API size_t grdet_factorization_unfactored_count(const grdet_factorization* f);
GRDET_API grdet_status grdet_factorization_unfactored(const grdet_factorization* f, size_t index, char** out);
GRDET_API void grdet_factorization_free(grdet_factorization* f);

GRDET_API grdet_status grdet_legendre_minus2(const char* p, int* out);
/* U, V > 0 odd with U^2 + 2V^2 = p, for a prime p = 3 mod 8. */
GRDET_API grdet_status grdet_cornacchia2(const char* p, char** u_out, char** v_out);

/* ---- witnesses -------------------------------------------------------- */

/* Builds and oracle-verifies an SD16 element with determinant n. If n is
 * not achievable (or not provably so) returns GRDET_ERR_NOT_ACHIEVABLE and,
 * when verdict_out is non-null, the classifier's verdict. */
GRDET_API grdet_status grdet_witness_construct(const char* n, grdet_witness** out, grdet_verdict** verdict_out);
GRDET_API const grdet_element* grdet_witness_element(const grdet_witness* witness);
GRDET_API const char* grdet_witness_family(const grdet_witness* witness);
GRDET_API int grdet_witness_verified(const grdet_witness* witness);
/* name is one of "m", "k", "s", "p". */
GRDET_API grdet_status grdet_witness_param(const grdet_witness* witness, const char* name, char** out);
GRDET_API void grdet_witness_free(grdet_witness* witness);

/* ---- census ----------------------------------------------------------- */

typedef enum grdet_census_mode { GRDET_CENSUS_ENUMERATE = 0, GRDET_CENSUS_RANDOM = 1 } grdet_census_mode;

typedef enum grdet_census_format {
  GRDET_CENSUS_TEXT = 0,
  GRDET_CENSUS_JSON = 1,
  GRDET_CENSUS_ACHIEVED = 2 /* value/element/count lines only */
} grdet_census_format;

typedef struct grdet_census_config {
  grdet_census_mode mode;
  int lo;
  int hi;
  int max_nonzero;
  uint64_t sample_count;
  uint64_t seed;
  const char* value_bound; /* decimal string; NULL keeps the default 10^12 */
  unsigned worker_count;
  int symmetry_reduction;
  unsigned shard_index;
  unsigned shard_count;
  uint64_t spot_check_period;
  int verify_examples;
} grdet_census_config;

GRDET_API void grdet_census_config_init(grdet_census_config* config);
GRDET_API grdet_status grdet_census_run(const grdet_census_config* config, grdet_census_report** out);
GRDET_API grdet_status grdet_census_merge(const grdet_census_report* a, const grdet_census_report* b,
                                          grdet_census_report** out);
GRDET_API grdet_status grdet_census_format_report(const grdet_census_report* report, grdet_census_format format,
                                                  char** out);
GRDET_API size_t grdet_census_achieved_count(const grdet_census_report* report);
GRDET_API size_t grdet_census_violation_count(const grdet_census_report* report);
GRDET_API uint64_t grdet_census_scanned(const grdet_census_report* report);
GRDET_API void grdet_census_free(grdet_census_report* report);

/* ---- self test -------------------------------------------------------- */

/* seed = 0 and scale <= 0 select the defaults. */
GRDET_API grdet_status grdet_selftest_run(uint64_t seed, double scale, grdet_selftest** out);
GRDET_API size_t grdet_selftest_count(const grdet_selftest* selftest);
GRDET_API const char* grdet_selftest_name(const grdet_selftest* selftest, size_t index);
GRDET_API int grdet_selftest_passed(const grdet_selftest* selftest, size_t index);
GRDET_API uint64_t grdet_selftest_checks(const grdet_selftest* selftest, size_t index);
GRDET_API const char* grdet_selftest_counterexample(const grdet_selftest* selftest, size_t index);
GRDET_API void grdet_selftest_free(grdet_selftest* selftest);

#ifdef __cplusplus
}
#endif

#endif /* GRDET_GRDET_H */
