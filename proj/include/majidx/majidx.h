#ifndef MAJIDX_H
#define MAJIDX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MAJIDX_BUILDING)
#    define MJ_API __declspec(dllexport)
#  else
#    define MJ_API __declspec(dllimport)
#  endif
#else
#  define MJ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mj_status {
  MJ_OK = 0,
  MJ_INPUT_ERROR = 1,      /* caller data violates a precondition */
  MJ_INTERNAL_ERROR = 2,   /* an internal invariant failed; a bug */
  MJ_INVALID_ARGUMENT = 3  /* null handle or output pointer */
} mj_status;

/* Message for the last failing call on this thread; "" after success. */
MJ_API const char* mj_last_error(void);

/* Strings returned through char** outputs are malloc'd; release them here. */
MJ_API void mj_string_free(char* s);

/* ---- sequences ---------------------------------------------------------
 * An int64 sequence: words, partitions, descent sets, MIS values.
 * Positions in every call below are 1-based. */
typedef struct mj_seq mj_seq;

MJ_API mj_status mj_seq_create(const int64_t* data, size_t len, mj_seq** out);
/* Space- or comma-separated integers; a single token of digits such as
 * "426351" is read one letter per digit. */
MJ_API mj_status mj_seq_parse_word(const char* text, mj_seq** out);
/* Comma- or space-separated integers, no digit shorthand. */
MJ_API mj_status mj_seq_parse_list(const char* text, mj_seq** out);
MJ_API size_t mj_seq_size(const mj_seq* s);
MJ_API const int64_t* mj_seq_data(const mj_seq* s);
MJ_API mj_status mj_seq_to_text(const mj_seq* s, char** out);
MJ_API mj_status mj_seq_to_json(const mj_seq* s, char** out);
MJ_API void mj_seq_free(mj_seq* s);

/* ---- statistics -------------------------------------------------------- */
/* maj, inv and des accept repeated letters. */
MJ_API mj_status mj_maj(const mj_seq* w, int64_t* out);
MJ_API mj_status mj_inv(const mj_seq* w, int64_t* out);
MJ_API mj_status mj_des(const mj_seq* w, mj_seq** out);
/* Requires a permutation of 1..n. */
MJ_API mj_status mj_ides(const mj_seq* w, mj_seq** out);
/* Number of descents at index >= k; 1 <= k <= len+1. */
MJ_API mj_status mj_d_k(const mj_seq* w, size_t k, int64_t* out);
MJ_API mj_status mj_inversion_sequence(const mj_seq* w, mj_seq** out);
MJ_API mj_status mj_insert(const mj_seq* w, size_t k, int64_t r, mj_seq** out);

/* ---- major increment sequences ---------------------------------------- */
typedef enum mj_mis_algorithm {
  MJ_MIS_LG = 0,      /* any r not in sigma */
  MJ_MIS_ORACLE = 1,  /* explicit insertion */
  MJ_MIS_L = 2,       /* requires r > every letter */
  MJ_MIS_G = 3        /* requires r < every letter */
} mj_mis_algorithm;

MJ_API mj_status mj_mis(const mj_seq* sigma, int64_t r, mj_mis_algorithm alg, mj_seq** out);

typedef struct mj_segmentation mj_segmentation;

MJ_API mj_status mj_segments(const mj_seq* sigma, int64_t r, mj_segmentation** out);
MJ_API size_t mj_segmentation_count(const mj_segmentation* s);
/* kind: 0 lesser, 1 greater; first/last are 1-based inclusive. */
MJ_API mj_status mj_segmentation_get(const mj_segmentation* s, size_t index, int* kind, size_t* first,
                                     size_t* last);
MJ_API mj_status mj_segmentation_to_text(const mj_segmentation* s, char** out);
MJ_API mj_status mj_segmentation_to_json(const mj_segmentation* s, char** out);
MJ_API void mj_segmentation_free(mj_segmentation* s);

/* ---- bijections -------------------------------------------------------- */
/* Result of phi or phi_inverse: the shuffle, its partition and the
 * insertion trace. */
typedef struct mj_phi_result mj_phi_result;

MJ_API mj_status mj_phi(const mj_seq* theta, const mj_seq* pi, const mj_seq* sigma, mj_phi_result** out);
MJ_API mj_status mj_phi_inverse(const mj_seq* theta, const mj_seq* pi, const mj_seq* lambda,
                                mj_phi_result** out);
MJ_API mj_status mj_phi_result_word(const mj_phi_result* r, mj_seq** out);
MJ_API mj_status mj_phi_result_partition(const mj_phi_result* r, mj_seq** out);
/* {"sigma": [...], "partition": [...], "trace": [{i,k,m,t,sigma}, ...]} */
MJ_API mj_status mj_phi_result_to_json(const mj_phi_result* r, char** out);
MJ_API mj_status mj_phi_result_trace_text(const mj_phi_result* r, char** out);
MJ_API void mj_phi_result_free(mj_phi_result* r);

MJ_API mj_status mj_psi(int64_t b, int64_t a, const mj_seq* tau, mj_seq** out);
MJ_API mj_status mj_psi_inverse(int64_t b, int64_t a, const mj_seq* lambda, mj_seq** out);
MJ_API mj_status mj_omega(const mj_seq* q, const mj_seq* tau, mj_seq** out);
MJ_API mj_status mj_build(const mj_seq* order, const mj_seq* targets, mj_seq** out);
MJ_API mj_status mj_inv_to_maj(const mj_seq* sigma, const mj_seq* order, mj_seq** out);
MJ_API mj_status mj_maj_to_inv(const mj_seq* tau, const mj_seq* order, mj_seq** out);

/* ---- q-polynomials ----------------------------------------------------- */
typedef struct mj_poly mj_poly;

MJ_API mj_status mj_qfactorial(size_t n, mj_poly** out);
MJ_API mj_status mj_qbinomial(size_t n, size_t k, mj_poly** out);
MJ_API mj_status mj_qmultinomial(size_t n, const mj_seq* parts, mj_poly** out);
MJ_API mj_status mj_partition_gf(size_t b, size_t a, mj_poly** out);
/* -1 for the zero polynomial. */
MJ_API int64_t mj_poly_degree(const mj_poly* p);
/* Decimal text of the coefficient of q^d; coefficients may exceed int64. */
MJ_API mj_status mj_poly_coefficient(const mj_poly* p, size_t d, char** out);
MJ_API mj_status mj_poly_to_text(const mj_poly* p, char** out);
MJ_API mj_status mj_poly_to_json(const mj_poly* p, char** out);
MJ_API void mj_poly_free(mj_poly* p);

/* ---- verification ------------------------------------------------------ */
typedef struct mj_run_config {
  int n_max;
  uint64_t seed;
  int64_t sample_count;
  int parallelism;
} mj_run_config;

typedef struct mj_report mj_report;

MJ_API mj_run_config mj_run_config_default(void);
/* Suite names: mis, theorem11, garsia-gessel, macmahon, insertion, lemma41, idc. */
MJ_API mj_status mj_suite_from_name(const char* name, int* suite);
MJ_API mj_status mj_verify(int suite, const mj_run_config* cfg, mj_report** out);
MJ_API int mj_report_passed(const mj_report* r);
MJ_API uint64_t mj_report_cases_checked(const mj_report* r);
MJ_API uint64_t mj_report_failures_total(const mj_report* r);
MJ_API mj_status mj_report_to_text(const mj_report* r, char** out);
MJ_API mj_status mj_report_to_json(const mj_report* r, char** out);
MJ_API void mj_report_free(mj_report* r);

#ifdef __cplusplus
}
#endif

#endif
