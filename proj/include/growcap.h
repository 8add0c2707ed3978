#ifndef GROWCAP_H
#define GROWCAP_H

/*
 * C interface to the growth-capacity library.
 *
 * Every entry point takes a gc_context, which carries the working precision
 * and the message of the last failure. Result handles own all strings they
 * expose; pointers stay valid until the handle is freed. Numbers are given as
 * decimal strings rounded to the context precision, plus a double for
 * convenience. Exact values use the surd literal syntax accepted by
 * gc_surd_parse.
 *
 * The precision of the high-precision tier is process-wide, so contexts with
 * different precisions must not be used from concurrent threads.
 */

#include <stddef.h>

#if defined(GROWCAP_BUILDING_LIBRARY)
#define GC_API __attribute__((visibility("default")))
#else
#define GC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gc_status {
  GC_OK = 0,
  GC_ERR_ZERO_DENOMINATOR = 1,
  GC_ERR_NOT_REAL_SURD = 2,
  GC_ERR_INCOMPARABLE = 3,
  GC_ERR_RATIONAL_INPUT = 4,
  GC_ERR_NOT_IRREDUCIBLE = 5,
  GC_ERR_CUSP_AT_INFINITY = 6,
  GC_ERR_PARSE = 7,
  GC_ERR_DOMAIN = 8,
  GC_ERR_ITERATION_LIMIT = 9,
  GC_ERR_INVALID_ARGUMENT = 10,
  GC_ERR_INTERNAL = 11
} gc_status;

#define GC_NO_POSITION ((size_t)-1)
#define GC_NO_INDEX ((size_t)-1)
#define GC_DEFAULT_PRECISION 128u
#define GC_MIN_PRECISION 64u

GC_API const char* gc_version(void);
GC_API const char* gc_status_name(gc_status status);

/* ---- context ---------------------------------------------------------- */

typedef struct gc_context gc_context;

/* precision_bits = 0 selects GC_DEFAULT_PRECISION. Returns NULL when
 * precision_bits is below GC_MIN_PRECISION. */
GC_API gc_context* gc_context_new(unsigned precision_bits);
GC_API void gc_context_free(gc_context* ctx);
GC_API gc_status gc_context_set_precision(gc_context* ctx, unsigned bits);
GC_API unsigned gc_context_precision(const gc_context* ctx);
/* Message of the last failure on this context ("" after success). */
GC_API const char* gc_last_error(const gc_context* ctx);
/* Byte offset of the last parse error, or GC_NO_POSITION. */
GC_API size_t gc_last_error_position(const gc_context* ctx);

/* ---- exact surds ------------------------------------------------------ */

typedef struct gc_surd gc_surd;

typedef struct gc_surd_info {
  const char* literal; /* e.g. "(1+sqrt(5))/2" */
  const char* a;       /* (a + b sqrt(d)) / c, canonical */
  const char* b;
  const char* c;
  const char* d;
  const char* decimal;
  double value;
} gc_surd_info;

GC_API gc_status gc_surd_parse(gc_context* ctx, const char* text, gc_surd** out);
/* Integer components as decimal strings. */
GC_API gc_status gc_surd_make(gc_context* ctx, const char* a, const char* b, const char* c,
                              const char* d, gc_surd** out);
GC_API const gc_surd_info* gc_surd_get(const gc_surd* s);
GC_API void gc_surd_free(gc_surd* s);
/* *out is -1, 0 or 1. */
GC_API gc_status gc_surd_compare(gc_context* ctx, const gc_surd* x, const gc_surd* y, int* out);

/* ---- continued fractions --------------------------------------------- */

typedef struct gc_int_list gc_int_list;

GC_API size_t gc_int_list_size(const gc_int_list* list);
GC_API const char* gc_int_list_at(const gc_int_list* list, size_t i);
GC_API void gc_int_list_free(gc_int_list* list);

/* Partial quotients: *preperiod then *period (both freed by the caller). */
GC_API gc_status gc_cf_expand(gc_context* ctx, const gc_surd* x, gc_int_list** preperiod,
                              gc_int_list** period);

typedef struct gc_fraction {
  size_t index; /* classical convergent index, or GC_NO_INDEX */
  size_t rank;  /* position in the list */
  const char* p;
  const char* q;
  double value;
} gc_fraction;

typedef struct gc_fraction_list gc_fraction_list;

GC_API size_t gc_fraction_list_size(const gc_fraction_list* list);
GC_API const gc_fraction* gc_fraction_list_at(const gc_fraction_list* list, size_t i);
GC_API void gc_fraction_list_free(gc_fraction_list* list);

/* The first `count` classical convergents. */
GC_API gc_status gc_convergents(gc_context* ctx, const gc_surd* x, size_t count,
                                gc_fraction_list** out);
/* Hermite convergents among the first `count` classical convergents. */
GC_API gc_status gc_hermite_convergents(gc_context* ctx, const gc_surd* x, size_t count,
                                        gc_fraction_list** out);
/* Finite cusps met by the vertical geodesic over x for t in (0, t_max]. */
GC_API gc_status gc_hermite_oracle(gc_context* ctx, const gc_surd* x, double t_max,
                                   gc_fraction_list** out);
GC_API gc_status gc_humbert_is_hermite(gc_context* ctx, const gc_surd* x, const char* p,
                                       const char* q, int* out);

/* lambda_n(x), n >= 1. */
GC_API gc_status gc_lambda_n(gc_context* ctx, const gc_surd* x, size_t n, gc_surd** out);
/* Exact Lagrange number of x. */
GC_API gc_status gc_lagrange_number(gc_context* ctx, const gc_surd* x, size_t depth,
                                    gc_surd** out);

/* ---- growth capacity -------------------------------------------------- */

typedef struct gc_capacity gc_capacity;

typedef struct gc_capacity_info {
  int exact;               /* 1 when computed in Q(sqrt d) */
  const char* value;       /* f(w), decimal */
  const char* value_exact; /* surd literal, or NULL */
  double value_double;
  const char* matrix[4];   /* a, b, c, d of g with w = g . reduced */
  const char* reduced_re;
  const char* reduced_im;
  const char* shortest_alpha; /* witness of d(w) */
  const char* shortest_beta;
  const char* shortest_length; /* d(w) */
  int has_circle;              /* 0 when the cusp is at infinity */
  const char* cusp_p;
  const char* cusp_q;
  const char* diameter;
  double diameter_double;
} gc_capacity_info;

/* omega is a point literal such as "phi + i/10". */
GC_API gc_status gc_capacity_parse(gc_context* ctx, const char* omega, gc_capacity** out);
/* Real and imaginary parts given separately as real literals. */
GC_API gc_status gc_capacity_of(gc_context* ctx, const char* re, const char* im,
                                gc_capacity** out);
GC_API const gc_capacity_info* gc_capacity_get(const gc_capacity* c);
GC_API void gc_capacity_free(gc_capacity* c);
/* Fast path from doubles, evaluated at the context precision. */
GC_API gc_status gc_capacity_value(gc_context* ctx, double re, double im, double* out);

/* ---- profile ---------------------------------------------------------- */

typedef struct gc_profile gc_profile;

typedef struct gc_piece_info {
  size_t rank;
  size_t index;       /* classical convergent index */
  const char* p;
  const char* q;
  const char* linear; /* (q x - p)^2, surd literal */
  const char* inverse; /* q^2 */
  double start;
  double end;
  const char* start_decimal;
  const char* end_decimal;
  /* local minimum 2|q (q x - p)| at t0 = |q / (q x - p)| */
  const char* min_value;
  double min_value_double;
  double min_t;
  int min_interior;
} gc_piece_info;

/* Profile over the first `count` Hermite convergents (count >= 2). */
GC_API gc_status gc_profile_build(gc_context* ctx, const gc_surd* x, size_t count,
                                  gc_profile** out);
/* Smallest profile reaching past t_max. */
GC_API gc_status gc_profile_build_until(gc_context* ctx, const gc_surd* x, double t_max,
                                        gc_profile** out);
GC_API void gc_profile_free(gc_profile* p);
GC_API size_t gc_profile_piece_count(const gc_profile* p);
GC_API const gc_piece_info* gc_profile_piece(const gc_profile* p, size_t i);
/* Start of the first piece; below it f = t. */
GC_API double gc_profile_head_end(const gc_profile* p);
GC_API double gc_profile_upper_limit(const gc_profile* p);
/* *piece is -1 on the leading segment. */
GC_API gc_status gc_profile_eval(gc_context* ctx, const gc_profile* p, double t, double* f,
                                 long* piece);

typedef struct gc_minima_limit_info {
  const char* lower; /* surd literals */
  const char* upper;
  const char* exact; /* 2 / L(x) */
  double lower_double;
  double upper_double;
  double exact_double;
  size_t window_first;
  size_t window_last;
} gc_minima_limit_info;

typedef struct gc_minima_limit gc_minima_limit;

/* Smallest and largest Hermite minima over the last CF period up to depth. */
GC_API gc_status gc_minima_limit_compute(gc_context* ctx, const gc_surd* x, size_t depth,
                                         gc_minima_limit** out);
GC_API const gc_minima_limit_info* gc_minima_limit_get(const gc_minima_limit* m);
GC_API void gc_minima_limit_free(gc_minima_limit* m);

/* ---- averaged capacity ------------------------------------------------ */

typedef struct gc_average gc_average;

typedef struct gc_average_info {
  const char* estimate;
  double estimate_double;
  size_t window_first;
  size_t window_last;
  double spread;
  int has_closed_form;
  const char* closed_form_expression;
  const char* closed_form_value;
  double closed_form_double;
  size_t piece_count;
  const double* piece_averages;
} gc_average_info;

GC_API gc_status gc_average_estimate(gc_context* ctx, const gc_surd* x, size_t depth,
                                     gc_average** out);
GC_API const gc_average_info* gc_average_get(const gc_average* a);
GC_API void gc_average_free(gc_average* a);
GC_API gc_status gc_piece_average(gc_context* ctx, double a, double b, double t_lo, double t_hi,
                                  double* out);

/* ---- Markoff data ----------------------------------------------------- */

GC_API gc_status gc_markoff_numbers(gc_context* ctx, const char* limit, gc_int_list** out);
GC_API gc_status gc_fibonacci(gc_context* ctx, size_t count, gc_int_list** out);
GC_API gc_status gc_pell(gc_context* ctx, size_t count, gc_int_list** out);

typedef struct gc_spectrum gc_spectrum;

typedef struct gc_spectrum_entry {
  const char* m;
  const char* lagrange; /* surd literal */
  const char* decimal;
  double value;
} gc_spectrum_entry;

GC_API gc_status gc_lagrange_spectrum(gc_context* ctx, size_t count, gc_spectrum** out);
GC_API size_t gc_spectrum_size(const gc_spectrum* s);
GC_API const gc_spectrum_entry* gc_spectrum_at(const gc_spectrum* s, size_t i);
GC_API void gc_spectrum_free(gc_spectrum* s);

#ifdef __cplusplus
}
#endif

#endif /* GROWCAP_H */
