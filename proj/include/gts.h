#ifndef GTS_H
#define GTS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define GTS_API __attribute__((visibility("default")))
#else
#define GTS_API
#endif

typedef enum {
  GTS_OK = 0,
  GTS_ERR_INVALID_SPEC = 2,
  GTS_ERR_CAP = 3,
  GTS_ERR_USAGE = 4,
  GTS_ERR_INTERNAL = 1
} gts_status;

typedef struct gts_spec gts_spec;
typedef struct gts_quotients gts_quotients;
typedef struct gts_shadows gts_shadows;

typedef struct {
  uint64_t index_pb4;     /* |PB4 : N| */
  uint64_t order_q3;      /* |PB3 : N_PB3| */
  uint64_t index_f2;      /* |F2 : N_F2| */
  uint64_t derived_order; /* order of the derived subgroup of F2 / N_F2 */
  uint64_t n_ord;
  int abelian;
} gts_info;

typedef struct {
  uint64_t pentagon_count;
  uint64_t extendable_count;
  int holds;
} gts_furusho_report;

/* message of the last failed call on this thread; never NULL */
GTS_API const char* gts_last_error(void);
/* strings returned through char** are owned by the caller */
GTS_API void gts_string_free(char* s);

GTS_API gts_status gts_spec_load(const char* path, gts_spec** out);
GTS_API gts_status gts_spec_parse(const char* text, gts_spec** out);
GTS_API gts_status gts_spec_cyclic(unsigned q, gts_spec** out);
GTS_API gts_status gts_spec_trivial(gts_spec** out);
GTS_API gts_status gts_spec_write(const gts_spec* s, char** text);
GTS_API const char* gts_spec_name(const gts_spec* s);
GTS_API void gts_spec_free(gts_spec* s);

GTS_API gts_status gts_quotients_build(const gts_spec* s, uint64_t cap, gts_quotients** out);
GTS_API gts_status gts_quotients_info(const gts_quotients* q, gts_info* out);
GTS_API void gts_quotients_free(gts_quotients* q);

/* mode: "practical", "charming" or "pentagon_only" */
GTS_API gts_status gts_enumerate(const gts_quotients* q, const char* mode, unsigned jobs, gts_shadows** out);
GTS_API size_t gts_shadows_count(const gts_shadows* l);
/* m = -1 for pentagon_only rows */
GTS_API gts_status gts_shadows_get(const gts_shadows* l, size_t i, int64_t* m, int64_t* f_coset_id, char** f_word);
GTS_API gts_status gts_shadows_tsv(const gts_shadows* l, char** tsv);
/* group structure report of a charming list over an isolated target */
GTS_API gts_status gts_shadows_group_report(const gts_shadows* l, char** text);
GTS_API void gts_shadows_free(gts_shadows* l);

/* scope: "charming" or "all_practical" */
GTS_API gts_status gts_is_isolated(const gts_quotients* q, const char* scope, unsigned jobs, int* out);
GTS_API gts_status gts_component_tsv(const gts_quotients* q, unsigned jobs, char** tsv);
GTS_API gts_status gts_n_sharp(const gts_quotients* q, unsigned jobs, gts_spec** out);
GTS_API gts_status gts_same_kernel(const gts_spec* a, const gts_spec* b, int* out);
GTS_API gts_status gts_subgroup_leq(const gts_spec* k, const gts_spec* n, int* out);
GTS_API gts_status gts_intersect(const gts_spec* a, const gts_spec* b, gts_spec** out);
/* shadow given as "m=<int> f=<word>" over target n; requires ker k <= ker n */
GTS_API gts_status gts_survives(const gts_quotients* n, const char* shadow_line, const gts_quotients* k, unsigned jobs, int* out);
/* random Hurwitz-orbit specs; writes the first non-isolated one found, if any, and a log */
GTS_API gts_status gts_search_non_isolated(uint64_t seed, uint64_t trials, uint32_t max_degree, unsigned jobs, gts_spec** found, char** log);

/* mode: "strong" or "weak" */
GTS_API gts_status gts_furusho(const gts_quotients* q, const char* mode, unsigned jobs, gts_furusho_report* out);

#ifdef __cplusplus
}
#endif

#endif
