#ifndef HANKELCERT_H
#define HANKELCERT_H

/*
 * hankelcert - certified sharp Hankel-determinant bounds for the convex
 * class defined by subordination to phi(z) = 1 + z + (m/n) z^2.
 *
 * Every computation is exact rational arithmetic; reports carry exact
 * values as "n/d" strings plus advisory double approximations. All
 * returned strings are heap-allocated JSON documents released with
 * hc_string_free.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    HC_OK = 0,              /* success / certified / bit-exact match */
    HC_CERTIFIED_FALSE = 1, /* a certificate failed or a table mismatched */
    HC_USAGE = 2,           /* malformed input */
    HC_ERROR = 3            /* internal failure */
} hc_status;

/* opaque sparse rational polynomial */
typedef struct hc_poly hc_poly;

void hc_string_free(char* s);
const char* hc_version(void);

/* Polynomial interchange:
 *   {"vars":["p","x"],"terms":[{"e":[2,0],"n":"-48","d":"1"},...]}
 * with arbitrary-precision integers as decimal strings. */
hc_status hc_poly_parse_json(const char* json_text, hc_poly** out, char** error);
char* hc_poly_to_json(const hc_poly* p);
void hc_poly_free(hc_poly* p);

/* engine-built functionals: "g0", "ghalf", "g2" (over p,x,t),
 * "g2u" (over p,x,u with u = 2t), "h2" (144 H2), "h3" (8640 H3) */
hc_status hc_poly_builtin(const char* name, hc_poly** out, char** error);

/* class admissibility of phi(z) = 1 + z + (m/n) z^2; HC_OK iff the
 * class conditions all hold (univalent, starlike w.r.t. 1, Re phi > 0) */
hc_status hc_phi(long m, long n, char** report_json);

/* sharp |H2(2)| bound at rational t in [0, 1/2] ("n" or "n/d") */
hc_status hc_h2(const char* t, char** report_json);

/* the full |H3(1)| <= 1/144 certification; certificate_json (optional,
 * may be NULL) receives the five-part certificate document */
hc_status hc_h3_certify(int depth, int workers, char** certificate_json,
                        char** report_json);

/* recompute one embedded reference table from scratch and diff it
 * bit-exactly; HC_OK iff every entry matches and both conversion
 * routes agree */
hc_status hc_reproduce(const char* table_id, char** report_json);

/* certify p <= threshold on a box; box_spec is "lo,hi;lo,hi;...",
 * vertex_spec (optional, may be NULL) is a corner "v1,v2,..." enabling
 * the vertex-domination endgame */
hc_status hc_bound(const hc_poly* p, const char* box_spec, const char* threshold,
                   int depth, const char* vertex_spec, int workers,
                   char** certificate_json, char** report_json);

/* expansion of an extremal candidate: schwarz is "z2", "z3" or
 * "blaschke" (rational x in [0,1] required for blaschke; otherwise
 * pass NULL) */
hc_status hc_extremal(const char* schwarz, const char* x, const char* t, int terms,
                      char** report_json);

#ifdef __cplusplus
}
#endif

#endif
