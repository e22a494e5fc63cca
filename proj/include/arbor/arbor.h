/* arbor: exact tree invariants behind a C ABI.
 *
 * Objects are opaque handles released with the matching *_free call.
 * Every fallible call returns an arbor_status; on failure the detail message
 * for the calling thread is available from arbor_last_error().
 * Strings returned through char** are heap allocated and must be released
 * with arbor_string_free().
 */
#ifndef ARBOR_ARBOR_H
#define ARBOR_ARBOR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ARBOR_BUILDING_LIBRARY)
#    define ARBOR_API __declspec(dllexport)
#  else
#    define ARBOR_API __declspec(dllimport)
#  endif
#else
#  define ARBOR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arbor_status {
  ARBOR_OK = 0,
  ARBOR_E_PARSE = 1,
  ARBOR_E_OUT_OF_RANGE = 2,
  ARBOR_E_SELF_LOOP = 3,
  ARBOR_E_DUPLICATE_EDGE = 4,
  ARBOR_E_CYCLE = 5,
  ARBOR_E_DISCONNECTED = 6,
  ARBOR_E_NO_EDGES = 7,
  ARBOR_E_CAP_EXCEEDED = 8,
  ARBOR_E_MALFORMED_POLY = 9,
  ARBOR_E_NOT_FOUND = 10,
  ARBOR_E_INCONSISTENT_POLY = 11,
  ARBOR_E_INVALID_ARGUMENT = 12,
  ARBOR_E_INTERNAL = 13
} arbor_status;

typedef enum arbor_poly_method {
  ARBOR_POLY_FAST = 0,
  ARBOR_POLY_BRUTEFORCE = 1
} arbor_poly_method;

typedef enum arbor_invariant {
  ARBOR_INVARIANT_CSF = 0,
  ARBOR_INVARIANT_SUBTREE_POLY = 1,
  ARBOR_INVARIANT_PROFILE = 2
} arbor_invariant;

typedef enum arbor_profile_kind {
  ARBOR_PROFILE_STANDARD = 0,
  ARBOR_PROFILE_PATH = 1
} arbor_profile_kind;

typedef struct arbor_tree arbor_tree;
typedef struct arbor_poly arbor_poly;
typedef struct arbor_csf arbor_csf;
typedef struct arbor_profile arbor_profile;

/* Pass 0 for any cap argument to use the library default. */

ARBOR_API const char* arbor_version(void);
/* Machine-readable name such as "DuplicateEdge". */
ARBOR_API const char* arbor_status_name(arbor_status status);
/* Detail for the last failure on this thread; "" when none. */
ARBOR_API const char* arbor_last_error(void);
ARBOR_API void arbor_string_free(char* s);

/* Trees */
ARBOR_API arbor_status arbor_tree_parse(const char* text, arbor_tree** out);
/* edges holds edge_count (u, v) pairs, flattened. */
ARBOR_API arbor_status arbor_tree_from_edges(size_t n, const uint32_t* edges,
                                             size_t edge_count, arbor_tree** out);
ARBOR_API void arbor_tree_free(arbor_tree* tree);
ARBOR_API size_t arbor_tree_order(const arbor_tree* tree);
ARBOR_API arbor_status arbor_tree_edge_list(const arbor_tree* tree, char** out);
ARBOR_API arbor_status arbor_tree_degree_sequence_json(const arbor_tree* tree, char** out);
ARBOR_API arbor_status arbor_tree_canonical_code(const arbor_tree* tree, char** out);
/* Short hex hash of the canonical code, stable across runs. */
ARBOR_API arbor_status arbor_tree_canonical_hash(const arbor_tree* tree, char** out);
ARBOR_API arbor_status arbor_tree_decompose_json(const arbor_tree* tree, char** out);

/* Bivariate subtree polynomial */
ARBOR_API arbor_status arbor_subtree_poly(const arbor_tree* tree, arbor_poly_method method,
                                          size_t cap, arbor_poly** out);
ARBOR_API arbor_status arbor_poly_from_json(const char* json, arbor_poly** out);
ARBOR_API arbor_status arbor_poly_to_json(const arbor_poly* poly, char** out);
/* Coefficient of q^edges r^leaves as a decimal string. */
ARBOR_API arbor_status arbor_poly_coefficient(const arbor_poly* poly, size_t edges,
                                              size_t leaves, char** out);
ARBOR_API void arbor_poly_free(arbor_poly* poly);

/* Chromatic symmetric function (power-sum basis) */
ARBOR_API arbor_status arbor_csf_compute(const arbor_tree* tree, size_t cap, unsigned jobs,
                                         arbor_csf** out);
ARBOR_API arbor_status arbor_csf_to_json(const arbor_csf* csf, char** out);
ARBOR_API arbor_status arbor_csf_fingerprint(const arbor_csf* csf, char** out);
ARBOR_API arbor_status arbor_csf_count_colorings(const arbor_csf* csf, uint64_t colors,
                                                 char** out);
ARBOR_API void arbor_csf_free(arbor_csf* csf);

/* Trunk size and twig lengths recovered from a subtree polynomial */
ARBOR_API arbor_status arbor_recover(const arbor_poly* poly, arbor_profile** out);
/* Profile read directly from a tree's decomposition. */
ARBOR_API arbor_status arbor_tree_profile(const arbor_tree* tree, arbor_profile** out);
ARBOR_API arbor_profile_kind arbor_profile_kind_of(const arbor_profile* profile);
ARBOR_API size_t arbor_profile_trunk_size(const arbor_profile* profile);
ARBOR_API size_t arbor_profile_leaves(const arbor_profile* profile);
/* Copies up to capacity sorted lengths; returns the total number of twigs. */
ARBOR_API size_t arbor_profile_twigs(const arbor_profile* profile, size_t* lengths,
                                     size_t capacity);
ARBOR_API int arbor_profile_equal(const arbor_profile* a, const arbor_profile* b);
ARBOR_API arbor_status arbor_profile_to_json(const arbor_profile* profile, char** out);
ARBOR_API void arbor_profile_free(arbor_profile* profile);

/* Enumeration and scanning */
/* Return nonzero from the visitor to stop early. */
typedef int (*arbor_tree_visitor)(const arbor_tree* tree, void* user);
ARBOR_API arbor_status arbor_free_trees(size_t n, size_t cap, arbor_tree_visitor visit,
                                        void* user);
ARBOR_API arbor_status arbor_prufer_oracle(size_t n, size_t* classes);
ARBOR_API arbor_status arbor_scan(size_t n, arbor_invariant invariant, size_t cap,
                                  unsigned jobs, int with_timing, char** report_json);
ARBOR_API arbor_status arbor_roundtrip(size_t n_max, size_t cap, unsigned jobs,
                                       char** summary_json, size_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* ARBOR_ARBOR_H */
