#ifndef GENMECH_CAPI_H
#define GENMECH_CAPI_H

/* C interface to the genmech shared library.
 *
 * Conventions:
 *  - Handles are opaque; free them with the matching *_free.
 *  - Functions returning char* give a heap string owned by the caller; free
 *    it with gm_string_free. NULL means failure.
 *  - Functions returning handles give NULL on failure.
 *  - After a failure, gm_last_error_code / gm_last_error describe it for the
 *    calling thread until the next gm_ call on that thread.
 *  - Documents are the library's JSON formats (chains, code books, models,
 *    reports, counts, traces); see the README for their shapes.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef GM_API
#define GM_API __attribute__((visibility("default")))
#endif

typedef struct gm_chain gm_chain;
typedef struct gm_codebook gm_codebook;
typedef struct gm_tree gm_tree;
typedef struct gm_codon_table gm_codon_table;

/* Stable numeric error contract. 1xx: the input never made sense.
 * 2xx: a valid request that failed during execution. */
enum gm_status {
  GM_OK = 0,

  GM_ERR_JSON_PARSE = 100,
  GM_ERR_BAD_DOCUMENT = 101,
  GM_ERR_EMPTY_UNIVERSE = 102,
  GM_ERR_DUPLICATE_ELEMENT = 103,
  GM_ERR_EMPTY_BLOCK = 104,
  GM_ERR_OVERLAPPING_BLOCKS = 105,
  GM_ERR_INCOMPLETE_COVER = 106,
  GM_ERR_UNKNOWN_ELEMENT = 107,
  GM_ERR_UNIVERSE_MISMATCH = 108,
  GM_ERR_UNIVERSE_TOO_LARGE = 109,
  GM_ERR_EMPTY_ALPHABET = 110,
  GM_ERR_DUPLICATE_LETTER = 111,
  GM_ERR_BLOCK_COUNT_MISMATCH = 112,
  GM_ERR_NON_DISCRETIZING_CHAIN = 113,
  GM_ERR_BAD_RATIONAL = 114,
  GM_ERR_BAD_DISTRIBUTION = 115,
  GM_ERR_INCOMPLETE_MODEL = 116,
  GM_ERR_NON_NORMALIZED_NODE = 117,
  GM_ERR_INVALID_CODON = 118,
  GM_ERR_UNKNOWN_AMINO_ACID = 119,
  GM_ERR_INVALID_PERMUTATION = 120,
  GM_ERR_BAD_TABLE = 121,
  GM_ERR_BAD_SPACE = 122,
  GM_ERR_SPACE_TOO_LARGE = 123,
  GM_ERR_CODE_LENGTH_MISMATCH = 124,
  GM_ERR_UNKNOWN_POSITION = 125,
  GM_ERR_EMPTY_CANDIDATES = 126,
  GM_ERR_ALL_ZERO_FITNESS = 127,
  GM_ERR_BAD_FITNESS = 128,
  GM_ERR_INVALID_POLICY = 129,
  GM_ERR_OUTCOME_MISMATCH = 130,

  GM_ERR_NO_SUCH_BRANCH = 200,
  GM_ERR_WORD_TOO_SHORT = 201,
  GM_ERR_WORD_TOO_LONG = 202,
  GM_ERR_UNKNOWN_LETTER = 203,
  GM_ERR_TRAILING_PARTIAL_WORD = 204,
  GM_ERR_TOO_FEW_SAMPLES = 205,
  GM_ERR_DID_NOT_CONVERGE = 206,

  GM_ERR_INTERNAL = 500
};

GM_API const char* gm_version(void);

GM_API int gm_last_error_code(void);
GM_API const char* gm_last_error(void);
GM_API void gm_string_free(char* s);

/* ---- partition chains ---- */

GM_API gm_chain* gm_chain_from_json(const char* text);
GM_API gm_chain* gm_chain_genetic(void);
/* p1 p2 p3 must be a permutation of 1 2 3. */
GM_API gm_chain* gm_chain_genetic_reordered(uint32_t p1, uint32_t p2, uint32_t p3);
GM_API void gm_chain_free(gm_chain* chain);

GM_API char* gm_chain_to_json(const gm_chain* chain);
GM_API char* gm_chain_joins_json(const gm_chain* chain);
GM_API char* gm_chain_diagnostics_json(const gm_chain* chain);
GM_API size_t gm_chain_universe_size(const gm_chain* chain);
GM_API size_t gm_chain_length(const gm_chain* chain);

/* ---- code books ---- */

GM_API gm_codebook* gm_codebook_build(const gm_chain* chain);
GM_API gm_codebook* gm_codebook_from_json(const char* text);
GM_API void gm_codebook_free(gm_codebook* book);

GM_API char* gm_codebook_to_json(const gm_codebook* book);
GM_API char* gm_codebook_word(const gm_codebook* book, const char* element);
/* 1 or 0; -1 on error. */
GM_API int gm_codebook_is_prefix_free(const gm_codebook* book);
/* "p/q" against the book's own alphabet size. */
GM_API char* gm_codebook_kraft_sum(const gm_codebook* book);

/* ---- code trees ---- */

GM_API gm_tree* gm_tree_build(const gm_chain* chain);
GM_API void gm_tree_free(gm_tree* tree);

GM_API size_t gm_tree_node_count(const gm_tree* tree);
GM_API size_t gm_tree_leaf_count(const gm_tree* tree);
/* The element label at the leaf the word spells. */
GM_API char* gm_tree_decode(const gm_tree* tree, const char* word);
/* Greedy decode of a concatenated stream; JSON array of labels. */
GM_API char* gm_tree_decode_stream(const gm_tree* tree, const char* letters);
GM_API char* gm_tree_render_dot(const gm_tree* tree);
/* Trace document for the generative walk that implements the word. */
GM_API char* gm_tree_trace_json(const gm_tree* tree, const char* word);

/* ---- entropy ---- */

/* model_json NULL means the uniform branch model. */
GM_API char* gm_entropy_report_json(const gm_chain* chain, const char* model_json);
/* Explicit model document concentrating all mass on one element's path. */
GM_API char* gm_point_model_json(const gm_chain* chain, const char* element);
/* Counts document for n seeded marble drops through the chain's tree. */
GM_API char* gm_marble_counts_json(const gm_chain* chain, const char* model_json,
                                   uint64_t n, uint64_t seed);
/* "p/q" estimate recomputed from a counts document. */
GM_API char* gm_empirical_logical_entropy(const char* counts_json);

/* ---- mechanisms ---- */

/* Switch spaces: n switches, k positions each. alphabet NULL names the
 * positions "0".."9"; otherwise it is a string of k distinct characters. */
GM_API char* gm_generative_trace_json(uint32_t switches, uint32_t positions,
                                      const char* alphabet, const char* code);
/* fitness_json: flat {label: fitness} object. epsilon NULL or "p/q";
 * max_rounds 0 picks the default. */
GM_API char* gm_selectionist_trace_json(const char* fitness_json, const char* epsilon,
                                        uint64_t max_rounds);
/* fitness_json NULL synthesizes a fitness peaking uniquely at the code. */
GM_API char* gm_compare_report_json(uint32_t switches, uint32_t positions,
                                    const char* alphabet, const char* code,
                                    const char* fitness_json);

/* ---- genetic code ---- */

GM_API gm_codon_table* gm_codon_table_standard(void);
/* 64 lines "CODON<TAB>Amino"; '#' comments and blank lines are skipped. */
GM_API gm_codon_table* gm_codon_table_parse(const char* text);
GM_API void gm_codon_table_free(gm_codon_table* table);

GM_API char* gm_codon_table_tsv(const gm_codon_table* table);
/* Amino-acid label for the codon; occurrence (may be NULL) receives the
 * 1-based rank among the acid's codons, e.g. 4 for ACG = Thr4. */
GM_API char* gm_translate(const gm_codon_table* table, const char* codon,
                          uint32_t* occurrence);
/* JSON array of the codons assigned to the amino acid. */
GM_API char* gm_codons_for(const gm_codon_table* table, const char* amino);

#ifdef __cplusplus
}
#endif

#endif
