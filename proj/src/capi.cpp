#include "genmech/capi.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include <json.hpp>

#include "genmech/codes.hpp"
#include "genmech/entropy.hpp"
#include "genmech/error.hpp"
#include "genmech/genetic.hpp"
#include "genmech/io.hpp"
#include "genmech/mechanisms.hpp"
#include "genmech/rational.hpp"

using namespace genmech;
using json = nlohmann::ordered_json;

// The enum in the header is the public face of ErrorCode; keep them locked.
#define GM_CHECK(c, e) \
  static_assert(static_cast<int>(ErrorCode::c) == e, "error code drifted")
GM_CHECK(Ok, GM_OK);
GM_CHECK(JsonParse, GM_ERR_JSON_PARSE);
GM_CHECK(BadDocument, GM_ERR_BAD_DOCUMENT);
GM_CHECK(EmptyUniverse, GM_ERR_EMPTY_UNIVERSE);
GM_CHECK(DuplicateElement, GM_ERR_DUPLICATE_ELEMENT);
GM_CHECK(EmptyBlock, GM_ERR_EMPTY_BLOCK);
GM_CHECK(OverlappingBlocks, GM_ERR_OVERLAPPING_BLOCKS);
GM_CHECK(IncompleteCover, GM_ERR_INCOMPLETE_COVER);
GM_CHECK(UnknownElement, GM_ERR_UNKNOWN_ELEMENT);
GM_CHECK(UniverseMismatch, GM_ERR_UNIVERSE_MISMATCH);
GM_CHECK(UniverseTooLarge, GM_ERR_UNIVERSE_TOO_LARGE);
GM_CHECK(EmptyAlphabet, GM_ERR_EMPTY_ALPHABET);
GM_CHECK(DuplicateLetter, GM_ERR_DUPLICATE_LETTER);
GM_CHECK(BlockCountMismatch, GM_ERR_BLOCK_COUNT_MISMATCH);
GM_CHECK(NonDiscretizingChain, GM_ERR_NON_DISCRETIZING_CHAIN);
GM_CHECK(BadRational, GM_ERR_BAD_RATIONAL);
GM_CHECK(BadDistribution, GM_ERR_BAD_DISTRIBUTION);
GM_CHECK(IncompleteModel, GM_ERR_INCOMPLETE_MODEL);
GM_CHECK(NonNormalizedNode, GM_ERR_NON_NORMALIZED_NODE);
GM_CHECK(InvalidCodon, GM_ERR_INVALID_CODON);
GM_CHECK(UnknownAminoAcid, GM_ERR_UNKNOWN_AMINO_ACID);
GM_CHECK(InvalidPermutation, GM_ERR_INVALID_PERMUTATION);
GM_CHECK(BadTable, GM_ERR_BAD_TABLE);
GM_CHECK(BadSpace, GM_ERR_BAD_SPACE);
GM_CHECK(SpaceTooLarge, GM_ERR_SPACE_TOO_LARGE);
GM_CHECK(CodeLengthMismatch, GM_ERR_CODE_LENGTH_MISMATCH);
GM_CHECK(UnknownPosition, GM_ERR_UNKNOWN_POSITION);
GM_CHECK(EmptyCandidates, GM_ERR_EMPTY_CANDIDATES);
GM_CHECK(AllZeroFitness, GM_ERR_ALL_ZERO_FITNESS);
GM_CHECK(BadFitness, GM_ERR_BAD_FITNESS);
GM_CHECK(InvalidPolicy, GM_ERR_INVALID_POLICY);
GM_CHECK(OutcomeMismatch, GM_ERR_OUTCOME_MISMATCH);
GM_CHECK(NoSuchBranch, GM_ERR_NO_SUCH_BRANCH);
GM_CHECK(WordTooShort, GM_ERR_WORD_TOO_SHORT);
GM_CHECK(WordTooLong, GM_ERR_WORD_TOO_LONG);
GM_CHECK(UnknownLetter, GM_ERR_UNKNOWN_LETTER);
GM_CHECK(TrailingPartialWord, GM_ERR_TRAILING_PARTIAL_WORD);
GM_CHECK(TooFewSamples, GM_ERR_TOO_FEW_SAMPLES);
GM_CHECK(DidNotConverge, GM_ERR_DID_NOT_CONVERGE);
GM_CHECK(Internal, GM_ERR_INTERNAL);
#undef GM_CHECK

struct gm_chain {
  PartitionChain value;
};
struct gm_codebook {
  CodeBook value;
};
struct gm_tree {
  CodeTree value;
};
struct gm_codon_table {
  CodonTable value;
};

namespace {

thread_local int t_error_code = GM_OK;
thread_local std::string t_error_message;

void clear_error() {
  t_error_code = GM_OK;
  t_error_message.clear();
}

void set_error(int code, std::string message) {
  t_error_code = code;
  t_error_message = std::move(message);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) {
    set_error(GM_ERR_INTERNAL, "out of memory");
    return nullptr;
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, routing exceptions into the thread error slot. `bad` is the value
// reported on failure (nullptr for pointers, 0 or -1 for integers).
template <typename Bad, typename Fn>
auto guarded(Bad bad, Fn&& fn) -> decltype(fn()) {
  clear_error();
  try {
    return fn();
  } catch (const Error& e) {
    set_error(static_cast<int>(e.code()), e.what());
  } catch (const std::exception& e) {
    set_error(GM_ERR_INTERNAL, e.what());
  } catch (...) {
    set_error(GM_ERR_INTERNAL, "unknown failure");
  }
  return bad;
}

template <typename Fn>
char* string_result(Fn&& fn) {
  return guarded(static_cast<char*>(nullptr), [&] { return dup_string(fn()); });
}

const PartitionChain& chain_of(const gm_chain* chain) {
  if (chain == nullptr) fail(ErrorCode::Internal, "null chain handle");
  return chain->value;
}

const CodeBook& book_of(const gm_codebook* book) {
  if (book == nullptr) fail(ErrorCode::Internal, "null code book handle");
  return book->value;
}

const CodeTree& tree_of(const gm_tree* tree) {
  if (tree == nullptr) fail(ErrorCode::Internal, "null tree handle");
  return tree->value;
}

const CodonTable& table_of(const gm_codon_table* table) {
  if (table == nullptr) fail(ErrorCode::Internal, "null codon table handle");
  return table->value;
}

BranchModel model_from(const char* model_json) {
  if (model_json == nullptr) return BranchModel::uniform();
  return parse_model_json(model_json);
}

SwitchSpace space_from(uint32_t switches, uint32_t positions, const char* alphabet) {
  if (alphabet == nullptr) return SwitchSpace::of(switches, positions);
  std::vector<std::string> letters;
  for (const char* p = alphabet; *p != '\0'; ++p) letters.push_back(std::string(1, *p));
  return SwitchSpace::of(switches, positions, Alphabet::of(std::move(letters)));
}

}  // namespace

extern "C" {

const char* gm_version(void) { return "0.1.0"; }

int gm_last_error_code(void) { return t_error_code; }

const char* gm_last_error(void) { return t_error_message.c_str(); }

void gm_string_free(char* s) { std::free(s); }

/* ---- chains ---- */

gm_chain* gm_chain_from_json(const char* text) {
  return guarded(static_cast<gm_chain*>(nullptr), [&]() -> gm_chain* {
    if (text == nullptr) fail(ErrorCode::BadDocument, "null chain document");
    return new gm_chain{parse_chain_json(text)};
  });
}

gm_chain* gm_chain_genetic(void) {
  return guarded(static_cast<gm_chain*>(nullptr),
                 [&] { return new gm_chain{standard_chain()}; });
}

gm_chain* gm_chain_genetic_reordered(uint32_t p1, uint32_t p2, uint32_t p3) {
  return guarded(static_cast<gm_chain*>(nullptr),
                 [&] { return new gm_chain{reorder_chain({p1, p2, p3})}; });
}

void gm_chain_free(gm_chain* chain) { delete chain; }

char* gm_chain_to_json(const gm_chain* chain) {
  return string_result([&]() -> std::string {
    return emit_chain_json(chain_of(chain));
  });
}

char* gm_chain_joins_json(const gm_chain* chain) {
  return string_result([&]() -> std::string {
    return emit_joins_json(chain_of(chain));
  });
}

char* gm_chain_diagnostics_json(const gm_chain* chain) {
  return string_result([&]() -> std::string {
    return emit_diagnostics_json(chain_of(chain));
  });
}

size_t gm_chain_universe_size(const gm_chain* chain) {
  return guarded(static_cast<size_t>(0),
                 [&] { return chain_of(chain).universe().size(); });
}

size_t gm_chain_length(const gm_chain* chain) {
  return guarded(static_cast<size_t>(0), [&] { return chain_of(chain).length(); });
}

/* ---- code books ---- */

gm_codebook* gm_codebook_build(const gm_chain* chain) {
  return guarded(static_cast<gm_codebook*>(nullptr), [&]() -> gm_codebook* {
    return new gm_codebook{build_code(chain_of(chain))};
  });
}

gm_codebook* gm_codebook_from_json(const char* text) {
  return guarded(static_cast<gm_codebook*>(nullptr), [&]() -> gm_codebook* {
    if (text == nullptr) fail(ErrorCode::BadDocument, "null code book document");
    return new gm_codebook{parse_codebook_json(text)};
  });
}

void gm_codebook_free(gm_codebook* book) { delete book; }

char* gm_codebook_to_json(const gm_codebook* book) {
  return string_result([&]() -> std::string {
    return emit_codebook_json(book_of(book));
  });
}

char* gm_codebook_word(const gm_codebook* book, const char* element) {
  return string_result([&]() -> std::string {
    if (element == nullptr) fail(ErrorCode::UnknownElement, "null element");
    return book_of(book).word(element);
  });
}

int gm_codebook_is_prefix_free(const gm_codebook* book) {
  return guarded(-1, [&]() -> int {
    return is_prefix_free(book_of(book)) ? 1 : 0;
  });
}

char* gm_codebook_kraft_sum(const gm_codebook* book) {
  return string_result([&]() -> std::string {
    return format_rational(kraft_sum(book_of(book)));
  });
}

/* ---- code trees ---- */

gm_tree* gm_tree_build(const gm_chain* chain) {
  return guarded(static_cast<gm_tree*>(nullptr), [&]() -> gm_tree* {
    return new gm_tree{build_tree(chain_of(chain))};
  });
}

void gm_tree_free(gm_tree* tree) { delete tree; }

size_t gm_tree_node_count(const gm_tree* tree) {
  return guarded(static_cast<size_t>(0), [&] { return tree_of(tree).node_count(); });
}

size_t gm_tree_leaf_count(const gm_tree* tree) {
  return guarded(static_cast<size_t>(0), [&] { return tree_of(tree).leaf_count(); });
}

char* gm_tree_decode(const gm_tree* tree, const char* word) {
  return string_result([&]() -> std::string {
    if (word == nullptr) fail(ErrorCode::WordTooShort, "null word");
    return decode(tree_of(tree), word);
  });
}

char* gm_tree_decode_stream(const gm_tree* tree, const char* letters) {
  return string_result([&]() -> std::string {
    if (letters == nullptr) fail(ErrorCode::WordTooShort, "null stream");
    json out = json::array();
    for (const auto& label : decode_stream(tree_of(tree), letters)) out.push_back(label);
    return out.dump();
  });
}

char* gm_tree_render_dot(const gm_tree* tree) {
  return string_result([&]() -> std::string {
    return render_dot(tree_of(tree));
  });
}

char* gm_tree_trace_json(const gm_tree* tree, const char* word) {
  return string_result([&]() -> std::string {
    if (word == nullptr) fail(ErrorCode::WordTooShort, "null word");
    return emit_trace_json(generative_run_tree(tree_of(tree), word));
  });
}

/* ---- entropy ---- */

char* gm_entropy_report_json(const gm_chain* chain, const char* model_json) {
  return string_result([&]() -> std::string {
    return emit_report_json(make_entropy_report(chain_of(chain), model_from(model_json)));
  });
}

char* gm_point_model_json(const gm_chain* chain, const char* element) {
  return string_result([&]() -> std::string {
    if (element == nullptr) fail(ErrorCode::UnknownElement, "null element");
    return emit_model_json(point_mass_model(build_tree(chain_of(chain)), element));
  });
}

char* gm_marble_counts_json(const gm_chain* chain, const char* model_json, uint64_t n,
                            uint64_t seed) {
  return string_result([&]() -> std::string {
    CodeTree tree = build_tree(chain_of(chain));
    return emit_counts_json(marble_simulate(tree, model_from(model_json), n, seed));
  });
}

char* gm_empirical_logical_entropy(const char* counts_json) {
  return string_result([&]() -> std::string {
    if (counts_json == nullptr) fail(ErrorCode::BadDocument, "null counts document");
    return format_rational(empirical_logical_entropy(parse_counts_json(counts_json)));
  });
}

/* ---- mechanisms ---- */

char* gm_generative_trace_json(uint32_t switches, uint32_t positions, const char* alphabet,
                               const char* code) {
  return string_result([&]() -> std::string {
    if (code == nullptr) fail(ErrorCode::CodeLengthMismatch, "null code");
    SwitchSpace space = space_from(switches, positions, alphabet);
    return emit_trace_json(generative_run(space, code));
  });
}

char* gm_selectionist_trace_json(const char* fitness_json, const char* epsilon,
                                 uint64_t max_rounds) {
  return string_result([&]() -> std::string {
    if (fitness_json == nullptr) fail(ErrorCode::BadDocument, "null fitness document");
    auto fitness = parse_fitness_json(fitness_json);
    std::vector<std::string> candidates;
    candidates.reserve(fitness.size());
    for (const auto& [label, value] : fitness) candidates.push_back(label);
    SelectionPolicy policy;
    if (epsilon != nullptr) policy.epsilon = parse_rational(epsilon);
    if (max_rounds != 0) policy.max_rounds = max_rounds;
    return emit_trace_json(selectionist_run(candidates, fitness, policy));
  });
}

char* gm_compare_report_json(uint32_t switches, uint32_t positions, const char* alphabet,
                             const char* code, const char* fitness_json) {
  return string_result([&]() -> std::string {
    if (code == nullptr) fail(ErrorCode::CodeLengthMismatch, "null code");
    SwitchSpace space = space_from(switches, positions, alphabet);
    std::optional<std::map<std::string, Rational>> fitness;
    if (fitness_json != nullptr) fitness = parse_fitness_json(fitness_json);
    return emit_compare_json(compare_mechanisms(space, code, fitness));
  });
}

/* ---- genetic code ---- */

gm_codon_table* gm_codon_table_standard(void) {
  return guarded(static_cast<gm_codon_table*>(nullptr),
                 [&] { return new gm_codon_table{CodonTable::standard()}; });
}

gm_codon_table* gm_codon_table_parse(const char* text) {
  return guarded(static_cast<gm_codon_table*>(nullptr), [&]() -> gm_codon_table* {
    if (text == nullptr) fail(ErrorCode::BadTable, "null table text");
    return new gm_codon_table{CodonTable::parse(text)};
  });
}

void gm_codon_table_free(gm_codon_table* table) { delete table; }

char* gm_codon_table_tsv(const gm_codon_table* table) {
  return string_result([&]() -> std::string {
    return table_of(table).to_tsv();
  });
}

char* gm_translate(const gm_codon_table* table, const char* codon, uint32_t* occurrence) {
  return string_result([&]() -> std::string {
    if (codon == nullptr) fail(ErrorCode::InvalidCodon, "null codon");
    std::string amino = translate(table_of(table), codon);
    if (occurrence != nullptr) *occurrence = table_of(table).occurrence(codon);
    return amino;
  });
}

char* gm_codons_for(const gm_codon_table* table, const char* amino) {
  return string_result([&]() -> std::string {
    if (amino == nullptr) fail(ErrorCode::UnknownAminoAcid, "null amino acid");
    json out = json::array();
    for (const auto& codon : table_of(table).codons_for(amino)) out.push_back(codon);
    return out.dump();
  });
}

}  // extern "C"
