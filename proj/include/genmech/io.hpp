#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "genmech/codes.hpp"
#include "genmech/entropy.hpp"
#include "genmech/mechanisms.hpp"

namespace genmech {

// JSON document conventions, shared by every format here:
//  - rationals are strings "p/q" (integers may be plain JSON numbers),
//  - reals are fixed 12-decimal strings,
//  - code words are strings of letter characters,
//  - counters wider than 64 bits fall back to decimal strings.
// parse(emit(x)) == x for chains, codebooks, reports, counts, and traces.

// {"universe": [...], "alphabet": [...], "partitions": [[[labels]...]...]}
PartitionChain parse_chain_json(const std::string& text);
std::string emit_chain_json(const PartitionChain& chain);

// {"universe": [...], "alphabet": [...], "codes": {element: word}}
CodeBook parse_codebook_json(const std::string& text);
std::string emit_codebook_json(const CodeBook& book);

// {"kind": "uniform"} or {"kind": "explicit", "nodes": {path: [probs...]}}
// where a path is the letter string from the root, "" for the root itself.
BranchModel parse_model_json(const std::string& text);
std::string emit_model_json(const BranchModel& model);

// Flat object: {label: fitness}, values rational strings or numbers.
std::map<std::string, Rational> parse_fitness_json(const std::string& text);

struct EntropyReport {
  CodeBook book;
  Rational kraft;
  LeafDistribution distribution;
  double shannon = 0;
  Rational logical;
  Rational average_length;
};

EntropyReport make_entropy_report(const PartitionChain& chain, const BranchModel& model);
std::string emit_report_json(const EntropyReport& report);
EntropyReport parse_report_json(const std::string& text);

// {"n":..., "seed":..., "counts": {label: count},
//  "empirical_logical_entropy": "p/q" | null (when n < 2)}
std::string emit_counts_json(const SampleCounts& counts);
SampleCounts parse_counts_json(const std::string& text);

std::string emit_trace_json(const MechanismTrace& trace);
MechanismTrace parse_trace_json(const std::string& text);

std::string emit_compare_json(const CompareReport& report);
CompareReport parse_compare_json(const std::string& text);

// The consecutive joins as {"joins": [[[labels]...]...]}, J_0 first.
std::string emit_joins_json(const PartitionChain& chain);

// {"diagnostics": [...]}
std::string emit_diagnostics_json(const PartitionChain& chain);

// Graphviz text; internal nodes show their blocks, leaves their element.
std::string render_dot(const CodeTree& tree);

// Explicit model putting the whole mass on one element's path; off-path
// branching is uniform (it is never reached). Throws UnknownElement.
BranchModel point_mass_model(const CodeTree& tree, const std::string& element);

}  // namespace genmech
