#include "genmech/io.hpp"

#include <json.hpp>

#include <algorithm>

namespace genmech {

using json = nlohmann::ordered_json;

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::JsonParse, e.what());
  }
}

const json& field(const json& j, const char* key, const char* doc) {
  if (!j.is_object())
    fail(ErrorCode::BadDocument, std::string(doc) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    fail(ErrorCode::BadDocument, std::string(doc) + " is missing \"" + key + "\"");
  return *it;
}

std::vector<std::string> string_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(ErrorCode::BadDocument, where + " must be an array");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_string()) fail(ErrorCode::BadDocument, where + " must contain only strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string json_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(ErrorCode::BadDocument, where + " must be a string");
  return v.get<std::string>();
}

std::uint64_t json_uint(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    fail(ErrorCode::BadDocument, where + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

bool json_bool(const json& v, const std::string& where) {
  if (!v.is_boolean()) fail(ErrorCode::BadDocument, where + " must be a boolean");
  return v.get<bool>();
}

Rational json_rational(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_unsigned()) return Rational(v.get<std::uint64_t>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_number_float()) return Rational(v.get<double>());  // exact binary value
  } catch (const Error& e) {
    fail(e.code(), where + ": " + e.message());
  }
  fail(ErrorCode::BadDocument, where + " must be a rational (\"p/q\" or number)");
}

json rational_json(const Rational& r) { return format_rational(r); }

json bigint_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(UINT64_MAX)) return v.convert_to<std::uint64_t>();
  return v.str();
}

BigInt json_bigint(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
  if (v.is_number_integer()) {
    std::int64_t s = v.get<std::int64_t>();
    if (s < 0) fail(ErrorCode::BadDocument, where + " must be non-negative");
    return BigInt(s);
  }
  if (v.is_string()) {
    const std::string& s = v.get<std::string>();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      fail(ErrorCode::BadDocument, where + " must be a decimal integer");
    return BigInt(s);
  }
  fail(ErrorCode::BadDocument, where + " must be an integer or decimal string");
}

json blocks_json(const Partition& p) { return p.block_labels(); }

json chain_to_json(const PartitionChain& chain) {
  json j;
  j["universe"] = chain.universe().labels();
  j["alphabet"] = chain.alphabet().letters();
  json parts = json::array();
  for (const auto& p : chain.partitions()) parts.push_back(blocks_json(p));
  j["partitions"] = std::move(parts);
  return j;
}

json codebook_to_json(const CodeBook& book) {
  json j;
  j["universe"] = book.universe().labels();
  j["alphabet"] = book.alphabet().letters();
  json codes = json::object();
  for (std::uint32_t e = 0; e < book.universe().size(); ++e)
    codes[book.universe().label(e)] = book.word_at(e);
  j["codes"] = std::move(codes);
  return j;
}

CodeBook codebook_from_json(const json& j) {
  Universe universe = Universe::of(string_array(field(j, "universe", "codebook"), "universe"));
  Alphabet alphabet = Alphabet::of(string_array(field(j, "alphabet", "codebook"), "alphabet"));
  const json& codes = field(j, "codes", "codebook");
  if (!codes.is_object()) fail(ErrorCode::BadDocument, "codes must be an object");
  if (codes.size() != universe.size())
    fail(ErrorCode::BadDocument, "codes must assign exactly one word per element");
  std::vector<CodeWord> words;
  words.reserve(universe.size());
  for (std::uint32_t e = 0; e < universe.size(); ++e) {
    const std::string& label = universe.label(e);
    auto it = codes.find(label);
    if (it == codes.end())
      fail(ErrorCode::BadDocument, "codes has no word for element '" + label + "'");
    std::string word = json_string(*it, "codes[\"" + label + "\"]");
    for (char c : word) alphabet.index_of(c);  // UnknownLetter on stray characters
    words.push_back(std::move(word));
  }
  return CodeBook::of(std::move(universe), std::move(alphabet), std::move(words));
}

}  // namespace

PartitionChain parse_chain_json(const std::string& text) {
  json j = parse_text(text);
  Universe universe = Universe::of(string_array(field(j, "universe", "chain"), "universe"));
  Alphabet alphabet = Alphabet::of(string_array(field(j, "alphabet", "chain"), "alphabet"));
  const json& parts = field(j, "partitions", "chain");
  if (!parts.is_array()) fail(ErrorCode::BadDocument, "partitions must be an array");
  std::vector<Partition> partitions;
  partitions.reserve(parts.size());
  for (std::size_t t = 0; t < parts.size(); ++t) {
    std::string where = "partitions[" + std::to_string(t) + "]";
    const json& pj = parts[t];
    if (!pj.is_array()) fail(ErrorCode::BadDocument, where + " must be an array of blocks");
    std::vector<std::vector<std::string>> blocks;
    blocks.reserve(pj.size());
    for (std::size_t b = 0; b < pj.size(); ++b)
      blocks.push_back(string_array(pj[b], where + "[" + std::to_string(b) + "]"));
    try {
      partitions.push_back(make_partition(universe, blocks));
    } catch (const Error& e) {
      fail(e.code(), where + ": " + e.message());
    }
  }
  return make_chain(std::move(universe), std::move(alphabet), std::move(partitions));
}

std::string emit_chain_json(const PartitionChain& chain) { return chain_to_json(chain).dump(2); }

CodeBook parse_codebook_json(const std::string& text) {
  return codebook_from_json(parse_text(text));
}

std::string emit_codebook_json(const CodeBook& book) { return codebook_to_json(book).dump(2); }

BranchModel parse_model_json(const std::string& text) {
  json j = parse_text(text);
  std::string kind = json_string(field(j, "kind", "model"), "kind");
  if (kind == "uniform") return BranchModel::uniform();
  if (kind != "explicit")
    fail(ErrorCode::BadDocument, "model kind must be \"uniform\" or \"explicit\"");
  const json& nodes = field(j, "nodes", "model");
  if (!nodes.is_object()) fail(ErrorCode::BadDocument, "nodes must be an object");
  std::map<std::string, std::vector<Rational>> out;
  for (const auto& [path, probs] : nodes.items()) {
    if (!probs.is_array())
      fail(ErrorCode::BadDocument, "nodes[\"" + path + "\"] must be an array");
    std::vector<Rational> row;
    row.reserve(probs.size());
    for (const auto& p : probs) row.push_back(json_rational(p, "nodes[\"" + path + "\"]"));
    out[path] = std::move(row);
  }
  return BranchModel::explicit_nodes(std::move(out));
}

std::string emit_model_json(const BranchModel& model) {
  json j;
  if (model.kind == BranchModel::Kind::Uniform) {
    j["kind"] = "uniform";
  } else {
    j["kind"] = "explicit";
    json nodes = json::object();
    for (const auto& [path, probs] : model.nodes) {
      json row = json::array();
      for (const auto& p : probs) row.push_back(rational_json(p));
      nodes[path] = std::move(row);
    }
    j["nodes"] = std::move(nodes);
  }
  return j.dump(2);
}

std::map<std::string, Rational> parse_fitness_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) fail(ErrorCode::BadDocument, "fitness must be an object of label: value");
  std::map<std::string, Rational> out;
  for (const auto& [label, value] : j.items())
    out[label] = json_rational(value, "fitness[\"" + label + "\"]");
  return out;
}

EntropyReport make_entropy_report(const PartitionChain& chain, const BranchModel& model) {
  CodeBook book = build_code(chain);
  CodeTree tree = build_tree(chain);
  LeafDistribution dist = leaf_distribution(tree, model);
  Rational kraft = kraft_sum(book);
  double shannon = shannon_entropy(dist);
  Rational logical = logical_entropy(dist);
  Rational average = average_code_length(book, dist);
  return EntropyReport{std::move(book), std::move(kraft),   std::move(dist),
                       shannon,         std::move(logical), std::move(average)};
}

std::string emit_report_json(const EntropyReport& report) {
  json j;
  j["codebook"] = codebook_to_json(report.book);
  j["kraft_sum"] = rational_json(report.kraft);
  json probs = json::object();
  const Universe& u = report.distribution.universe();
  for (std::uint32_t e = 0; e < u.size(); ++e)
    probs[u.label(e)] = rational_json(report.distribution.probability_at(e));
  j["leaf_probabilities"] = std::move(probs);
  j["shannon_entropy"] = format_real12(report.shannon);
  j["logical_entropy"] = rational_json(report.logical);
  j["average_code_length"] = rational_json(report.average_length);
  return j.dump(2);
}

EntropyReport parse_report_json(const std::string& text) {
  json j = parse_text(text);
  CodeBook book = codebook_from_json(field(j, "codebook", "report"));
  Rational kraft = json_rational(field(j, "kraft_sum", "report"), "kraft_sum");
  const json& probs = field(j, "leaf_probabilities", "report");
  if (!probs.is_object()) fail(ErrorCode::BadDocument, "leaf_probabilities must be an object");
  std::vector<Rational> p(book.universe().size());
  if (probs.size() != p.size())
    fail(ErrorCode::BadDocument, "leaf_probabilities must cover every element");
  for (std::uint32_t e = 0; e < book.universe().size(); ++e) {
    const std::string& label = book.universe().label(e);
    auto it = probs.find(label);
    if (it == probs.end())
      fail(ErrorCode::BadDocument, "leaf_probabilities has no entry for '" + label + "'");
    p[e] = json_rational(*it, "leaf_probabilities[\"" + label + "\"]");
  }
  LeafDistribution dist = LeafDistribution::of(book.universe(), std::move(p));
  std::string shannon_text = json_string(field(j, "shannon_entropy", "report"), "shannon_entropy");
  double shannon = 0;
  try {
    shannon = std::stod(shannon_text);
  } catch (const std::exception&) {
    fail(ErrorCode::BadDocument, "shannon_entropy must be a decimal string");
  }
  Rational logical = json_rational(field(j, "logical_entropy", "report"), "logical_entropy");
  Rational average =
      json_rational(field(j, "average_code_length", "report"), "average_code_length");
  return EntropyReport{std::move(book), std::move(kraft), std::move(dist), shannon,
                       std::move(logical), std::move(average)};
}

std::string emit_counts_json(const SampleCounts& counts) {
  json j;
  j["n"] = counts.n;
  j["seed"] = counts.seed;
  json c = json::object();
  for (std::uint32_t e = 0; e < counts.universe.size(); ++e)
    c[counts.universe.label(e)] = counts.counts[e];
  j["counts"] = std::move(c);
  if (counts.n >= 2)
    j["empirical_logical_entropy"] = rational_json(empirical_logical_entropy(counts));
  else
    j["empirical_logical_entropy"] = nullptr;
  return j.dump(2);
}

SampleCounts parse_counts_json(const std::string& text) {
  json j = parse_text(text);
  const json& c = field(j, "counts", "counts document");
  if (!c.is_object()) fail(ErrorCode::BadDocument, "counts must be an object");
  std::vector<std::string> labels;
  std::vector<std::uint64_t> values;
  for (const auto& [label, v] : c.items()) {
    labels.push_back(label);
    values.push_back(json_uint(v, "counts[\"" + label + "\"]"));
  }
  SampleCounts out{Universe::of(std::move(labels)), std::move(values),
                   json_uint(field(j, "n", "counts document"), "n"),
                   json_uint(field(j, "seed", "counts document"), "seed")};
  std::uint64_t total = 0;
  for (std::uint64_t v : out.counts) total += v;
  if (total != out.n)
    fail(ErrorCode::BadDocument, "counts sum to " + std::to_string(total) + ", n says " +
                                     std::to_string(out.n));
  return out;
}

std::string emit_trace_json(const MechanismTrace& trace) {
  json j;
  j["mechanism"] = trace.mechanism;
  j["outcome"] = trace.outcome;
  j["rounds"] = trace.rounds;
  j["evaluations"] = bigint_json(trace.evaluations);
  j["tie_break"] = trace.tie_break;
  json states = json::array();
  for (const auto& s : trace.states) {
    json sj;
    sj["size"] = bigint_json(s.size);
    if (s.candidates) sj["candidates"] = *s.candidates;
    if (s.weights) {
      json w = json::object();
      for (const auto& [label, weight] : *s.weights) w[label] = rational_json(weight);
      sj["weights"] = std::move(w);
    }
    states.push_back(std::move(sj));
  }
  j["states"] = std::move(states);
  return j.dump(2);
}

MechanismTrace parse_trace_json(const std::string& text) {
  json j = parse_text(text);
  MechanismTrace trace;
  trace.mechanism = json_string(field(j, "mechanism", "trace"), "mechanism");
  trace.outcome = json_string(field(j, "outcome", "trace"), "outcome");
  trace.rounds = json_uint(field(j, "rounds", "trace"), "rounds");
  trace.evaluations = json_bigint(field(j, "evaluations", "trace"), "evaluations");
  trace.tie_break = json_bool(field(j, "tie_break", "trace"), "tie_break");
  const json& states = field(j, "states", "trace");
  if (!states.is_array()) fail(ErrorCode::BadDocument, "states must be an array");
  for (std::size_t i = 0; i < states.size(); ++i) {
    std::string where = "states[" + std::to_string(i) + "]";
    const json& sj = states[i];
    TraceState state;
    state.size = json_bigint(field(sj, "size", where.c_str()), where + ".size");
    if (sj.contains("candidates"))
      state.candidates = string_array(sj["candidates"], where + ".candidates");
    if (sj.contains("weights")) {
      const json& w = sj["weights"];
      if (!w.is_object()) fail(ErrorCode::BadDocument, where + ".weights must be an object");
      std::vector<std::pair<std::string, Rational>> weights;
      for (const auto& [label, value] : w.items())
        weights.emplace_back(label, json_rational(value, where + ".weights"));
      state.weights = std::move(weights);
    }
    trace.states.push_back(std::move(state));
  }
  return trace;
}

std::string emit_compare_json(const CompareReport& report) {
  json j;
  j["switches"] = report.switches;
  j["positions"] = report.positions;
  j["code"] = report.code;
  j["generative_outcome"] = report.generative_outcome;
  j["selectionist_outcome"] = report.selectionist_outcome;
  j["agree"] = report.agree;
  j["generative_evaluations"] = bigint_json(report.generative_evaluations);
  j["selectionist_first_round_evaluations"] =
      bigint_json(report.selectionist_first_round_evaluations);
  j["selectionist_total_evaluations"] = bigint_json(report.selectionist_total_evaluations);
  j["selectionist_rounds"] = report.selectionist_rounds;
  j["generative_peak_actualized"] = bigint_json(report.generative_peak_actualized);
  j["selectionist_peak_actualized"] = bigint_json(report.selectionist_peak_actualized);
  j["tie_break"] = report.tie_break;
  return j.dump(2);
}

CompareReport parse_compare_json(const std::string& text) {
  json j = parse_text(text);
  CompareReport r;
  r.switches = static_cast<std::uint32_t>(json_uint(field(j, "switches", "report"), "switches"));
  r.positions =
      static_cast<std::uint32_t>(json_uint(field(j, "positions", "report"), "positions"));
  r.code = json_string(field(j, "code", "report"), "code");
  r.generative_outcome =
      json_string(field(j, "generative_outcome", "report"), "generative_outcome");
  r.selectionist_outcome =
      json_string(field(j, "selectionist_outcome", "report"), "selectionist_outcome");
  r.agree = json_bool(field(j, "agree", "report"), "agree");
  r.generative_evaluations =
      json_bigint(field(j, "generative_evaluations", "report"), "generative_evaluations");
  r.selectionist_first_round_evaluations =
      json_bigint(field(j, "selectionist_first_round_evaluations", "report"),
                  "selectionist_first_round_evaluations");
  r.selectionist_total_evaluations = json_bigint(
      field(j, "selectionist_total_evaluations", "report"), "selectionist_total_evaluations");
  r.selectionist_rounds =
      json_uint(field(j, "selectionist_rounds", "report"), "selectionist_rounds");
  r.generative_peak_actualized =
      json_bigint(field(j, "generative_peak_actualized", "report"), "generative_peak_actualized");
  r.selectionist_peak_actualized = json_bigint(
      field(j, "selectionist_peak_actualized", "report"), "selectionist_peak_actualized");
  r.tie_break = json_bool(field(j, "tie_break", "report"), "tie_break");
  return r;
}

std::string emit_joins_json(const PartitionChain& chain) {
  json j;
  json joins = json::array();
  for (const auto& p : consecutive_joins(chain)) joins.push_back(blocks_json(p));
  j["joins"] = std::move(joins);
  return j.dump(2);
}

std::string emit_diagnostics_json(const PartitionChain& chain) {
  json j;
  j["diagnostics"] = chain_diagnostics(chain);
  return j.dump(2);
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_dot(const CodeTree& tree) {
  const auto& nodes = tree.nodes();
  std::string out = "digraph code_tree {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::string label;
    if (nodes[i].is_leaf()) {
      label = tree.universe().label(nodes[i].block[0]);
    } else {
      for (std::uint32_t e : nodes[i].block) {
        if (!label.empty()) label += ", ";
        label += tree.universe().label(e);
      }
    }
    out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(label) + "\"";
    if (nodes[i].is_leaf()) out += ", shape=box";
    out += "];\n";
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const auto& [letter, child] : nodes[i].children) {
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(child) + " [label=\"" +
             dot_escape(tree.alphabet().letter(letter)) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

BranchModel point_mass_model(const CodeTree& tree, const std::string& element) {
  std::uint32_t target = tree.universe().index_of(element);
  const auto& nodes = tree.nodes();
  std::map<std::string, std::vector<Rational>> model;
  std::vector<std::pair<std::uint32_t, std::string>> stack{{0, ""}};
  while (!stack.empty()) {
    auto [at, path] = std::move(stack.back());
    stack.pop_back();
    const auto& node = nodes[at];
    if (node.is_leaf()) continue;
    bool on_path = std::binary_search(node.block.begin(), node.block.end(), target);
    std::vector<Rational> probs;
    probs.reserve(node.children.size());
    for (const auto& [letter, child] : node.children) {
      if (on_path) {
        bool child_holds =
            std::binary_search(nodes[child].block.begin(), nodes[child].block.end(), target);
        probs.emplace_back(child_holds ? 1 : 0);
      } else {
        probs.emplace_back(Rational(1, node.children.size()));
      }
      stack.emplace_back(child, path + tree.alphabet().letter_char(letter));
    }
    model[path] = std::move(probs);
  }
  return BranchModel::explicit_nodes(std::move(model));
}

}  // namespace genmech
