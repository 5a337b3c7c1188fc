// Command-line front end. Everything goes through the C API in capi.h; the
// only extra machinery here is argument parsing and file plumbing.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "genmech/capi.h"

namespace {

using json = nlohmann::ordered_json;

// Exit codes: 0 ok, 1 usage, 2 the input never made sense, 3 a valid request
// failed while running.
struct CliFailure {
  int exit_code;
  std::string message;
};

int exit_code_for(int error_code) {
  if (error_code >= 100 && error_code < 200) return 2;
  return 3;
}

[[noreturn]] void lib_fail() {
  throw CliFailure{exit_code_for(gm_last_error_code()), gm_last_error()};
}

using chain_ptr = std::unique_ptr<gm_chain, void (*)(gm_chain*)>;
using book_ptr = std::unique_ptr<gm_codebook, void (*)(gm_codebook*)>;
using tree_ptr = std::unique_ptr<gm_tree, void (*)(gm_tree*)>;
using table_ptr = std::unique_ptr<gm_codon_table, void (*)(gm_codon_table*)>;

// Takes ownership of a C-API string result, failing if it is null.
std::string take(char* s) {
  if (s == nullptr) lib_fail();
  std::string out(s);
  gm_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{2, "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CliFailure{3, "cannot write '" + out_path + "'"};
  out << body;
  if (!out.flush()) throw CliFailure{3, "cannot write '" + out_path + "'"};
}

// Common --chain/--genetic source shared by most verbs.
struct ChainArgs {
  std::string path;
  bool genetic = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--chain", path, "Partition chain document (JSON file)");
    cmd->add_flag("--genetic", genetic, "Use the built-in genetic-code chain");
  }

  chain_ptr load() const {
    if (genetic && !path.empty())
      throw CliFailure{1, "give either --chain or --genetic, not both"};
    if (genetic) {
      gm_chain* c = gm_chain_genetic();
      if (c == nullptr) lib_fail();
      return chain_ptr(c, gm_chain_free);
    }
    if (path.empty()) throw CliFailure{1, "a chain is required: --chain FILE or --genetic"};
    std::string text = read_file(path);
    gm_chain* c = gm_chain_from_json(text.c_str());
    if (c == nullptr) lib_fail();
    return chain_ptr(c, gm_chain_free);
  }
};

tree_ptr build_tree(const chain_ptr& chain) {
  gm_tree* t = gm_tree_build(chain.get());
  if (t == nullptr) lib_fail();
  return tree_ptr(t, gm_tree_free);
}

book_ptr build_book(const chain_ptr& chain) {
  gm_codebook* b = gm_codebook_build(chain.get());
  if (b == nullptr) lib_fail();
  return book_ptr(b, gm_codebook_free);
}

table_ptr load_table(const std::string& table_file) {
  gm_codon_table* t;
  if (table_file.empty()) {
    t = gm_codon_table_standard();
  } else {
    std::string text = read_file(table_file);
    t = gm_codon_table_parse(text.c_str());
  }
  if (t == nullptr) lib_fail();
  return table_ptr(t, gm_codon_table_free);
}

// --model uniform | explicit:FILE | point:ELEMENT, resolved to a model
// document (empty string = uniform).
std::string resolve_model(const std::string& spec, const chain_ptr& chain) {
  if (spec.empty() || spec == "uniform") return "";
  if (spec.rfind("explicit:", 0) == 0) return read_file(spec.substr(9));
  if (spec.rfind("point:", 0) == 0)
    return take(gm_point_model_json(chain.get(), spec.substr(6).c_str()));
  throw CliFailure{1, "unknown --model '" + spec + "' (uniform, explicit:FILE, point:ELEMENT)"};
}

std::vector<std::string> labels_from_json_array(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& item : json::parse(text)) out.push_back(item.get<std::string>());
  return out;
}

std::string amino_of(const table_ptr& table, const std::string& codon) {
  return take(gm_translate(table.get(), codon.c_str(), nullptr));
}

uint32_t permutation_digit(const std::string& token) {
  if (token.size() == 1 && token[0] >= '0' && token[0] <= '9')
    return static_cast<uint32_t>(token[0] - '0');
  throw CliFailure{1, "--reorder wants three comma-separated positions, e.g. 2,1,3"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition chains, prefix-free codes, and the mechanisms that run them"};
  app.set_version_flag("--version", gm_version());
  app.require_subcommand(1);

  std::string out_path;

  // codegen
  auto* codegen = app.add_subcommand("codegen", "Generate a chain's code book");
  ChainArgs codegen_chain;
  codegen_chain.attach(codegen);
  codegen->add_option("--out", out_path, "Write the document here instead of stdout");
  codegen->callback([&] {
    chain_ptr chain = codegen_chain.load();
    book_ptr book = build_book(chain);
    write_output(take(gm_codebook_to_json(book.get())), out_path);
  });

  // decode
  auto* decode = app.add_subcommand("decode", "Decode a code word or a letter stream");
  ChainArgs decode_chain;
  decode_chain.attach(decode);
  std::string decode_word;
  std::string decode_stream;
  auto* word_opt = decode->add_option("--word", decode_word, "One complete code word");
  auto* stream_opt =
      decode->add_option("--stream", decode_stream, "Concatenated code words, decoded greedily");
  decode->add_option("--out", out_path, "Write the labels here instead of stdout");
  decode->callback([&] {
    if ((word_opt->count() > 0) == (stream_opt->count() > 0))
      throw CliFailure{1, "give exactly one of --word or --stream"};
    chain_ptr chain = decode_chain.load();
    tree_ptr tree = build_tree(chain);
    std::vector<std::string> labels;
    if (word_opt->count() > 0) {
      labels.push_back(take(gm_tree_decode(tree.get(), decode_word.c_str())));
    } else {
      labels = labels_from_json_array(
          take(gm_tree_decode_stream(tree.get(), decode_stream.c_str())));
    }
    if (decode_chain.genetic) {
      table_ptr table = load_table("");
      for (auto& label : labels) label = amino_of(table, label);
    }
    std::string body;
    for (const auto& label : labels) body += label + "\n";
    write_output(body, out_path);
  });

  // encode
  auto* encode = app.add_subcommand("encode", "Spell elements as one code-word stream");
  ChainArgs encode_chain;
  encode_chain.attach(encode);
  std::vector<std::string> encode_elements;
  encode->add_option("elements", encode_elements, "Universe elements, in stream order")
      ->required();
  encode->add_option("--out", out_path, "Write the stream here instead of stdout");
  encode->callback([&] {
    chain_ptr chain = encode_chain.load();
    book_ptr book = build_book(chain);
    std::string stream;
    for (const auto& element : encode_elements)
      stream += take(gm_codebook_word(book.get(), element.c_str()));
    write_output(stream, out_path);
  });

  // joins
  auto* joins = app.add_subcommand("joins", "Consecutive joins of a chain");
  ChainArgs joins_chain;
  joins_chain.attach(joins);
  bool joins_diagnostics = false;
  joins->add_flag("--diagnostics", joins_diagnostics,
                  "Report chain diagnostics instead of the join sequence");
  joins->add_option("--out", out_path, "Write the document here instead of stdout");
  joins->callback([&] {
    chain_ptr chain = joins_chain.load();
    std::string doc = joins_diagnostics ? take(gm_chain_diagnostics_json(chain.get()))
                                        : take(gm_chain_joins_json(chain.get()));
    write_output(doc, out_path);
  });

  // entropy
  auto* entropy = app.add_subcommand("entropy", "Entropy report for a chain's code tree");
  ChainArgs entropy_chain;
  entropy_chain.attach(entropy);
  std::string entropy_model = "uniform";
  entropy->add_option("--model", entropy_model,
                      "Branch model: uniform, explicit:FILE, or point:ELEMENT");
  entropy->add_option("--out", out_path, "Write the report here instead of stdout");
  entropy->callback([&] {
    chain_ptr chain = entropy_chain.load();
    std::string model = resolve_model(entropy_model, chain);
    write_output(take(gm_entropy_report_json(chain.get(),
                                             model.empty() ? nullptr : model.c_str())),
                 out_path);
  });

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Run a mechanism and emit its trace");
  std::string sim_mode;
  simulate->add_option("--mode", sim_mode, "generative, selectionist, or marble")->required();
  ChainArgs sim_chain;
  sim_chain.attach(simulate);
  uint32_t sim_switches = 0;
  uint32_t sim_k = 2;
  std::string sim_alphabet;
  std::string sim_code;
  std::string sim_word;
  std::string sim_fitness;
  std::string sim_epsilon;
  uint64_t sim_max_rounds = 0;
  std::string sim_model = "uniform";
  uint64_t sim_n = 0;
  uint64_t sim_seed = 0;
  auto* switches_opt =
      simulate->add_option("--switches", sim_switches, "Number of switches (generative)");
  simulate->add_option("--k", sim_k, "Positions per switch (default 2)");
  simulate->add_option("--alphabet", sim_alphabet, "Position letters (default digits)");
  auto* code_opt = simulate->add_option("--code", sim_code, "Code word to implement");
  auto* sim_word_opt =
      simulate->add_option("--word", sim_word, "Code word for a tree walk (with a chain)");
  auto* fitness_opt = simulate->add_option("--fitness", sim_fitness,
                                           "Fitness document {label: value} (selectionist)");
  simulate->add_option("--epsilon", sim_epsilon, "Elimination threshold, e.g. 1/20");
  simulate->add_option("--max-rounds", sim_max_rounds, "Round cap (0 = default)");
  simulate->add_option("--model", sim_model, "Branch model (marble)");
  auto* n_opt = simulate->add_option("--n", sim_n, "Number of marble drops");
  auto* seed_opt = simulate->add_option("--seed", sim_seed, "RNG seed (marble; required)");
  simulate->add_option("--out", out_path, "Write the trace here instead of stdout");
  simulate->callback([&] {
    if (sim_mode == "generative") {
      if (switches_opt->count() > 0) {
        if (code_opt->count() == 0) throw CliFailure{1, "--code is required with --switches"};
        write_output(
            take(gm_generative_trace_json(sim_switches, sim_k,
                                          sim_alphabet.empty() ? nullptr : sim_alphabet.c_str(),
                                          sim_code.c_str())),
            out_path);
        return;
      }
      if (sim_word_opt->count() == 0)
        throw CliFailure{1, "generative mode wants --switches/--code or a chain and --word"};
      chain_ptr chain = sim_chain.load();
      tree_ptr tree = build_tree(chain);
      write_output(take(gm_tree_trace_json(tree.get(), sim_word.c_str())), out_path);
    } else if (sim_mode == "selectionist") {
      if (fitness_opt->count() == 0)
        throw CliFailure{1, "selectionist mode requires --fitness FILE"};
      std::string fitness = read_file(sim_fitness);
      write_output(take(gm_selectionist_trace_json(
                       fitness.c_str(), sim_epsilon.empty() ? nullptr : sim_epsilon.c_str(),
                       sim_max_rounds)),
                   out_path);
    } else if (sim_mode == "marble") {
      if (n_opt->count() == 0) throw CliFailure{1, "marble mode requires --n"};
      if (seed_opt->count() == 0) throw CliFailure{1, "marble mode requires --seed"};
      chain_ptr chain = sim_chain.load();
      std::string model = resolve_model(sim_model, chain);
      write_output(take(gm_marble_counts_json(chain.get(),
                                              model.empty() ? nullptr : model.c_str(), sim_n,
                                              sim_seed)),
                   out_path);
    } else {
      throw CliFailure{1, "unknown --mode '" + sim_mode + "'"};
    }
  });

  // compare
  auto* compare = app.add_subcommand("compare", "Run both mechanisms on one switch space");
  uint32_t cmp_switches = 0;
  uint32_t cmp_k = 2;
  std::string cmp_alphabet;
  std::string cmp_code;
  std::string cmp_fitness;
  compare->add_option("--switches", cmp_switches, "Number of switches")->required();
  compare->add_option("--k", cmp_k, "Positions per switch (default 2)");
  compare->add_option("--alphabet", cmp_alphabet, "Position letters (default digits)");
  compare->add_option("--code", cmp_code, "Code word both mechanisms should reach")->required();
  compare->add_option("--fitness", cmp_fitness,
                      "Fitness document; omitted, one is synthesized peaking at the code");
  compare->add_option("--out", out_path, "Write the report here instead of stdout");
  compare->callback([&] {
    std::string fitness;
    if (!cmp_fitness.empty()) fitness = read_file(cmp_fitness);
    write_output(take(gm_compare_report_json(
                     cmp_switches, cmp_k, cmp_alphabet.empty() ? nullptr : cmp_alphabet.c_str(),
                     cmp_code.c_str(), cmp_fitness.empty() ? nullptr : fitness.c_str())),
                 out_path);
  });

  // render
  auto* render = app.add_subcommand("render", "Emit a chain's code tree as DOT");
  ChainArgs render_chain;
  render_chain.attach(render);
  render->add_option("--out", out_path, "Write the DOT text here instead of stdout");
  render->callback([&] {
    chain_ptr chain = render_chain.load();
    tree_ptr tree = build_tree(chain);
    write_output(take(gm_tree_render_dot(tree.get())), out_path);
  });

  // genetic
  auto* genetic = app.add_subcommand("genetic", "Genetic-code table utilities");
  std::string gen_translate;
  std::string gen_codons_for;
  bool gen_table = false;
  std::string gen_reorder;
  std::string gen_table_file;
  auto* translate_opt =
      genetic->add_option("--translate", gen_translate, "Codon to translate, e.g. ACG");
  auto* codons_opt =
      genetic->add_option("--codons-for", gen_codons_for, "List the codons of an amino acid");
  auto* table_opt = genetic->add_flag("--table", gen_table, "Dump the codon table as TSV");
  auto* reorder_opt = genetic->add_option(
      "--reorder", gen_reorder, "Emit the chain with positions reordered, e.g. 2,1,3");
  genetic->add_option("--table-file", gen_table_file, "Use this codon table instead");
  genetic->add_option("--out", out_path, "Write here instead of stdout");
  genetic->callback([&] {
    int actions = (translate_opt->count() > 0) + (codons_opt->count() > 0) +
                  (table_opt->count() > 0) + (reorder_opt->count() > 0);
    if (actions != 1)
      throw CliFailure{1,
                       "give exactly one of --translate, --codons-for, --table, --reorder"};
    if (reorder_opt->count() > 0) {
      std::vector<uint32_t> order;
      std::istringstream in(gen_reorder);
      std::string token;
      while (std::getline(in, token, ',')) order.push_back(permutation_digit(token));
      if (order.size() != 3) throw CliFailure{1, "--reorder wants three positions, e.g. 2,1,3"};
      gm_chain* c = gm_chain_genetic_reordered(order[0], order[1], order[2]);
      if (c == nullptr) lib_fail();
      chain_ptr chain(c, gm_chain_free);
      write_output(take(gm_chain_to_json(chain.get())), out_path);
      return;
    }
    table_ptr table = load_table(gen_table_file);
    if (translate_opt->count() > 0) {
      uint32_t occurrence = 0;
      std::string amino = take(gm_translate(table.get(), gen_translate.c_str(), &occurrence));
      write_output(amino + std::to_string(occurrence), out_path);
    } else if (codons_opt->count() > 0) {
      std::string body;
      for (const auto& codon :
           labels_from_json_array(take(gm_codons_for(table.get(), gen_codons_for.c_str()))))
        body += codon + "\n";
      write_output(body, out_path);
    } else {
      write_output(take(gm_codon_table_tsv(table.get())), out_path);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const CliFailure& f) {
    std::cerr << "genmech: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "genmech: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
