#include <map>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "genmech/genetic.hpp"
#include "genmech/io.hpp"
#include "helpers.hpp"

using namespace genmech;
using test::code_of;

namespace {

const char* kThreeChain = R"({
  "universe": ["a", "b", "c"],
  "alphabet": ["0", "1"],
  "partitions": [[["a"], ["b", "c"]], [["a", "b"], ["c"]]]
})";

PartitionChain three_chain() { return parse_chain_json(kThreeChain); }

PartitionChain five_chain() {
  Universe u = Universe::of({"u1", "u2", "u3", "u4", "u5"});
  Alphabet a = Alphabet::of({"0", "1"});
  return make_chain(
      u, a,
      {make_partition(u, {{"u1"}, {"u2", "u3", "u4", "u5"}}),
       make_partition(u, {{"u1", "u2", "u3"}, {"u4", "u5"}}),
       make_partition(u, {{"u1", "u2"}, {"u3", "u4", "u5"}}),
       make_partition(u, {{"u1", "u2", "u3", "u4"}, {"u5"}})});
}

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("chain json round-trip") {
  PartitionChain chain = three_chain();
  CHECK(chain.universe().size() == 3);
  CHECK(chain.alphabet().size() == 2);
  REQUIRE(chain.length() == 2);
  Universe u = chain.universe();
  CHECK(chain.partitions()[0] == make_partition(u, {{"a"}, {"b", "c"}}));

  std::string emitted = emit_chain_json(chain);
  PartitionChain back = parse_chain_json(emitted);
  CHECK(emit_chain_json(back) == emitted);
  CHECK(equal_ordered(back.partitions()[1], chain.partitions()[1]));

  std::string genetic = emit_chain_json(standard_chain());
  CHECK(emit_chain_json(parse_chain_json(genetic)) == genetic);
}

TEST_CASE("chain json errors carry the field") {
  CHECK(code_of([] { parse_chain_json("{nope"); }) == ErrorCode::JsonParse);
  CHECK(code_of([] { parse_chain_json("[]"); }) == ErrorCode::BadDocument);
  CHECK(code_of([] { parse_chain_json(R"({"universe": ["a"]})"); }) ==
        ErrorCode::BadDocument);
  CHECK(code_of([] {
          parse_chain_json(R"({"universe": [], "alphabet": ["0"], "partitions": []})");
        }) == ErrorCode::EmptyUniverse);
  CHECK(code_of([] {
          parse_chain_json(
              R"({"universe": ["a", "a"], "alphabet": ["0"], "partitions": []})");
        }) == ErrorCode::DuplicateElement);
  CHECK(code_of([] {
          parse_chain_json(
              R"({"universe": ["a"], "alphabet": ["0", "0"], "partitions": []})");
        }) == ErrorCode::DuplicateLetter);

  // a broken step is reported by index
  std::string msg = message_of([] {
    parse_chain_json(R"({
      "universe": ["a", "b", "c"],
      "alphabet": ["0", "1"],
      "partitions": [[["a"], ["b", "c"]], [["a", "b"]]]
    })");
  });
  CHECK(msg.find("partitions[1]") != std::string::npos);

  CHECK(code_of([] {
          parse_chain_json(R"({
            "universe": ["a", "b"],
            "alphabet": ["0", "1"],
            "partitions": [[["a"], ["zzz"]]]
          })");
        }) == ErrorCode::UnknownElement);
}

TEST_CASE("codebook json round-trip") {
  CodeBook book = build_code(five_chain());
  std::string emitted = emit_codebook_json(book);
  CodeBook back = parse_codebook_json(emitted);
  CHECK(emit_codebook_json(back) == emitted);
  CHECK(back.word("u1") == book.word("u1"));
  CHECK(back.word("u5") == book.word("u5"));
  CHECK(is_prefix_free(back) == is_prefix_free(book));
  CHECK(kraft_sum(back) == kraft_sum(book));

  CHECK(code_of([] { parse_codebook_json(R"({"universe": ["a"]})"); }) ==
        ErrorCode::BadDocument);
  CHECK(code_of([] {
          parse_codebook_json(R"({
            "universe": ["a"], "alphabet": ["0"], "codes": {"a": "2"}
          })");
        }) == ErrorCode::UnknownLetter);
  // a stray key means some element went without a word
  CHECK(code_of([] {
          parse_codebook_json(R"({
            "universe": ["a"], "alphabet": ["0"], "codes": {"b": "0"}
          })");
        }) == ErrorCode::BadDocument);
}

TEST_CASE("model json accepts rationals in common shapes") {
  BranchModel uniform = parse_model_json(R"({"kind": "uniform"})");
  CHECK(uniform.kind == BranchModel::Kind::Uniform);
  CHECK(emit_model_json(parse_model_json(emit_model_json(uniform))) ==
        emit_model_json(uniform));

  BranchModel model = parse_model_json(R"({
    "kind": "explicit",
    "nodes": {"": ["1/2", 0.25, "1/4"], "1": [1, 0]}
  })");
  CHECK(model.kind == BranchModel::Kind::Explicit);
  REQUIRE(model.nodes.count(""));
  CHECK(model.nodes.at("") ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  CHECK(model.nodes.at("1") == std::vector<Rational>{Rational(1), Rational(0)});
  std::string emitted = emit_model_json(model);
  CHECK(emit_model_json(parse_model_json(emitted)) == emitted);

  CHECK(code_of([] { parse_model_json(R"({"kind": "other"})"); }) ==
        ErrorCode::BadDocument);
  CHECK(code_of([] { parse_model_json(R"({"kind": "explicit"})"); }) ==
        ErrorCode::BadDocument);
  CHECK(code_of([] {
          parse_model_json(R"({"kind": "explicit", "nodes": {"": "1/2"}})");
        }) == ErrorCode::BadDocument);
  CHECK(code_of([] {
          parse_model_json(R"({"kind": "explicit", "nodes": {"": ["1/0"]}})");
        }) == ErrorCode::BadRational);
  CHECK(code_of([] {
          parse_model_json(R"({"kind": "explicit", "nodes": {"": ["half"]}})");
        }) == ErrorCode::BadRational);
}

TEST_CASE("fitness json") {
  std::map<std::string, Rational> fitness =
      parse_fitness_json(R"({"a": "3/2", "b": 2, "c": 0.5})");
  CHECK(fitness.at("a") == Rational(3, 2));
  CHECK(fitness.at("b") == Rational(2));
  CHECK(fitness.at("c") == Rational(1, 2));  // binary floats stay exact

  CHECK(code_of([] { parse_fitness_json("[1, 2]"); }) == ErrorCode::BadDocument);
  CHECK(code_of([] { parse_fitness_json(R"({"a": "x"})"); }) == ErrorCode::BadRational);
}

TEST_CASE("entropy report round-trip") {
  EntropyReport report = make_entropy_report(three_chain(), BranchModel::uniform());
  CHECK(report.kraft == Rational(1));
  CHECK(report.shannon == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(report.logical == Rational(5, 8));
  CHECK(report.average_length == Rational(3, 2));

  std::string emitted = emit_report_json(report);
  EntropyReport back = parse_report_json(emitted);
  CHECK(emit_report_json(back) == emitted);
  CHECK(back.logical == report.logical);
  CHECK(back.shannon == report.shannon);  // 12 decimals hold 1.5 exactly
  CHECK(back.distribution.probability("b") == Rational(1, 4));

  nlohmann::json doc = nlohmann::json::parse(emitted);
  CHECK(doc.contains("codebook"));
  CHECK(doc["kraft_sum"] == "1");
  CHECK(doc["shannon_entropy"] == "1.500000000000");
  CHECK(doc["logical_entropy"] == "5/8");
  CHECK(doc["leaf_probabilities"]["a"] == "1/2");
}

TEST_CASE("counts json round-trip") {
  SampleCounts counts = marble_simulate(build_tree(three_chain()),
                                        BranchModel::uniform(), 1000, 7);
  std::string emitted = emit_counts_json(counts);
  SampleCounts back = parse_counts_json(emitted);
  CHECK(emit_counts_json(back) == emitted);
  CHECK(back.n == 1000);
  CHECK(back.seed == 7);
  CHECK(back.counts == counts.counts);

  nlohmann::json doc = nlohmann::json::parse(emitted);
  CHECK(doc["n"] == 1000);
  CHECK(doc["counts"].size() == 3);
  CHECK(doc.contains("empirical_logical_entropy"));

  SampleCounts tiny = marble_simulate(build_tree(three_chain()),
                                      BranchModel::uniform(), 1, 7);
  nlohmann::json small = nlohmann::json::parse(emit_counts_json(tiny));
  CHECK(small["empirical_logical_entropy"].is_null());

  // counts must add up to n
  nlohmann::json bad = doc;
  bad["n"] = 999;
  CHECK(code_of([&] { parse_counts_json(bad.dump()); }) == ErrorCode::BadDocument);
}

TEST_CASE("trace json round-trip") {
  MechanismTrace gen = generative_run(SwitchSpace::of(3, 2), "010");
  std::string emitted = emit_trace_json(gen);
  MechanismTrace back = parse_trace_json(emitted);
  CHECK(emit_trace_json(back) == emitted);
  CHECK(back.mechanism == "generative");
  CHECK(back.outcome == "010");
  CHECK(back.evaluations == 3);
  REQUIRE(back.states.size() == 4);
  CHECK(back.states[0].size == 8);
  CHECK(*back.states[2].candidates == std::vector<std::string>{"010", "011"});

  SelectionPolicy policy;
  policy.epsilon = Rational(1, 20);
  MechanismTrace sel = selectionist_run(
      {"x", "y", "z"},
      {{"x", Rational(4)}, {"y", Rational(2)}, {"z", Rational(1)}}, policy);
  std::string sel_emitted = emit_trace_json(sel);
  MechanismTrace sel_back = parse_trace_json(sel_emitted);
  CHECK(emit_trace_json(sel_back) == sel_emitted);
  CHECK(sel_back.rounds == 5);
  CHECK(sel_back.evaluations == 12);
  REQUIRE(sel_back.states[1].weights.has_value());
  CHECK(sel_back.states[1].weights->at(0) ==
        std::pair<std::string, Rational>{"x", Rational(4, 7)});

  // big spaces stay symbolic: sizes as decimal strings, no candidate lists
  MechanismTrace wide = generative_run(SwitchSpace::of(80, 2), std::string(80, '0'));
  std::string wide_emitted = emit_trace_json(wide);
  MechanismTrace wide_back = parse_trace_json(wide_emitted);
  CHECK(emit_trace_json(wide_back) == wide_emitted);
  CHECK(wide_back.states[0].size == BigInt("1208925819614629174706176"));
  CHECK_FALSE(wide_back.states[0].candidates.has_value());
}

TEST_CASE("compare json round-trip") {
  CompareReport report = compare_mechanisms(SwitchSpace::of(3, 2), "010");
  std::string emitted = emit_compare_json(report);
  CompareReport back = parse_compare_json(emitted);
  CHECK(emit_compare_json(back) == emitted);
  CHECK(back.agree);
  CHECK(back.generative_evaluations == 3);
  CHECK(back.selectionist_first_round_evaluations == 8);
  CHECK(back.generative_peak_actualized == 1);
  CHECK(back.selectionist_peak_actualized == 8);
}

TEST_CASE("joins and diagnostics json") {
  nlohmann::json joins = nlohmann::json::parse(emit_joins_json(three_chain()));
  REQUIRE(joins["joins"].size() == 3);
  CHECK(joins["joins"][0].size() == 1);  // indiscrete start
  CHECK(joins["joins"][0][0].size() == 3);
  CHECK(joins["joins"][2].size() == 3);  // discrete finish

  Universe u = Universe::of({"a", "b", "c"});
  PartitionChain stuck = make_chain(
      u, Alphabet::of({"0", "1"}),
      {make_partition(u, {{"a"}, {"b", "c"}}),
       make_partition(u, {{"a"}, {"b", "c"}})});
  nlohmann::json diag = nlohmann::json::parse(emit_diagnostics_json(stuck));
  REQUIRE(diag["diagnostics"].is_array());
  std::string all;
  for (const auto& line : diag["diagnostics"]) all += line.get<std::string>() + "\n";
  CHECK(all.find("stuck") != std::string::npos);
  CHECK(all.find("b, c") != std::string::npos);
}

TEST_CASE("dot rendering") {
  std::string dot = render_dot(build_tree(three_chain()));
  CHECK(dot.find("digraph code_tree") != std::string::npos);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("\"b\"") != std::string::npos);
  CHECK(dot.rfind("}") != std::string::npos);
}

TEST_CASE("point mass models") {
  CodeTree tree = build_tree(three_chain());
  BranchModel point = point_mass_model(tree, "b");
  CHECK(point.kind == BranchModel::Kind::Explicit);
  CHECK(point.nodes.at("") == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(point.nodes.at("1") == std::vector<Rational>{Rational(1), Rational(0)});

  EntropyReport report = make_entropy_report(three_chain(), point);
  CHECK(report.shannon == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(report.logical == Rational(0));
  CHECK(report.average_length == Rational(2));
  CHECK(report.distribution.probability("b") == Rational(1));
  CHECK(report.distribution.probability("a") == Rational(0));

  CHECK(code_of([&] { point_mass_model(tree, "zzz"); }) == ErrorCode::UnknownElement);
}
