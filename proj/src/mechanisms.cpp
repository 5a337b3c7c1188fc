#include "genmech/mechanisms.hpp"

#include <algorithm>

namespace genmech {

namespace {

std::vector<std::string> digit_letters(std::uint32_t k) {
  std::vector<std::string> letters;
  for (std::uint32_t i = 0; i < k; ++i) letters.push_back(std::string(1, char('0' + i)));
  return letters;
}

}  // namespace

SwitchSpace SwitchSpace::of(std::uint32_t switches, std::uint32_t positions) {
  if (positions > 10)
    fail(ErrorCode::BadSpace,
         "more than 10 positions need a named alphabet, got " + std::to_string(positions));
  if (switches < 1 || positions < 2)
    fail(ErrorCode::BadSpace, "need at least 1 switch and 2 positions");
  return SwitchSpace(switches, positions, Alphabet::of(digit_letters(positions)));
}

SwitchSpace SwitchSpace::of(std::uint32_t switches, std::uint32_t positions, Alphabet alphabet) {
  if (switches < 1 || positions < 2)
    fail(ErrorCode::BadSpace, "need at least 1 switch and 2 positions");
  if (alphabet.size() != positions)
    fail(ErrorCode::BadSpace, "alphabet names " + std::to_string(alphabet.size()) +
                                  " positions, expected " + std::to_string(positions));
  return SwitchSpace(switches, positions, std::move(alphabet));
}

BigInt SwitchSpace::outcome_count() const { return pow(BigInt(positions_), switches_); }

namespace {

// All outcomes sharing the prefix, free positions running in alphabet order
// (rightmost fastest). Caller checks the count is materializable.
std::vector<std::string> outcomes_with_prefix(const SwitchSpace& space,
                                              const std::string& prefix) {
  const std::size_t free_n = space.switches() - prefix.size();
  const std::uint32_t k = space.positions();
  std::vector<std::uint32_t> digits(free_n, 0);
  std::vector<std::string> out;
  while (true) {
    std::string s = prefix;
    for (std::uint32_t d : digits) s += space.alphabet().letter_char(d);
    out.push_back(std::move(s));
    std::size_t i = free_n;
    while (i > 0 && digits[i - 1] == k - 1) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

}  // namespace

MechanismTrace generative_run(const SwitchSpace& space, const std::string& code) {
  if (code.size() != space.switches())
    fail(ErrorCode::CodeLengthMismatch, "code has " + std::to_string(code.size()) +
                                            " letters for " +
                                            std::to_string(space.switches()) + " switches");
  for (char c : code) {
    if (!space.alphabet().find(c))
      fail(ErrorCode::UnknownPosition,
           "'" + std::string(1, c) + "' is not a switch position");
  }
  MechanismTrace trace;
  trace.mechanism = "generative";
  const std::uint32_t n = space.switches();
  for (std::uint32_t t = 0; t <= n; ++t) {
    TraceState state;
    state.size = pow(BigInt(space.positions()), n - t);
    if (state.size <= kMaterializeCap)
      state.candidates = outcomes_with_prefix(space, code.substr(0, t));
    trace.states.push_back(std::move(state));
  }
  trace.outcome = code;
  trace.rounds = n;
  trace.evaluations = n;
  return trace;
}

MechanismTrace generative_run_tree(const CodeTree& tree, const CodeWord& code) {
  const auto& nodes = tree.nodes();
  MechanismTrace trace;
  trace.mechanism = "generative_tree";
  auto record = [&](std::uint32_t at) {
    TraceState state;
    state.size = nodes[at].block.size();
    if (state.size <= kMaterializeCap) {
      std::vector<std::string> labels;
      for (std::uint32_t e : nodes[at].block) labels.push_back(tree.universe().label(e));
      state.candidates = std::move(labels);
    }
    trace.states.push_back(std::move(state));
  };
  std::uint32_t at = 0;
  record(at);
  for (char c : code) {
    std::uint32_t letter = tree.alphabet().index_of(c);
    if (nodes[at].is_leaf())
      fail(ErrorCode::WordTooLong, "letters remain after reaching leaf '" +
                                       tree.universe().label(nodes[at].block[0]) + "'");
    std::uint32_t next = UINT32_MAX;
    for (const auto& ch : nodes[at].children) {
      if (ch.first == letter) {
        next = ch.second;
        break;
      }
    }
    if (next == UINT32_MAX)
      fail(ErrorCode::NoSuchBranch, "no '" + std::string(1, c) + "' branch at this node");
    at = next;
    record(at);
  }
  if (!nodes[at].is_leaf()) fail(ErrorCode::WordTooShort, "word ends at an internal node");
  trace.outcome = tree.universe().label(nodes[at].block[0]);
  trace.rounds = code.size();
  trace.evaluations = code.size();
  return trace;
}

namespace {

struct LiveClass {
  std::size_t cls;
  Rational weight;  // per candidate, not per class
};

TraceState class_state(const std::vector<FitnessClass>& classes,
                       const std::vector<LiveClass>& live) {
  TraceState state;
  BigInt total = 0;
  bool have_members = true;
  for (const auto& l : live) {
    total += classes[l.cls].count;
    have_members = have_members && classes[l.cls].members.has_value();
  }
  state.size = total;
  if (have_members && total <= kMaterializeCap) {
    std::vector<std::pair<std::string, Rational>> weights;
    for (const auto& l : live) {
      for (const auto& label : *classes[l.cls].members) weights.emplace_back(label, l.weight);
    }
    std::sort(weights.begin(), weights.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> candidates;
    candidates.reserve(weights.size());
    for (const auto& [label, w] : weights) candidates.push_back(label);
    state.candidates = std::move(candidates);
    state.weights = std::move(weights);
  }
  return state;
}

}  // namespace

MechanismTrace selectionist_run_classes(std::vector<FitnessClass> classes,
                                        const SelectionPolicy& policy) {
  if (classes.empty()) fail(ErrorCode::EmptyCandidates, "no candidates to select from");
  std::sort(classes.begin(), classes.end(),
            [](const FitnessClass& a, const FitnessClass& b) { return a.fitness > b.fitness; });
  BigInt m = 0;
  bool any_positive = false;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].fitness < 0)
      fail(ErrorCode::BadFitness, "negative fitness " + format_rational(classes[i].fitness));
    if (classes[i].count < 1) fail(ErrorCode::Internal, "empty fitness class");
    if (i > 0 && classes[i].fitness == classes[i - 1].fitness)
      fail(ErrorCode::Internal, "fitness classes must be distinct");
    any_positive = any_positive || classes[i].fitness > 0;
    m += classes[i].count;
  }
  if (!any_positive) fail(ErrorCode::AllZeroFitness, "every candidate has fitness 0");

  Rational eps = policy.epsilon.value_or(Rational(BigInt(1), 4 * m));
  if (eps <= 0 || eps * Rational(m) >= 1)
    fail(ErrorCode::InvalidPolicy, "epsilon must lie in (0, 1/" + m.str() + "), got " +
                                       format_rational(eps));
  const std::uint64_t max_rounds = policy.max_rounds == 0 ? 10000 : policy.max_rounds;

  std::vector<LiveClass> live;
  live.reserve(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) live.push_back({i, Rational(BigInt(1), m)});

  MechanismTrace trace;
  trace.mechanism = "selectionist";
  trace.evaluations = 0;
  trace.states.push_back(class_state(classes, live));

  for (std::uint64_t round = 1; round <= max_rounds; ++round) {
    for (const auto& l : live) trace.evaluations += classes[l.cls].count;

    Rational total = 0;
    for (const auto& l : live) total += l.weight * classes[l.cls].fitness * classes[l.cls].count;
    for (auto& l : live) l.weight = l.weight * classes[l.cls].fitness / total;

    std::vector<LiveClass> kept;
    kept.reserve(live.size());
    for (const auto& l : live) {
      if (l.weight >= eps) kept.push_back(l);
    }
    if (kept.size() < live.size()) {
      Rational surviving = 0;
      for (const auto& l : kept) surviving += l.weight * classes[l.cls].count;
      for (auto& l : kept) l.weight /= surviving;
    }
    live = std::move(kept);
    trace.rounds = round;
    trace.states.push_back(class_state(classes, live));

    if (live.size() == 1) {
      const FitnessClass& winner = classes[live[0].cls];
      trace.outcome = winner.least_label;
      if (winner.count > 1) {
        // All survivors share one fitness; their weights are frozen, so the
        // dynamic alone can never finish. Resolve by label order.
        trace.tie_break = true;
        TraceState final_state;
        final_state.size = 1;
        final_state.candidates = {trace.outcome};
        final_state.weights = {{trace.outcome, Rational(1)}};
        trace.states.push_back(std::move(final_state));
      }
      return trace;
    }
  }
  fail(ErrorCode::DidNotConverge,
       "still " + std::to_string(live.size()) + " fitness classes after " +
           std::to_string(max_rounds) + " rounds");
}

MechanismTrace selectionist_run(const std::vector<std::string>& candidates,
                                const std::map<std::string, Rational>& fitness,
                                const SelectionPolicy& policy) {
  if (candidates.empty()) fail(ErrorCode::EmptyCandidates, "no candidates to select from");
  std::map<Rational, std::vector<std::string>> groups;
  {
    std::map<std::string, bool> seen;
    for (const auto& label : candidates) {
      if (seen.count(label))
        fail(ErrorCode::DuplicateElement, "duplicate candidate '" + label + "'");
      seen[label] = true;
      auto it = fitness.find(label);
      if (it == fitness.end())
        fail(ErrorCode::BadFitness, "no fitness for candidate '" + label + "'");
      if (it->second < 0)
        fail(ErrorCode::BadFitness,
             "negative fitness for '" + label + "': " + format_rational(it->second));
      groups[it->second].push_back(label);
    }
  }
  std::vector<FitnessClass> classes;
  classes.reserve(groups.size());
  for (auto& [fit, members] : groups) {
    std::sort(members.begin(), members.end());
    classes.push_back({fit, BigInt(members.size()), members.front(), std::move(members)});
  }
  return selectionist_run_classes(std::move(classes), policy);
}

namespace {

BigInt binomial(std::uint32_t n, std::uint32_t d) {
  BigInt result = 1;
  for (std::uint32_t i = 1; i <= d; ++i) {
    result *= n - d + i;
    result /= i;
  }
  return result;
}

// Some member of the space at exactly the given Hamming distance from the
// code: flip the first d positions to another letter.
std::string representative_at_distance(const SwitchSpace& space, const std::string& code,
                                       std::uint32_t d) {
  std::string out = code;
  for (std::uint32_t i = 0; i < d; ++i) {
    char first = space.alphabet().letter_char(0);
    out[i] = (code[i] == first) ? space.alphabet().letter_char(1) : first;
  }
  return out;
}

}  // namespace

CompareReport compare_mechanisms(const SwitchSpace& space, const std::string& code,
                                 const std::optional<std::map<std::string, Rational>>& fitness,
                                 const SelectionPolicy& policy) {
  MechanismTrace gen = generative_run(space, code);

  MechanismTrace sel;
  if (fitness) {
    if (space.outcome_count() > kMaxExplicitOutcomes)
      fail(ErrorCode::SpaceTooLarge,
           "explicit fitness over " + space.outcome_count().str() + " outcomes");
    auto all = outcomes_with_prefix(space, "");
    const std::string* best = nullptr;
    bool best_tied = false;
    for (const auto& outcome : all) {
      auto it = fitness->find(outcome);
      if (it == fitness->end())
        fail(ErrorCode::BadFitness, "no fitness for outcome '" + outcome + "'");
      if (!best || fitness->at(*best) < it->second) {
        best = &outcome;
        best_tied = false;
      } else if (fitness->at(*best) == it->second) {
        best_tied = true;
      }
    }
    if (best_tied)
      fail(ErrorCode::OutcomeMismatch, "fitness must peak at exactly one outcome");
    if (*best != code)
      fail(ErrorCode::OutcomeMismatch,
           "fitness peaks at '" + *best + "' but the code selects '" + code + "'");
    sel = selectionist_run(all, *fitness, policy);
  } else {
    std::vector<FitnessClass> classes;
    const std::uint32_t n = space.switches();
    const std::uint32_t k = space.positions();
    for (std::uint32_t d = 0; d <= n; ++d) {
      FitnessClass cls;
      cls.fitness = Rational(n + 1 - d);
      cls.count = binomial(n, d) * pow(BigInt(k - 1), d);
      cls.least_label = d == 0 ? code : representative_at_distance(space, code, d);
      classes.push_back(std::move(cls));
    }
    sel = selectionist_run_classes(std::move(classes), policy);
  }

  CompareReport report;
  report.switches = space.switches();
  report.positions = space.positions();
  report.code = code;
  report.generative_outcome = gen.outcome;
  report.selectionist_outcome = sel.outcome;
  report.agree = gen.outcome == sel.outcome;
  report.generative_evaluations = gen.evaluations;
  report.selectionist_first_round_evaluations = space.outcome_count();
  report.selectionist_total_evaluations = sel.evaluations;
  report.selectionist_rounds = sel.rounds;
  report.generative_peak_actualized = 1;
  report.selectionist_peak_actualized = space.outcome_count();
  report.tie_break = sel.tie_break;
  return report;
}

}  // namespace genmech
