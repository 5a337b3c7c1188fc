#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genmech/codes.hpp"
#include "genmech/rational.hpp"

namespace genmech {

// Traces list candidate sets only while they are small enough to be useful;
// beyond this, states carry sizes alone.
inline constexpr std::uint64_t kMaterializeCap = 4096;

// A full outcome space can only be spelled out candidate-by-candidate (as the
// explicit-fitness selectionist run must) while it fits in memory.
inline constexpr std::uint64_t kMaxExplicitOutcomes = 1ull << 22;

// n switches, each with k positions named by single-character letters.
// Outcomes are the k^n strings with switch 1 leftmost.
class SwitchSpace {
 public:
  // Positions named "0".."9"; throws BadSpace for n < 1, k < 2 or k > 10.
  static SwitchSpace of(std::uint32_t switches, std::uint32_t positions);
  // Custom position names; throws BadSpace when the alphabet size is not k.
  static SwitchSpace of(std::uint32_t switches, std::uint32_t positions, Alphabet alphabet);

  std::uint32_t switches() const { return switches_; }
  std::uint32_t positions() const { return positions_; }
  const Alphabet& alphabet() const { return alphabet_; }
  BigInt outcome_count() const;

 private:
  SwitchSpace(std::uint32_t switches, std::uint32_t positions, Alphabet alphabet)
      : switches_(switches), positions_(positions), alphabet_(std::move(alphabet)) {}

  std::uint32_t switches_;
  std::uint32_t positions_;
  Alphabet alphabet_;
};

struct TraceState {
  BigInt size;
  // Present when size <= kMaterializeCap.
  std::optional<std::vector<std::string>> candidates;
  // Selectionist runs: survivor weights (sorted by label), same cap.
  std::optional<std::vector<std::pair<std::string, Rational>>> weights;
};

struct MechanismTrace {
  std::string mechanism;  // "generative" | "generative_tree" | "selectionist"
  std::vector<TraceState> states;
  std::string outcome;
  std::uint64_t rounds = 0;
  BigInt evaluations;
  bool tie_break = false;
};

struct SelectionPolicy {
  // Elimination threshold; defaults to 1/(4m) for m candidates. Must satisfy
  // 0 < epsilon < 1/m so the leader can never be eliminated.
  std::optional<Rational> epsilon;
  std::uint64_t max_rounds = 10000;
};

// Candidates sharing a fitness value keep equal weights forever, so the
// selectionist dynamic only needs one weight per distinct fitness. Large runs
// stay cheap by passing counted classes instead of members.
struct FitnessClass {
  Rational fitness;
  BigInt count;
  std::string least_label;  // lexicographically least member
  std::optional<std::vector<std::string>> members;
};

// Fix switch t to code letter t; the candidate set divides by k each step and
// the outcome is the code itself. Throws CodeLengthMismatch / UnknownPosition.
MechanismTrace generative_run(const SwitchSpace& space, const std::string& code);

// decode, but recording each visited node's block as the candidate set.
// Throws the decode errors.
MechanismTrace generative_run_tree(const CodeTree& tree, const CodeWord& code);

// Rounds of: multiply weights by fitness, normalize, drop weights below
// epsilon, renormalize; stops at one survivor. A surviving all-equal-fitness
// class can never separate, so it resolves by least label with tie_break set.
// Throws EmptyCandidates / DuplicateElement / BadFitness / AllZeroFitness /
// InvalidPolicy / DidNotConverge.
MechanismTrace selectionist_run(const std::vector<std::string>& candidates,
                                const std::map<std::string, Rational>& fitness,
                                const SelectionPolicy& policy = {});

// Same dynamic on pre-grouped classes (classes must have distinct fitness).
MechanismTrace selectionist_run_classes(std::vector<FitnessClass> classes,
                                        const SelectionPolicy& policy = {});

struct CompareReport {
  std::uint32_t switches = 0;
  std::uint32_t positions = 0;
  std::string code;
  std::string generative_outcome;
  std::string selectionist_outcome;
  bool agree = false;
  BigInt generative_evaluations;
  BigInt selectionist_first_round_evaluations;
  BigInt selectionist_total_evaluations;
  std::uint64_t selectionist_rounds = 0;
  BigInt generative_peak_actualized;    // 1: nothing beyond the outcome is realized
  BigInt selectionist_peak_actualized;  // k^n: the whole space starts actualized
  bool tie_break = false;
};

// Runs both mechanisms toward the outcome spelled by the code. With no
// fitness given, one is synthesized that peaks uniquely at the code's outcome
// (n+1 minus Hamming distance), grouped into distance classes so 2^20-sized
// spaces need no materialization. An explicit fitness must cover the whole
// space and peak uniquely at the coded outcome.
// Throws OutcomeMismatch / SpaceTooLarge plus the two runs' errors.
CompareReport compare_mechanisms(
    const SwitchSpace& space, const std::string& code,
    const std::optional<std::map<std::string, Rational>>& fitness = std::nullopt,
    const SelectionPolicy& policy = {});

}  // namespace genmech
