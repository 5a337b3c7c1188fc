#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "genmech/codes.hpp"
#include "genmech/rational.hpp"

namespace genmech {

// How a marble picks a branch. Uniform splits equally over a node's existing
// children (a unary child gets probability 1, so nothing leaks). Explicit
// maps each internal node, keyed by its root path ("" = root), to per-child
// probabilities in child order.
struct BranchModel {
  enum class Kind { Uniform, Explicit };

  Kind kind = Kind::Uniform;
  std::map<std::string, std::vector<Rational>> nodes;

  static BranchModel uniform() { return {}; }
  static BranchModel explicit_nodes(std::map<std::string, std::vector<Rational>> nodes) {
    return {Kind::Explicit, std::move(nodes)};
  }
};

class LeafDistribution {
 public:
  // Throws BadDistribution (negative entry, wrong count, sum != 1).
  static LeafDistribution of(Universe universe, std::vector<Rational> probabilities);

  const Universe& universe() const { return universe_; }
  const std::vector<Rational>& probabilities() const { return probs_; }
  const Rational& probability_at(std::uint32_t element_index) const {
    return probs_[element_index];
  }
  // Throws UnknownElement.
  const Rational& probability(const std::string& element) const;

 private:
  LeafDistribution(Universe universe, std::vector<Rational> probs)
      : universe_(std::move(universe)), probs_(std::move(probs)) {}

  Universe universe_;
  std::vector<Rational> probs_;
};

struct SampleCounts {
  Universe universe;
  std::vector<std::uint64_t> counts;  // by element index
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
};

// Per-child branch probabilities for every node (empty vectors at leaves),
// validated. Throws IncompleteModel / NonNormalizedNode.
std::vector<std::vector<Rational>> branch_probabilities(const CodeTree& tree,
                                                        const BranchModel& model);

// Each leaf's probability is the product of edge probabilities on its root
// path; exact. Errors as branch_probabilities.
LeafDistribution leaf_distribution(const CodeTree& tree, const BranchModel& model);

// H(p) = sum p_i log2(1/p_i), zero terms skipped.
double shannon_entropy(const LeafDistribution& dist);

// h(p) = 1 - sum p_i^2, exact.
Rational logical_entropy(const LeafDistribution& dist);

// Expected word length under the distribution, exact. Throws UniverseMismatch.
Rational average_code_length(const CodeBook& book, const LeafDistribution& dist);

// n root-to-leaf walks driven by a fixed, portable generator (mt19937_64), so
// equal (tree, model, n, seed) means equal counts on every platform. Branch
// selection compares 64-bit draws against exact cumulative thresholds; the
// only approximation is the 2^-64 threshold quantization.
SampleCounts marble_simulate(const CodeTree& tree, const BranchModel& model, std::uint64_t n,
                             std::uint64_t seed);

// Unbiased two-draw estimator 1 - sum c(c-1) / (n(n-1)). Throws TooFewSamples
// for n < 2.
Rational empirical_logical_entropy(const SampleCounts& counts);

}  // namespace genmech
