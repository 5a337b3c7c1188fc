#include "genmech/entropy.hpp"

#include <cmath>
#include <random>

namespace genmech {

LeafDistribution LeafDistribution::of(Universe universe, std::vector<Rational> probabilities) {
  if (probabilities.size() != universe.size())
    fail(ErrorCode::BadDistribution, "distribution must cover every element exactly once");
  Rational sum = 0;
  for (const auto& p : probabilities) {
    if (p < 0) fail(ErrorCode::BadDistribution, "negative probability " + format_rational(p));
    sum += p;
  }
  if (sum != 1)
    fail(ErrorCode::BadDistribution, "probabilities sum to " + format_rational(sum) + ", not 1");
  return LeafDistribution(std::move(universe), std::move(probabilities));
}

const Rational& LeafDistribution::probability(const std::string& element) const {
  return probs_[universe_.index_of(element)];
}

std::vector<std::vector<Rational>> branch_probabilities(const CodeTree& tree,
                                                        const BranchModel& model) {
  const auto& nodes = tree.nodes();
  std::vector<std::vector<Rational>> out(nodes.size());
  // Paths are only needed for Explicit lookups; build them on the walk.
  std::vector<std::pair<std::uint32_t, std::string>> stack{{0, ""}};
  while (!stack.empty()) {
    auto [at, path] = std::move(stack.back());
    stack.pop_back();
    const auto& node = nodes[at];
    if (node.is_leaf()) continue;
    if (model.kind == BranchModel::Kind::Uniform) {
      out[at].assign(node.children.size(), Rational(1, node.children.size()));
    } else {
      auto it = model.nodes.find(path);
      if (it == model.nodes.end())
        fail(ErrorCode::IncompleteModel, "no probabilities for node \"" + path + "\"");
      const auto& probs = it->second;
      if (probs.size() != node.children.size())
        fail(ErrorCode::NonNormalizedNode,
             "node \"" + path + "\" has " + std::to_string(node.children.size()) +
                 " children but " + std::to_string(probs.size()) + " probabilities");
      Rational sum = 0;
      for (const auto& p : probs) {
        if (p < 0)
          fail(ErrorCode::NonNormalizedNode,
               "negative branch probability at node \"" + path + "\"");
        sum += p;
      }
      if (sum != 1)
        fail(ErrorCode::NonNormalizedNode, "branch probabilities at node \"" + path +
                                               "\" sum to " + format_rational(sum));
      out[at] = probs;
    }
    for (const auto& [letter, child] : node.children)
      stack.emplace_back(child, path + tree.alphabet().letter_char(letter));
  }
  return out;
}

LeafDistribution leaf_distribution(const CodeTree& tree, const BranchModel& model) {
  auto branch = branch_probabilities(tree, model);
  const auto& nodes = tree.nodes();
  std::vector<Rational> probs(tree.universe().size(), 0);
  std::vector<std::pair<std::uint32_t, Rational>> stack{{0, Rational(1)}};
  while (!stack.empty()) {
    auto [at, p] = std::move(stack.back());
    stack.pop_back();
    const auto& node = nodes[at];
    if (node.is_leaf()) {
      probs[node.block[0]] = p;
      continue;
    }
    for (std::size_t c = 0; c < node.children.size(); ++c)
      stack.emplace_back(node.children[c].second, p * branch[at][c]);
  }
  return LeafDistribution::of(tree.universe(), std::move(probs));
}

double shannon_entropy(const LeafDistribution& dist) {
  double h = 0;
  for (const auto& p : dist.probabilities()) {
    if (p == 0) continue;
    double pd = to_double(p);
    h -= pd * std::log2(pd);
  }
  return h;
}

Rational logical_entropy(const LeafDistribution& dist) {
  Rational sum = 0;
  for (const auto& p : dist.probabilities()) sum += p * p;
  return 1 - sum;
}

Rational average_code_length(const CodeBook& book, const LeafDistribution& dist) {
  if (book.universe() != dist.universe())
    fail(ErrorCode::UniverseMismatch, "codebook and distribution use different universes");
  Rational total = 0;
  for (std::uint32_t e = 0; e < book.universe().size(); ++e)
    total += dist.probability_at(e) * Rational(book.word_at(e).size());
  return total;
}

namespace {

using uint128 = unsigned __int128;

// Cumulative child thresholds scaled to 2^64; a draw r picks the first child
// with r < threshold. The final threshold is exactly 2^64, so every draw
// lands somewhere.
std::vector<std::vector<uint128>> scale_thresholds(
    const std::vector<std::vector<Rational>>& branch) {
  std::vector<std::vector<uint128>> out(branch.size());
  for (std::size_t i = 0; i < branch.size(); ++i) {
    Rational cum = 0;
    out[i].reserve(branch[i].size());
    for (const auto& p : branch[i]) {
      cum += p;
      BigInt scaled = (numerator(cum) << 64) / denominator(cum);
      out[i].push_back(scaled.convert_to<uint128>());
    }
  }
  return out;
}

}  // namespace

SampleCounts marble_simulate(const CodeTree& tree, const BranchModel& model, std::uint64_t n,
                             std::uint64_t seed) {
  auto thresholds = scale_thresholds(branch_probabilities(tree, model));
  const auto& nodes = tree.nodes();
  SampleCounts counts{tree.universe(), std::vector<std::uint64_t>(tree.universe().size(), 0),
                      n, seed};
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint32_t at = 0;
    while (!nodes[at].is_leaf()) {
      uint128 r = rng();
      std::size_t pick = 0;
      while (r >= thresholds[at][pick]) ++pick;
      at = nodes[at].children[pick].second;
    }
    ++counts.counts[nodes[at].block[0]];
  }
  return counts;
}

Rational empirical_logical_entropy(const SampleCounts& counts) {
  if (counts.n < 2)
    fail(ErrorCode::TooFewSamples, "pair estimator needs at least 2 samples, got " +
                                       std::to_string(counts.n));
  BigInt pairs = 0;
  for (std::uint64_t c : counts.counts) pairs += BigInt(c) * (BigInt(c) - 1);
  BigInt all = BigInt(counts.n) * (BigInt(counts.n) - 1);
  return 1 - Rational(pairs, all);
}

}  // namespace genmech
