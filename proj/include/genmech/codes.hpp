#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "genmech/partition.hpp"
#include "genmech/rational.hpp"

namespace genmech {

// Ordered distinct code letters; letter index i labels block i of every chain
// partition. Letters are single characters so that words can be written as
// plain strings ("1110", "ACG").
class Alphabet {
 public:
  // Throws EmptyAlphabet / DuplicateLetter / BadDocument (multi-char letter).
  static Alphabet of(std::vector<std::string> letters);

  std::size_t size() const;
  const std::string& letter(std::uint32_t index) const;
  char letter_char(std::uint32_t index) const;
  const std::vector<std::string>& letters() const;
  std::optional<std::uint32_t> find(char letter) const;
  // Throws UnknownLetter.
  std::uint32_t index_of(char letter) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b);
  friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

 private:
  struct Data;
  explicit Alphabet(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

// A code word is a string of letter characters; empty only for a singleton
// universe, where the root is already a leaf.
using CodeWord = std::string;

class PartitionChain {
 public:
  const Universe& universe() const { return universe_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::size_t length() const { return partitions_.size(); }

 private:
  friend PartitionChain make_chain(Universe, Alphabet, std::vector<Partition>);
  PartitionChain(Universe universe, Alphabet alphabet, std::vector<Partition> partitions)
      : universe_(std::move(universe)),
        alphabet_(std::move(alphabet)),
        partitions_(std::move(partitions)) {}

  Universe universe_;
  Alphabet alphabet_;
  std::vector<Partition> partitions_;
};

// Structural validation only: every partition on the shared universe with
// exactly |alphabet| blocks. Whether the chain discretizes is checked when a
// code is built, so joins can still be inspected on a stuck chain.
// Throws UniverseMismatch / BlockCountMismatch.
PartitionChain make_chain(Universe universe, Alphabet alphabet,
                          std::vector<Partition> partitions);

// J_0 = 0_U, J_t = J_{t-1} v P_t.
std::vector<Partition> consecutive_joins(const PartitionChain& chain);

// Non-fatal findings: steps that add no distinctions, a chain that never
// discretizes. Empty means nothing to report.
std::vector<std::string> chain_diagnostics(const PartitionChain& chain);

class CodeBook {
 public:
  const Universe& universe() const { return universe_; }
  const Alphabet& alphabet() const { return alphabet_; }
  // Indexed by universe element order.
  const std::vector<CodeWord>& words() const { return words_; }
  const CodeWord& word_at(std::uint32_t element_index) const { return words_[element_index]; }
  // Throws UnknownElement.
  const CodeWord& word(const std::string& element) const;

  static CodeBook of(Universe universe, Alphabet alphabet, std::vector<CodeWord> words);

 private:
  CodeBook(Universe universe, Alphabet alphabet, std::vector<CodeWord> words)
      : universe_(std::move(universe)),
        alphabet_(std::move(alphabet)),
        words_(std::move(words)) {}

  Universe universe_;
  Alphabet alphabet_;
  std::vector<CodeWord> words_;
};

// Rooted tree with letter-labeled edges. Node blocks shrink down the tree;
// expansion stops at singletons, so every leaf is one element. A node keeps a
// single child when its block meets only one block of the next partition;
// such unary nodes make the Kraft sum drop below 1.
class CodeTree {
 public:
  struct Node {
    std::vector<std::uint32_t> block;  // element indices, sorted
    // (letter index, child node index), in letter order.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> children;
    bool is_leaf() const { return children.empty(); }
  };

  const Universe& universe() const { return universe_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& root() const { return nodes_.front(); }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t leaf_count() const;

  static CodeTree of(Universe universe, Alphabet alphabet, std::vector<Node> nodes);

 private:
  CodeTree(Universe universe, Alphabet alphabet, std::vector<Node> nodes)
      : universe_(std::move(universe)),
        alphabet_(std::move(alphabet)),
        nodes_(std::move(nodes)) {}

  Universe universe_;
  Alphabet alphabet_;
  std::vector<Node> nodes_;  // nodes_[0] is the root
};

// Element u's word: the block index of u in P_1, P_2, ... as letters, stopped
// at the first t where {u} is a singleton of J_t. Throws NonDiscretizingChain
// naming the stuck elements.
CodeBook build_code(const PartitionChain& chain);

// Children of a node with block B against the next partition are the
// non-empty B n block_i, edge-labeled letter i. Throws NonDiscretizingChain.
CodeTree build_tree(const PartitionChain& chain);

// Throws UnknownElement.
CodeWord encode(const CodeBook& book, const std::string& element);

// Follow the word from the root; must land exactly on a leaf.
// Throws NoSuchBranch / WordTooShort / WordTooLong / UnknownLetter.
std::string decode(const CodeTree& tree, const CodeWord& word);

// Greedy repeated decode; the code is prefix-free, so no lookahead is needed.
// Throws the decode errors plus TrailingPartialWord.
std::vector<std::string> decode_stream(const CodeTree& tree, const std::string& letters);

bool is_prefix_free(const CodeBook& book);

// Sum of k^(-len(word)) over all words, exact.
Rational kraft_sum(const CodeBook& book, std::size_t alphabet_size);
Rational kraft_sum(const CodeBook& book);

// Chain whose t-th partition groups elements by the character at position t
// of their label, blocks in alphabet order. Every label must be `length`
// letters long and every letter must occur at every position (true for full
// product universes like the 64 codons).
PartitionChain positional_chain(const Universe& universe, const Alphabet& alphabet,
                                std::size_t length);

}  // namespace genmech
