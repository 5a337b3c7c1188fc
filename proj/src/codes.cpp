#include "genmech/codes.hpp"

#include <algorithm>
#include <unordered_map>

namespace genmech {

struct Alphabet::Data {
  std::vector<std::string> letters;
  std::unordered_map<char, std::uint32_t> index;
};

Alphabet Alphabet::of(std::vector<std::string> letters) {
  if (letters.empty()) fail(ErrorCode::EmptyAlphabet, "alphabet has no letters");
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].size() != 1)
      fail(ErrorCode::BadDocument,
           "alphabet letters must be single characters, got '" + letters[i] + "'");
    auto [it, inserted] = data->index.emplace(letters[i][0], static_cast<std::uint32_t>(i));
    if (!inserted)
      fail(ErrorCode::DuplicateLetter, "duplicate alphabet letter '" + letters[i] + "'");
  }
  data->letters = std::move(letters);
  return Alphabet(std::move(data));
}

std::size_t Alphabet::size() const { return data_->letters.size(); }

const std::string& Alphabet::letter(std::uint32_t index) const { return data_->letters[index]; }

char Alphabet::letter_char(std::uint32_t index) const { return data_->letters[index][0]; }

const std::vector<std::string>& Alphabet::letters() const { return data_->letters; }

std::optional<std::uint32_t> Alphabet::find(char letter) const {
  auto it = data_->index.find(letter);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Alphabet::index_of(char letter) const {
  auto found = find(letter);
  if (!found)
    fail(ErrorCode::UnknownLetter,
         "letter '" + std::string(1, letter) + "' is not in the alphabet");
  return *found;
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  return a.data_ == b.data_ || a.data_->letters == b.data_->letters;
}

PartitionChain make_chain(Universe universe, Alphabet alphabet,
                          std::vector<Partition> partitions) {
  for (std::size_t t = 0; t < partitions.size(); ++t) {
    if (partitions[t].universe() != universe)
      fail(ErrorCode::UniverseMismatch,
           "partition " + std::to_string(t + 1) + " is on a different universe");
    if (partitions[t].block_count() != alphabet.size())
      fail(ErrorCode::BlockCountMismatch,
           "partition " + std::to_string(t + 1) + " has " +
               std::to_string(partitions[t].block_count()) + " blocks, alphabet has " +
               std::to_string(alphabet.size()) + " letters");
  }
  return PartitionChain(std::move(universe), std::move(alphabet), std::move(partitions));
}

std::vector<Partition> consecutive_joins(const PartitionChain& chain) {
  std::vector<Partition> joins;
  joins.reserve(chain.length() + 1);
  joins.push_back(indiscrete(chain.universe()));
  for (const auto& p : chain.partitions()) joins.push_back(join(joins.back(), p));
  return joins;
}

namespace {

std::string join_labels(const Universe& u, const std::vector<std::uint32_t>& elements) {
  std::string out;
  for (std::uint32_t e : elements) {
    if (!out.empty()) out += ", ";
    out += u.label(e);
  }
  return out;
}

}  // namespace

std::vector<std::string> chain_diagnostics(const PartitionChain& chain) {
  std::vector<std::string> notes;
  auto joins = consecutive_joins(chain);
  for (std::size_t t = 1; t < joins.size(); ++t) {
    if (joins[t].block_count() == joins[t - 1].block_count())
      notes.push_back("step " + std::to_string(t) + " adds no distinctions");
  }
  const Partition& last = joins.back();
  if (!last.is_discrete()) {
    std::vector<std::uint32_t> stuck;
    for (const auto& block : last.blocks()) {
      if (block.size() > 1) stuck.insert(stuck.end(), block.begin(), block.end());
    }
    std::sort(stuck.begin(), stuck.end());
    notes.push_back("chain does not discretize; stuck elements: " +
                    join_labels(chain.universe(), stuck));
  }
  return notes;
}

const CodeWord& CodeBook::word(const std::string& element) const {
  return words_[universe_.index_of(element)];
}

CodeBook CodeBook::of(Universe universe, Alphabet alphabet, std::vector<CodeWord> words) {
  if (words.size() != universe.size())
    fail(ErrorCode::BadDocument, "codebook must assign a word to every element");
  return CodeBook(std::move(universe), std::move(alphabet), std::move(words));
}

CodeTree CodeTree::of(Universe universe, Alphabet alphabet, std::vector<Node> nodes) {
  if (nodes.empty()) fail(ErrorCode::Internal, "code tree has no nodes");
  return CodeTree(std::move(universe), std::move(alphabet), std::move(nodes));
}

std::size_t CodeTree::leaf_count() const {
  std::size_t n = 0;
  for (const auto& node : nodes_) {
    if (node.is_leaf()) ++n;
  }
  return n;
}

namespace {

[[noreturn]] void fail_non_discretizing(const Universe& u, std::vector<std::uint32_t> stuck) {
  std::sort(stuck.begin(), stuck.end());
  fail(ErrorCode::NonDiscretizingChain,
       "chain never separates: " + join_labels(u, stuck));
}

}  // namespace

CodeBook build_code(const PartitionChain& chain) {
  const Universe& u = chain.universe();
  const std::size_t n = u.size();
  std::vector<CodeWord> words(n);
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  Partition j = indiscrete(u);
  if (j.is_discrete()) remaining = 0;  // |U| = 1: empty word
  for (const auto& p : chain.partitions()) {
    if (remaining == 0) break;  // later partitions add nothing
    j = join(j, p);
    for (std::uint32_t e = 0; e < n; ++e) {
      if (done[e]) continue;
      words[e] += chain.alphabet().letter_char(p.block_index_of(e));
      if (j.element_is_singleton(e)) {
        done[e] = true;
        --remaining;
      }
    }
  }
  if (remaining > 0) {
    std::vector<std::uint32_t> stuck;
    for (std::uint32_t e = 0; e < n; ++e) {
      if (!done[e]) stuck.push_back(e);
    }
    fail_non_discretizing(u, std::move(stuck));
  }
  return CodeBook::of(u, chain.alphabet(), std::move(words));
}

CodeTree build_tree(const PartitionChain& chain) {
  const Universe& u = chain.universe();
  std::vector<CodeTree::Node> nodes;
  std::vector<std::uint32_t> all(u.size());
  for (std::uint32_t e = 0; e < u.size(); ++e) all[e] = e;
  nodes.push_back({std::move(all), {}});

  std::vector<std::uint32_t> frontier;  // non-singleton nodes awaiting a split
  if (nodes[0].block.size() > 1) frontier.push_back(0);

  for (const auto& p : chain.partitions()) {
    if (frontier.empty()) break;
    std::vector<std::uint32_t> next;
    for (std::uint32_t at : frontier) {
      // Bucket the node's block by the partition; non-empty buckets become
      // children in letter order.
      std::vector<std::vector<std::uint32_t>> buckets(p.block_count());
      for (std::uint32_t e : nodes[at].block) buckets[p.block_index_of(e)].push_back(e);
      for (std::uint32_t letter = 0; letter < buckets.size(); ++letter) {
        if (buckets[letter].empty()) continue;
        auto child = static_cast<std::uint32_t>(nodes.size());
        bool split_further = buckets[letter].size() > 1;
        nodes.push_back({std::move(buckets[letter]), {}});
        nodes[at].children.emplace_back(letter, child);
        if (split_further) next.push_back(child);
      }
    }
    frontier = std::move(next);
  }
  if (!frontier.empty()) {
    std::vector<std::uint32_t> stuck;
    for (std::uint32_t at : frontier)
      stuck.insert(stuck.end(), nodes[at].block.begin(), nodes[at].block.end());
    fail_non_discretizing(u, std::move(stuck));
  }
  return CodeTree::of(u, chain.alphabet(), std::move(nodes));
}

CodeWord encode(const CodeBook& book, const std::string& element) {
  return book.word(element);
}

std::string decode(const CodeTree& tree, const CodeWord& word) {
  const auto& nodes = tree.nodes();
  std::uint32_t at = 0;
  for (char c : word) {
    std::uint32_t letter = tree.alphabet().index_of(c);
    if (nodes[at].is_leaf())
      fail(ErrorCode::WordTooLong, "letters remain after reaching leaf '" +
                                       tree.universe().label(nodes[at].block[0]) + "'");
    const auto* edge = [&]() -> const std::pair<std::uint32_t, std::uint32_t>* {
      for (const auto& ch : nodes[at].children) {
        if (ch.first == letter) return &ch;
      }
      return nullptr;
    }();
    if (!edge)
      fail(ErrorCode::NoSuchBranch,
           "no '" + std::string(1, c) + "' branch at node {" +
               join_labels(tree.universe(), nodes[at].block) + "}");
    at = edge->second;
  }
  if (!nodes[at].is_leaf())
    fail(ErrorCode::WordTooShort, "word ends at internal node {" +
                                      join_labels(tree.universe(), nodes[at].block) + "}");
  return tree.universe().label(nodes[at].block[0]);
}

std::vector<std::string> decode_stream(const CodeTree& tree, const std::string& letters) {
  const auto& nodes = tree.nodes();
  std::vector<std::string> out;
  std::uint32_t at = 0;
  std::size_t consumed = 0;  // since the last emitted element
  for (char c : letters) {
    std::uint32_t letter = tree.alphabet().index_of(c);
    std::uint32_t next = UINT32_MAX;
    for (const auto& ch : nodes[at].children) {
      if (ch.first == letter) {
        next = ch.second;
        break;
      }
    }
    if (next == UINT32_MAX)
      fail(ErrorCode::NoSuchBranch,
           "no '" + std::string(1, c) + "' branch at node {" +
               join_labels(tree.universe(), nodes[at].block) + "}");
    at = next;
    ++consumed;
    if (nodes[at].is_leaf()) {
      out.push_back(tree.universe().label(nodes[at].block[0]));
      at = 0;
      consumed = 0;
    }
  }
  if (consumed > 0)
    fail(ErrorCode::TrailingPartialWord,
         "stream ends " + std::to_string(consumed) + " letter(s) into an unfinished word");
  return out;
}

bool is_prefix_free(const CodeBook& book) {
  const auto& words = book.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i == j) continue;
      if (words[i].size() <= words[j].size() &&
          words[j].compare(0, words[i].size(), words[i]) == 0)
        return false;
    }
  }
  return true;
}

Rational kraft_sum(const CodeBook& book, std::size_t alphabet_size) {
  Rational sum = 0;
  for (const auto& w : book.words()) sum += inverse_power(alphabet_size, w.size());
  return sum;
}

Rational kraft_sum(const CodeBook& book) { return kraft_sum(book, book.alphabet().size()); }

PartitionChain positional_chain(const Universe& universe, const Alphabet& alphabet,
                                std::size_t length) {
  std::vector<Partition> partitions;
  partitions.reserve(length);
  for (std::size_t pos = 0; pos < length; ++pos) {
    std::vector<std::vector<std::uint32_t>> blocks(alphabet.size());
    for (std::uint32_t e = 0; e < universe.size(); ++e) {
      const std::string& label = universe.label(e);
      if (label.size() != length)
        fail(ErrorCode::BadDocument, "element '" + label + "' is not " +
                                         std::to_string(length) + " letters long");
      blocks[alphabet.index_of(label[pos])].push_back(e);
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty())
        fail(ErrorCode::EmptyBlock, "letter '" + alphabet.letter(b) +
                                        "' never occurs at position " + std::to_string(pos + 1));
    }
    partitions.push_back(detail::partition_from_sorted_index_blocks(universe, std::move(blocks)));
  }
  return make_chain(universe, alphabet, std::move(partitions));
}

}  // namespace genmech
