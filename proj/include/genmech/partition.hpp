#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "genmech/error.hpp"

namespace genmech {

// Ordered sequence of distinct element labels. The order is fixed at
// construction and used for every deterministic tie-break downstream.
// Value type; cheap to copy. Two universes are equal iff their label
// sequences are equal.
class Universe {
 public:
  // Throws EmptyUniverse / DuplicateElement.
  static Universe of(std::vector<std::string> labels);

  std::size_t size() const;
  const std::string& label(std::uint32_t index) const;
  const std::vector<std::string>& labels() const;
  std::optional<std::uint32_t> find(const std::string& label) const;
  // Throws UnknownElement.
  std::uint32_t index_of(const std::string& label) const;

  friend bool operator==(const Universe& a, const Universe& b);
  friend bool operator!=(const Universe& a, const Universe& b) { return !(a == b); }

 private:
  struct Data;
  explicit Universe(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

class Partition;

namespace detail {
// Trusted constructor used by join/enumeration: blocks must be non-empty,
// disjoint, covering, each sorted ascending by element index.
Partition partition_from_sorted_index_blocks(const Universe& universe,
                                             std::vector<std::vector<std::uint32_t>> blocks);
}  // namespace detail

// Disjoint, non-empty blocks covering a universe. Block order is significant
// (block index = code-letter index in chain codes); elements inside a block
// are kept sorted by universe index. Immutable after construction.
class Partition {
 public:
  const Universe& universe() const { return universe_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::uint32_t>& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<std::vector<std::uint32_t>>& blocks() const { return blocks_; }
  std::vector<std::vector<std::string>> block_labels() const;

  std::uint32_t block_index_of(std::uint32_t element_index) const {
    return element_block_[element_index];
  }
  bool element_is_singleton(std::uint32_t element_index) const {
    return blocks_[element_block_[element_index]].size() == 1;
  }
  bool is_discrete() const { return blocks_.size() == universe_size(); }
  bool is_indiscrete() const { return blocks_.size() == 1; }

  // Order-insensitive block-set equality, the algebraic default.
  friend bool operator==(const Partition& a, const Partition& b);
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

 private:
  friend Partition detail::partition_from_sorted_index_blocks(
      const Universe&, std::vector<std::vector<std::uint32_t>>);

  Partition(Universe universe, std::vector<std::vector<std::uint32_t>> blocks,
            std::vector<std::uint32_t> element_block)
      : universe_(std::move(universe)),
        blocks_(std::move(blocks)),
        element_block_(std::move(element_block)) {}

  std::size_t universe_size() const { return element_block_.size(); }

  Universe universe_;
  std::vector<std::vector<std::uint32_t>> blocks_;
  std::vector<std::uint32_t> element_block_;  // element index -> block index
};

// Throws EmptyBlock / OverlappingBlocks / IncompleteCover / UnknownElement.
Partition make_partition(const Universe& universe,
                         const std::vector<std::vector<std::string>>& blocks);

// 0_U, the single-block partition; identity for join.
Partition indiscrete(const Universe& universe);
// 1_U, the all-singletons partition.
Partition discrete(const Universe& universe);

// Blocks are the non-empty pairwise intersections, ordered p-major q-minor.
// Throws UniverseMismatch.
Partition join(const Partition& p, const Partition& q);

// True iff every block of p lies inside some block of q ("p is at least as
// refined as q"). Throws UniverseMismatch.
bool refines(const Partition& p, const Partition& q);

// Index of the unique block containing the element. Throws UnknownElement.
std::uint32_t block_of(const Partition& p, const std::string& element);

// Block-sequence equality (order-sensitive).
bool equal_ordered(const Partition& a, const Partition& b);

// Enumeration guard: Bell(12) = 4,213,597 keeps brute force tractable.
inline constexpr std::size_t kMaxEnumerationUniverse = 12;

// Every partition of the universe exactly once, in restricted-growth-string
// order. Throws UniverseTooLarge for |U| > 12.
std::vector<Partition> all_partitions(const Universe& universe);

// Visitor form of the same enumeration, same order and guard.
void for_each_partition(const Universe& universe,
                        const std::function<void(const Partition&)>& visit);

}  // namespace genmech
