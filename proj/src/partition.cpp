#include "genmech/partition.hpp"

#include <algorithm>
#include <unordered_map>

namespace genmech {

struct Universe::Data {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::uint32_t> index;
};

Universe Universe::of(std::vector<std::string> labels) {
  if (labels.empty()) fail(ErrorCode::EmptyUniverse, "universe has no elements");
  auto data = std::make_shared<Data>();
  data->index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = data->index.emplace(labels[i], static_cast<std::uint32_t>(i));
    if (!inserted)
      fail(ErrorCode::DuplicateElement, "duplicate element label '" + labels[i] + "'");
  }
  data->labels = std::move(labels);
  return Universe(std::move(data));
}

std::size_t Universe::size() const { return data_->labels.size(); }

const std::string& Universe::label(std::uint32_t index) const { return data_->labels[index]; }

const std::vector<std::string>& Universe::labels() const { return data_->labels; }

std::optional<std::uint32_t> Universe::find(const std::string& label) const {
  auto it = data_->index.find(label);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Universe::index_of(const std::string& label) const {
  auto found = find(label);
  if (!found) fail(ErrorCode::UnknownElement, "element '" + label + "' is not in the universe");
  return *found;
}

bool operator==(const Universe& a, const Universe& b) {
  return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
}

namespace {

std::vector<std::uint32_t> element_block_map(std::size_t universe_size,
                                             const std::vector<std::vector<std::uint32_t>>& blocks) {
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> map(universe_size, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::uint32_t e : blocks[b]) {
      if (map[e] != kUnset)
        fail(ErrorCode::Internal, "element in two blocks of a trusted partition");
      map[e] = static_cast<std::uint32_t>(b);
    }
  }
  for (std::uint32_t m : map) {
    if (m == kUnset) fail(ErrorCode::Internal, "element missing from a trusted partition");
  }
  return map;
}

void require_same_universe(const Partition& p, const Partition& q) {
  if (p.universe() != q.universe())
    fail(ErrorCode::UniverseMismatch, "partitions are on different universes");
}

}  // namespace

namespace detail {

Partition partition_from_sorted_index_blocks(const Universe& universe,
                                             std::vector<std::vector<std::uint32_t>> blocks) {
  auto map = element_block_map(universe.size(), blocks);
  return Partition(universe, std::move(blocks), std::move(map));
}

}  // namespace detail

std::vector<std::vector<std::string>> Partition::block_labels() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(blocks_.size());
  for (const auto& block : blocks_) {
    std::vector<std::string> labels;
    labels.reserve(block.size());
    for (std::uint32_t e : block) labels.push_back(universe_.label(e));
    out.push_back(std::move(labels));
  }
  return out;
}

bool operator==(const Partition& a, const Partition& b) {
  if (a.universe_ != b.universe_) return false;
  if (a.blocks_.size() != b.blocks_.size()) return false;
  // Blocks are internally sorted and disjoint, so sorting by the leading
  // element yields a canonical block order.
  auto canonical = [](const Partition& p) {
    std::vector<const std::vector<std::uint32_t>*> order;
    order.reserve(p.blocks_.size());
    for (const auto& block : p.blocks_) order.push_back(&block);
    std::sort(order.begin(), order.end(),
              [](const auto* x, const auto* y) { return x->front() < y->front(); });
    return order;
  };
  auto ca = canonical(a);
  auto cb = canonical(b);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (*ca[i] != *cb[i]) return false;
  }
  return true;
}

bool equal_ordered(const Partition& a, const Partition& b) {
  return a.universe() == b.universe() && a.blocks() == b.blocks();
}

Partition make_partition(const Universe& universe,
                         const std::vector<std::vector<std::string>>& blocks) {
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> seen(universe.size(), kUnset);
  std::vector<std::vector<std::uint32_t>> index_blocks;
  index_blocks.reserve(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      fail(ErrorCode::EmptyBlock, "block " + std::to_string(b) + " is empty");
    std::vector<std::uint32_t> indices;
    indices.reserve(blocks[b].size());
    for (const auto& label : blocks[b]) {
      auto found = universe.find(label);
      if (!found)
        fail(ErrorCode::UnknownElement,
             "block " + std::to_string(b) + " references '" + label +
                 "', which is not in the universe");
      if (seen[*found] != kUnset)
        fail(ErrorCode::OverlappingBlocks,
             "element '" + label + "' appears in blocks " + std::to_string(seen[*found]) +
                 " and " + std::to_string(b));
      seen[*found] = static_cast<std::uint32_t>(b);
      indices.push_back(*found);
    }
    std::sort(indices.begin(), indices.end());
    index_blocks.push_back(std::move(indices));
  }
  for (std::uint32_t e = 0; e < universe.size(); ++e) {
    if (seen[e] == kUnset)
      fail(ErrorCode::IncompleteCover,
           "element '" + universe.label(e) + "' appears in no block");
  }
  return detail::partition_from_sorted_index_blocks(universe, std::move(index_blocks));
}

Partition indiscrete(const Universe& universe) {
  std::vector<std::uint32_t> all(universe.size());
  for (std::uint32_t i = 0; i < universe.size(); ++i) all[i] = i;
  return detail::partition_from_sorted_index_blocks(universe, {std::move(all)});
}

Partition discrete(const Universe& universe) {
  std::vector<std::vector<std::uint32_t>> blocks;
  blocks.reserve(universe.size());
  for (std::uint32_t i = 0; i < universe.size(); ++i) blocks.push_back({i});
  return detail::partition_from_sorted_index_blocks(universe, std::move(blocks));
}

Partition join(const Partition& p, const Partition& q) {
  require_same_universe(p, q);
  const std::size_t n = p.universe().size();
  const std::size_t qn = q.block_count();
  // Bucket elements by (p-block, q-block); p-major q-minor order is exactly
  // "iterate blocks of p, within that blocks of q".
  std::vector<std::vector<std::uint32_t>> buckets(p.block_count() * qn);
  for (std::uint32_t e = 0; e < n; ++e) {
    buckets[p.block_index_of(e) * qn + q.block_index_of(e)].push_back(e);
  }
  std::vector<std::vector<std::uint32_t>> blocks;
  for (auto& bucket : buckets) {
    if (!bucket.empty()) blocks.push_back(std::move(bucket));
  }
  return detail::partition_from_sorted_index_blocks(p.universe(), std::move(blocks));
}

bool refines(const Partition& p, const Partition& q) {
  require_same_universe(p, q);
  for (const auto& block : p.blocks()) {
    std::uint32_t home = q.block_index_of(block.front());
    for (std::uint32_t e : block) {
      if (q.block_index_of(e) != home) return false;
    }
  }
  return true;
}

std::uint32_t block_of(const Partition& p, const std::string& element) {
  return p.block_index_of(p.universe().index_of(element));
}

void for_each_partition(const Universe& universe,
                        const std::function<void(const Partition&)>& visit) {
  const std::size_t n = universe.size();
  if (n > kMaxEnumerationUniverse)
    fail(ErrorCode::UniverseTooLarge,
         "partition enumeration is limited to universes of at most " +
             std::to_string(kMaxEnumerationUniverse) + " elements, got " + std::to_string(n));

  // Restricted growth strings in lexicographic order: a[0]=0 and
  // a[i] <= 1 + max(a[0..i-1]). Block index = string value.
  std::vector<std::uint32_t> a(n, 0);
  std::vector<std::uint32_t> prefix_max(n, 0);
  auto emit = [&] {
    std::uint32_t block_count = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<std::vector<std::uint32_t>> blocks(block_count);
    for (std::uint32_t e = 0; e < n; ++e) blocks[a[e]].push_back(e);
    visit(detail::partition_from_sorted_index_blocks(universe, std::move(blocks)));
  };
  while (true) {
    emit();
    // Advance to the next restricted growth string.
    std::size_t i = n;
    while (i-- > 1) {
      if (a[i] <= prefix_max[i]) {
        ++a[i];
        for (std::size_t j = i + 1; j < n; ++j) {
          a[j] = 0;
          prefix_max[j] = std::max(prefix_max[j - 1], a[j - 1]);
        }
        break;
      }
    }
    if (i == 0) break;
  }
}

std::vector<Partition> all_partitions(const Universe& universe) {
  std::vector<Partition> out;
  for_each_partition(universe, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace genmech
