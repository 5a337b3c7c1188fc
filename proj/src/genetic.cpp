#include "genmech/genetic.hpp"

#include <algorithm>
#include <sstream>

namespace genmech {

namespace {

constexpr char kBases[4] = {'U', 'C', 'A', 'G'};

// Canonical order, first position major.
constexpr std::array<const char*, 64> kStandardAmino = {
    "Phe", "Phe", "Leu", "Leu", "Ser", "Ser", "Ser", "Ser",
    "Tyr", "Tyr", "Stop", "Stop", "Cys", "Cys", "Stop", "Trp",
    "Leu", "Leu", "Leu", "Leu", "Pro", "Pro", "Pro", "Pro",
    "His", "His", "Gln", "Gln", "Arg", "Arg", "Arg", "Arg",
    "Ile", "Ile", "Ile", "Met", "Thr", "Thr", "Thr", "Thr",
    "Asn", "Asn", "Lys", "Lys", "Ser", "Ser", "Arg", "Arg",
    "Val", "Val", "Val", "Val", "Ala", "Ala", "Ala", "Ala",
    "Asp", "Asp", "Glu", "Glu", "Gly", "Gly", "Gly", "Gly"};

int base_index(char c) {
  switch (c) {
    case 'U': return 0;
    case 'C': return 1;
    case 'A': return 2;
    case 'G': return 3;
    default: return -1;
  }
}

std::string codon_at(std::uint32_t index) {
  return {kBases[index / 16], kBases[(index / 4) % 4], kBases[index % 4]};
}

}  // namespace

std::uint32_t codon_index(const std::string& codon) {
  if (codon.size() != 3)
    fail(ErrorCode::InvalidCodon, "'" + codon + "' is not a three-base codon");
  std::uint32_t index = 0;
  for (char c : codon) {
    int b = base_index(c);
    if (b < 0)
      fail(ErrorCode::InvalidCodon,
           "'" + codon + "' contains '" + std::string(1, c) + "', not one of U, C, A, G");
    index = index * 4 + static_cast<std::uint32_t>(b);
  }
  return index;
}

const Universe& codon_universe() {
  static const Universe u = [] {
    std::vector<std::string> labels;
    labels.reserve(64);
    for (std::uint32_t i = 0; i < 64; ++i) labels.push_back(codon_at(i));
    return Universe::of(std::move(labels));
  }();
  return u;
}

const Alphabet& rna_alphabet() {
  static const Alphabet a = Alphabet::of({"U", "C", "A", "G"});
  return a;
}

const PartitionChain& standard_chain() {
  static const PartitionChain chain = positional_chain(codon_universe(), rna_alphabet(), 3);
  return chain;
}

PartitionChain reorder_chain(const std::array<std::uint32_t, 3>& order) {
  std::array<bool, 3> seen{};
  for (std::uint32_t p : order) {
    if (p < 1 || p > 3 || seen[p - 1])
      fail(ErrorCode::InvalidPermutation, "order must be a permutation of 1, 2, 3");
    seen[p - 1] = true;
  }
  const auto& standard = standard_chain().partitions();
  std::vector<Partition> permuted;
  permuted.reserve(3);
  for (std::uint32_t p : order) permuted.push_back(standard[p - 1]);
  return make_chain(codon_universe(), rna_alphabet(), std::move(permuted));
}

const CodonTable& CodonTable::standard() {
  static const CodonTable table = [] {
    CodonTable t;
    for (std::uint32_t i = 0; i < 64; ++i) {
      t.amino_by_codon_[i] = kStandardAmino[i];
      t.by_amino_[kStandardAmino[i]].push_back(codon_at(i));
    }
    return t;
  }();
  return table;
}

CodonTable CodonTable::parse(const std::string& text) {
  CodonTable t;
  std::array<bool, 64> defined{};
  std::size_t count = 0;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string codon, amino, extra;
    if (!(fields >> codon)) continue;  // blank line
    if (!(fields >> amino) || (fields >> extra))
      fail(ErrorCode::BadTable,
           "line " + std::to_string(line_no) + ": expected 'CODON AminoAcid'");
    std::uint32_t index = codon_index(codon);
    if (defined[index])
      fail(ErrorCode::BadTable,
           "line " + std::to_string(line_no) + ": codon " + codon + " defined twice");
    defined[index] = true;
    t.amino_by_codon_[index] = amino;
    ++count;
  }
  if (count != 64)
    fail(ErrorCode::BadTable, "table defines " + std::to_string(count) + " of 64 codons");
  for (std::uint32_t i = 0; i < 64; ++i) t.by_amino_[t.amino_by_codon_[i]].push_back(codon_at(i));
  return t;
}

std::string CodonTable::to_tsv() const {
  std::string out;
  for (std::uint32_t i = 0; i < 64; ++i) {
    out += codon_at(i);
    out += '\t';
    out += amino_by_codon_[i];
    out += '\n';
  }
  return out;
}

const std::string& CodonTable::amino(const std::string& codon) const {
  return amino_by_codon_[codon_index(codon)];
}

std::uint32_t CodonTable::occurrence(const std::string& codon) const {
  const auto& family = by_amino_.at(amino(codon));
  auto it = std::find(family.begin(), family.end(), codon);
  return static_cast<std::uint32_t>(it - family.begin()) + 1;
}

std::string CodonTable::instance_name(const std::string& codon) const {
  return amino(codon) + std::to_string(occurrence(codon));
}

const std::vector<std::string>& CodonTable::codons_for(const std::string& amino) const {
  auto it = by_amino_.find(amino);
  if (it == by_amino_.end())
    fail(ErrorCode::UnknownAminoAcid, "no codons are assigned to '" + amino + "'");
  return it->second;
}

std::vector<std::string> CodonTable::amino_labels() const {
  std::vector<std::string> labels;
  for (const auto& amino : amino_by_codon_) {
    if (std::find(labels.begin(), labels.end(), amino) == labels.end())
      labels.push_back(amino);
  }
  return labels;
}

std::string translate(const CodonTable& table, const std::string& codon) {
  codon_index(codon);  // validate before touching the tree
  static const CodeTree tree = build_tree(standard_chain());
  return table.amino(decode(tree, codon));
}

}  // namespace genmech
