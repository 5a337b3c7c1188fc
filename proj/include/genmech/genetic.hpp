#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "genmech/codes.hpp"

namespace genmech {

// Codon -> amino-acid assignment over the 64 RNA codons. The canonical codon
// order is lexicographic with bases ordered U < C < A < G, first position
// major; occurrence indices (Thr1..Thr4) count a codon's rank among its amino
// acid's codons in that order.
class CodonTable {
 public:
  // The standard RNA codon table, compiled in. The same data ships as
  // data/codon_table.tsv for inspection and as a parse fixture.
  static const CodonTable& standard();

  // Lines of "CODON<tab or spaces>Amino", '#' comments and blank lines
  // allowed; must define all 64 codons exactly once.
  // Throws BadTable / InvalidCodon.
  static CodonTable parse(const std::string& text);

  std::string to_tsv() const;

  // Throws InvalidCodon.
  const std::string& amino(const std::string& codon) const;
  std::uint32_t occurrence(const std::string& codon) const;
  std::string instance_name(const std::string& codon) const;  // e.g. "Thr4"

  // Codons in canonical order. Throws UnknownAminoAcid.
  const std::vector<std::string>& codons_for(const std::string& amino) const;

  // Distinct labels, ordered by first appearance in canonical codon order.
  std::vector<std::string> amino_labels() const;

 private:
  CodonTable() = default;
  std::array<std::string, 64> amino_by_codon_;
  std::map<std::string, std::vector<std::string>> by_amino_;
};

// The 64 codons in canonical order.
const Universe& codon_universe();
// U, C, A, G.
const Alphabet& rna_alphabet();

// Canonical index of a codon; validates it. Throws InvalidCodon.
std::uint32_t codon_index(const std::string& codon);

// Three partitions grouping codons by first, second, third base; discretizes
// in exactly three joins, giving the complete 4-ary depth-3 tree.
const PartitionChain& standard_chain();

// The position partitions in a different order; the tree still has 64 leaves
// but spells different words. order uses positions 1..3.
// Throws InvalidPermutation.
PartitionChain reorder_chain(const std::array<std::uint32_t, 3>& order);

// Decode the codon through the standard tree, then look the leaf up in the
// table. Throws InvalidCodon.
std::string translate(const CodonTable& table, const std::string& codon);

}  // namespace genmech
