#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgrank/perm.hpp"

namespace sgrank {

// A finite group by full multiplication table.  The group axioms
// (associativity, two-sided identity, inverses) are checked on construction.
class GroupTable {
 public:
  GroupTable(std::vector<uint32_t> table, std::vector<std::string> labels);

  uint32_t order() const { return _order; }
  uint32_t product(uint32_t a, uint32_t b) const;
  uint32_t inverse(uint32_t a) const { return _inverse.at(a); }
  uint32_t identity() const { return _identity; }
  const std::string& label(uint32_t a) const { return _labels.at(a); }

  // Subgroup generated by gens equals the whole group?
  bool generates(const std::vector<uint32_t>& gens) const;

 private:
  uint32_t _order;
  std::vector<uint32_t> _table;
  std::vector<std::string> _labels;
  std::vector<uint32_t> _inverse;
  uint32_t _identity;
};

// Symmetric group on n points, 1 <= n <= 5, elements in lexicographic image
// order (index = Permutation::lex_rank(), identity first), labels in
// image-list form.
GroupTable symmetric_group(uint32_t n);
std::vector<Permutation> symmetric_group_elements(uint32_t n);

GroupTable trivial_group();

}  // namespace sgrank
