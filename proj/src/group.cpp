#include "sgrank/group.hpp"

#include <stdexcept>

namespace sgrank {

GroupTable::GroupTable(std::vector<uint32_t> table, std::vector<std::string> labels)
    : _order(static_cast<uint32_t>(labels.size())),
      _table(std::move(table)),
      _labels(std::move(labels)) {
  if (_order == 0) throw std::invalid_argument("group must be nonempty");
  if (_table.size() != size_t(_order) * _order)
    throw std::invalid_argument("group table size mismatch");
  for (uint32_t v : _table)
    if (v >= _order) throw std::invalid_argument("group table entry out of range");

  auto at = [&](uint32_t a, uint32_t b) { return _table[size_t(a) * _order + b]; };

  for (uint32_t a = 0; a < _order; ++a)
    for (uint32_t b = 0; b < _order; ++b) {
      const uint32_t ab = at(a, b);
      for (uint32_t c = 0; c < _order; ++c)
        if (at(ab, c) != at(a, at(b, c)))
          throw std::invalid_argument("group table is not associative");
    }

  _identity = _order;  // sentinel
  for (uint32_t e = 0; e < _order; ++e) {
    bool ok = true;
    for (uint32_t a = 0; a < _order && ok; ++a)
      ok = at(e, a) == a && at(a, e) == a;
    if (ok) {
      _identity = e;
      break;
    }
  }
  if (_identity == _order)
    throw std::invalid_argument("group table has no identity element");

  _inverse.assign(_order, _order);
  for (uint32_t a = 0; a < _order; ++a) {
    for (uint32_t b = 0; b < _order; ++b)
      if (at(a, b) == _identity && at(b, a) == _identity) {
        _inverse[a] = b;
        break;
      }
    if (_inverse[a] == _order)
      throw std::invalid_argument("group table element without inverse");
  }
}

uint32_t GroupTable::product(uint32_t a, uint32_t b) const {
  if (a >= _order || b >= _order)
    throw std::out_of_range("group element index out of range");
  return _table[size_t(a) * _order + b];
}

bool GroupTable::generates(const std::vector<uint32_t>& gens) const {
  std::vector<bool> seen(_order, false);
  std::vector<uint32_t> mem;
  auto add = [&](uint32_t g) {
    if (g >= _order) throw std::out_of_range("group element index out of range");
    if (!seen[g]) {
      seen[g] = true;
      mem.push_back(g);
    }
  };
  for (uint32_t g : gens) add(g);
  if (mem.empty()) return false;
  for (size_t qi = 0; qi < mem.size(); ++qi)
    for (size_t bi = 0; bi < mem.size(); ++bi) {
      add(product(mem[qi], mem[bi]));
      add(product(mem[bi], mem[qi]));
    }
  return mem.size() == _order;
}

std::vector<Permutation> symmetric_group_elements(uint32_t n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("symmetric_group supports 1 <= n <= 5");
  return all_permutations(n);
}

GroupTable symmetric_group(uint32_t n) {
  const std::vector<Permutation> perms = symmetric_group_elements(n);
  const uint32_t order = static_cast<uint32_t>(perms.size());
  std::vector<uint32_t> table(size_t(order) * order);
  std::vector<std::string> labels(order);
  for (uint32_t a = 0; a < order; ++a) {
    labels[a] = perms[a].to_string();
    for (uint32_t b = 0; b < order; ++b)
      table[size_t(a) * order + b] =
          static_cast<uint32_t>(perm_compose(perms[a], perms[b]).lex_rank());
  }
  return GroupTable(std::move(table), std::move(labels));
}

GroupTable trivial_group() { return GroupTable({0}, {"e"}); }

}  // namespace sgrank
