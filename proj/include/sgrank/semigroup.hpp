#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sgrank {

class FiniteSemigroup;

// Dense bit-vector over the element indices [0, universe_size) of one
// semigroup.  Sets remember a fingerprint of their owning semigroup so that
// mixing sets across different tables is caught as an error.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(const FiniteSemigroup& owner);
  ElementSet(const FiniteSemigroup& owner, const std::vector<uint32_t>& members);

  uint32_t universe_size() const { return _m; }
  uint64_t owner_fingerprint() const { return _owner; }

  bool test(uint32_t i) const;
  void insert(uint32_t i);
  void erase(uint32_t i);
  uint32_t count() const;
  bool empty() const { return count() == 0; }
  bool is_subset_of(const ElementSet& other) const;
  std::vector<uint32_t> members() const;  // ascending

  ElementSet complement() const;

  // Lexicographic comparison of the ascending member sequences
  // (a proper prefix sorts first).  Returns <0, 0, >0.
  static int lex_compare(const ElementSet& a, const ElementSet& b);

  uint64_t hash() const;
  const std::vector<uint64_t>& words() const { return _words; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a._m == b._m && a._words == b._words;
  }

 private:
  friend class FiniteSemigroup;
  uint32_t _m = 0;
  uint64_t _owner = 0;
  std::vector<uint64_t> _words;
};

// Immutable finite semigroup: a positive number of elements, a full
// multiplication table, and one label per element.  Associativity is checked
// on construction (exhaustively up to 150 elements, by fixed-seed random
// sampling above that) unless explicitly skipped, e.g. for fault injection.
class FiniteSemigroup {
 public:
  FiniteSemigroup(std::vector<uint32_t> table, std::vector<std::string> labels,
                  bool check_associativity = true);

  uint32_t size() const { return _size; }
  uint32_t product(uint32_t a, uint32_t b) const;
  const std::string& label(uint32_t a) const;
  std::optional<uint32_t> index_of(const std::string& label) const;
  const std::vector<uint32_t>& table() const { return _table; }
  const uint32_t* row(uint32_t a) const { return _table.data() + size_t(a) * _size; }

  // Content fingerprint (FNV-1a over size and table); identifies the
  // semigroup for ElementSet ownership checks.
  uint64_t fingerprint() const { return _fingerprint; }

  ElementSet empty_set() const;
  ElementSet full_set() const;
  ElementSet set_of(const std::vector<uint32_t>& members) const;

 private:
  uint32_t _size;
  std::vector<uint32_t> _table;
  std::vector<std::string> _labels;
  uint64_t _fingerprint;
};

// Worklist-saturation closure: the least subsemigroup containing u.
// closure(empty) is empty.  O(size * |result|) products.
ElementSet closure(const FiniteSemigroup& s, const ElementSet& u);

// Closure of closed_base + extra, assuming closed_base is already closed.
ElementSet closure_with(const FiniteSemigroup& s, const ElementSet& closed_base,
                        uint32_t extra);

bool is_generating(const FiniteSemigroup& s, const ElementSet& u);

// No element of u lies in the closure of the others.  Vacuously true for the
// empty set and singletons.
bool is_independent(const FiniteSemigroup& s, const ElementSet& u);

bool is_band(const FiniteSemigroup& s);

// u is prime when a*b in u implies a in u or b in u.  u must be nonempty.
bool is_prime_subset(const FiniteSemigroup& s, const ElementSet& u);

// a = b*c with b != a and c != a for some b, c.
bool is_decomposable(const FiniteSemigroup& s, uint32_t a);

ElementSet idempotent_elements(const FiniteSemigroup& s);

enum class WitnessKind { generating_set, independent_set, prime_subset, subsemigroup };

// A labelled set of elements; members and labels are kept sorted in
// canonical (index) order.
struct Witness {
  WitnessKind kind;
  std::vector<uint32_t> elements;
  std::vector<std::string> labels;
};

Witness make_witness(const FiniteSemigroup& s, WitnessKind kind, const ElementSet& u);
const char* witness_kind_name(WitnessKind k);

// Binary cache, format "SGP1": magic, u32 LE element count m, m*m u32 LE
// table entries row-major, then m labels (u16 LE byte length + UTF-8 bytes).
void write_cache(const FiniteSemigroup& s, const std::string& path);
FiniteSemigroup read_cache(const std::string& path);

// FNV-1a 64 over a file's bytes; used to report cache checksums.
uint64_t file_fnv1a(const std::string& path);

}  // namespace sgrank
