#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sgrank {

// A permutation of {0, ..., degree-1}, stored as its image list.
// Application is on the right of the argument: apply(i) is "i sigma".
// Composition is left-to-right, so compose(a, b).apply(i) == b.apply(a.apply(i)).
// All text I/O is 1-based ("[2,3,1]" sends 1 to 2); memory is 0-based.
class Permutation {
 public:
  explicit Permutation(uint32_t degree);        // identity
  explicit Permutation(std::vector<uint8_t> images);  // validated bijection

  uint32_t degree() const { return static_cast<uint32_t>(_images.size()); }
  uint8_t apply(uint8_t i) const;
  Permutation inverse() const;
  bool is_identity() const;

  // Lexicographic rank among all permutations of the same degree
  // (identity has rank 0); matches the order of symmetric_group().
  uint64_t lex_rank() const;

  const std::vector<uint8_t>& images() const { return _images; }

  std::string to_string() const;  // image-list form, e.g. "[2,3,1]"

  // Accepts the image-list form "[2,3,1]" and the cycle form "(1 2 3)"
  // (products of cycles allowed, fixed points omitted, "()" is the identity).
  static Permutation parse(const std::string& text, uint32_t degree);

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a._images <=> b._images;
  }

 private:
  std::vector<uint8_t> _images;
};

// Left-to-right product: i (ab) = (i a) b.
Permutation perm_compose(const Permutation& a, const Permutation& b);

uint64_t factorial(uint32_t n);

// All permutations of the given degree in lexicographic image order.
std::vector<Permutation> all_permutations(uint32_t degree);

}  // namespace sgrank
