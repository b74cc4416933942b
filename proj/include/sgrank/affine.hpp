#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sgrank/brandt.hpp"
#include "sgrank/perm.hpp"
#include "sgrank/semigroup.hpp"

namespace sgrank {

// Point of B_n: theta or a pair (i, j); 0-based in memory, 1-based in text.
struct BnPoint {
  bool theta = true;
  uint8_t i = 0, j = 0;

  static BnPoint make_theta() { return BnPoint{}; }
  static BnPoint make(uint8_t i, uint8_t j) { return BnPoint{false, i, j}; }

  friend bool operator==(const BnPoint&, const BnPoint&) = default;
};

enum class SupportClass { zero, singleton, n_point, full };

// One multiplicative transformation of B_n.  Exactly four shapes occur:
//   zero                   every point -> theta
//   constant (p,q)         every point (theta included) -> (p,q)
//   singleton (k,l)->(p,q) one point (k,l) -> (p,q), all else -> theta
//   n-support (p,q;sigma)  (i,p) -> (i sigma, q) for all i, all else -> theta
// Composition applies the LEFT factor first: x (f.compose(g)) = (x f) g.
class AffMap {
 public:
  enum class Kind : uint8_t { zero, constant, singleton, n_support };

  static AffMap zero(uint32_t n);
  static AffMap constant(uint32_t n, uint8_t p, uint8_t q);
  static AffMap singleton(uint32_t n, uint8_t k, uint8_t l, uint8_t p, uint8_t q);
  static AffMap n_support(uint32_t n, uint8_t p, uint8_t q, Permutation sigma);

  Kind kind() const { return _kind; }
  uint32_t degree() const { return _n; }
  // Field accessors are only meaningful for the kinds that carry them.
  uint8_t src_row() const { return _k; }   // singleton: k
  uint8_t src_col() const { return _l; }   // singleton: l
  uint8_t dst_row() const { return _p; }   // constant/singleton/n-support: p
  uint8_t dst_col() const { return _q; }   // constant/singleton/n-support: q
  const Permutation& sigma() const;

  BnPoint apply(const BnPoint& x) const;
  AffMap compose(const AffMap& then) const;  // closed form, this applied first
  SupportClass support_class() const;
  uint32_t support_size() const;

  std::string to_string() const;
  // Grammar: "zero" | "const:p,q" | "ss:(k,l)->(p,q)" | "ns:p,q;<perm>"
  // where <perm> is an image list "[...]" or cycle form "(...)"; 1-based.
  static AffMap parse(const std::string& text, uint32_t n);

  friend bool operator==(const AffMap& a, const AffMap& b) = default;
  // Canonical order: zero < constants < singletons < n-supports, each block
  // ordered lexicographically (constants by (p,q), singletons by (k,l,p,q),
  // n-supports by (p,q,sigma)).
  friend std::strong_ordering operator<=>(const AffMap& a, const AffMap& b);

 private:
  AffMap(uint32_t n, Kind kind) : _n(n), _kind(kind), _sigma(1) {}
  uint32_t _n;
  Kind _kind;
  uint8_t _k = 0, _l = 0, _p = 0, _q = 0;
  Permutation _sigma;  // degree n for n-supports, degree 1 placeholder otherwise
};

// The full transformation catalog of B_n under composition, in canonical
// order: (n!+1) n^2 + n^4 + 1 elements for n >= 2; for n = 1 the singleton
// shape coincides with the n-support identity, leaving 3 elements.
// Supported for 1 <= n <= 3 (the n = 4 catalog exceeds the 600-element
// table cap; only its Brandt part B(S_4, 4) is constructible).
std::vector<AffMap> enumerate_aplus(uint32_t n);

// The sub-catalog without singleton-support maps: (n!+1) n^2 + 1 elements
// (3 for n = 1). Supported for 1 <= n <= 4 (401 elements at n = 4).
std::vector<AffMap> enumerate_aff(uint32_t n);

// Index of f in enumerate_aplus(f.degree()) / enumerate_aff(f.degree()).
uint32_t aplus_index(const AffMap& f);
uint32_t aff_index(const AffMap& f);

// Cayley table of a composition-closed universe (element labels are the
// grammar strings).  Throws logic_error if any product falls outside the
// given universe -- that would disprove the catalog classification.
FiniteSemigroup build_cayley(const std::vector<AffMap>& universe);

// zero -> theta, (p,q;sigma) -> (p, sigma, q) in B(S_n, n); the restriction
// of this assignment is an isomorphism from the n-support maps plus zero.
// Other kinds have no image: invalid_argument.
BrandtElement to_brandt(const AffMap& f);

// Composition expression: element tokens separated by '.', left factor
// applied first, e.g. "ns:1,2;[2,3,1] . ns:2,3;[1,2,3]".
AffMap eval_expression(const std::string& text, uint32_t n);

}  // namespace sgrank
