#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgrank/group.hpp"
#include "sgrank/semigroup.hpp"

namespace sgrank {

// Element of B(G, n): either theta (the zero) or a triple (i, g, j) with
// rows/columns 0-based in memory, 1-based in labels.
struct BrandtElement {
  bool theta = true;
  uint32_t i = 0, g = 0, j = 0;

  static BrandtElement make_theta() { return BrandtElement{}; }
  static BrandtElement make(uint32_t i, uint32_t g, uint32_t j) {
    return BrandtElement{false, i, g, j};
  }

  friend bool operator==(const BrandtElement&, const BrandtElement&) = default;
};

// (i,a,j)(k,b,l) = (i, ab, l) when j == k, theta otherwise; theta absorbs.
BrandtElement brandt_product(const GroupTable& g, uint32_t n, const BrandtElement& x,
                             const BrandtElement& y);

// Canonical index: theta first, then (i, g, j) ordered lexicographically.
uint32_t brandt_index(const GroupTable& g, uint32_t n, const BrandtElement& x);

std::string brandt_label(const GroupTable& g, uint32_t n, const BrandtElement& x);

// Full Cayley table of B(G, n); |G| n^2 + 1 elements, refused above 385.
FiniteSemigroup build_brandt(const GroupTable& g, uint32_t n);

// Classical minimum generating set of B(G, n) for n >= 2, built from an
// ordered generating list g1..gr of G:
//   (1,g1,1) ... (1,g_{r-1},1), (1,g_r,2), (2,e,3), ..., (n-1,e,n), (n,e,1).
// r + n - 1 elements; verified generating by closure before returning.
std::vector<BrandtElement> garba_generating_set(const GroupTable& g,
                                                const std::vector<uint32_t>& group_gens,
                                                uint32_t n);

}  // namespace sgrank
