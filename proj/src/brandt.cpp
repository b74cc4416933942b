#include "sgrank/brandt.hpp"

#include <stdexcept>

namespace sgrank {

namespace {

void check_element(const GroupTable& g, uint32_t n, const BrandtElement& x) {
  if (x.theta) return;
  if (x.i >= n || x.j >= n) throw std::out_of_range("brandt row/column out of range");
  if (x.g >= g.order()) throw std::out_of_range("brandt group index out of range");
}

}  // namespace

BrandtElement brandt_product(const GroupTable& g, uint32_t n, const BrandtElement& x,
                             const BrandtElement& y) {
  check_element(g, n, x);
  check_element(g, n, y);
  if (x.theta || y.theta || x.j != y.i) return BrandtElement::make_theta();
  return BrandtElement::make(x.i, g.product(x.g, y.g), y.j);
}

uint32_t brandt_index(const GroupTable& g, uint32_t n, const BrandtElement& x) {
  check_element(g, n, x);
  if (x.theta) return 0;
  return 1 + (x.i * g.order() + x.g) * n + x.j;
}

std::string brandt_label(const GroupTable& g, uint32_t n, const BrandtElement& x) {
  check_element(g, n, x);
  if (x.theta) return "theta";
  return "(" + std::to_string(x.i + 1) + "," + g.label(x.g) + "," +
         std::to_string(x.j + 1) + ")";
}

FiniteSemigroup build_brandt(const GroupTable& g, uint32_t n) {
  if (n < 1) throw std::invalid_argument("brandt semigroup needs n >= 1");
  const uint64_t m64 = uint64_t(g.order()) * n * n + 1;
  if (m64 > 385)
    throw std::invalid_argument("brandt semigroup too large (" + std::to_string(m64) +
                                " elements, cap is 385)");
  const uint32_t m = static_cast<uint32_t>(m64);

  std::vector<BrandtElement> els;
  els.reserve(m);
  els.push_back(BrandtElement::make_theta());
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t ge = 0; ge < g.order(); ++ge)
      for (uint32_t j = 0; j < n; ++j) els.push_back(BrandtElement::make(i, ge, j));

  std::vector<uint32_t> table(size_t(m) * m);
  std::vector<std::string> labels(m);
  for (uint32_t a = 0; a < m; ++a) {
    labels[a] = brandt_label(g, n, els[a]);
    for (uint32_t b = 0; b < m; ++b)
      table[size_t(a) * m + b] = brandt_index(g, n, brandt_product(g, n, els[a], els[b]));
  }
  return FiniteSemigroup(std::move(table), std::move(labels));
}

std::vector<BrandtElement> garba_generating_set(const GroupTable& g,
                                                const std::vector<uint32_t>& group_gens,
                                                uint32_t n) {
  if (n < 2) throw std::invalid_argument("garba_generating_set needs n >= 2");
  if (group_gens.empty())
    throw std::invalid_argument("group generating list must be nonempty");
  if (!g.generates(group_gens))
    throw std::invalid_argument("given elements do not generate the group");

  const uint32_t e = g.identity();
  std::vector<BrandtElement> out;
  for (size_t t = 0; t + 1 < group_gens.size(); ++t)
    out.push_back(BrandtElement::make(0, group_gens[t], 0));
  out.push_back(BrandtElement::make(0, group_gens.back(), 1));
  for (uint32_t i = 1; i + 1 < n; ++i) out.push_back(BrandtElement::make(i, e, i + 1));
  out.push_back(BrandtElement::make(n - 1, e, 0));

  const FiniteSemigroup b = build_brandt(g, n);
  ElementSet u(b);
  for (const BrandtElement& x : out) u.insert(brandt_index(g, n, x));
  if (!is_generating(b, u))
    throw std::logic_error("garba construction failed to generate B(G,n)");
  return out;
}

}  // namespace sgrank
