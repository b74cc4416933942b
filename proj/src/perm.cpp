#include "sgrank/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace sgrank {

Permutation::Permutation(uint32_t degree) : _images(degree) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
  std::iota(_images.begin(), _images.end(), static_cast<uint8_t>(0));
}

Permutation::Permutation(std::vector<uint8_t> images) : _images(std::move(images)) {
  if (_images.empty()) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(_images.size(), false);
  for (uint8_t v : _images) {
    if (v >= _images.size() || seen[v])
      throw std::invalid_argument("image list is not a permutation");
    seen[v] = true;
  }
}

uint8_t Permutation::apply(uint8_t i) const {
  if (i >= _images.size()) throw std::out_of_range("permutation point out of range");
  return _images[i];
}

Permutation Permutation::inverse() const {
  std::vector<uint8_t> inv(_images.size());
  for (size_t i = 0; i < _images.size(); ++i) inv[_images[i]] = static_cast<uint8_t>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < _images.size(); ++i)
    if (_images[i] != i) return false;
  return true;
}

uint64_t Permutation::lex_rank() const {
  // Lehmer code
  uint64_t rank = 0;
  const size_t n = _images.size();
  for (size_t i = 0; i < n; ++i) {
    uint32_t smaller = 0;
    for (size_t j = i + 1; j < n; ++j)
      if (_images[j] < _images[i]) ++smaller;
    rank += smaller * factorial(static_cast<uint32_t>(n - 1 - i));
  }
  return rank;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < _images.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(_images[i] + 1);
  }
  out += ']';
  return out;
}

namespace {

std::vector<int> parse_int_list(const std::string& text, size_t& pos, char open,
                                char close, const char* what) {
  // Parses "<open> int (sep int)* <close>"; separators are ',' or spaces.
  std::vector<int> out;
  if (pos >= text.size() || text[pos] != open)
    throw std::invalid_argument(std::string("expected '") + open + "' in " + what);
  ++pos;
  while (true) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos >= text.size())
      throw std::invalid_argument(std::string("unterminated ") + what);
    if (text[pos] == close) {
      ++pos;
      return out;
    }
    size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start)
      throw std::invalid_argument(std::string("expected integer in ") + what +
                                  " at position " + std::to_string(pos));
    out.push_back(std::atoi(text.substr(start, pos - start).c_str()));
  }
}

}  // namespace

Permutation Permutation::parse(const std::string& text, uint32_t degree) {
  if (degree == 0 || degree > 16)
    throw std::invalid_argument("unsupported permutation degree");
  size_t pos = 0;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos >= text.size()) throw std::invalid_argument("empty permutation text");

  if (text[pos] == '[') {
    std::vector<int> vals = parse_int_list(text, pos, '[', ']', "image list");
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos != text.size())
      throw std::invalid_argument("trailing characters after image list");
    if (vals.size() != degree)
      throw std::invalid_argument("image list length " + std::to_string(vals.size()) +
                                  " does not match degree " + std::to_string(degree));
    std::vector<uint8_t> img(degree);
    for (size_t i = 0; i < vals.size(); ++i) {
      if (vals[i] < 1 || vals[i] > static_cast<int>(degree))
        throw std::invalid_argument("image value out of range [1," +
                                    std::to_string(degree) + "]");
      img[i] = static_cast<uint8_t>(vals[i] - 1);
    }
    return Permutation(std::move(img));
  }

  if (text[pos] == '(') {
    std::vector<uint8_t> img(degree);
    std::iota(img.begin(), img.end(), static_cast<uint8_t>(0));
    while (pos < text.size() && text[pos] == '(') {
      std::vector<int> cyc = parse_int_list(text, pos, '(', ')', "cycle");
      std::vector<uint8_t> c;
      for (int v : cyc) {
        if (v < 1 || v > static_cast<int>(degree))
          throw std::invalid_argument("cycle entry out of range [1," +
                                      std::to_string(degree) + "]");
        c.push_back(static_cast<uint8_t>(v - 1));
      }
      for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j)
          if (c[i] == c[j]) throw std::invalid_argument("repeated point in cycle");
      if (!c.empty()) {
        // Apply this cycle after what has been parsed so far.
        std::vector<uint8_t> step(degree);
        std::iota(step.begin(), step.end(), static_cast<uint8_t>(0));
        for (size_t i = 0; i < c.size(); ++i) step[c[i]] = c[(i + 1) % c.size()];
        for (size_t i = 0; i < degree; ++i) img[i] = step[img[i]];
      }
      while (pos < text.size() && text[pos] == ' ') ++pos;
    }
    if (pos != text.size())
      throw std::invalid_argument("trailing characters after cycle form");
    return Permutation(std::move(img));
  }

  throw std::invalid_argument("permutation must start with '[' or '('");
}

Permutation perm_compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("permutation degree mismatch");
  std::vector<uint8_t> img(a.degree());
  for (uint32_t i = 0; i < a.degree(); ++i)
    img[i] = b.apply(a.apply(static_cast<uint8_t>(i)));
  return Permutation(std::move(img));
}

uint64_t factorial(uint32_t n) {
  uint64_t f = 1;
  for (uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Permutation> all_permutations(uint32_t degree) {
  std::vector<uint8_t> img(degree);
  std::iota(img.begin(), img.end(), static_cast<uint8_t>(0));
  std::vector<Permutation> out;
  out.reserve(factorial(degree));
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace sgrank
