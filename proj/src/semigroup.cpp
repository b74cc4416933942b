#include "sgrank/semigroup.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace sgrank {

namespace {

constexpr uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr uint64_t kFnvPrime = 1099511628211ULL;

uint64_t fnv1a(uint64_t h, const void* data, size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

void check_owner(const FiniteSemigroup& s, const ElementSet& u) {
  if (u.universe_size() != s.size() || u.owner_fingerprint() != s.fingerprint())
    throw std::invalid_argument("element set does not belong to this semigroup");
}

}  // namespace

ElementSet::ElementSet(const FiniteSemigroup& owner)
    : _m(owner.size()), _owner(owner.fingerprint()), _words((owner.size() + 63) / 64, 0) {}

ElementSet::ElementSet(const FiniteSemigroup& owner, const std::vector<uint32_t>& members)
    : ElementSet(owner) {
  for (uint32_t i : members) insert(i);
}

bool ElementSet::test(uint32_t i) const {
  if (i >= _m) throw std::out_of_range("element index out of range");
  return (_words[i >> 6] >> (i & 63)) & 1;
}

void ElementSet::insert(uint32_t i) {
  if (i >= _m) throw std::out_of_range("element index out of range");
  _words[i >> 6] |= uint64_t(1) << (i & 63);
}

void ElementSet::erase(uint32_t i) {
  if (i >= _m) throw std::out_of_range("element index out of range");
  _words[i >> 6] &= ~(uint64_t(1) << (i & 63));
}

uint32_t ElementSet::count() const {
  uint32_t c = 0;
  for (uint64_t w : _words) c += static_cast<uint32_t>(std::popcount(w));
  return c;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (_m != other._m) throw std::invalid_argument("universe size mismatch");
  for (size_t i = 0; i < _words.size(); ++i)
    if (_words[i] & ~other._words[i]) return false;
  return true;
}

std::vector<uint32_t> ElementSet::members() const {
  std::vector<uint32_t> out;
  out.reserve(count());
  for (size_t wi = 0; wi < _words.size(); ++wi) {
    uint64_t w = _words[wi];
    while (w) {
      out.push_back(static_cast<uint32_t>(wi * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

ElementSet ElementSet::complement() const {
  ElementSet out(*this);
  for (auto& w : out._words) w = ~w;
  if (_m & 63) out._words.back() &= (uint64_t(1) << (_m & 63)) - 1;
  return out;
}

int ElementSet::lex_compare(const ElementSet& a, const ElementSet& b) {
  std::vector<uint32_t> ma = a.members(), mb = b.members();
  size_t k = std::min(ma.size(), mb.size());
  for (size_t i = 0; i < k; ++i) {
    if (ma[i] != mb[i]) return ma[i] < mb[i] ? -1 : 1;
  }
  if (ma.size() == mb.size()) return 0;
  return ma.size() < mb.size() ? -1 : 1;
}

uint64_t ElementSet::hash() const {
  uint64_t h = fnv1a(kFnvOffset, &_m, sizeof(_m));
  return fnv1a(h, _words.data(), _words.size() * sizeof(uint64_t));
}

FiniteSemigroup::FiniteSemigroup(std::vector<uint32_t> table,
                                 std::vector<std::string> labels,
                                 bool check_associativity)
    : _size(static_cast<uint32_t>(labels.size())),
      _table(std::move(table)),
      _labels(std::move(labels)) {
  if (_size == 0) throw std::invalid_argument("semigroup must be nonempty");
  if (_table.size() != size_t(_size) * _size)
    throw std::invalid_argument("table size does not match element count");
  for (uint32_t v : _table)
    if (v >= _size) throw std::invalid_argument("table entry out of range");

  uint64_t h = fnv1a(kFnvOffset, &_size, sizeof(_size));
  _fingerprint = fnv1a(h, _table.data(), _table.size() * sizeof(uint32_t));

  if (check_associativity) {
    auto at = [&](uint32_t a, uint32_t b) { return _table[size_t(a) * _size + b]; };
    if (_size <= 150) {
      for (uint32_t a = 0; a < _size; ++a)
        for (uint32_t b = 0; b < _size; ++b) {
          const uint32_t ab = at(a, b);
          for (uint32_t c = 0; c < _size; ++c)
            if (at(ab, c) != at(a, at(b, c)))
              throw std::invalid_argument(
                  "table is not associative at (" + _labels[a] + ", " + _labels[b] +
                  ", " + _labels[c] + ")");
        }
    } else {
      std::mt19937 rng(0x5eed);
      std::uniform_int_distribution<uint32_t> pick(0, _size - 1);
      for (int t = 0; t < 2'000'000; ++t) {
        const uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw std::invalid_argument("table is not associative (sampled check)");
      }
    }
  }
}

uint32_t FiniteSemigroup::product(uint32_t a, uint32_t b) const {
  if (a >= _size || b >= _size) throw std::out_of_range("element index out of range");
  return _table[size_t(a) * _size + b];
}

const std::string& FiniteSemigroup::label(uint32_t a) const {
  if (a >= _size) throw std::out_of_range("element index out of range");
  return _labels[a];
}

std::optional<uint32_t> FiniteSemigroup::index_of(const std::string& label) const {
  for (uint32_t i = 0; i < _size; ++i)
    if (_labels[i] == label) return i;
  return std::nullopt;
}

ElementSet FiniteSemigroup::empty_set() const { return ElementSet(*this); }

ElementSet FiniteSemigroup::full_set() const {
  ElementSet out(*this);
  return out.complement();
}

ElementSet FiniteSemigroup::set_of(const std::vector<uint32_t>& members) const {
  return ElementSet(*this, members);
}

ElementSet closure(const FiniteSemigroup& s, const ElementSet& u) {
  check_owner(s, u);
  ElementSet result = u;
  std::vector<uint32_t> mem = u.members();
  const uint32_t m = s.size();
  auto add = [&](uint32_t c) {
    if (!result.test(c)) {
      result.insert(c);
      mem.push_back(c);
    }
  };
  for (size_t qi = 0; qi < mem.size(); ++qi) {
    const uint32_t a = mem[qi];
    const uint32_t* row_a = s.row(a);
    for (size_t bi = 0; bi < mem.size(); ++bi) {
      const uint32_t b = mem[bi];
      add(row_a[b]);
      add(s.row(b)[a]);
      if (mem.size() == m) return result;  // already everything
    }
  }
  return result;
}

ElementSet closure_with(const FiniteSemigroup& s, const ElementSet& closed_base,
                        uint32_t extra) {
  check_owner(s, closed_base);
  if (extra >= s.size()) throw std::out_of_range("element index out of range");
  if (closed_base.test(extra)) return closed_base;
  ElementSet result = closed_base;
  std::vector<uint32_t> mem = closed_base.members();
  result.insert(extra);
  mem.push_back(extra);
  const size_t first_new = mem.size() - 1;
  auto add = [&](uint32_t c) {
    if (!result.test(c)) {
      result.insert(c);
      mem.push_back(c);
    }
  };
  // Base x base products are already inside; start saturating at the new
  // element, pairing each processed element against the whole current set.
  for (size_t qi = first_new; qi < mem.size(); ++qi) {
    const uint32_t a = mem[qi];
    const uint32_t* row_a = s.row(a);
    for (size_t bi = 0; bi < mem.size(); ++bi) {
      const uint32_t b = mem[bi];
      add(row_a[b]);
      add(s.row(b)[a]);
    }
  }
  return result;
}

bool is_generating(const FiniteSemigroup& s, const ElementSet& u) {
  return closure(s, u).count() == s.size();
}

bool is_independent(const FiniteSemigroup& s, const ElementSet& u) {
  check_owner(s, u);
  for (uint32_t a : u.members()) {
    ElementSet rest = u;
    rest.erase(a);
    if (closure(s, rest).test(a)) return false;
  }
  return true;
}

bool is_band(const FiniteSemigroup& s) {
  for (uint32_t a = 0; a < s.size(); ++a)
    if (s.product(a, a) != a) return false;
  return true;
}

bool is_prime_subset(const FiniteSemigroup& s, const ElementSet& u) {
  check_owner(s, u);
  if (u.empty()) throw std::invalid_argument("prime subsets are nonempty by definition");
  const uint32_t m = s.size();
  for (uint32_t a = 0; a < m; ++a) {
    if (u.test(a)) continue;
    const uint32_t* row_a = s.row(a);
    for (uint32_t b = 0; b < m; ++b)
      if (!u.test(b) && u.test(row_a[b])) return false;
  }
  return true;
}

bool is_decomposable(const FiniteSemigroup& s, uint32_t a) {
  if (a >= s.size()) throw std::out_of_range("element index out of range");
  for (uint32_t b = 0; b < s.size(); ++b) {
    if (b == a) continue;
    const uint32_t* row_b = s.row(b);
    for (uint32_t c = 0; c < s.size(); ++c)
      if (c != a && row_b[c] == a) return true;
  }
  return false;
}

ElementSet idempotent_elements(const FiniteSemigroup& s) {
  ElementSet out(s);
  for (uint32_t a = 0; a < s.size(); ++a)
    if (s.product(a, a) == a) out.insert(a);
  return out;
}

Witness make_witness(const FiniteSemigroup& s, WitnessKind kind, const ElementSet& u) {
  check_owner(s, u);
  Witness w;
  w.kind = kind;
  w.elements = u.members();
  w.labels.reserve(w.elements.size());
  for (uint32_t i : w.elements) w.labels.push_back(s.label(i));
  return w;
}

const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::generating_set: return "generating-set";
    case WitnessKind::independent_set: return "independent-set";
    case WitnessKind::prime_subset: return "prime-subset";
    case WitnessKind::subsemigroup: return "subsemigroup";
  }
  return "?";
}

namespace {

void put_u32(std::string& out, uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

}  // namespace

void write_cache(const FiniteSemigroup& s, const std::string& path) {
  std::string bytes;
  const uint32_t m = s.size();
  bytes.reserve(8 + size_t(m) * m * 4 + size_t(m) * 8);
  bytes += "SGP1";
  put_u32(bytes, m);
  for (uint32_t v : s.table()) put_u32(bytes, v);
  for (uint32_t i = 0; i < m; ++i) {
    const std::string& lab = s.label(i);
    if (lab.size() > 0xffff) throw std::invalid_argument("label too long for cache");
    bytes.push_back(static_cast<char>(lab.size() & 0xff));
    bytes.push_back(static_cast<char>((lab.size() >> 8) & 0xff));
    bytes += lab;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open cache file for writing: " + path);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("cache write failed: " + path);
}

namespace {

[[noreturn]] void malformed(const std::string& path, size_t offset, const char* what) {
  throw std::runtime_error("malformed cache file " + path + " at byte offset " +
                           std::to_string(offset) + ": " + what);
}

}  // namespace

FiniteSemigroup read_cache(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open cache file: " + path);
  std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  size_t pos = 0;
  auto need = [&](size_t k, const char* what) {
    if (bytes.size() - pos < k) malformed(path, pos, what);
  };
  auto get_u32 = [&](const char* what) {
    need(4, what);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<uint32_t>(static_cast<unsigned char>(bytes[pos + i])) << (8 * i);
    pos += 4;
    return v;
  };
  need(4, "missing magic");
  if (bytes.compare(0, 4, "SGP1") != 0) malformed(path, 0, "bad magic, expected SGP1");
  pos = 4;
  const uint32_t m = get_u32("missing element count");
  if (m == 0) malformed(path, 4, "element count is zero");
  if (m > 100000) malformed(path, 4, "element count implausibly large");
  std::vector<uint32_t> table(size_t(m) * m);
  for (auto& v : table) {
    v = get_u32("truncated table");
    if (v >= m) malformed(path, pos - 4, "table entry out of range");
  }
  std::vector<std::string> labels(m);
  for (auto& lab : labels) {
    need(2, "truncated label length");
    const size_t len = static_cast<unsigned char>(bytes[pos]) |
                       (static_cast<size_t>(static_cast<unsigned char>(bytes[pos + 1])) << 8);
    pos += 2;
    need(len, "truncated label");
    lab = bytes.substr(pos, len);
    pos += len;
  }
  if (pos != bytes.size()) malformed(path, pos, "trailing bytes");
  return FiniteSemigroup(std::move(table), std::move(labels));
}

uint64_t file_fnv1a(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return fnv1a(kFnvOffset, bytes.data(), bytes.size());
}

}  // namespace sgrank
