#include "sgrank/affine.hpp"

#include <map>
#include <stdexcept>

namespace sgrank {

namespace {

void check_point_index(uint32_t n, uint8_t v, const char* what) {
  if (v >= n)
    throw std::out_of_range(std::string(what) + " index out of range [1," +
                            std::to_string(n) + "]");
}

}  // namespace

AffMap AffMap::zero(uint32_t n) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  return AffMap(n, Kind::zero);
}

AffMap AffMap::constant(uint32_t n, uint8_t p, uint8_t q) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  check_point_index(n, p, "row");
  check_point_index(n, q, "column");
  AffMap f(n, Kind::constant);
  f._p = p;
  f._q = q;
  return f;
}

AffMap AffMap::singleton(uint32_t n, uint8_t k, uint8_t l, uint8_t p, uint8_t q) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  check_point_index(n, k, "row");
  check_point_index(n, l, "column");
  check_point_index(n, p, "row");
  check_point_index(n, q, "column");
  if (n == 1) {
    // On B_1 the one singleton-support map is the n-support identity.
    return n_support(1, 0, 0, Permutation(1));
  }
  AffMap f(n, Kind::singleton);
  f._k = k;
  f._l = l;
  f._p = p;
  f._q = q;
  return f;
}

AffMap AffMap::n_support(uint32_t n, uint8_t p, uint8_t q, Permutation sigma) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  check_point_index(n, p, "column");
  check_point_index(n, q, "column");
  if (sigma.degree() != n)
    throw std::invalid_argument("permutation degree does not match map degree");
  AffMap f(n, Kind::n_support);
  f._p = p;
  f._q = q;
  f._sigma = std::move(sigma);
  return f;
}

const Permutation& AffMap::sigma() const {
  if (_kind != Kind::n_support)
    throw std::logic_error("sigma() is only defined for n-support maps");
  return _sigma;
}

BnPoint AffMap::apply(const BnPoint& x) const {
  if (!x.theta && (x.i >= _n || x.j >= _n))
    throw std::out_of_range("point out of range");
  switch (_kind) {
    case Kind::zero:
      return BnPoint::make_theta();
    case Kind::constant:
      return BnPoint::make(_p, _q);
    case Kind::singleton:
      if (!x.theta && x.i == _k && x.j == _l) return BnPoint::make(_p, _q);
      return BnPoint::make_theta();
    case Kind::n_support:
      if (!x.theta && x.j == _p) return BnPoint::make(_sigma.apply(x.i), _q);
      return BnPoint::make_theta();
  }
  return BnPoint::make_theta();
}

AffMap AffMap::compose(const AffMap& then) const {
  if (_n != then._n) throw std::invalid_argument("map degree mismatch");
  // Constants are right zeros; the zero map annihilates on the right.
  if (then._kind == Kind::constant) return then;
  if (then._kind == Kind::zero) return zero(_n);
  switch (_kind) {
    case Kind::zero:
      return zero(_n);
    case Kind::constant: {
      const BnPoint y = then.apply(BnPoint::make(_p, _q));
      return y.theta ? zero(_n) : constant(_n, y.i, y.j);
    }
    case Kind::singleton: {
      const BnPoint y = then.apply(BnPoint::make(_p, _q));
      return y.theta ? zero(_n) : singleton(_n, _k, _l, y.i, y.j);
    }
    case Kind::n_support:
      if (then._kind == Kind::n_support) {
        if (_q != then._p) return zero(_n);
        return n_support(_n, _p, then._q, perm_compose(_sigma, then._sigma));
      }
      // then is a singleton (k', l') -> (p', q'): only the point mapped onto
      // (k', l') survives, i.e. (k' sigma^-1, p).
      if (_q != then._l) return zero(_n);
      return singleton(_n, _sigma.inverse().apply(then._k), _p, then._p, then._q);
  }
  return zero(_n);
}

SupportClass AffMap::support_class() const {
  switch (_kind) {
    case Kind::zero: return SupportClass::zero;
    case Kind::constant: return SupportClass::full;
    case Kind::singleton: return SupportClass::singleton;
    case Kind::n_support: return SupportClass::n_point;
  }
  return SupportClass::zero;
}

uint32_t AffMap::support_size() const {
  switch (_kind) {
    case Kind::zero: return 0;
    case Kind::constant: return _n * _n + 1;
    case Kind::singleton: return 1;
    case Kind::n_support: return _n;
  }
  return 0;
}

std::string AffMap::to_string() const {
  switch (_kind) {
    case Kind::zero:
      return "zero";
    case Kind::constant:
      return "const:" + std::to_string(_p + 1) + "," + std::to_string(_q + 1);
    case Kind::singleton:
      return "ss:(" + std::to_string(_k + 1) + "," + std::to_string(_l + 1) + ")->(" +
             std::to_string(_p + 1) + "," + std::to_string(_q + 1) + ")";
    case Kind::n_support:
      return "ns:" + std::to_string(_p + 1) + "," + std::to_string(_q + 1) + ";" +
             _sigma.to_string();
  }
  return "?";
}

std::strong_ordering operator<=>(const AffMap& a, const AffMap& b) {
  if (auto c = a._n <=> b._n; c != 0) return c;
  if (auto c = static_cast<uint8_t>(a._kind) <=> static_cast<uint8_t>(b._kind); c != 0)
    return c;
  switch (a._kind) {
    case AffMap::Kind::zero:
      return std::strong_ordering::equal;
    case AffMap::Kind::constant:
      return std::tie(a._p, a._q) <=> std::tie(b._p, b._q);
    case AffMap::Kind::singleton:
      return std::tie(a._k, a._l, a._p, a._q) <=> std::tie(b._k, b._l, b._p, b._q);
    case AffMap::Kind::n_support:
      if (auto c = std::tie(a._p, a._q) <=> std::tie(b._p, b._q); c != 0) return c;
      return a._sigma <=> b._sigma;
  }
  return std::strong_ordering::equal;
}

namespace {

std::vector<AffMap> enumerate_universe(uint32_t n, bool with_singletons) {
  std::vector<AffMap> out;
  out.push_back(AffMap::zero(n));
  for (uint8_t p = 0; p < n; ++p)
    for (uint8_t q = 0; q < n; ++q) out.push_back(AffMap::constant(n, p, q));
  if (with_singletons && n >= 2)
    for (uint8_t k = 0; k < n; ++k)
      for (uint8_t l = 0; l < n; ++l)
        for (uint8_t p = 0; p < n; ++p)
          for (uint8_t q = 0; q < n; ++q)
            out.push_back(AffMap::singleton(n, k, l, p, q));
  const std::vector<Permutation> perms = all_permutations(n);
  for (uint8_t p = 0; p < n; ++p)
    for (uint8_t q = 0; q < n; ++q)
      for (const Permutation& s : perms) out.push_back(AffMap::n_support(n, p, q, s));
  return out;
}

}  // namespace

std::vector<AffMap> enumerate_aplus(uint32_t n) {
  if (n < 1 || n > 3)
    throw std::invalid_argument(
        "full catalog supported for 1 <= n <= 3 only (the n = 4 catalog has 657 "
        "elements, beyond the 600-element table cap)");
  return enumerate_universe(n, true);
}

std::vector<AffMap> enumerate_aff(uint32_t n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("constant+n-support catalog supported for 1 <= n <= 4");
  return enumerate_universe(n, false);
}

namespace {

uint32_t universe_index(const AffMap& f, bool with_singletons) {
  const uint32_t n = f.degree();
  const bool has_ss = with_singletons && n >= 2;
  const uint32_t consts = n * n;
  const uint32_t singles = has_ss ? n * n * n * n : 0;
  switch (f.kind()) {
    case AffMap::Kind::zero:
      return 0;
    case AffMap::Kind::constant:
      return 1 + f.dst_row() * n + f.dst_col();
    case AffMap::Kind::singleton:
      if (!has_ss) throw std::invalid_argument("universe has no singleton maps");
      return 1 + consts +
             ((uint32_t(f.src_row()) * n + f.src_col()) * n + f.dst_row()) * n +
             f.dst_col();
    case AffMap::Kind::n_support:
      return 1 + consts + singles +
             static_cast<uint32_t>((uint32_t(f.dst_row()) * n + f.dst_col()) *
                                       factorial(n) +
                                   f.sigma().lex_rank());
  }
  throw std::logic_error("unreachable");
}

}  // namespace

uint32_t aplus_index(const AffMap& f) { return universe_index(f, true); }
uint32_t aff_index(const AffMap& f) { return universe_index(f, false); }

FiniteSemigroup build_cayley(const std::vector<AffMap>& universe) {
  if (universe.empty()) throw std::invalid_argument("universe must be nonempty");
  if (universe.size() > 600)
    throw std::invalid_argument("universe exceeds the 600-element table cap");
  const uint32_t n = universe[0].degree();
  std::map<AffMap, uint32_t> index;
  for (size_t i = 0; i < universe.size(); ++i) {
    if (universe[i].degree() != n)
      throw std::invalid_argument("universe mixes map degrees");
    if (!index.emplace(universe[i], static_cast<uint32_t>(i)).second)
      throw std::invalid_argument("universe contains duplicate elements");
  }
  const uint32_t m = static_cast<uint32_t>(universe.size());
  std::vector<uint32_t> table(size_t(m) * m);
  std::vector<std::string> labels(m);
  for (uint32_t a = 0; a < m; ++a) {
    labels[a] = universe[a].to_string();
    for (uint32_t b = 0; b < m; ++b) {
      const AffMap h = universe[a].compose(universe[b]);
      auto it = index.find(h);
      if (it == index.end())
        throw std::logic_error("classification violation: " + universe[a].to_string() +
                               " . " + universe[b].to_string() + " = " + h.to_string() +
                               " falls outside the universe");
      table[size_t(a) * m + b] = it->second;
    }
  }
  return FiniteSemigroup(std::move(table), std::move(labels));
}

BrandtElement to_brandt(const AffMap& f) {
  switch (f.kind()) {
    case AffMap::Kind::zero:
      return BrandtElement::make_theta();
    case AffMap::Kind::n_support:
      return BrandtElement::make(f.dst_row(), static_cast<uint32_t>(f.sigma().lex_rank()),
                                 f.dst_col());
    default:
      throw std::invalid_argument(
          "only the zero and n-support maps map into the Brandt semigroup");
  }
}

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t')) --b;
  return s.substr(a, b - a);
}

// Parses "N,N" 1-based at pos; advances pos.
std::pair<uint8_t, uint8_t> parse_pair(const std::string& text, size_t& pos, uint32_t n,
                                       const char* what) {
  auto parse_int = [&]() -> uint8_t {
    size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start)
      throw std::invalid_argument(std::string("expected integer in ") + what +
                                  " at position " + std::to_string(pos));
    const int v = std::atoi(text.substr(start, pos - start).c_str());
    if (v < 1 || v > static_cast<int>(n))
      throw std::invalid_argument(std::string("index out of range [1,") +
                                  std::to_string(n) + "] in " + what);
    return static_cast<uint8_t>(v - 1);
  };
  const uint8_t first = parse_int();
  if (pos >= text.size() || text[pos] != ',')
    throw std::invalid_argument(std::string("expected ',' in ") + what);
  ++pos;
  const uint8_t second = parse_int();
  return {first, second};
}

}  // namespace

AffMap AffMap::parse(const std::string& raw, uint32_t n) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  const std::string text = trim(raw);
  if (text == "zero") return AffMap::zero(n);
  if (text.rfind("const:", 0) == 0) {
    size_t pos = 6;
    auto [p, q] = parse_pair(text, pos, n, "const");
    if (pos != text.size())
      throw std::invalid_argument("trailing characters after const element");
    return AffMap::constant(n, p, q);
  }
  if (text.rfind("ss:", 0) == 0) {
    size_t pos = 3;
    auto expect = [&](char c) {
      if (pos >= text.size() || text[pos] != c)
        throw std::invalid_argument(std::string("expected '") + c +
                                    "' in ss element at position " + std::to_string(pos));
      ++pos;
    };
    expect('(');
    auto [k, l] = parse_pair(text, pos, n, "ss source");
    expect(')');
    expect('-');
    expect('>');
    expect('(');
    auto [p, q] = parse_pair(text, pos, n, "ss target");
    expect(')');
    if (pos != text.size())
      throw std::invalid_argument("trailing characters after ss element");
    return AffMap::singleton(n, k, l, p, q);
  }
  if (text.rfind("ns:", 0) == 0) {
    size_t pos = 3;
    auto [p, q] = parse_pair(text, pos, n, "ns");
    if (pos >= text.size() || text[pos] != ';')
      throw std::invalid_argument("expected ';' before permutation in ns element");
    ++pos;
    Permutation sigma = Permutation::parse(text.substr(pos), n);
    return AffMap::n_support(n, p, q, std::move(sigma));
  }
  throw std::invalid_argument("unknown element (expected zero | const:p,q | "
                              "ss:(k,l)->(p,q) | ns:p,q;[...]): " + text);
}

AffMap eval_expression(const std::string& text, uint32_t n) {
  std::vector<std::string> tokens;
  size_t start = 0;
  while (true) {
    const size_t dot = text.find('.', start);
    tokens.push_back(text.substr(start, dot == std::string::npos ? dot : dot - start));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  std::vector<AffMap> parsed;
  for (const std::string& tok : tokens) {
    if (trim(tok).empty())
      throw std::invalid_argument("empty factor in composition expression");
    parsed.push_back(AffMap::parse(tok, n));
  }
  AffMap acc = parsed[0];
  for (size_t i = 1; i < parsed.size(); ++i) acc = acc.compose(parsed[i]);
  return acc;
}

}  // namespace sgrank
