#include "hurwitz/literal.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "hurwitz/error.hpp"

namespace hurwitz {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') {
      if (--depth < 0) throw InvalidArgument("unbalanced brackets in '" + std::string(text) + "'");
    }
    if (c == sep && depth == 0) {
      out.emplace_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw InvalidArgument("unbalanced brackets in '" + std::string(text) + "'");
  out.emplace_back(trim(text.substr(start)));
  return out;
}

namespace {

[[noreturn]] void malformed(const FiniteRing& ring, std::string_view text, const std::string& why) {
  throw InvalidArgument("malformed element literal '" + std::string(text) + "' for " + ring.name() + ": " + why);
}

std::string_view strip_parens(std::string_view s) {
  s = trim(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    // Only strip when the outer pair matches itself.
    int depth = 0;
    bool outer = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0 && i + 1 < s.size()) outer = false;
    }
    if (!outer) break;
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

// Leading unsigned decimal; returns the number of characters consumed.
std::size_t read_uint(std::string_view s, std::uint64_t& value) {
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == 0) return 0;
  const auto r = std::from_chars(s.data(), s.data() + i, value);
  if (r.ec != std::errc()) return 0;
  return i;
}

// Splits a sum into signed terms at top-level '+' and '-'.
std::vector<std::pair<bool, std::string_view>> signed_terms(std::string_view s) {
  std::vector<std::pair<bool, std::string_view>> out;
  bool negative = false;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    const char c = i < s.size() ? s[i] : '+';
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if ((c == '+' || c == '-') && depth == 0) {
      const std::string_view piece = trim(s.substr(start, i - start));
      if (!piece.empty()) out.emplace_back(negative, piece);
      else if (i != 0 && i < s.size()) out.emplace_back(negative, piece);  // empty interior term
      negative = c == '-';
      start = i + 1;
    }
  }
  return out;
}

Elem scaled(const FiniteRing& ring, std::uint64_t coeff, bool negative, Elem x) {
  const Elem y = ring.scale(coeff, x);
  return negative ? ring.neg(y) : y;
}

Elem parse_gf(const FiniteRing& ring, std::string_view text) {
  Elem acc = ring.zero();
  const auto terms = signed_terms(text);
  if (terms.empty()) malformed(ring, text, "empty");
  for (const auto& [neg, term] : terms) {
    if (term.empty()) malformed(ring, text, "empty term");
    std::uint64_t coeff = 1;
    std::size_t pos = read_uint(term, coeff);
    std::string_view rest = trim(term.substr(pos));
    std::uint64_t exponent = 0;
    if (!rest.empty()) {
      if (rest.front() == '*') rest = trim(rest.substr(1));
      if (rest.empty() || rest.front() != 'w') malformed(ring, text, "expected w in '" + std::string(term) + "'");
      rest = trim(rest.substr(1));
      exponent = 1;
      if (!rest.empty()) {
        if (rest.front() != '^') malformed(ring, text, "expected ^ after w");
        rest = trim(rest.substr(1));
        const std::size_t n = read_uint(rest, exponent);
        if (n == 0 || n != rest.size()) malformed(ring, text, "bad exponent");
      }
    } else if (pos == 0) {
      malformed(ring, text, "bad term '" + std::string(term) + "'");
    }
    // w is basis(1) when the degree exceeds 1, the root 0 of x otherwise.
    const Elem w = ring.dimension() > 1 ? ring.basis(1) : ring.from_coordinates(std::vector<std::uint32_t>{0});
    // Nonzero field elements satisfy w^(q-1) = 1, so large exponents reduce.
    const std::uint64_t e_reduced = exponent == 0 ? 0 : (exponent - 1) % (ring.size() - 1) + 1;
    Elem power = ring.one();
    for (std::uint64_t e = 0; e < e_reduced; ++e) power = ring.mul(power, w);
    acc = ring.add(acc, scaled(ring, coeff, neg, power));
  }
  return acc;
}

std::string format_gf(const FiniteRing& ring, Elem a) {
  const auto c = ring.coordinates(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += 'w';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Elem parse_matrix(const FiniteRing& ring, std::string_view text) {
  const std::string_view s = trim(text);
  const std::uint32_t n = ring.matrix_size();
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') malformed(ring, text, "expected [[...],...]");
  const auto rows = split_top_level(s.substr(1, s.size() - 2), ',');
  if (rows.size() != n) malformed(ring, text, "expected " + std::to_string(n) + " rows");
  std::vector<std::uint32_t> coords;
  for (const std::string& row : rows) {
    if (row.size() < 2 || row.front() != '[' || row.back() != ']') malformed(ring, text, "row must be bracketed");
    const auto cells = split_top_level(std::string_view(row).substr(1, row.size() - 2), ',');
    if (cells.size() != n) malformed(ring, text, "expected " + std::to_string(n) + " entries per row");
    for (const std::string& cell : cells) {
      std::string_view v = cell;
      bool neg = false;
      if (!v.empty() && v.front() == '-') {
        neg = true;
        v = trim(v.substr(1));
      }
      std::uint64_t x = 0;
      if (read_uint(v, x) != v.size() || v.empty()) malformed(ring, text, "bad entry '" + cell + "'");
      x %= ring.prime();
      if (neg) x = (ring.prime() - x) % ring.prime();
      coords.push_back(static_cast<std::uint32_t>(x));
    }
  }
  return ring.from_coordinates(coords);
}

std::string format_matrix(const FiniteRing& ring, Elem a) {
  const auto c = ring.coordinates(a);
  const std::uint32_t n = ring.matrix_size();
  std::string out = "[";
  for (std::uint32_t r = 0; r < n; ++r) {
    out += r ? ",[" : "[";
    for (std::uint32_t col = 0; col < n; ++col) {
      if (col) out += ',';
      out += std::to_string(c[r * n + col]);
    }
    out += ']';
  }
  return out + "]";
}

Elem parse_monomial(const FiniteRing& ring, std::string_view text) {
  Elem acc = ring.zero();
  const auto terms = signed_terms(text);
  if (terms.empty()) malformed(ring, text, "empty");
  for (const auto& [neg, term] : terms) {
    if (term.empty()) malformed(ring, text, "empty term");
    std::uint64_t coeff = 1;
    const std::size_t pos = read_uint(term, coeff);
    std::string_view rest = trim(term.substr(pos));
    if (pos == 0 && rest.empty()) malformed(ring, text, "empty term");
    if (!rest.empty() && rest.front() == '*') rest = trim(rest.substr(1));
    Elem word = ring.one();
    while (!rest.empty()) {
      if (rest.front() != 'x') malformed(ring, text, "expected x<k> in '" + std::string(term) + "'");
      rest.remove_prefix(1);
      std::uint64_t k = 0;
      const std::size_t n = read_uint(rest, k);
      if (n == 0) malformed(ring, text, "expected a generator index after x");
      if (k >= ring.monomial_generators()) malformed(ring, text, "generator x" + std::to_string(k) + " out of range");
      word = ring.mul(word, ring.monomial_generator(static_cast<std::uint32_t>(k)));
      rest = trim(rest.substr(n));
      if (!rest.empty() && rest.front() == '*') rest = trim(rest.substr(1));
    }
    acc = ring.add(acc, scaled(ring, coeff, neg, word));
  }
  return acc;
}

std::string format_monomial(const FiniteRing& ring, Elem a) {
  const auto c = ring.coordinates(a);
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const auto& word = ring.monomial_words()[i];
    if (word.empty()) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    for (std::uint32_t g : word) out += 'x' + std::to_string(g);
  }
  return out.empty() ? "0" : out;
}

Elem parse_decimal(const FiniteRing& ring, std::string_view text) {
  std::string_view s = trim(text);
  bool neg = false;
  if (!s.empty() && s.front() == '-') {
    if (ring.family() != Family::ZMod) malformed(ring, text, "table elements are indices 0.." + std::to_string(ring.size() - 1));
    neg = true;
    s = trim(s.substr(1));
  }
  std::uint64_t v = 0;
  if (s.empty() || read_uint(s, v) != s.size()) malformed(ring, text, "expected a decimal integer");
  if (ring.family() == Family::Table) {
    if (v >= ring.size()) malformed(ring, text, "table elements are indices 0.." + std::to_string(ring.size() - 1));
    return Elem{static_cast<std::uint32_t>(v)};
  }
  v %= ring.size();
  if (neg) v = (ring.size() - v) % ring.size();
  return Elem{static_cast<std::uint32_t>(v)};
}

}  // namespace

std::string format_elem(const FiniteRing& ring, Elem a) {
  switch (ring.family()) {
    case Family::ZMod:
    case Family::Table: return std::to_string(a.index());
    case Family::GaloisField: return format_gf(ring, a);
    case Family::MatrixRing: return format_matrix(ring, a);
    case Family::MonomialAlgebra: return format_monomial(ring, a);
  }
  return std::to_string(a.index());
}

Elem parse_elem(const FiniteRing& ring, std::string_view text) {
  const std::string_view s = strip_parens(text);
  if (s.empty()) malformed(ring, text, "empty");
  switch (ring.family()) {
    case Family::ZMod:
    case Family::Table: return parse_decimal(ring, s);
    case Family::GaloisField: return parse_gf(ring, s);
    case Family::MatrixRing: return parse_matrix(ring, s);
    case Family::MonomialAlgebra: return parse_monomial(ring, s);
  }
  malformed(ring, text, "unknown family");
}

std::string format_elems(const FiniteRing& ring, std::span<const Elem> xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += format_elem(ring, xs[i]);
  }
  return out + "}";
}

std::string format_poly(const HPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const Term& t : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string c = format_elem(f.ring(), t.coeff);
    const bool compound = c.find(' ') != std::string::npos;
    out += std::to_string(t.degree) + ':' + (compound ? '(' + c + ')' : c);
  }
  return out;
}

HPoly parse_poly(const RingPtr& ring, std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "0") return HPoly(ring);
  if (s.empty()) throw InvalidArgument("empty polynomial literal");
  std::vector<std::pair<Degree, std::string>> raw;
  for (const std::string& piece : split_top_level(s, '+')) {
    std::uint64_t d = 0;
    const std::size_t n = read_uint(piece, d);
    std::string_view rest = trim(std::string_view(piece).substr(n));
    if (n > 0 && !rest.empty() && rest.front() == ':') {
      if (d > kMaxDegree) throw InvalidArgument("degree " + std::to_string(d) + " exceeds " + std::to_string(kMaxDegree));
      raw.emplace_back(static_cast<Degree>(d), std::string(trim(rest.substr(1))));
    } else {
      // A piece without a degree continues the previous coefficient.
      if (raw.empty()) throw InvalidArgument("polynomial literal '" + std::string(s) + "' must start with deg:coeff");
      raw.back().second += " + " + piece;
    }
  }
  std::vector<std::pair<Degree, Elem>> pairs;
  for (const auto& [d, c] : raw) pairs.emplace_back(d, parse_elem(*ring, c));
  return HPoly::make(ring, std::move(pairs));
}

}  // namespace hurwitz
