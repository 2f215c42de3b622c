#include "session.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hurwitz/literal.hpp"
#include "hurwitz/primetest.hpp"

namespace hurwitz::cli {

namespace {

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  const std::string_view s = trim(text);
  std::uint64_t v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || r.ec != std::errc() || r.ptr != s.data() + s.size()) {
    throw ConfigError(what + ": expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_params(const std::string& text, std::size_t count, const std::string& family) {
  std::vector<std::uint64_t> out;
  for (const std::string& piece : split_top_level(text, ',')) out.push_back(parse_u64(piece, "ring " + family));
  if (out.size() != count) {
    throw ConfigError("ring " + family + " takes " + std::to_string(count) + " parameter(s), got '" + text + "'");
  }
  return out;
}

std::uint32_t narrow(std::uint64_t v, const std::string& what) {
  if (v > 0xffffffffu) throw ConfigError(what + " is out of range");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

std::vector<std::uint32_t> parse_index_list(const std::string& text, const std::string& what) {
  std::vector<std::uint32_t> out;
  std::string cleaned = text;
  for (char& c : cleaned) {
    if (c == '[' || c == ']') c = ' ';
  }
  if (trim(cleaned).empty()) return out;
  for (const std::string& piece : split_top_level(cleaned, ',')) out.push_back(narrow(parse_u64(piece, what), what));
  return out;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string_view s = trim(line);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(path + ":" + std::to_string(number) + ": expected key = value");
    }
    const std::string key(trim(s.substr(0, eq)));
    SessionConfig probe;
    apply_config_key(probe, key, std::string(trim(s.substr(eq + 1))));
    out[key] = std::string(trim(s.substr(eq + 1)));
  }
  return out;
}

void apply_config_key(SessionConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "ring") cfg.ring = value;
  else if (key == "alpha") cfg.alpha = value;
  else if (key == "alpha_table") cfg.alpha_table = parse_index_list(value, key);
  else if (key == "add_table") cfg.add_table = parse_index_list(value, key);
  else if (key == "mul_table") cfg.mul_table = parse_index_list(value, key);
  else if (key == "table_one") cfg.table_one = narrow(parse_u64(value, key), key);
  else if (key == "cap") cfg.cap = parse_u64(value, key);
  else if (key == "degree_bound") cfg.degree_bound = narrow(parse_u64(value, key), key);
  else if (key == "gen_size") cfg.gen_size = parse_u64(value, key);
  else if (key == "seed") cfg.seed = parse_u64(value, key);
  else if (key == "threads") cfg.threads = static_cast<int>(narrow(parse_u64(value, key), key));
  else if (key == "format") cfg.format = value;
  else if (key == "out") cfg.out = value;
  else if (key == "timing") {
    if (value != "true" && value != "false") throw ConfigError("timing: expected true or false");
    cfg.timing = value == "true";
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void validate(const SessionConfig& cfg) {
  if (cfg.cap == 0) throw ConfigError("cap must be positive");
  if (cfg.gen_size == 0) throw ConfigError("gen_size must be positive");
  if (cfg.degree_bound && *cfg.degree_bound > kMaxDegree) {
    throw ConfigError("degree bound exceeds " + std::to_string(kMaxDegree));
  }
  if (cfg.format != "text" && cfg.format != "json") throw ConfigError("format must be text or json");
}

RingSpec ring_spec(const SessionConfig& cfg) {
  const auto colon = cfg.ring.find(':');
  const std::string family = cfg.ring.substr(0, colon);
  const std::string params = colon == std::string::npos ? "" : cfg.ring.substr(colon + 1);
  RingSpec spec;
  if (family == "zmod") {
    spec = RingSpec::zmod(parse_params(params, 1, family)[0]);
  } else if (family == "gf") {
    const auto v = parse_params(params, 2, family);
    spec = RingSpec::galois(narrow(v[0], "gf prime"), narrow(v[1], "gf degree"));
  } else if (family == "matrix") {
    const auto v = parse_params(params, 2, family);
    spec = RingSpec::matrix(narrow(v[0], "matrix prime"), narrow(v[1], "matrix size"));
  } else if (family == "monomial") {
    const auto v = parse_params(params, 2, family);
    spec = RingSpec::monomial(narrow(v[0], "monomial generators"), narrow(v[1], "monomial prime"));
  } else if (family == "table") {
    if (!params.empty()) throw ConfigError("ring table takes its tables from add_table and mul_table");
    spec = RingSpec::table(cfg.add_table, cfg.mul_table, cfg.table_one);
  } else {
    throw ConfigError("unknown ring family '" + family + "' (expected zmod, gf, matrix, monomial or table)");
  }
  spec.element_cap = cfg.cap;

  const auto acolon = cfg.alpha.find(':');
  const std::string kind = cfg.alpha.substr(0, acolon);
  if (kind == "identity") spec = spec.with_endo(EndoKind::Identity);
  else if (kind == "frobenius") spec = spec.with_endo(EndoKind::Frobenius);
  else if (kind == "shift") spec = spec.with_endo(EndoKind::Shift);
  else if (kind == "table") {
    std::vector<std::uint32_t> table =
        acolon == std::string::npos ? cfg.alpha_table : parse_index_list(cfg.alpha.substr(acolon + 1), "alpha table");
    spec = spec.with_endo(EndoKind::Explicit, std::move(table));
  } else {
    throw ConfigError("unknown endomorphism '" + cfg.alpha + "' (expected identity, frobenius, shift or table:...)");
  }
  return spec;
}

RingContext build_ring(const SessionConfig& cfg) { return make_ring(ring_spec(cfg)); }

std::vector<Elem> parse_set(const RingContext& ctx, const std::string& text) {
  const std::string_view s = trim(text);
  const FiniteRing& ring = *ctx.ring;
  if (s == "all") {
    std::vector<Elem> out;
    for (std::uint32_t i = 0; i < ring.size(); ++i) out.push_back(Elem{i});
    return out;
  }
  static const std::pair<const char*, ClosureKind> closures[] = {
      {"ideal(", ClosureKind::Ideal},
      {"left-ideal(", ClosureKind::LeftIdeal},
      {"right-ideal(", ClosureKind::RightIdeal},
      {"alpha-ideal(", ClosureKind::LeftAlphaIdeal},
  };
  for (const auto& [prefix, kind] : closures) {
    const std::string_view p(prefix);
    if (s.starts_with(p) && s.ends_with(")")) {
      const auto gens = parse_set(ctx, std::string(s.substr(p.size(), s.size() - p.size() - 1)));
      const ElementSet closed = close(ring, ctx.alpha.get(), gens, kind).set;
      return {closed.elements().begin(), closed.elements().end()};
    }
  }
  if (s.empty()) throw InvalidArgument("empty element set");
  std::vector<Elem> out;
  for (const std::string& piece : split_top_level(s, ',')) out.push_back(parse_elem(ring, piece));
  return out;
}

std::vector<HPoly> parse_polys(const RingPtr& ring, const std::string& text) {
  std::vector<HPoly> out;
  for (const std::string& piece : split_top_level(text, ';')) out.push_back(parse_poly(ring, piece));
  return out;
}

}  // namespace hurwitz::cli
