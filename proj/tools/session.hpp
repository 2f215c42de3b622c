#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/endomorphism.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/poly.hpp"

namespace hurwitz::cli {

/// Everything the global flags and config file can set.
struct SessionConfig {
  std::string ring = "zmod:2";
  std::string alpha = "identity";
  std::vector<std::uint32_t> alpha_table;
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;
  std::uint32_t table_one = 1;
  std::uint64_t cap = kDefaultElementCap;
  std::optional<Degree> degree_bound;
  std::size_t gen_size = 2;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string format = "text";
  std::string out;
  bool timing = false;
};

/// Raised for unusable configuration; maps to exit code 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// key = value lines; `#` starts a comment. Unknown keys are rejected.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Applies one config key to cfg.
void apply_config_key(SessionConfig& cfg, const std::string& key, const std::string& value);

/// Rejects non-positive caps and unknown formats.
void validate(const SessionConfig& cfg);

std::vector<std::uint32_t> parse_index_list(const std::string& text, const std::string& what);

RingSpec ring_spec(const SessionConfig& cfg);
RingContext build_ring(const SessionConfig& cfg);

/// Set expressions: `all`, a comma list of element literals, or
/// ideal(...), left-ideal(...), right-ideal(...), alpha-ideal(...) around such a list.
std::vector<Elem> parse_set(const RingContext& ctx, const std::string& text);

/// Polynomial literals separated by `;`.
std::vector<HPoly> parse_polys(const RingPtr& ring, const std::string& text);

}  // namespace hurwitz::cli
