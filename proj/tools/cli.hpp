#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace hurwitz::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Exit codes: 0 computed verdict, 1 configuration or internal error,
/// 2 precondition violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitPrecondition = 2;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Indented key: value rendering of a report, in insertion order.
std::string render_text(const Json& report);

}  // namespace hurwitz::cli
