#include "cli.hpp"

namespace hurwitz::cli {

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

// Arrays print inline only when every item is a short scalar without ", ".
bool is_flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& x : v) {
    if (x.is_array() || x.is_object()) return false;
    if (x.is_string()) {
      const auto& s = x.get_ref<const std::string&>();
      if (s.size() > 60 || s.find(", ") != std::string::npos) return false;
    }
  }
  return true;
}

void render(const Json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (is_flat(value) && value.is_array()) {
        out += pad + key + ": [";
        for (std::size_t i = 0; i < value.size(); ++i) out += (i ? ", " : "") + scalar(value[i]);
        out += "]\n";
      } else if (is_flat(value)) {
        out += pad + key + ": " + scalar(value) + "\n";
      } else if (value.empty()) {
        out += pad + key + ": " + (value.is_array() ? "[]" : "{}") + "\n";
      } else {
        out += pad + key + ":\n";
        render(value, indent + 2, out);
      }
    }
    return;
  }
  if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object() || (x.is_array() && !is_flat(x))) {
        out += pad + "-\n";
        render(x, indent + 2, out);
      } else if (x.is_array()) {
        std::string line;
        for (std::size_t i = 0; i < x.size(); ++i) line += (i ? ", " : "") + scalar(x[i]);
        out += pad + "- [" + line + "]\n";
      } else {
        out += pad + "- " + scalar(x) + "\n";
      }
    }
    return;
  }
  out += pad + scalar(v) + "\n";
}

}  // namespace

std::string render_text(const Json& report) {
  std::string out;
  render(report, 0, out);
  return out;
}

}  // namespace hurwitz::cli
