#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "fibspec/cli.hpp"

namespace fibspec::cli {

namespace {

using Json = nlohmann::ordered_json;

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

// Arrays of scalars (interval endpoints, eigenvalue lists) stay on one line.
bool is_flat(const Json& v) {
  if (!v.is_array()) return is_scalar(v);
  for (const auto& e : v) {
    if (!is_scalar(e) && !(e.is_array() && std::all_of(e.begin(), e.end(), is_scalar))) return false;
  }
  return true;
}

void write_number(const Json& v, std::string& out) {
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
      out += "null";
      return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    out += buf;
    // Keep floats recognisable as floats after a round trip.
    if (std::string_view(buf).find_first_of(".eEn") == std::string_view::npos) out += ".0";
    return;
  }
  out += v.dump();
}

void write(const Json& v, std::string& out, int indent, bool inline_mode) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner;
      out += Json(it.key()).dump();
      out += ": ";
      write(it.value(), out, indent + 1, false);
    }
    out += "\n" + pad + "}";
  } else if (v.is_array()) {
    if (v.empty()) {
      out += "[]";
      return;
    }
    if (inline_mode || is_flat(v)) {
      out += "[";
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += ", ";
        first = false;
        write(e, out, indent, true);
      }
      out += "]";
      return;
    }
    out += "[\n";
    bool first = true;
    for (const auto& e : v) {
      if (!first) out += ",\n";
      first = false;
      out += inner;
      write(e, out, indent + 1, false);
    }
    out += "\n" + pad + "]";
  } else if (v.is_number()) {
    write_number(v, out);
  } else {
    out += v.dump();
  }
}

}  // namespace

std::string to_json_text(const nlohmann::ordered_json& value) {
  std::string out;
  write(value, out, 0, false);
  out += "\n";
  return out;
}

}  // namespace fibspec::cli
