#pragma once

// Deterministic text output for the command-line tool: numbers are printed
// with 12 significant digits through one code path, objects keep insertion
// order, and nothing environment-dependent (locale, time, addresses) leaks
// into the bytes.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbtool {

inline std::string fmt(double x) {
  if (!std::isfinite(x)) {
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// JSON number token; non-finite values map to null.
inline std::string jnum(double x) { return std::isfinite(x) ? fmt(x) : "null"; }

inline std::string jstr(const std::string& s) {
  std::string o = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': o += "\\\""; break;
      case '\\': o += "\\\\"; break;
      case '\n': o += "\\n"; break;
      case '\r': o += "\\r"; break;
      case '\t': o += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char b[8];
          std::snprintf(b, sizeof b, "\\u%04x", static_cast<unsigned>(ch));
          o += b;
        } else {
          o += ch;
        }
    }
  }
  o += '"';
  return o;
}

/// Insertion-ordered JSON object builder; values arrive as raw tokens.
class JsonObj {
 public:
  JsonObj& raw(const std::string& key, const std::string& token) {
    if (!first_) body_ += ',';
    first_ = false;
    body_ += jstr(key);
    body_ += ':';
    body_ += token;
    return *this;
  }
  JsonObj& num(const std::string& key, double x) { return raw(key, jnum(x)); }
  JsonObj& str(const std::string& key, const std::string& s) { return raw(key, jstr(s)); }
  JsonObj& boolean(const std::string& key, bool b) { return raw(key, b ? "true" : "false"); }
  std::string text() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
  bool first_ = true;
};

inline std::string jarray(const std::vector<std::string>& tokens) {
  std::string o = "[";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) o += ',';
    o += tokens[i];
  }
  o += ']';
  return o;
}

inline std::string jnum_array(const std::vector<double>& xs) {
  std::vector<std::string> t;
  t.reserve(xs.size());
  for (double x : xs) t.push_back(jnum(x));
  return jarray(t);
}

/// Quote a CSV cell only when it needs it (comma, quote, newline).
inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string o = "\"";
  for (char ch : s) {
    if (ch == '"') o += "\"\"";
    else o += ch;
  }
  o += '"';
  return o;
}

inline std::string csv_line(const std::vector<std::string>& cells) {
  std::string o;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) o += ',';
    o += csv_cell(cells[i]);
  }
  o += '\n';
  return o;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  f.flush();
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace mbtool
