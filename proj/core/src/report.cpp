#include "hyperjac/report.hpp"

#include <chrono>
#include <sstream>

namespace hyperjac {

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

std::string to_json_line(const VerificationReport& r) {
  std::string out = "{\"schema\":\"1\",\"command\":";
  append_escaped(out, r.command);
  out += ",\"genus\":" + std::to_string(r.genus);
  out += ",\"level\":";
  out += r.level ? std::to_string(*r.level) : "null";
  out += ",\"expected\":";
  append_escaped(out, r.expected);
  out += ",\"computed\":";
  append_escaped(out, r.computed);
  out += ",\"passed\":";
  out += r.passed ? "true" : "false";
  out += ",\"aborted\":";
  out += r.aborted ? "true" : "false";
  out += ",\"seed\":";
  out += r.seed ? std::to_string(*r.seed) : "null";
  out += ",\"elapsed_ms\":" + std::to_string(r.elapsed_ms);
  out += ",\"details\":[";
  for (std::size_t i = 0; i < r.details.size(); ++i) {
    if (i) out += ',';
    append_escaped(out, r.details[i]);
  }
  out += "]}";
  return out;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.aborted ? "ABORT" : (r.passed ? "pass " : "FAIL "));
  os << " " << r.command << " g=" << r.genus;
  if (r.level) os << " n=" << *r.level;
  os << ": expected " << r.expected << ", computed " << r.computed;
  if (r.seed) os << " (seed " << *r.seed << ")";
  os << " [" << r.elapsed_ms << " ms]";
  for (const auto& d : r.details) os << "\n    " << d;
  return os.str();
}

Stopwatch::Stopwatch()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

long long Stopwatch::elapsed_ms() const {
  const long long now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                            std::chrono::steady_clock::now().time_since_epoch())
                            .count();
  return (now - start_ns_) / 1000000;
}

}  // namespace hyperjac
