#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperjac {

/// Outcome of one verification check.  `expected` and `computed` are strings
/// so that group orders beyond 64 bits and structural descriptors share one
/// schema.
struct VerificationReport {
  std::string command;
  int genus = 0;
  std::optional<int> level;
  std::string expected;
  std::string computed;
  bool passed = false;
  bool aborted = false;
  std::optional<std::uint64_t> seed;
  long long elapsed_ms = 0;
  std::vector<std::string> details;
};

/// One line-delimited JSON object, schema version 1.  Key order is fixed so
/// equal reports serialize to equal bytes.
std::string to_json_line(const VerificationReport& r);

/// Human-readable single-line summary (details are indented below it).
std::string to_text(const VerificationReport& r);

/// Millisecond timer helper.
class Stopwatch {
 public:
  Stopwatch();
  long long elapsed_ms() const;

 private:
  long long start_ns_;
};

}  // namespace hyperjac
