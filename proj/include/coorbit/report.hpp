#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coorbit {

/// One verification record: what was checked, on which inputs, the measured
/// quantity against its tolerance, and the verdict. `statement` names the
/// property the check embodies ("plumbing" for infrastructure records).
struct CheckRecord {
  std::string id;
  std::string statement;
  std::string frame;
  std::string weight;
  std::string inputs_digest;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<std::string> warnings;
};

struct ExperimentReport {
  int schema_version = 1;
  std::string command;
  std::uint64_t seed = 0;
  std::string rng_algorithm;
  std::string timestamp;
  double elapsed_seconds = 0.0;
  std::vector<CheckRecord> records;

  bool all_pass() const;
  std::size_t failure_count() const;
};

std::string current_timestamp_utc();

/// FNV-1a digest of arbitrary bytes, hex-encoded; used to fingerprint check
/// inputs in reports.
std::string digest_hex(const void* data, std::size_t size);
std::string digest_hex(const std::string& text);
std::string digest_hex(const std::vector<double>& values);

}  // namespace coorbit
