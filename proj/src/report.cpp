#include "coorbit/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

namespace coorbit {

bool ExperimentReport::all_pass() const {
  for (const auto& record : records)
    if (!record.pass) return false;
  return true;
}

std::size_t ExperimentReport::failure_count() const {
  std::size_t count = 0;
  for (const auto& record : records)
    if (!record.pass) ++count;
  return count;
}

std::string current_timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02dT%02d:%02d:%02dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec);
  return buffer;
}

std::string digest_hex(const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < size; ++i) {
    hash ^= bytes[i];
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

std::string digest_hex(const std::string& text) {
  return digest_hex(text.data(), text.size());
}

std::string digest_hex(const std::vector<double>& values) {
  return digest_hex(values.data(), values.size() * sizeof(double));
}

}  // namespace coorbit
