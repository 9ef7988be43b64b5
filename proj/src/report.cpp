#include "cosym/report.hpp"

#include <chrono>
#include <cstdio>

#include "cosym/certificate.hpp"

namespace cosym {

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kConventionsVersion = 1;

/// A verdict string counts as verified when it names a Verified variant.
bool verdict_ok(const std::string& v) {
  return v.rfind("verified", 0) == 0;
}

void scan_verdicts(const nlohmann::json& j, int& total, int& ok) {
  if (j.is_object()) {
    for (const auto& [key, val] : j.items()) {
      if (key == "verdict" && val.is_string()) {
        ++total;
        if (verdict_ok(val.get<std::string>())) ++ok;
      } else if (key != "details") {
        scan_verdicts(val, total, ok);
      }
    }
  } else if (j.is_array()) {
    for (const auto& val : j) scan_verdicts(val, total, ok);
  }
}

std::string now_iso8601() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[40];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec);
  return buf;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["conventions_version"] = kConventionsVersion;
  j["command"] = command;
  j["input_digest"] = input_digest;
  j["all_verified"] = all_verified;
  j["results"] = results;
  j["timestamp"] = now_iso8601();  // excluded from the digest
  return j;
}

Report make_report(const std::string& command, const std::string& input_text,
                   nlohmann::json results) {
  Report r;
  r.command = command;
  r.input_digest = fnv1a64_hex(input_text);
  r.results = std::move(results);
  int total = 0, ok = 0;
  scan_verdicts(r.results, total, ok);
  r.all_verified = total > 0 && ok == total;
  return r;
}

}  // namespace cosym
