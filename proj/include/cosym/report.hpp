#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace cosym {

/// FNV-1a 64-bit digest of the canonical input text.
std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

/// Certificate report envelope. `results` carries the per-check verdict
/// objects; `all_verified` is recomputed from every "verdict" field found in
/// it. The timestamp is informational and excluded from the digest, which
/// covers only the canonical input text.
struct Report {
  std::string command;
  std::string input_digest;
  nlohmann::json results;
  bool all_verified = false;

  nlohmann::json to_json() const;
};

Report make_report(const std::string& command, const std::string& input_text,
                   nlohmann::json results);

}  // namespace cosym
