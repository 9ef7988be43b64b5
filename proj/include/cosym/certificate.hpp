#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cosym {

enum class Verdict {
  Verified,
  VerifiedExact,
  VerifiedByIsolation,
  VerifiedBySubdivision,
  Refuted,
  Undecided,
};

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::VerifiedExact: return "verified-exact";
    case Verdict::VerifiedByIsolation: return "verified-by-isolation";
    case Verdict::VerifiedBySubdivision: return "verified-by-subdivision";
    case Verdict::Refuted: return "refuted";
    case Verdict::Undecided: return "undecided-at-resolution";
  }
  return "?";
}

inline bool is_verified(Verdict v) {
  return v == Verdict::Verified || v == Verdict::VerifiedExact ||
         v == Verdict::VerifiedByIsolation || v == Verdict::VerifiedBySubdivision;
}

/// Machine-checkable verdict record emitted by every verifier.
struct Certificate {
  Verdict verdict = Verdict::Undecided;
  std::string method;            // how the verdict was reached
  nlohmann::json details;        // witnesses, traces, polynomials

  bool ok() const { return is_verified(verdict); }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["verdict"] = verdict_name(verdict);
    j["method"] = method;
    if (!details.is_null()) j["details"] = details;
    return j;
  }

  static Certificate verified(std::string method, nlohmann::json details = {}) {
    return {Verdict::Verified, std::move(method), std::move(details)};
  }
  static Certificate refuted(std::string method, nlohmann::json details = {}) {
    return {Verdict::Refuted, std::move(method), std::move(details)};
  }
};

}  // namespace cosym
