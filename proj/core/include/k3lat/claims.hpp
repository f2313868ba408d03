#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace k3lat {

enum class ClaimStatus { pass, fail, skip };
std::string to_string(ClaimStatus s);

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::skip;
  // Named values, compared pairwise by key; both sides are kept on failure.
  std::vector<std::pair<std::string, std::string>> computed;
  std::vector<std::pair<std::string, std::string>> expected;
  std::string note;
  std::chrono::microseconds elapsed{0};
};

struct Claim {
  std::string id;
  std::vector<std::string> tags;
  std::string location;  // where the statement comes from, with a short quote
  std::function<ClaimResult()> run;
};

const std::vector<Claim>& registry();
const Claim* find_claim(const std::string& id);

// Unknown ids throw Error.
ClaimResult run_claim(const std::string& id);
std::vector<ClaimResult> run_all(const std::optional<std::string>& tag = std::nullopt);

bool all_passed(const std::vector<ClaimResult>& r);
std::string human_report(const std::vector<ClaimResult>& r, bool with_timing = true);
// Sorted by id, no timing: identical input gives identical bytes.
std::string json_report(const std::vector<ClaimResult>& r);

}  // namespace k3lat
