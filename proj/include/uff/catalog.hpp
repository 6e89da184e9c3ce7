#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace uff::catalog {

struct ClaimResult {
  std::string id;
  /// The mathematical statement the claim checks.
  std::string anchor;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct FixtureReport {
  std::string id;
  std::string title;
  /// Presentation document, or a scenario description for D+M and algebra fixtures.
  nlohmann::json presentation;
  std::vector<ClaimResult> claims;

  bool passed() const;
};

/// Sorted, unique fixture ids.
std::vector<std::string> list_fixtures();

/// Throws std::out_of_range for an unknown id.
FixtureReport run_fixture(const std::string& id);

nlohmann::json to_json(const FixtureReport& r);
std::string to_text(const FixtureReport& r);

} // namespace uff::catalog
