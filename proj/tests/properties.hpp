#pragma once

// Property suites: randomized checks draw from one fixed-seed generator per
// property, exhaustive checks walk every instance up to the stated size.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace modgroup::props {

// Also recorded in tests/property_manifest.json.
inline constexpr std::uint64_t kSeed = 20261015;
inline constexpr std::size_t kRandomCases = 10000;

struct PropertyResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  /// `describe` is only called for the first failure.
  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = describe();
  }
};

struct Property {
  std::string module;
  std::string name;
  std::function<PropertyResult()> run;
};

const std::vector<Property>& all_properties();

}  // namespace modgroup::props
