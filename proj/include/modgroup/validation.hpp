#pragma once

// Formula-vs-oracle harness. Asserted checks decide the exit status;
// informational rows are reported but never fail a run.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "modgroup/oracle.hpp"

namespace modgroup {

struct AssertedCheck {
  std::string name;
  std::string formula;
  std::string oracle;
  bool ok = false;
};

struct InformationalRow {
  std::string name;
  std::vector<std::pair<std::string, std::string>> values;  // ordered
};

struct ValidationEntry {
  std::uint64_t t = 0;
  std::vector<AssertedCheck> asserted;
  std::vector<InformationalRow> informational;
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;

  bool all_ok() const;
  std::vector<const AssertedCheck*> failures() const;
};

/// Runs every check for t = 1..t_max. Inert checks enumerate length 2t,
/// ambiguous and reciprocal checks length t; the longest length must fit the
/// oracle ceiling or ResourceLimit is thrown before any work starts.
ValidationReport cross_validate(std::uint64_t t_max, const OracleOptions& opts);

nlohmann::ordered_json to_json(const ValidationReport& report);
void write_text(std::ostream& out, const ValidationReport& report);
void write_csv(std::ostream& out, const ValidationReport& report);

}  // namespace modgroup
