#pragma once

// Growth table rows: formula counts against their asymptotes, plus optional
// oracle columns and the finite-t bound flags.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "modgroup/counting.hpp"

namespace modgroup {

enum class RowType {
  antiperiodic,           // |T| at word length 4t, asymptote 2^t
  inert,                  // word length 4t, asymptote 2^(t-1)/t
  inert_primitive,        // word length 4t, asymptote 2^(t-1)/t
  inert_cumulative,       // word length <= 4t, asymptote 2^t/(t+1)
  ambiguous,              // word length 2t, reference 2^(t/2)
  ambiguous_cumulative,   // word length <= 2t, reference 2^(t/2)
  reciprocal_cumulative,  // word length <= 2t, oracle only, reference 2^floor(t/2)
};

inline constexpr RowType kAllRowTypes[] = {
    RowType::antiperiodic,     RowType::inert,
    RowType::inert_primitive,  RowType::inert_cumulative,
    RowType::ambiguous,        RowType::ambiguous_cumulative,
    RowType::reciprocal_cumulative,
};

std::string_view to_string(RowType type);
std::optional<RowType> parse_row_type(std::string_view name);

/// Word length of the row's classes at index t.
std::uint64_t word_length(RowType type, std::uint64_t t);

struct GrowthRow {
  std::uint64_t t = 0;
  std::uint64_t word_length = 0;
  RowType type = RowType::inert;
  std::optional<Count> formula;
  std::optional<Count> oracle;
  double asymptote = 0.0;
  std::optional<double> ratio;  // formula (or oracle, if no formula) / asymptote
  std::optional<bool> bounds_ok;

  friend bool operator==(const GrowthRow&, const GrowthRow&) = default;
};

/// Formula columns for every t in [t_first, t_last] and each requested type,
/// ordered by t and then by type.
std::vector<GrowthRow> asymptotic_report(std::uint64_t t_first, std::uint64_t t_last,
                                         std::span<const RowType> types);

/// value / 2^(exponent/2).
double ratio_to_sqrt_pow2(const Count& value, std::uint64_t exponent);

/// Recomputes `ratio` from the oracle column for rows without a formula.
void refresh_ratio(GrowthRow& row);

inline constexpr std::string_view kGrowthCsvHeader =
    "t,word_length,type,formula,oracle,asymptote,ratio,bounds_ok";

void write_csv(std::ostream& out, std::span<const GrowthRow> rows);
void write_text(std::ostream& out, std::span<const GrowthRow> rows);
nlohmann::ordered_json to_json(std::span<const GrowthRow> rows);

/// Inverse of to_json. Throws nlohmann::json::exception on schema mismatch.
std::vector<GrowthRow> growth_rows_from_json(const nlohmann::json& array);

std::string format_ratio(double ratio);
std::string format_asymptote(double value);

}  // namespace modgroup
