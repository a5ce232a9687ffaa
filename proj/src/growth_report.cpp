#include "modgroup/growth_report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>

#include "modgroup/errors.hpp"

namespace modgroup {

namespace {

constexpr std::string_view kRowNames[] = {
    "antiperiodic", "inert",     "inert-primitive",      "inert-cumulative",
    "ambiguous",    "ambiguous-cumulative", "reciprocal-cumulative",
};

double round6(double x) { return std::round(x * 1e6) / 1e6; }

std::string optional_count(const std::optional<Count>& c) { return c ? c->str() : ""; }

}  // namespace

std::string_view to_string(RowType type) { return kRowNames[static_cast<int>(type)]; }

std::optional<RowType> parse_row_type(std::string_view name) {
  for (RowType type : kAllRowTypes) {
    if (to_string(type) == name) return type;
  }
  return std::nullopt;
}

std::uint64_t word_length(RowType type, std::uint64_t t) {
  switch (type) {
    case RowType::antiperiodic:
    case RowType::inert:
    case RowType::inert_primitive:
    case RowType::inert_cumulative:
      return 4 * t;
    default:
      return 2 * t;
  }
}

double ratio_to_sqrt_pow2(const Count& value, std::uint64_t exponent) {
  if (exponent % 2 == 0) return ratio_of(value, pow2(exponent / 2));
  return ratio_of(value, pow2(exponent / 2)) / std::sqrt(2.0);
}

namespace {

double asymptote_value(RowType type, std::uint64_t t) {
  const auto td = static_cast<double>(t);
  switch (type) {
    case RowType::antiperiodic:
      return std::ldexp(1.0, static_cast<int>(t));
    case RowType::inert:
    case RowType::inert_primitive:
      return std::ldexp(1.0, static_cast<int>(t - 1)) / td;
    case RowType::inert_cumulative:
      return std::ldexp(1.0, static_cast<int>(t)) / (td + 1.0);
    case RowType::ambiguous:
    case RowType::ambiguous_cumulative:
      return std::pow(2.0, td / 2.0);
    case RowType::reciprocal_cumulative:
      return std::ldexp(1.0, static_cast<int>(t / 2));
  }
  return 0.0;
}

double ratio_for(RowType type, std::uint64_t t, const Count& value) {
  switch (type) {
    case RowType::antiperiodic:
      return ratio_of(value, pow2(t));
    case RowType::inert:
    case RowType::inert_primitive:
      return ratio_of(value * t, pow2(t - 1));
    case RowType::inert_cumulative:
      return ratio_of(value * (t + 1), pow2(t));
    case RowType::ambiguous:
    case RowType::ambiguous_cumulative:
      return ratio_to_sqrt_pow2(value, t);
    case RowType::reciprocal_cumulative:
      return ratio_of(value, pow2(t / 2));
  }
  return 0.0;
}

}  // namespace

void refresh_ratio(GrowthRow& row) {
  if (row.formula) {
    row.ratio = ratio_for(row.type, row.t, *row.formula);
  } else if (row.oracle) {
    row.ratio = ratio_for(row.type, row.t, *row.oracle);
  } else {
    row.ratio.reset();
  }
}

std::vector<GrowthRow> asymptotic_report(std::uint64_t t_first, std::uint64_t t_last,
                                         std::span<const RowType> types) {
  if (t_first == 0 || t_last < t_first) throw DomainError("report range must satisfy 1 <= first <= last");
  auto wanted = [&](RowType type) { return std::find(types.begin(), types.end(), type) != types.end(); };

  std::vector<GrowthRow> rows;
  Count inert_total = 0;
  Count inert_np_total = 0;
  Count ambiguous_total = 0;
  for (std::uint64_t t = 1; t <= t_last; ++t) {
    const Count inert = count_inert(t);
    const NonprimitiveCount np = count_inert_nonprimitive(t);
    const Count ambiguous = count_ambiguous(t);
    inert_total += inert;
    inert_np_total += np.count;
    ambiguous_total += ambiguous;
    if (t < t_first) continue;

    for (RowType type : kAllRowTypes) {
      if (!wanted(type)) continue;
      GrowthRow row;
      row.t = t;
      row.type = type;
      row.word_length = word_length(type, t);
      row.asymptote = asymptote_value(type, t);
      switch (type) {
        case RowType::antiperiodic:
          row.formula = count_T_total(t);
          row.bounds_ok = antiperiodic_bounds_hold(t);
          break;
        case RowType::inert:
          row.formula = inert;
          row.bounds_ok = inert_sandwich_holds(t);
          break;
        case RowType::inert_primitive:
          row.formula = count_inert_primitive(t);
          row.bounds_ok = np.within_bound;
          break;
        case RowType::inert_cumulative:
          row.formula = inert_total;
          row.bounds_ok = le_scaled_root_pow2(inert_np_total, Count(t) * t, 4, t, 2);
          break;
        case RowType::ambiguous:
          row.formula = ambiguous;
          row.bounds_ok = ambiguous_nonprimitive_bound_holds(t);
          break;
        case RowType::ambiguous_cumulative:
          row.formula = ambiguous_total;
          row.bounds_ok = ambiguous_cumulative_sandwich_holds(t);
          break;
        case RowType::reciprocal_cumulative:
          break;
      }
      refresh_ratio(row);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string format_ratio(double ratio) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", ratio);
  return buf;
}

std::string format_asymptote(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", value);
  return buf;
}

void write_csv(std::ostream& out, std::span<const GrowthRow> rows) {
  out << kGrowthCsvHeader << '\n';
  for (const GrowthRow& r : rows) {
    out << r.t << ',' << r.word_length << ',' << to_string(r.type) << ','
        << optional_count(r.formula) << ',' << optional_count(r.oracle) << ','
        << format_asymptote(r.asymptote) << ',' << (r.ratio ? format_ratio(*r.ratio) : "")
        << ',' << (r.bounds_ok ? (*r.bounds_ok ? "true" : "false") : "") << '\n';
  }
}

void write_text(std::ostream& out, std::span<const GrowthRow> rows) {
  std::size_t formula_width = 7;
  std::size_t oracle_width = 6;
  for (const GrowthRow& r : rows) {
    formula_width = std::max(formula_width, optional_count(r.formula).size());
    oracle_width = std::max(oracle_width, optional_count(r.oracle).size());
  }
  auto line = [&](std::string_view t, std::string_view len, std::string_view type,
                  std::string_view formula, std::string_view oracle, std::string_view asym,
                  std::string_view ratio, std::string_view bounds) {
    out << std::setw(5) << t << "  " << std::setw(6) << len << "  " << std::left << std::setw(22)
        << type << std::right << "  " << std::setw(static_cast<int>(formula_width)) << formula
        << "  " << std::setw(static_cast<int>(oracle_width)) << oracle << "  " << std::setw(13)
        << asym << "  " << std::setw(10) << ratio << "  " << bounds << '\n';
  };
  line("t", "length", "type", "formula", "oracle", "asymptote", "ratio", "bounds");
  for (const GrowthRow& r : rows) {
    const std::string t = std::to_string(r.t);
    const std::string len = std::to_string(r.word_length);
    const std::string ratio = r.ratio ? format_ratio(*r.ratio) : "-";
    line(t, len, to_string(r.type), r.formula ? r.formula->str() : "-",
         r.oracle ? r.oracle->str() : "-", format_asymptote(r.asymptote), ratio,
         r.bounds_ok ? (*r.bounds_ok ? "ok" : "VIOLATED") : "-");
  }
}

nlohmann::ordered_json to_json(std::span<const GrowthRow> rows) {
  auto array = nlohmann::ordered_json::array();
  for (const GrowthRow& r : rows) {
    nlohmann::ordered_json obj;
    obj["t"] = r.t;
    obj["word_length"] = r.word_length;
    obj["type"] = std::string(to_string(r.type));
    obj["formula"] = r.formula ? nlohmann::ordered_json(r.formula->str()) : nullptr;
    obj["oracle"] = r.oracle ? nlohmann::ordered_json(r.oracle->str()) : nullptr;
    obj["asymptote"] = r.asymptote;
    obj["ratio"] = r.ratio ? nlohmann::ordered_json(round6(*r.ratio)) : nullptr;
    obj["bounds_ok"] = r.bounds_ok ? nlohmann::ordered_json(*r.bounds_ok) : nullptr;
    array.push_back(std::move(obj));
  }
  return array;
}

std::vector<GrowthRow> growth_rows_from_json(const nlohmann::json& array) {
  std::vector<GrowthRow> rows;
  for (const auto& obj : array) {
    GrowthRow r;
    r.t = obj.at("t").get<std::uint64_t>();
    r.word_length = obj.at("word_length").get<std::uint64_t>();
    const auto type = parse_row_type(obj.at("type").get<std::string>());
    if (!type) throw DomainError("unknown row type " + obj.at("type").get<std::string>());
    r.type = *type;
    if (!obj.at("formula").is_null()) r.formula = Count(obj.at("formula").get<std::string>());
    if (!obj.at("oracle").is_null()) r.oracle = Count(obj.at("oracle").get<std::string>());
    r.asymptote = obj.at("asymptote").is_null() ? HUGE_VAL : obj.at("asymptote").get<double>();
    if (!obj.at("ratio").is_null()) r.ratio = obj.at("ratio").get<double>();
    if (!obj.at("bounds_ok").is_null()) r.bounds_ok = obj.at("bounds_ok").get<bool>();
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace modgroup
