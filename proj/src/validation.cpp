#include "modgroup/validation.hpp"

#include <iomanip>
#include <ostream>

#include "modgroup/counting.hpp"
#include "modgroup/errors.hpp"

namespace modgroup {

namespace {

void assert_equal(ValidationEntry& e, std::string name, const Count& formula, const Count& oracle) {
  e.asserted.push_back({std::move(name), formula.str(), oracle.str(), formula == oracle});
}

// A violation counter is checked against an expected count of zero.
void assert_zero(ValidationEntry& e, std::string name, std::uint64_t violations) {
  e.asserted.push_back({std::move(name), "0", std::to_string(violations), violations == 0});
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

bool ValidationReport::all_ok() const { return failures().empty(); }

std::vector<const AssertedCheck*> ValidationReport::failures() const {
  std::vector<const AssertedCheck*> out;
  for (const auto& e : entries) {
    for (const auto& c : e.asserted) {
      if (!c.ok) out.push_back(&c);
    }
  }
  return out;
}

ValidationReport cross_validate(std::uint64_t t_max, const OracleOptions& opts) {
  if (t_max == 0) throw DomainError("t_max must be positive");
  if (t_max > 31) throw ResourceLimit(2 * t_max, std::min(opts.max_length, 63U));
  check_ceiling(static_cast<unsigned>(2 * t_max), opts);

  ValidationReport report;
  for (std::uint64_t t = 1; t <= t_max; ++t) {
    ValidationEntry e;
    e.t = t;
    const auto n = static_cast<unsigned>(t);
    const AntiperiodAudit audit = antiperiod_audit(t, opts);
    const OracleCounts inert_side = oracle_counts(2 * n, opts);
    const OracleCounts same = oracle_counts(n, opts);

    assert_equal(e, "antiperiodic_total", count_T_total(t), Count(audit.union_size));
    for (std::size_t j = 0; j < audit.divisors.size(); ++j) {
      const std::uint64_t m = audit.divisors[j];
      const std::string tag = "[m=" + std::to_string(m) + "]";
      assert_equal(e, "antiperiod_member" + tag, count_T_m(t, m), Count(audit.member_counts[j]));
      assert_equal(e, "antiperiod_exact" + tag, exact_antiperiod_count(t, m),
                   Count(audit.exact_counts[j]));
    }
    assert_zero(e, "disjoint_valuations", audit.disjointness_violations);
    assert_zero(e, "nesting", audit.nesting_violations);
    assert_zero(e, "cross_prime_alternating", audit.cross_prime_violations);
    assert_zero(e, "orbit_size_2m", audit.orbit_size_violations);

    // Under hyperbolic_only the oracle drops the two constant classes, which
    // are never inert, so the inert checks are unaffected.
    assert_equal(e, "inert", count_inert(t), inert_side.inert);
    assert_equal(e, "inert_classes_by_orbit", count_inert(t), Count(audit.inert_classes));
    assert_equal(e, "inert_primitive", count_inert_primitive(t), inert_side.inert_primitive);
    assert_equal(e, "inert_nonprimitive", count_inert_nonprimitive(t).count,
                 inert_side.inert_nonprimitive);

    const Count formula = count_ambiguous(t);
    const bool asserted_ambiguous = t % 2 == 1 && !opts.hyperbolic_only;
    if (asserted_ambiguous) {
      assert_equal(e, std::string("ambiguous[") + std::string(to_string(opts.ambiguous_criterion)) + "]",
                   formula, same.ambiguous(opts.ambiguous_criterion));
    } else {
      e.informational.push_back({"ambiguous",
                                 {{"formula", formula.str()},
                                  {"palindromic", same.ambiguous_palindromic.str()},
                                  {"reversal_fixed", same.ambiguous_reversal_fixed.str()}}});
    }
    e.informational.push_back({"classes",
                               {{"length", std::to_string(n)},
                                {"total", same.classes_total.str()},
                                {"parabolic", same.parabolic_classes.str()},
                                {"reciprocal", same.reciprocal.str()}}});
    report.entries.push_back(std::move(e));
  }
  return report;
}

nlohmann::ordered_json to_json(const ValidationReport& report) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json obj;
    obj["t"] = e.t;
    auto asserted = nlohmann::ordered_json::array();
    for (const auto& c : e.asserted) {
      asserted.push_back({{"name", c.name}, {"formula", c.formula}, {"oracle", c.oracle}, {"ok", c.ok}});
    }
    obj["asserted"] = std::move(asserted);
    auto informational = nlohmann::ordered_json::array();
    for (const auto& row : e.informational) {
      nlohmann::ordered_json values;
      for (const auto& [k, v] : row.values) values[k] = v;
      informational.push_back({{"name", row.name}, {"values", std::move(values)}});
    }
    obj["informational"] = std::move(informational);
    array.push_back(std::move(obj));
  }
  return array;
}

void write_text(std::ostream& out, const ValidationReport& report) {
  std::size_t passed = 0;
  std::size_t total = 0;
  for (const auto& e : report.entries) {
    for (const auto& c : e.asserted) {
      ++total;
      if (c.ok) {
        ++passed;
        continue;
      }
      out << "FAIL t=" << e.t << ' ' << c.name << ": formula " << c.formula << ", oracle "
          << c.oracle << '\n';
    }
  }
  out << "asserted checks: " << passed << '/' << total << " passed\n\n";

  out << "inert (sequence length 2t)\n";
  out << std::setw(4) << "t" << std::setw(14) << "T_total" << std::setw(12) << "inert"
      << std::setw(12) << "primitive" << std::setw(8) << "ok" << '\n';
  for (const auto& e : report.entries) {
    const AssertedCheck* total_check = nullptr;
    const AssertedCheck* inert = nullptr;
    const AssertedCheck* primitive = nullptr;
    bool ok = true;
    for (const auto& c : e.asserted) {
      ok = ok && c.ok;
      if (c.name == "antiperiodic_total") total_check = &c;
      if (c.name == "inert") inert = &c;
      if (c.name == "inert_primitive") primitive = &c;
    }
    out << std::setw(4) << e.t << std::setw(14) << total_check->oracle << std::setw(12)
        << inert->oracle << std::setw(12) << primitive->oracle << std::setw(8)
        << (ok ? "yes" : "NO") << '\n';
  }

  out << "\nambiguous (sequence length t)\n";
  out << std::setw(4) << "t" << std::setw(12) << "formula" << std::setw(14) << "palindromic"
      << std::setw(16) << "reversal-fixed" << "  status\n";
  for (const auto& e : report.entries) {
    for (const auto& c : e.asserted) {
      if (c.name.rfind("ambiguous", 0) != 0) continue;
      out << std::setw(4) << e.t << std::setw(12) << c.formula << std::setw(14) << c.oracle
          << std::setw(16) << "" << "  " << (c.ok ? "asserted, equal" : "asserted, DIFFERENT")
          << '\n';
    }
    for (const auto& row : e.informational) {
      if (row.name != "ambiguous") continue;
      out << std::setw(4) << e.t << std::setw(12) << row.values[0].second << std::setw(14)
          << row.values[1].second << std::setw(16) << row.values[2].second
          << "  not asserted\n";
    }
  }
}

void write_csv(std::ostream& out, const ValidationReport& report) {
  out << "t,kind,name,formula,oracle,ok\n";
  for (const auto& e : report.entries) {
    for (const auto& c : e.asserted) {
      out << e.t << ",asserted," << csv_escape(c.name) << ',' << c.formula << ',' << c.oracle
          << ',' << (c.ok ? "true" : "false") << '\n';
    }
    for (const auto& row : e.informational) {
      for (const auto& [k, v] : row.values) {
        out << e.t << ",informational," << csv_escape(row.name + '.' + k) << ",," << v << ",\n";
      }
    }
  }
}

}  // namespace modgroup
