// Acceptance gate. With no arguments every criterion runs; otherwise only
// the listed ids. One PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "modgroup/counting.hpp"
#include "modgroup/oracle.hpp"
#include "properties.hpp"

namespace {

using namespace modgroup;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("mismatch: " + what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<void(Outcome&)> run;
};

std::string ts(std::uint64_t t) { return "t=" + std::to_string(t); }

void worked_example(Outcome& o) {
  o.expect(count_T_total(3) == 8, "count_T_total(3) = 8");
  o.expect(count_inert(3) == 2, "count_inert(3) = 2");
  const OracleOptions opts;
  o.expect(antiperiod_audit(3, opts).union_size == 8, "oracle |T| at length 6 = 8");
  o.expect(oracle_counts(6, opts).inert == 2, "oracle inert classes at length 6 = 2");
  std::set<std::string> inert_reps;
  for (const ClassRep& rep : enumerate_class_reps(6, opts)) {
    if (classify_class(rep.sequence().packed(), 6).inert) inert_reps.insert(rep.sequence().to_string());
  }
  o.expect(inert_reps == std::set<std::string>{"+-+-+-", "+++---"},
           "inert representatives are +-+-+- and +++---");
}

void antiperiodic_vs_oracle(Outcome& o) {
  for (std::uint64_t t = 1; t <= 14; ++t) {
    const std::uint64_t oracle = antiperiod_audit(t, OracleOptions{}).union_size;
    o.expect(count_T_total(t) == oracle, ts(t) + " formula " + count_T_total(t).str() +
                                             " oracle " + std::to_string(oracle));
  }
}

void inert_vs_oracle(Outcome& o) {
  for (unsigned t = 1; t <= 12; ++t) {
    const Count oracle = oracle_counts(2 * t, OracleOptions{}).inert;
    o.expect(count_inert(t) == oracle, ts(t) + " formula " + count_inert(t).str() + " oracle " + oracle.str());
  }
}

void inert_primitive_vs_oracle(Outcome& o) {
  for (unsigned t = 1; t <= 10; ++t) {
    const Count oracle = oracle_counts(2 * t, OracleOptions{}).inert_primitive;
    o.expect(count_inert_primitive(t) == oracle, ts(t) + " oracle " + oracle.str());
  }
  for (std::uint64_t t : {1, 2, 4, 8}) {
    o.expect(count_inert_primitive(t) * (2 * t) == pow2(t), ts(t) + " equals 2^t/2t");
  }
}

void ambiguous_vs_oracle(Outcome& o) {
  for (unsigned t = 1; t <= 13; t += 2) {
    const Count oracle = oracle_counts(t, OracleOptions{}).ambiguous_palindromic;
    o.expect(count_ambiguous(t) == oracle, ts(t) + " oracle " + oracle.str());
  }
  o.note("even t (not asserted): formula / palindromic / reversal-fixed");
  for (unsigned t = 2; t <= 12; t += 2) {
    const OracleCounts c = oracle_counts(t, OracleOptions{});
    o.note("  " + ts(t) + ": " + count_ambiguous(t).str() + " / " + c.ambiguous_palindromic.str() +
           " / " + c.ambiguous_reversal_fixed.str());
    if (t == 4) {
      o.expect(count_ambiguous(4) == 2 && c.ambiguous_palindromic == 3 && c.ambiguous_reversal_fixed == 6,
               "documented t=4 row 2 / 3 / 6");
    }
  }
}

void finite_bounds(Outcome& o) {
  for (std::uint64_t t = 1; t <= 200; ++t) {
    o.expect(antiperiodic_bounds_hold(t), ts(t) + " antiperiodic sandwich");
    o.expect(count_inert_nonprimitive(t).within_bound, ts(t) + " nonprimitive inert bound");
    o.expect(ambiguous_cumulative_sandwich_holds(t), ts(t) + " cumulative ambiguous sandwich");
  }
}

void asymptotic_ratios(Outcome& o) {
  const double single = inert_ratio(64);
  const double cumulative = cumulative_inert_ratio(64);
  char buf[160];
  std::snprintf(buf, sizeof buf, "t=64: inert ratio %.9f (tol %.2f), cumulative ratio %.9f (tol %.2f)",
                single, kInertRatioTolerance, cumulative, kCumulativeInertRatioTolerance);
  o.note(buf);
  o.expect(std::fabs(single - 1.0) < kInertRatioTolerance, "inert ratio at t=64");
  o.expect(std::fabs(cumulative - 1.0) < kCumulativeInertRatioTolerance, "cumulative inert ratio at t=64");
}

void property_suites(Outcome& o) {
  for (const auto& p : props::all_properties()) {
    const auto start = std::chrono::steady_clock::now();
    const props::PropertyResult r = p.run();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[200];
    std::snprintf(buf, sizeof buf, "  %-12s %-36s %9zu cases %4zu failures  %6.2fs", p.module.c_str(),
                  p.name.c_str(), r.cases, r.failures, s);
    o.note(buf);
    o.expect(r.failures == 0 && r.cases > 0, p.name + (r.first_failure.empty() ? "" : ": " + r.first_failure));
  }
}

void determinism(Outcome& o) {
  auto run = [](const std::vector<std::string>& args, int& status) {
    std::ostringstream out, err;
    status = cli::run(args, out, err);
    return out.str();
  };
  int s1 = -1, s2 = -1;
  const std::string first = run({"verify", "10", "--format", "json"}, s1);
  const std::string second = run({"verify", "10", "--format", "json"}, s2);
  o.expect(s1 == 0 && s2 == 0, "verify 10 exit status 0");
  o.expect(!first.empty() && first == second, "verify 10 JSON byte-identical");
  for (const char* workers : {"1", "4", "16"}) {
    int s = -1;
    const std::string out = run({"verify", "10", "--format", "json", "--workers", workers}, s);
    o.expect(s == 0 && out == first, std::string("verify 10 JSON with ") + workers + " workers");
  }
  for (unsigned n : {10U, 16U, 20U, 24U}) {
    OracleOptions opts;
    opts.workers = 1;
    const OracleCounts reference = oracle_counts(n, opts);
    for (unsigned w : {4U, 16U}) {
      opts.workers = w;
      o.expect(oracle_counts(n, opts) == reference,
               "length " + std::to_string(n) + " workers " + std::to_string(w));
    }
  }
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "worked example t=3", 1.0, worked_example},
      {2, "antiperiodic totals vs oracle, t=1..14", 60.0, antiperiodic_vs_oracle},
      {3, "inert classes vs oracle, t=1..12", 120.0, inert_vs_oracle},
      {4, "primitive inert classes vs oracle, t=1..10", 60.0, inert_primitive_vs_oracle},
      {5, "ambiguous odd t vs oracle, t=1..13", 30.0, ambiguous_vs_oracle},
      {6, "finite-t bound suite, t=1..200", 10.0, finite_bounds},
      {7, "asymptotic ratios at t=64", 1.0, asymptotic_ratios},
      {8, "property suites", 300.0, property_suites},
      {9, "determinism", 600.0, determinism},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));
  bool all_ok = true;
  for (const Criterion& c : criteria()) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s >= c.time_limit_s) {
      o.ok = false;
      o.note("exceeded time limit");
    }
    all_ok = all_ok && o.ok;
    std::printf("criterion %d: %s  %s (%.2fs, limit %.0fs)\n", c.id, o.ok ? "PASS" : "FAIL", c.title.c_str(), s,
                c.time_limit_s);
    for (const std::string& n : o.notes) std::printf("    %s\n", n.c_str());
  }
  return all_ok ? 0 : 1;
}
