#pragma once

// Brute-force ground truth. Enumerates every sign sequence of a given length,
// keeps one representative per rotation class (the least rotation), and
// evaluates each symmetry predicate on that class. Nothing here consults the
// closed-form counters.
//
// Work is split into disjoint index ranges; each worker fills its own partial
// result and partial results are summed, so any split gives the same totals.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "modgroup/counting.hpp"
#include "modgroup/growth_report.hpp"
#include "modgroup/packed.hpp"
#include "modgroup/word.hpp"

namespace modgroup {

inline constexpr unsigned kDefaultOracleCeiling = 28;

enum class AmbiguousCriterion {
  palindromic_rep,  // some rotation is a palindrome
  reversal_fixed,   // the reversed sequence is a rotation
};

std::string_view to_string(AmbiguousCriterion c);
std::optional<AmbiguousCriterion> parse_ambiguous_criterion(std::string_view name);

struct OracleOptions {
  bool hyperbolic_only = false;  // drop constant-sign (parabolic) classes
  AmbiguousCriterion ambiguous_criterion = AmbiguousCriterion::palindromic_rep;
  unsigned max_length = kDefaultOracleCeiling;
  unsigned workers = 1;
};

/// Throws ResourceLimit when length exceeds the ceiling (or 63, the packed
/// enumeration limit).
void check_ceiling(unsigned length, const OracleOptions& opts);

struct ClassFlags {
  bool parabolic = false;
  bool primitive = false;
  bool inert = false;           // negation is a rotation
  bool palindromic = false;     // some rotation is a palindrome
  bool reversal_fixed = false;  // reversal is a rotation
  bool reciprocal = false;      // reversed negation is a rotation
};

ClassFlags classify_class(packed::Bits sequence, unsigned length);

struct OracleCounts {
  unsigned length = 0;
  bool inert_populated = false;  // only for even lengths
  Count classes_total = 0;
  Count inert = 0;
  Count inert_primitive = 0;
  Count inert_nonprimitive = 0;
  Count ambiguous_palindromic = 0;
  Count ambiguous_reversal_fixed = 0;
  Count reciprocal = 0;
  Count parabolic_classes = 0;

  const Count& ambiguous(AmbiguousCriterion c) const;
  void merge(const OracleCounts& other);
  friend bool operator==(const OracleCounts&, const OracleCounts&) = default;
};

/// Number of rotation classes of binary sequences of length n:
/// (1/n) sum_{d | n} phi(d) 2^(n/d).
Count necklace_count(unsigned length);

/// Calls `visit` once per rotation class, in increasing order, then checks the
/// number of classes against necklace_count (InvariantViolation on mismatch).
void for_each_class_rep(unsigned length, const OracleOptions& opts,
                        const std::function<void(const ClassRep&)>& visit);

std::vector<ClassRep> enumerate_class_reps(unsigned length, const OracleOptions& opts = {});

/// Partial counts over sequence indices [first, last).
OracleCounts oracle_counts_range(unsigned length, const OracleOptions& opts, std::uint64_t first,
                                 std::uint64_t last);

OracleCounts oracle_counts(unsigned length, const OracleOptions& opts);

/// Literal set computations on T(t, m) over all 2^(2t) sequences of length 2t.
struct AntiperiodAudit {
  std::uint64_t t = 0;
  std::vector<std::uint64_t> divisors;      // m | t, ascending
  std::uint64_t union_size = 0;             // |union_m T(t, m)|
  std::vector<std::uint64_t> member_counts; // |T(t, m)|
  std::vector<std::uint64_t> exact_counts;  // |T(t, m) minus union of nested T(t, k)|
  std::uint64_t disjointness_violations = 0;   // in T(t,m) and T(t,m') with v(m) != v(m')
  std::uint64_t nesting_violations = 0;        // in T(t,k) but not T(t,m), k | m, same 2-power
  std::uint64_t cross_prime_violations = 0;    // T(t,p^a) & T(t,q^b) != alternating set
  std::uint64_t orbit_size_violations = 0;     // least anti-period m but orbit size != 2m
  std::uint64_t inert_classes = 0;             // sum over m of exact orbits, counted by orbit
};

AntiperiodAudit antiperiod_audit(std::uint64_t t, const OracleOptions& opts);

/// Fills the oracle column (and oracle-only ratios) of every row whose
/// enumeration fits under the ceiling; other rows are left untouched.
void attach_oracle(std::vector<GrowthRow>& rows, const OracleOptions& opts);

}  // namespace modgroup
