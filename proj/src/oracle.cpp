#include "modgroup/oracle.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "modgroup/errors.hpp"

namespace modgroup {

namespace {

/// Splits [0, total) into `workers` contiguous chunks and runs
/// body(first, last, chunk_index) on each, one thread per chunk.
template <typename Body>
void run_partitioned(std::uint64_t total, unsigned workers, Body&& body) {
  workers = std::max(1U, workers);
  if (total < workers) workers = static_cast<unsigned>(std::max<std::uint64_t>(total, 1));
  const std::uint64_t step = total / workers;
  auto bounds = [&](unsigned i) {
    const std::uint64_t first = step * i;
    const std::uint64_t last = i + 1 == workers ? total : first + step;
    return std::pair{first, last};
  };
  if (workers == 1) {
    body(std::uint64_t{0}, total, 0U);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) {
    const auto [first, last] = bounds(i);
    threads.emplace_back([&body, first, last, i] { body(first, last, i); });
  }
}

// Per-worker tallies kept in machine integers; converted once per chunk.
struct Tally {
  std::uint64_t total = 0, inert = 0, inert_primitive = 0, palindromic = 0, reversal = 0,
                reciprocal = 0, parabolic = 0;
};

OracleCounts to_counts(unsigned n, const Tally& t) {
  OracleCounts c;
  c.length = n;
  c.inert_populated = n % 2 == 0;
  c.classes_total = t.total;
  c.inert = t.inert;
  c.inert_primitive = t.inert_primitive;
  c.inert_nonprimitive = t.inert - t.inert_primitive;
  c.ambiguous_palindromic = t.palindromic;
  c.ambiguous_reversal_fixed = t.reversal;
  c.reciprocal = t.reciprocal;
  c.parabolic_classes = t.parabolic;
  return c;
}

std::uint64_t sequence_space(unsigned n) { return std::uint64_t{1} << n; }

}  // namespace

std::string_view to_string(AmbiguousCriterion c) {
  return c == AmbiguousCriterion::palindromic_rep ? "palindromic" : "reversal-fixed";
}

std::optional<AmbiguousCriterion> parse_ambiguous_criterion(std::string_view name) {
  if (name == "palindromic" || name == "palindromic-rep") return AmbiguousCriterion::palindromic_rep;
  if (name == "reversal-fixed") return AmbiguousCriterion::reversal_fixed;
  return std::nullopt;
}

void check_ceiling(unsigned length, const OracleOptions& opts) {
  if (length == 0) throw DomainError("sequence length must be positive");
  const unsigned limit = std::min(opts.max_length, 63U);
  if (length > limit) throw ResourceLimit(length, limit);
}

ClassFlags classify_class(packed::Bits x, unsigned n) {
  ClassFlags f;
  const packed::Bits neg = packed::negate(x, n);
  f.parabolic = packed::is_constant(x, n);
  f.primitive = packed::period(x, n) == n;
  f.inert = packed::is_rotation_of(neg, x, n);
  f.palindromic = packed::has_palindromic_rotation(x, n);
  f.reversal_fixed = packed::is_rotation_of(packed::reverse(x, n), x, n);
  f.reciprocal = packed::is_rotation_of(packed::reverse(neg, n), x, n);
  return f;
}

const Count& OracleCounts::ambiguous(AmbiguousCriterion c) const {
  return c == AmbiguousCriterion::palindromic_rep ? ambiguous_palindromic
                                                  : ambiguous_reversal_fixed;
}

void OracleCounts::merge(const OracleCounts& other) {
  if (length == 0) {
    length = other.length;
    inert_populated = other.inert_populated;
  }
  classes_total += other.classes_total;
  inert += other.inert;
  inert_primitive += other.inert_primitive;
  inert_nonprimitive += other.inert_nonprimitive;
  ambiguous_palindromic += other.ambiguous_palindromic;
  ambiguous_reversal_fixed += other.ambiguous_reversal_fixed;
  reciprocal += other.reciprocal;
  parabolic_classes += other.parabolic_classes;
}

Count necklace_count(unsigned length) {
  Count sum = 0;
  for (std::uint64_t d : divisors(length)) sum += Count(euler_phi(d)) * pow2(length / d);
  return sum / length;
}

void for_each_class_rep(unsigned length, const OracleOptions& opts,
                        const std::function<void(const ClassRep&)>& visit) {
  check_ceiling(length, opts);
  std::uint64_t emitted = 0;
  const std::uint64_t space = sequence_space(length);
  for (std::uint64_t x = 0; x < space; ++x) {
    if (!packed::is_canonical(x, length)) continue;
    ++emitted;
    visit(class_rep_unchecked(SignSequence::from_packed(x, length)));
  }
  if (Count(emitted) != necklace_count(length)) {
    throw InvariantViolation("enumerated " + std::to_string(emitted) +
                             " rotation classes, Burnside count is " +
                             necklace_count(length).str());
  }
}

std::vector<ClassRep> enumerate_class_reps(unsigned length, const OracleOptions& opts) {
  std::vector<ClassRep> reps;
  for_each_class_rep(length, opts, [&](const ClassRep& r) { reps.push_back(r); });
  return reps;
}

OracleCounts oracle_counts_range(unsigned n, const OracleOptions& opts, std::uint64_t first,
                                 std::uint64_t last) {
  check_ceiling(n, opts);
  last = std::min(last, sequence_space(n));
  Tally tally;
  const bool even = n % 2 == 0;
  for (std::uint64_t x = first; x < last; ++x) {
    if (!packed::is_canonical(x, n)) continue;
    const ClassFlags f = classify_class(x, n);
    if (opts.hyperbolic_only && f.parabolic) continue;
    ++tally.total;
    tally.parabolic += f.parabolic;
    if (even && f.inert) {
      ++tally.inert;
      tally.inert_primitive += f.primitive;
    }
    tally.palindromic += f.palindromic;
    tally.reversal += f.reversal_fixed;
    tally.reciprocal += f.reciprocal;
  }
  return to_counts(n, tally);
}

OracleCounts oracle_counts(unsigned n, const OracleOptions& opts) {
  check_ceiling(n, opts);
  const unsigned workers = std::max(1U, opts.workers);
  std::vector<OracleCounts> parts(workers);
  run_partitioned(sequence_space(n), workers, [&](std::uint64_t first, std::uint64_t last,
                                                  unsigned slot) {
    parts[slot] = oracle_counts_range(n, opts, first, last);
  });
  OracleCounts total;
  total.length = n;
  total.inert_populated = n % 2 == 0;
  for (const OracleCounts& p : parts) total.merge(p);
  return total;
}

AntiperiodAudit antiperiod_audit(std::uint64_t t, const OracleOptions& opts) {
  if (t == 0) throw DomainError("t must be positive");
  const auto n = static_cast<unsigned>(2 * t);
  check_ceiling(n, opts);

  AntiperiodAudit audit;
  audit.t = t;
  audit.divisors = divisors(t);
  const std::size_t d = audit.divisors.size();
  std::vector<unsigned> nu(d);
  for (std::size_t j = 0; j < d; ++j) nu[j] = two_adic_valuation(audit.divisors[j]);

  const packed::Bits alt_a = packed::mask(n) / 3;  // 0101...01
  const packed::Bits alt_b = packed::negate(alt_a, n);

  // Histogram over (membership mask, alternating?) so that every lattice
  // relation is decided after the scan from 2^(d+1) buckets.
  struct Partial {
    std::vector<std::uint64_t> hist;
    std::uint64_t orbit_violations = 0;
    std::uint64_t classes = 0;
  };
  const unsigned workers = std::max(1U, opts.workers);
  std::vector<Partial> parts(workers);
  run_partitioned(sequence_space(n), workers, [&](std::uint64_t first, std::uint64_t last,
                                                  unsigned slot) {
    Partial p;
    p.hist.assign(std::size_t{1} << (d + 1), 0);
    for (std::uint64_t x = first; x < last; ++x) {
      std::size_t mask = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (packed::has_antiperiod(x, n, static_cast<unsigned>(audit.divisors[j]))) {
          mask |= std::size_t{1} << j;
        }
      }
      const bool alternating = x == alt_a || x == alt_b;
      ++p.hist[mask << 1 | (alternating ? 1U : 0U)];
      if (mask == 0) continue;
      const unsigned m = packed::least_antiperiod(x, n);
      if (m == 0 || packed::period(x, n) != 2 * m) ++p.orbit_violations;
      if (packed::is_canonical(x, n)) ++p.classes;
    }
    parts[slot] = std::move(p);
  });

  std::vector<std::uint64_t> hist(std::size_t{1} << (d + 1), 0);
  for (const Partial& p : parts) {
    if (p.hist.empty()) continue;  // chunk never ran: fewer sequences than workers
    for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += p.hist[i];
    audit.orbit_size_violations += p.orbit_violations;
    audit.inert_classes += p.classes;
  }

  auto in = [](std::size_t mask, std::size_t j) { return (mask >> j & 1U) != 0; };
  audit.member_counts.assign(d, 0);
  audit.exact_counts.assign(d, 0);

  // Index pairs (i, j) of odd prime powers of distinct primes.
  std::vector<std::pair<std::size_t, std::size_t>> cross_pairs;
  const Factorization f = factorize(t);
  auto prime_power_prime = [&](std::uint64_t m) -> std::uint64_t {
    for (const auto& pp : f.odd_primes) {
      std::uint64_t q = pp.prime;
      for (unsigned e = 1; e <= pp.exponent; ++e, q *= pp.prime) {
        if (q == m) return pp.prime;
      }
    }
    return 0;
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const std::uint64_t pi = prime_power_prime(audit.divisors[i]);
      const std::uint64_t pj = prime_power_prime(audit.divisors[j]);
      if (pi != 0 && pj != 0 && pi != pj) cross_pairs.emplace_back(i, j);
    }
  }

  for (std::size_t bucket = 0; bucket < hist.size(); ++bucket) {
    const std::uint64_t count = hist[bucket];
    if (count == 0) continue;
    const std::size_t mask = bucket >> 1;
    const bool alternating = (bucket & 1U) != 0;
    if (mask != 0) audit.union_size += count;

    bool disjoint_broken = false;
    bool nesting_broken = false;
    for (std::size_t j = 0; j < d; ++j) {
      const std::uint64_t m = audit.divisors[j];
      if (!in(mask, j)) continue;
      audit.member_counts[j] += count;
      bool nested_elsewhere = false;
      for (std::size_t k = 0; k < d; ++k) {
        const std::uint64_t km = audit.divisors[k];
        if (k == j) continue;
        if (in(mask, k) && nu[k] != nu[j]) disjoint_broken = true;
        if (m % km == 0 && nu[k] == nu[j]) {
          if (in(mask, k)) nested_elsewhere = true;
        }
        if (km % m == 0 && nu[k] == nu[j] && !in(mask, k)) nesting_broken = true;
      }
      if (!nested_elsewhere) audit.exact_counts[j] += count;
    }
    if (disjoint_broken) audit.disjointness_violations += count;
    if (nesting_broken) audit.nesting_violations += count;
    for (const auto& [i, j] : cross_pairs) {
      const bool both = in(mask, i) && in(mask, j);
      if (both != alternating) audit.cross_prime_violations += count;
    }
  }
  return audit;
}

void attach_oracle(std::vector<GrowthRow>& rows, const OracleOptions& opts) {
  const unsigned limit = std::min(opts.max_length, 63U);
  std::map<unsigned, OracleCounts> cache;
  std::map<std::uint64_t, AntiperiodAudit> audits;
  auto counts = [&](unsigned n) -> const OracleCounts& {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, oracle_counts(n, opts)).first;
    return it->second;
  };

  for (GrowthRow& row : rows) {
    const std::uint64_t t = row.t;
    const bool inert_family = row.type == RowType::antiperiodic || row.type == RowType::inert ||
                              row.type == RowType::inert_primitive ||
                              row.type == RowType::inert_cumulative;
    if ((inert_family ? 2 * t : t) > limit) continue;
    const auto n = static_cast<unsigned>(t);
    switch (row.type) {
      case RowType::antiperiodic: {
        auto it = audits.find(t);
        if (it == audits.end()) it = audits.emplace(t, antiperiod_audit(t, opts)).first;
        row.oracle = Count(it->second.union_size);
        break;
      }
      case RowType::inert:
        row.oracle = counts(2 * n).inert;
        break;
      case RowType::inert_primitive:
        row.oracle = counts(2 * n).inert_primitive;
        break;
      case RowType::inert_cumulative: {
        Count sum = 0;
        for (unsigned k = 1; k <= n; ++k) sum += counts(2 * k).inert;
        row.oracle = sum;
        break;
      }
      case RowType::ambiguous:
        row.oracle = counts(n).ambiguous(opts.ambiguous_criterion);
        break;
      case RowType::ambiguous_cumulative: {
        Count sum = 0;
        for (unsigned k = 1; k <= n; ++k) sum += counts(k).ambiguous(opts.ambiguous_criterion);
        row.oracle = sum;
        break;
      }
      case RowType::reciprocal_cumulative: {
        Count sum = 0;
        for (unsigned k = 1; k <= n; ++k) sum += counts(k).reciprocal;
        row.oracle = sum;
        refresh_ratio(row);
        break;
      }
    }
  }
}

}  // namespace modgroup
