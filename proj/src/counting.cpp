#include "modgroup/counting.hpp"

#include <bit>
#include <cmath>

#include "modgroup/errors.hpp"

namespace modgroup {

namespace mp = boost::multiprecision;

namespace {

void require_divisor(std::uint64_t t, std::uint64_t m) {
  if (t == 0 || m == 0 || t % m != 0) {
    throw DomainError(std::to_string(m) + " does not divide " + std::to_string(t));
  }
}

void require_positive(std::uint64_t t) {
  if (t == 0) throw DomainError("t must be positive");
}

unsigned floor_log2(std::uint64_t t) { return static_cast<unsigned>(std::bit_width(t)) - 1; }

}  // namespace

std::uint64_t Factorization::value() const {
  std::uint64_t v = std::uint64_t{1} << two_adic;
  for (const auto& pp : odd_primes) {
    for (unsigned i = 0; i < pp.exponent; ++i) v *= pp.prime;
  }
  return v;
}

Factorization factorize(std::uint64_t t) {
  require_positive(t);
  Factorization f;
  f.two_adic = static_cast<unsigned>(std::countr_zero(t));
  t >>= f.two_adic;
  for (std::uint64_t p = 3; p <= t / p; p += 2) {
    unsigned e = 0;
    while (t % p == 0) {
      t /= p;
      ++e;
    }
    if (e > 0) f.odd_primes.push_back({p, e});
  }
  if (t > 1) f.odd_primes.push_back({t, 1});
  return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t t) {
  require_positive(t);
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= t / d; ++d) {
    if (t % d == 0) {
      small.push_back(d);
      if (d != t / d) large.push_back(t / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

unsigned two_adic_valuation(std::uint64_t t) {
  require_positive(t);
  return static_cast<unsigned>(std::countr_zero(t));
}

std::uint64_t odd_part(std::uint64_t t) { return t >> two_adic_valuation(t); }

int mobius(std::uint64_t n) {
  require_positive(n);
  const Factorization f = factorize(n);
  if (f.two_adic > 1) return 0;
  int sign = f.two_adic == 1 ? -1 : 1;
  for (const auto& pp : f.odd_primes) {
    if (pp.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
  const Factorization f = factorize(n);
  std::uint64_t phi = n;
  if (f.two_adic > 0) phi /= 2;
  for (const auto& pp : f.odd_primes) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

Count pow2(std::uint64_t exponent) {
  Count one = 1;
  return one << exponent;
}

Count count_T_m(std::uint64_t t, std::uint64_t m) {
  require_divisor(t, m);
  return pow2(m);
}

Count count_T_total(std::uint64_t t) {
  require_positive(t);
  // Maximal divisors 2^l * odd(t) have pairwise disjoint T-sets that contain
  // every other T(t, m).
  const unsigned a = two_adic_valuation(t);
  const std::uint64_t odd = odd_part(t);
  Count total = 0;
  for (unsigned l = 0; l <= a; ++l) total += pow2(odd << l);
  return total;
}

Count exact_antiperiod_count(std::uint64_t t, std::uint64_t m) {
  require_divisor(t, m);
  const Factorization f = factorize(odd_part(m));
  const std::size_t r = f.odd_primes.size();
  Count total = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << r); ++subset) {
    std::uint64_t d = 1;
    for (std::size_t j = 0; j < r; ++j) {
      if (subset >> j & 1U) d *= f.odd_primes[j].prime;
    }
    if (std::popcount(subset) % 2 == 0) {
      total += pow2(m / d);
    } else {
      total -= pow2(m / d);
    }
  }
  return total;
}

Count count_inert(std::uint64_t t) {
  require_positive(t);
  Count total = 0;
  for (std::uint64_t m : divisors(t)) {
    const Count exact = exact_antiperiod_count(t, m);
    const Count orbit = 2 * m;
    if (exact % orbit != 0) {
      throw InvariantViolation("exact anti-period count " + exact.str() + " for m=" +
                               std::to_string(m) + " is not divisible by " + orbit.str());
    }
    total += exact / orbit;
  }
  return total;
}

Count count_inert_primitive(std::uint64_t t) {
  require_positive(t);
  const Count exact = exact_antiperiod_count(t, t);
  const Count orbit = 2 * t;
  if (exact % orbit != 0) {
    throw InvariantViolation("primitive inert count for t=" + std::to_string(t) +
                             " is not an integer");
  }
  return exact / orbit;
}

NonprimitiveCount count_inert_nonprimitive(std::uint64_t t) {
  require_positive(t);
  NonprimitiveCount out{0, true};
  for (std::uint64_t s : divisors(t)) {
    if (s != t) out.count += count_inert_primitive(s);
  }
  out.within_bound = le_scaled_root_pow2(out.count, t, 4, t, 2);
  return out;
}

Count count_ambiguous(std::uint64_t t) {
  require_positive(t);
  return t % 2 == 0 ? pow2(t / 2 - 1) : pow2((t + 1) / 2);
}

Count cumulative(const Counter& counter, std::uint64_t t_max) {
  require_positive(t_max);
  Count total = 0;
  for (std::uint64_t n = 1; n <= t_max; ++n) total += counter(n);
  return total;
}

bool le_scaled_root_pow2(const Count& lhs, const Count& num, const Count& den,
                         std::uint64_t exponent, unsigned root) {
  const Count left = mp::pow(Count(den * lhs), root);
  const Count right = mp::pow(num, root) << exponent;
  return left <= right;
}

double ratio_of(const Count& num, const Count& den) {
  if (den == 0) throw DomainError("ratio with zero denominator");
  if (num == 0) return 0.0;
  const long long shift = static_cast<long long>(mp::msb(den)) -
                          static_cast<long long>(mp::msb(num)) + 64;
  Count q;
  if (shift >= 0) {
    q = (num << static_cast<unsigned>(shift)) / den;
  } else {
    q = num / (den << static_cast<unsigned>(-shift));
  }
  return std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
}

double inert_ratio(std::uint64_t t) { return ratio_of(count_inert(t) * (2 * t), pow2(t)); }

double cumulative_inert_ratio(std::uint64_t t) {
  return ratio_of(cumulative(count_inert, t) * (t + 1), pow2(t));
}

bool antiperiodic_bounds_hold(std::uint64_t t) {
  const Count total = count_T_total(t);
  const Count base = pow2(t);
  if (total < base) return false;
  const Count excess = total - base;
  // floor(log2 t) <= log2 t, so this comparison is sufficient on its own.
  if (le_scaled_root_pow2(excess, floor_log2(t), 1, t, 2)) return true;
  const double log2t = std::log2(static_cast<double>(t));
  return ratio_of(excess * excess, base) <= log2t * log2t;
}

bool inert_sandwich_holds(std::uint64_t t) {
  const Count inert = count_inert(t);
  Count proper_sum = 0;
  Count upper_scaled = 0;  // 2t * sum_{m|t} 2^m / 2m
  for (std::uint64_t m : divisors(t)) {
    if (m != t) proper_sum += pow2(m);
    upper_scaled += pow2(m) * (t / m);
  }
  const Count scaled = 2 * t * inert;
  const Count lower_scaled = pow2(t) - proper_sum;
  return lower_scaled <= scaled && scaled <= upper_scaled;
}

bool inert_nonprimitive_cumulative_bound_holds(std::uint64_t t) {
  Count total = 0;
  for (std::uint64_t n = 1; n <= t; ++n) total += count_inert_nonprimitive(n).count;
  return le_scaled_root_pow2(total, Count(t) * t, 4, t, 2);
}

bool ambiguous_cumulative_sandwich_holds(std::uint64_t t) {
  const Count total = cumulative(count_ambiguous, t);
  if (total * total < pow2(t)) return false;
  // Upper bound 2(sqrt2 + 1)(2^(t/2) - 1) split into rational part + sqrt2 * q.
  Count rational_part;
  Count sqrt2_coeff;
  if (t % 2 == 0) {
    const Count x = pow2(t / 2) - 1;
    rational_part = 2 * x;
    sqrt2_coeff = 2 * x;
  } else {
    const std::uint64_t k = t / 2;
    rational_part = pow2(k + 2) - 2;
    sqrt2_coeff = pow2(k + 1) - 2;
  }
  if (total <= rational_part) return true;
  const Count excess = total - rational_part;
  return excess * excess <= 2 * sqrt2_coeff * sqrt2_coeff;
}

bool ambiguous_nonprimitive_bound_holds(std::uint64_t t) {
  Count total = 0;
  for (std::uint64_t s : divisors(t)) {
    if (s != t) total += count_ambiguous(s);
  }
  return le_scaled_root_pow2(total, t, 2, t + 2, 4);
}

}  // namespace modgroup
