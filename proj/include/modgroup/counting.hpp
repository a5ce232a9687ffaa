#pragma once

// Exact class counts by word length.
//
// Indexing follows the inert convention: for the inert family, t indexes
// sign sequences of length 2t (word length 4t); for the ambiguous family, t
// indexes sign sequences of length t (word length 2t).
//
// T(t, m) is the set of sign sequences of length 2t with anti-period m,
// i.e. s[m + i] = -s[i] for all i; it has 2^m elements for m | t.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <vector>

namespace modgroup {

using Count = boost::multiprecision::cpp_int;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// t = 2^two_adic * prod p^e over odd_primes (strictly increasing).
struct Factorization {
  unsigned two_adic = 0;
  std::vector<PrimePower> odd_primes;

  std::uint64_t value() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Throws DomainError for t = 0.
Factorization factorize(std::uint64_t t);

/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t t);

unsigned two_adic_valuation(std::uint64_t t);
std::uint64_t odd_part(std::uint64_t t);
int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
Count pow2(std::uint64_t exponent);

/// |T(t, m)| = 2^m. Throws DomainError unless m | t.
Count count_T_m(std::uint64_t t, std::uint64_t m);

/// |union over m | t of T(t, m)| = sum over l = 0..v(t) of 2^(2^l * odd(t)).
Count count_T_total(std::uint64_t t);

/// Sequences in T(t, m) lying in no T(t, k) for k | m, k != m, m/k odd.
/// Those are exactly the sequences whose least anti-period is m, counted by
/// Moebius inversion over the squarefree divisors of the odd part of m.
Count exact_antiperiod_count(std::uint64_t t, std::uint64_t m);

/// Inert classes of word length 4t. Each exact-anti-period-m orbit has 2m
/// elements; a non-exact division throws InvariantViolation.
Count count_inert(std::uint64_t t);

/// Inert classes of word length 4t that are not proper powers.
Count count_inert_primitive(std::uint64_t t);

struct NonprimitiveCount {
  Count count;
  bool within_bound;  // count <= (t/4) 2^(t/2)
};

/// Sum of count_inert_primitive over the proper divisors of t.
NonprimitiveCount count_inert_nonprimitive(std::uint64_t t);

/// Ambiguous classes of word length 2t: 2^(t/2 - 1) for even t,
/// 2^ceil(t/2) for odd t.
Count count_ambiguous(std::uint64_t t);

using Counter = std::function<Count(std::uint64_t)>;

/// counter(1) + ... + counter(t_max).
Count cumulative(const Counter& counter, std::uint64_t t_max);

// Finite-t sandwich bounds, all decided with exact integer arithmetic.

/// 1 <= count_T_total(t) / 2^t <= 1 + log2(t) / 2^(t/2).
bool antiperiodic_bounds_hold(std::uint64_t t);

/// (2^t - sum_{k|t, k<t} 2^k) / 2t <= count_inert(t) <= sum_{m|t} 2^m / 2m.
bool inert_sandwich_holds(std::uint64_t t);

/// sum_{n<=t} nonprimitive inert(n) <= (t^2/4) 2^(t/2).
bool inert_nonprimitive_cumulative_bound_holds(std::uint64_t t);

/// 2^(t/2) <= sum_{n<=t} count_ambiguous(n) <= 2 (sqrt2 + 1)(2^(t/2) - 1).
bool ambiguous_cumulative_sandwich_holds(std::uint64_t t);

/// sum over proper divisors s of t of count_ambiguous(s) <= (t/2) 2^((t+2)/4).
/// The left side is the upper estimate of the non-primitive ambiguous count.
bool ambiguous_nonprimitive_bound_holds(std::uint64_t t);

/// lhs <= (num/den) * 2^(exponent/root), exactly. All arguments non-negative.
bool le_scaled_root_pow2(const Count& lhs, const Count& num, const Count& den,
                         std::uint64_t exponent, unsigned root);

/// num/den as a double, rounded from a 64-bit-significand quotient.
double ratio_of(const Count& num, const Count& den);

// Declared tolerances for the ratio checks against the leading asymptotes.
inline constexpr double kInertRatioTolerance = 0.01;            // count_inert(t) * 2t / 2^t
inline constexpr double kCumulativeInertRatioTolerance = 0.02;  // cumulative * (t+1) / 2^t

/// count_inert(t) * 2t / 2^t.
double inert_ratio(std::uint64_t t);

/// (count_inert(1) + ... + count_inert(t)) * (t+1) / 2^t.
double cumulative_inert_ratio(std::uint64_t t);

}  // namespace modgroup
