#pragma once

// Integer 2x2 matrices of determinant 1 modulo +-I, i.e. elements of
// PSL(2,Z), with
//   A = [[0, -1], [1, 0]],  B = [[0, -1], [1, 1]].

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "modgroup/word.hpp"

namespace modgroup {

using BigInt = boost::multiprecision::cpp_int;

/// Sign-canonical representative: the first nonzero entry of (a, b, c, d) is
/// positive, so equality in PSL(2,Z) is structural equality.
class ProjMatrix {
 public:
  /// Throws DomainError unless ad - bc = 1.
  ProjMatrix(BigInt a, BigInt b, BigInt c, BigInt d);

  static ProjMatrix identity();

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  BigInt trace_abs() const;
  ProjMatrix inverse() const;

  /// `[[a,b],[c,d]]` with no whitespace.
  std::string to_json() const;

  friend ProjMatrix operator*(const ProjMatrix& x, const ProjMatrix& y);
  friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;

 private:
  BigInt a_, b_, c_, d_;
};

enum class TraceKind { elliptic, parabolic, hyperbolic };

struct TraceClass {
  TraceKind kind;
  BigInt trace_abs;
};

const char* to_string(TraceKind k);

ProjMatrix word_to_matrix(const ReducedWord& w);

TraceClass classify(const ProjMatrix& m);

struct NormLength {
  double norm;    // ((t + sqrt(t^2 - 4)) / 2)^2
  double length;  // log norm
};

/// Throws DomainError for non-hyperbolic input.
NormLength norm_and_length(const ProjMatrix& m);

/// w0^-1 M w0 for the reflection w0 = diag(1, -1): [[a, -b], [-c, d]].
ProjMatrix reflect(const ProjMatrix& m);

/// The word-level reflection and ambiguous maps agree with their matrix
/// definitions on w.
bool involution_matrix_check(const ReducedWord& w);

}  // namespace modgroup
