#include "modgroup/matrix.hpp"

#include <cmath>

#include "modgroup/errors.hpp"
#include "modgroup/involutions.hpp"

namespace modgroup {

ProjMatrix::ProjMatrix(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) throw DomainError("matrix determinant must be 1");
  const BigInt& lead = a_ != 0 ? a_ : b_ != 0 ? b_ : c_;
  if (lead < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

ProjMatrix ProjMatrix::identity() { return ProjMatrix(1, 0, 0, 1); }

BigInt ProjMatrix::trace_abs() const { return abs(a_ + d_); }

ProjMatrix ProjMatrix::inverse() const { return ProjMatrix(d_, -b_, -c_, a_); }

std::string ProjMatrix::to_json() const {
  return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

ProjMatrix operator*(const ProjMatrix& x, const ProjMatrix& y) {
  return ProjMatrix(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                    x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

const char* to_string(TraceKind k) {
  switch (k) {
    case TraceKind::elliptic:
      return "elliptic";
    case TraceKind::parabolic:
      return "parabolic";
    case TraceKind::hyperbolic:
      return "hyperbolic";
  }
  return "?";
}

ProjMatrix word_to_matrix(const ReducedWord& w) {
  static const ProjMatrix kA(0, -1, 1, 0);
  static const ProjMatrix kB(0, -1, 1, 1);
  static const ProjMatrix kBinv(1, 1, -1, 0);
  ProjMatrix m = ProjMatrix::identity();
  for (Letter l : w.letters()) {
    m = m * (l == Letter::A ? kA : l == Letter::B ? kB : kBinv);
  }
  return m;
}

TraceClass classify(const ProjMatrix& m) {
  BigInt t = m.trace_abs();
  const TraceKind kind = t <= 1   ? TraceKind::elliptic
                         : t == 2 ? TraceKind::parabolic
                                  : TraceKind::hyperbolic;
  return {kind, std::move(t)};
}

NormLength norm_and_length(const ProjMatrix& m) {
  const TraceClass tc = classify(m);
  if (tc.kind != TraceKind::hyperbolic) {
    throw DomainError("norm and length are defined for hyperbolic elements only");
  }
  const double t = tc.trace_abs.convert_to<double>();
  const double eigen = (t + std::sqrt(t * t - 4.0)) / 2.0;
  return {eigen * eigen, 2.0 * std::log(eigen)};
}

ProjMatrix reflect(const ProjMatrix& m) { return ProjMatrix(m.a(), -m.b(), -m.c(), m.d()); }

bool involution_matrix_check(const ReducedWord& w) {
  const ProjMatrix m = word_to_matrix(w);
  return word_to_matrix(reflection_map(w)) == reflect(m) &&
         word_to_matrix(ambiguous_map(w)) == reflect(m.inverse());
}

}  // namespace modgroup
