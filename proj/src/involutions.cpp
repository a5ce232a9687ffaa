#include "modgroup/involutions.hpp"

#include <array>

#include "modgroup/packed.hpp"

namespace modgroup {

namespace {

// Images of the generators. Inverses follow from the (anti-)homomorphism law.
const std::array<Letter, 3> kReflectB = {Letter::A, Letter::Binv, Letter::A};
const std::array<Letter, 3> kReflectBinv = {Letter::A, Letter::B, Letter::A};
const std::array<Letter, 3> kAmbB = {Letter::A, Letter::B, Letter::A};
const std::array<Letter, 3> kAmbBinv = {Letter::A, Letter::Binv, Letter::A};

void append_image(ReducedWord& out, Letter l, std::span<const Letter> image_b,
                  std::span<const Letter> image_binv) {
  switch (l) {
    case Letter::A:
      out.push_back(Letter::A);
      break;
    case Letter::B:
      for (Letter x : image_b) out.push_back(x);
      break;
    case Letter::Binv:
      for (Letter x : image_binv) out.push_back(x);
      break;
  }
}

}  // namespace

std::string_view to_string(SymmetryType t) {
  switch (t) {
    case SymmetryType::reciprocal:
      return "reciprocal";
    case SymmetryType::inert:
      return "inert";
    case SymmetryType::ambiguous:
      return "ambiguous";
  }
  return "?";
}

ReducedWord reciprocal_map(const ReducedWord& w) { return invert(w); }

ReducedWord reflection_map(const ReducedWord& w) {
  ReducedWord out;
  for (Letter l : w.letters()) append_image(out, l, kReflectB, kReflectBinv);
  return out;
}

ReducedWord ambiguous_map(const ReducedWord& w) {
  ReducedWord out;
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    append_image(out, *it, kAmbB, kAmbBinv);
  }
  return out;
}

ReducedWord apply_involution(SymmetryType type, const ReducedWord& w) {
  switch (type) {
    case SymmetryType::reciprocal:
      return reciprocal_map(w);
    case SymmetryType::inert:
      return reflection_map(w);
    case SymmetryType::ambiguous:
      return ambiguous_map(w);
  }
  return w;
}

std::optional<InertWitness> is_inert_symbolic(const SignSequence& s) {
  const std::size_t n = s.size();
  if (n % 2 != 0) return std::nullopt;
  if (s.fits_packed()) {
    const unsigned m = packed::least_antiperiod(s.packed(), static_cast<unsigned>(n));
    if (m == 0) return std::nullopt;
    return InertWitness{m};
  }
  for (std::size_t m = 1; m < n; ++m) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = s[(m + i) % n] == -s[i];
    if (ok) return InertWitness{m};
  }
  return std::nullopt;
}

bool is_ambiguous_symbolic(const SignSequence& s) {
  if (s.fits_packed()) {
    return packed::has_palindromic_rotation(s.packed(), static_cast<unsigned>(s.size()));
  }
  for (std::size_t k = 0; k < s.size(); ++k) {
    const SignSequence r = rotate(s, static_cast<long long>(k));
    if (r == r.reversed()) return true;
  }
  return false;
}

bool is_fixed_by(SymmetryType type, const SignSequence& s) {
  const ReducedWord w = decode(s);
  return are_conjugate(w, apply_involution(type, w));
}

bool is_inert_generic(const SignSequence& s) { return is_fixed_by(SymmetryType::inert, s); }

bool is_ambiguous_generic(const SignSequence& s) {
  return is_fixed_by(SymmetryType::ambiguous, s);
}

bool is_reciprocal_generic(const SignSequence& s) {
  return is_fixed_by(SymmetryType::reciprocal, s);
}

}  // namespace modgroup
