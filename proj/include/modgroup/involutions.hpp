#pragma once

// The three involutions of the Klein four-group acting on PSL(2,Z):
//   reciprocal  g -> g^-1
//   reflection  g -> w^-1 g w,       w = diag(1, -1)
//   ambiguous   g -> w^-1 g^-1 w     (composition of the two)
// and the class-level predicates "fixed by" each of them.
//
// Every predicate comes in two forms: a symbolic one that inspects the sign
// sequence directly, and a generic one that applies the word-level map and
// tests conjugacy. Tests cross-check the two.

#include <cstddef>
#include <optional>
#include <string_view>

#include "modgroup/word.hpp"

namespace modgroup {

enum class SymmetryType { reciprocal, inert, ambiguous };

std::string_view to_string(SymmetryType t);

/// g -> g^-1.
ReducedWord reciprocal_map(const ReducedWord& w);

/// Homomorphism A -> A, B -> AB^{-1}A (conjugation by the reflection).
ReducedWord reflection_map(const ReducedWord& w);

/// Anti-homomorphism A -> A, B -> ABA. Reverses the sign sequence of an
/// (AB)-word.
ReducedWord ambiguous_map(const ReducedWord& w);

ReducedWord apply_involution(SymmetryType type, const ReducedWord& w);

/// Anti-period m: s[m + i] = -s[i] for every i (indices mod length).
struct InertWitness {
  std::size_t antiperiod;
  friend bool operator==(const InertWitness&, const InertWitness&) = default;
};

/// Least anti-period in [1, length), if any. Odd lengths never have one.
std::optional<InertWitness> is_inert_symbolic(const SignSequence& s);

/// decode(s) is conjugate to reflection_map(decode(s)).
bool is_inert_generic(const SignSequence& s);

/// Some rotation of s is a palindrome.
bool is_ambiguous_symbolic(const SignSequence& s);

/// decode(s) is conjugate to ambiguous_map(decode(s)).
bool is_ambiguous_generic(const SignSequence& s);

/// decode(s) is conjugate to its inverse.
bool is_reciprocal_generic(const SignSequence& s);

bool is_fixed_by(SymmetryType type, const SignSequence& s);

}  // namespace modgroup
