#pragma once

// Reduced-word arithmetic in Z2 * Z3 = <A, B | A^2 = B^3 = 1> and the
// sign-sequence encoding of (AB)-words AB^{s1} AB^{s2} ... AB^{st}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace modgroup {

enum class Letter : std::uint8_t { A, B, Binv };

constexpr bool is_b_letter(Letter l) { return l != Letter::A; }

constexpr Letter inverse(Letter l) {
  switch (l) {
    case Letter::B:
      return Letter::Binv;
    case Letter::Binv:
      return Letter::B;
    default:
      return Letter::A;
  }
}

/// A word with no adjacent letters from the same free factor. The empty word
/// is the identity.
class ReducedWord {
 public:
  ReducedWord() = default;

  /// Multiplies the letters out, applying A^2 = B^3 = 1.
  static ReducedWord from_letters(std::span<const Letter> letters);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  /// Right-multiplies by a single letter, keeping the word reduced.
  void push_back(Letter l);

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Parses `A`, `B`, `b` (= B^-1); whitespace is ignored. Throws ParseError.
ReducedWord parse_word(std::string_view text);

/// Machine format, the inverse of parse_word. The identity formats as "".
std::string format_word(const ReducedWord& w);

/// Human-readable exponent form, e.g. "AB^{-1}AB"; the identity is "e".
std::string format_word_pretty(const ReducedWord& w);

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v);
ReducedWord operator*(const ReducedWord& u, const ReducedWord& v);
ReducedWord invert(const ReducedWord& w);
ReducedWord power(const ReducedWord& w, std::size_t exponent);

bool is_cyclically_reduced(const ReducedWord& w);

/// Rotation of the letter sequence: moves the first k letters to the end.
/// The caller is responsible for the result being reduced (true whenever w is
/// cyclically reduced).
ReducedWord rotate_letters(const ReducedWord& w, std::size_t k);

struct CyclicReduction {
  ReducedWord core;
  ReducedWord conjugator;  // w = conjugator * core * conjugator^-1
};

CyclicReduction cyclically_reduce(const ReducedWord& w);

/// Conjugacy in Z2 * Z3: cyclically reduced cores agree up to letter rotation.
bool are_conjugate(const ReducedWord& u, const ReducedWord& v);

// ---------------------------------------------------------------------------

enum class Sign : std::int8_t { plus = 1, minus = -1 };

constexpr Sign operator-(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// Non-empty sequence over {+1, -1}, bit-packed one sign per bit. Sequences of
/// length <= 64 occupy a single machine word laid out as in packed.hpp.
class SignSequence {
 public:
  static SignSequence from_signs(std::span<const Sign> signs);
  /// Parses a string over `+`/`-`. Throws ParseError.
  static SignSequence parse(std::string_view text);
  static SignSequence from_packed(std::uint64_t bits, std::size_t length);

  std::size_t size() const { return size_; }
  Sign operator[](std::size_t i) const;
  void set(std::size_t i, Sign s);

  bool fits_packed() const { return size_ <= 64; }
  /// Requires fits_packed().
  std::uint64_t packed() const;

  SignSequence negated() const;
  SignSequence reversed() const;
  bool is_constant() const;

  std::string to_string() const;

  friend bool operator==(const SignSequence&, const SignSequence&) = default;
  /// Lexicographic with +1 ordered before -1.
  friend std::strong_ordering operator<=>(const SignSequence& a, const SignSequence& b);

 private:
  explicit SignSequence(std::size_t size);

  std::vector<std::uint64_t> chunks_;
  std::size_t size_ = 0;
};

/// result[i] = s[i - k], indices mod length; negative k rotates the other way.
SignSequence rotate(const SignSequence& s, long long k);

/// Canonical representative of a rotation class: the least rotation.
class ClassRep {
 public:
  const SignSequence& sequence() const { return canonical_; }
  std::size_t size() const { return canonical_.size(); }

  friend bool operator==(const ClassRep&, const ClassRep&) = default;
  friend auto operator<=>(const ClassRep& a, const ClassRep& b) {
    return a.canonical_ <=> b.canonical_;
  }

 private:
  explicit ClassRep(SignSequence s) : canonical_(std::move(s)) {}
  friend ClassRep canonical_rotation(const SignSequence& s);
  friend ClassRep class_rep_unchecked(SignSequence s);

  SignSequence canonical_;
};

ClassRep canonical_rotation(const SignSequence& s);

/// Wraps a sequence already known to be canonical (the enumeration fast path).
ClassRep class_rep_unchecked(SignSequence s);

/// Smallest d | length with rotate(s, d) == s.
std::size_t period(const SignSequence& s);

struct PrimitiveRoot {
  SignSequence root;
  std::size_t exponent;
};

PrimitiveRoot primitive_root(const SignSequence& s);

/// AB^{s1} AB^{s2} ... AB^{st}.
ReducedWord decode(const SignSequence& s);

/// Sign sequence of the (AB)-word conjugate to w. The word is cyclically
/// reduced first and rotated by one letter if it starts with B^{+-1}; the
/// decoded result is a rotation of that core. Throws NotABWord when the core
/// is empty or of odd length (conjugate to a generator power).
SignSequence to_sign_sequence(const ReducedWord& w);

}  // namespace modgroup
