#include <algorithm>

#include "modgroup/errors.hpp"
#include "modgroup/packed.hpp"
#include "modgroup/word.hpp"

namespace modgroup {

namespace {

constexpr std::size_t kChunkBits = 64;

std::size_t chunk_count(std::size_t n) { return (n + kChunkBits - 1) / kChunkBits; }

}  // namespace

SignSequence::SignSequence(std::size_t size) : chunks_(chunk_count(size), 0), size_(size) {
  if (size == 0) throw DomainError("sign sequences must be non-empty");
}

SignSequence SignSequence::from_signs(std::span<const Sign> signs) {
  SignSequence s(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) s.set(i, signs[i]);
  return s;
}

SignSequence SignSequence::parse(std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty sign sequence");
  SignSequence s(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+') {
      s.set(i, Sign::plus);
    } else if (text[i] == '-') {
      s.set(i, Sign::minus);
    } else {
      throw ParseError(i, "unknown sign '" + std::string(1, text[i]) + "' at position " +
                              std::to_string(i));
    }
  }
  return s;
}

SignSequence SignSequence::from_packed(std::uint64_t bits, std::size_t length) {
  if (length == 0 || length > packed::kMaxLength) {
    throw DomainError("packed sign sequences have length 1..64");
  }
  SignSequence s(length);
  s.chunks_[0] = (bits & packed::mask(static_cast<unsigned>(length))) << (kChunkBits - length);
  return s;
}

Sign SignSequence::operator[](std::size_t i) const {
  const bool bit = (chunks_[i / kChunkBits] >> (kChunkBits - 1 - i % kChunkBits)) & 1U;
  return bit ? Sign::minus : Sign::plus;
}

void SignSequence::set(std::size_t i, Sign sign) {
  const std::uint64_t bit = std::uint64_t{1} << (kChunkBits - 1 - i % kChunkBits);
  if (sign == Sign::minus) {
    chunks_[i / kChunkBits] |= bit;
  } else {
    chunks_[i / kChunkBits] &= ~bit;
  }
}

std::uint64_t SignSequence::packed() const {
  if (!fits_packed()) throw DomainError("sign sequence longer than 64 has no packed form");
  return chunks_[0] >> (kChunkBits - size_);
}

SignSequence SignSequence::negated() const {
  SignSequence out = *this;
  for (std::size_t i = 0; i < size_; ++i) out.set(i, -(*this)[i]);
  return out;
}

SignSequence SignSequence::reversed() const {
  SignSequence out = *this;
  for (std::size_t i = 0; i < size_; ++i) out.set(i, (*this)[size_ - 1 - i]);
  return out;
}

bool SignSequence::is_constant() const {
  for (std::size_t i = 1; i < size_; ++i) {
    if ((*this)[i] != (*this)[0]) return false;
  }
  return true;
}

std::string SignSequence::to_string() const {
  std::string out(size_, '+');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i] == Sign::minus) out[i] = '-';
  }
  return out;
}

std::strong_ordering operator<=>(const SignSequence& a, const SignSequence& b) {
  if (auto c = a.chunks_ <=> b.chunks_; c != 0) return c;
  return a.size_ <=> b.size_;
}

SignSequence rotate(const SignSequence& s, long long k) {
  const auto n = static_cast<long long>(s.size());
  const auto shift = static_cast<std::size_t>(((k % n) + n) % n);
  if (s.fits_packed()) {
    return SignSequence::from_packed(
        packed::rotate(s.packed(), static_cast<unsigned>(n), static_cast<unsigned>(shift)),
        s.size());
  }
  SignSequence out = s;
  for (std::size_t i = 0; i < s.size(); ++i) out.set((i + shift) % s.size(), s[i]);
  return out;
}

ClassRep canonical_rotation(const SignSequence& s) {
  if (s.fits_packed()) {
    const auto n = static_cast<unsigned>(s.size());
    return ClassRep(SignSequence::from_packed(packed::canonical(s.packed(), n), s.size()));
  }
  SignSequence best = s;
  for (std::size_t k = 1; k < s.size(); ++k) {
    SignSequence r = rotate(s, static_cast<long long>(k));
    if (r < best) best = std::move(r);
  }
  return ClassRep(std::move(best));
}

ClassRep class_rep_unchecked(SignSequence s) { return ClassRep(std::move(s)); }

std::size_t period(const SignSequence& s) {
  if (s.fits_packed()) {
    return packed::period(s.packed(), static_cast<unsigned>(s.size()));
  }
  for (std::size_t d = 1; d < s.size(); ++d) {
    if (s.size() % d == 0 && rotate(s, static_cast<long long>(d)) == s) return d;
  }
  return s.size();
}

PrimitiveRoot primitive_root(const SignSequence& s) {
  const std::size_t d = period(s);
  std::vector<Sign> head;
  head.reserve(d);
  for (std::size_t i = 0; i < d; ++i) head.push_back(s[i]);
  return {SignSequence::from_signs(head), s.size() / d};
}

ReducedWord decode(const SignSequence& s) {
  ReducedWord w;
  for (std::size_t i = 0; i < s.size(); ++i) {
    w.push_back(Letter::A);
    w.push_back(s[i] == Sign::plus ? Letter::B : Letter::Binv);
  }
  return w;
}

SignSequence to_sign_sequence(const ReducedWord& w) {
  ReducedWord core = cyclically_reduce(w).core;
  if (core.empty()) throw NotABWord("the identity has no (AB)-form");
  if (core.size() % 2 != 0) {
    throw NotABWord("word is conjugate to a generator power (" + format_word(core) +
                    ") and has no (AB)-form");
  }
  if (is_b_letter(core.front())) core = rotate_letters(core, 1);
  const auto letters = core.letters();
  std::vector<Sign> signs;
  signs.reserve(letters.size() / 2);
  for (std::size_t i = 1; i < letters.size(); i += 2) {
    signs.push_back(letters[i] == Letter::B ? Sign::plus : Sign::minus);
  }
  return SignSequence::from_signs(signs);
}

}  // namespace modgroup
