#include "modgroup/word.hpp"

#include <algorithm>
#include <cctype>

#include "modgroup/errors.hpp"

namespace modgroup {

ReducedWord ReducedWord::from_letters(std::span<const Letter> letters) {
  ReducedWord w;
  w.letters_.reserve(letters.size());
  for (Letter l : letters) w.push_back(l);
  return w;
}

void ReducedWord::push_back(Letter l) {
  if (letters_.empty()) {
    letters_.push_back(l);
    return;
  }
  const Letter top = letters_.back();
  if (l == Letter::A) {
    if (top == Letter::A) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
    return;
  }
  if (top == Letter::A) {
    letters_.push_back(l);
  } else if (top == l) {
    // BB = B^-1 and B^-1 B^-1 = B; the letter below is A, so no cascade.
    letters_.back() = inverse(l);
  } else {
    letters_.pop_back();
  }
}

ReducedWord parse_word(std::string_view text) {
  ReducedWord w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    switch (ch) {
      case 'A':
        w.push_back(Letter::A);
        break;
      case 'B':
        w.push_back(Letter::B);
        break;
      case 'b':
        w.push_back(Letter::Binv);
        break;
      default:
        if (std::isspace(static_cast<unsigned char>(ch))) break;
        throw ParseError(i, "unknown token '" + std::string(1, ch) + "' at position " +
                                std::to_string(i));
    }
  }
  return w;
}

std::string format_word(const ReducedWord& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    out.push_back(l == Letter::A ? 'A' : l == Letter::B ? 'B' : 'b');
  }
  return out;
}

std::string format_word_pretty(const ReducedWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (Letter l : w.letters()) {
    out += l == Letter::A ? "A" : l == Letter::B ? "B" : "B^{-1}";
  }
  return out;
}

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v) {
  ReducedWord out = u;
  for (Letter l : v.letters()) out.push_back(l);
  return out;
}

ReducedWord operator*(const ReducedWord& u, const ReducedWord& v) { return multiply(u, v); }

ReducedWord invert(const ReducedWord& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : letters) l = inverse(l);
  return ReducedWord::from_letters(letters);
}

ReducedWord power(const ReducedWord& w, std::size_t exponent) {
  ReducedWord out;
  for (std::size_t i = 0; i < exponent; ++i) out = out * w;
  return out;
}

bool is_cyclically_reduced(const ReducedWord& w) {
  if (w.size() <= 1) return true;
  return is_b_letter(w.front()) != is_b_letter(w.back());
}

ReducedWord rotate_letters(const ReducedWord& w, std::size_t k) {
  if (w.empty()) return w;
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k % letters.size()),
              letters.end());
  return ReducedWord::from_letters(letters);
}

CyclicReduction cyclically_reduce(const ReducedWord& w) {
  CyclicReduction result{w, ReducedWord{}};
  while (!is_cyclically_reduced(result.core)) {
    ReducedWord c;
    c.push_back(result.core.front());
    result.core = invert(c) * result.core * c;
    result.conjugator = result.conjugator * c;
  }
  return result;
}

bool are_conjugate(const ReducedWord& u, const ReducedWord& v) {
  const ReducedWord cu = cyclically_reduce(u).core;
  const ReducedWord cv = cyclically_reduce(v).core;
  if (cu.size() != cv.size()) return false;
  if (cu.size() <= 1) return cu == cv;
  std::vector<Letter> doubled(cu.letters().begin(), cu.letters().end());
  doubled.insert(doubled.end(), cu.letters().begin(), cu.letters().end());
  return std::search(doubled.begin(), doubled.end(), cv.letters().begin(), cv.letters().end()) !=
         doubled.end();
}

}  // namespace modgroup
