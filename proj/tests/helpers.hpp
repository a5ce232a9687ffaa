#pragma once

#include <string>

#include "modgroup/word.hpp"

namespace modgroup::test {

inline SignSequence seq(const std::string& text) { return SignSequence::parse(text); }
inline ReducedWord word(const std::string& text) { return parse_word(text); }

}  // namespace modgroup::test
