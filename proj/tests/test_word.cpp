#include "doctest.h"
#include "helpers.hpp"
#include "modgroup/errors.hpp"

using namespace modgroup;
using modgroup::test::seq;
using modgroup::test::word;

TEST_SUITE("word") {
  TEST_CASE("parse reduces generator powers") {
    CHECK(word("AA").empty());
    CHECK(format_word(word("BB")) == "b");
    CHECK(format_word(word("ABAb")) == "ABAb");
    CHECK(word("BBB").empty());
    CHECK(word("Bb").empty());
    CHECK(format_word(word("A B  A b")) == "ABAb");
  }

  TEST_CASE("parse error names the position") {
    try {
      parse_word("ABxA");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
    }
  }

  TEST_CASE("pretty format") {
    CHECK(format_word_pretty(word("AB")) == "AB");
    CHECK(format_word_pretty(word("Ab")) == "AB^{-1}");
    CHECK(format_word_pretty(ReducedWord{}) == "e");
  }

  TEST_CASE("multiply") {
    CHECK((word("AB") * word("bA")).empty());
    CHECK(format_word(word("AB") * word("BA")) == "AbA");
    CHECK(ReducedWord{} * word("ABAb") == word("ABAb"));
  }

  TEST_CASE("invert") {
    CHECK(invert(word("A")) == word("A"));
    CHECK(invert(word("AB")) == word("bA"));
    CHECK(invert(word("ABAbAB")) == word("bAB" "AbA"));
  }

  TEST_CASE("power") {
    CHECK(power(word("B"), 3).empty());
    CHECK(power(word("AB"), 2) == word("ABAB"));
    CHECK(power(word("AB"), 0).empty());
  }

  TEST_CASE("cyclically reduce") {
    const CyclicReduction a = cyclically_reduce(word("BAb"));
    CHECK(a.core == word("A"));
    CHECK(a.conjugator == word("B"));

    const CyclicReduction b = cyclically_reduce(word("ABAb"));
    CHECK(b.core == word("ABAb"));
    CHECK(b.conjugator.empty());

    const ReducedWord w = word("b") * word("ABAb") * word("B");
    const CyclicReduction c = cyclically_reduce(w);
    CHECK(is_cyclically_reduced(c.core));
    CHECK(c.core.size() == 4);
    CHECK(are_conjugate(c.core, word("ABAb")));
    CHECK(c.conjugator * c.core * invert(c.conjugator) == w);
  }

  TEST_CASE("conjugacy") {
    CHECK(are_conjugate(word("ABAb"), word("b") * word("ABAb") * word("B")));
    CHECK_FALSE(are_conjugate(word("AB"), word("Ab")));
    CHECK(are_conjugate(word("ABAb"), word("AbAB")));
    CHECK(are_conjugate(word("AB"), word("BA")));
    CHECK_FALSE(are_conjugate(word("B"), word("b")));
    CHECK(are_conjugate(ReducedWord{}, ReducedWord{}));
  }

  TEST_CASE("sign sequence of a word") {
    CHECK(to_sign_sequence(word("ABAb")) == seq("+-"));
    CHECK(to_sign_sequence(word("AB")) == seq("+"));
    CHECK(to_sign_sequence(word("BA")) == seq("+"));
    CHECK_THROWS_AS(to_sign_sequence(ReducedWord{}), NotABWord);
    CHECK_THROWS_AS(to_sign_sequence(word("A")), NotABWord);
    CHECK_THROWS_AS(to_sign_sequence(word("BAb")), NotABWord);
  }

  TEST_CASE("decode") {
    CHECK(decode(seq("+-")) == word("ABAb"));
    CHECK(decode(seq("+")) == word("AB"));
    CHECK(is_cyclically_reduced(decode(seq("++-+-"))));
    CHECK(decode(seq("+--+")).size() == 8);
  }
}

TEST_SUITE("sign_sequence") {
  TEST_CASE("parse and print") {
    CHECK(seq("+-+").to_string() == "+-+");
    CHECK(seq("+-+").size() == 3);
    CHECK(seq("+-+")[1] == Sign::minus);
    CHECK_THROWS_AS(seq(""), ParseError);
    CHECK_THROWS_AS(seq("+x"), ParseError);
  }

  TEST_CASE("long sequences span several chunks") {
    std::string text;
    for (int i = 0; i < 150; ++i) text += i % 3 == 0 ? '-' : '+';
    const SignSequence s = seq(text);
    CHECK(s.to_string() == text);
    CHECK_FALSE(s.fits_packed());
    CHECK(rotate(s, 150) == s);
    CHECK(rotate(rotate(s, 7), -7) == s);
    CHECK(period(s) == 3);
    CHECK(canonical_rotation(rotate(s, 5)) == canonical_rotation(s));
  }

  TEST_CASE("rotate") {
    CHECK(rotate(seq("+-+-"), 1) == seq("-+-+"));
    CHECK(rotate(seq("++-+-"), 5) == seq("++-+-"));
    CHECK(rotate(seq("++--"), 2) == seq("--++"));
    CHECK(rotate(seq("++-"), 1) == seq("-++"));
  }

  TEST_CASE("canonical rotation") {
    CHECK(canonical_rotation(seq("-++-")).sequence() == seq("++--"));
    CHECK(canonical_rotation(seq("+++")).sequence() == seq("+++"));
    CHECK(canonical_rotation(seq("-+")).sequence() == seq("+-"));
  }

  TEST_CASE("order puts plus first") {
    CHECK(seq("+-") < seq("-+"));
    CHECK(seq("++") < seq("+-"));
  }

  TEST_CASE("period") {
    CHECK(period(seq("+-+-")) == 2);
    CHECK(period(seq("++--")) == 4);
    CHECK(period(seq("+++")) == 1);
  }

  TEST_CASE("primitive root") {
    const PrimitiveRoot a = primitive_root(seq("+-+-"));
    CHECK(a.root == seq("+-"));
    CHECK(a.exponent == 2);
    const PrimitiveRoot b = primitive_root(seq("++--"));
    CHECK(b.root == seq("++--"));
    CHECK(b.exponent == 1);
    const PrimitiveRoot c = primitive_root(seq("++++++"));
    CHECK(c.root == seq("+"));
    CHECK(c.exponent == 6);
  }

  TEST_CASE("negate and reverse") {
    CHECK(seq("++-").negated() == seq("--+"));
    CHECK(seq("++-").reversed() == seq("-++"));
    CHECK(seq("---").is_constant());
    CHECK_FALSE(seq("--+").is_constant());
  }
}
