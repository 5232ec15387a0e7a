#include <doctest.h>

#include "howson/errors.hpp"
#include "howson/expression.hpp"
#include "howson/word.hpp"

using namespace howson;

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  CHECK(Word(2, {1, 2, -2, -1}).is_identity());
  CHECK(Word(2, {1, 2, -2, 2}) == Word(2, {1, 2}));
  CHECK(Word(2, {-1, 1, 1}).length() == 1);
  CHECK_THROWS_AS(Word(2, {3}), AlphabetError);
  CHECK_THROWS_AS(Word(2, {0}), AlphabetError);
}

TEST_CASE("group operations") {
  Word const a = Word::generator(2, 1);
  Word const b = Word::generator(2, 2);
  Word const w = a * b * invert(a);
  CHECK((w * invert(w)).is_identity());
  CHECK(invert(invert(w)) == w);
  CHECK(power(w, 3) == a * power(b, 3) * invert(a));
  CHECK(power(w, -2) == invert(power(w, 2)));
  CHECK(power(w, 0).is_identity());
  CHECK_THROWS_AS(a * Word::generator(3, 1), AlphabetError);
}

TEST_CASE("both text spellings parse to the same word") {
  CHECK(parse_word("a b^-1 a", 2) == parse_word("aBa", 2));
  CHECK(parse_word("(a b)^2", 2) == parse_word("abab", 2));
  CHECK(parse_word("a^{-2} * b", 2) == Word(2, {-1, -1, 2}));
  CHECK(parse_word("1", 2).is_identity());
  CHECK(parse_word("x1 x2^-1 x1", 2) == parse_word("aBa", 2));
  CHECK(to_string(parse_word("a b^-1 a", 2)) == "aBa");
  CHECK(to_string(Word(2)) == "1");
}

TEST_CASE("large ranks use indexed names") {
  CHECK(generator_name(1, 19) == "a");
  CHECK(generator_name(19, 19) == "s");
  CHECK(generator_name(3, 20) == "x3");
  CHECK(generator_index("x20", 20) == 20);
  CHECK_FALSE(generator_index("t", 2).has_value());
  CHECK_FALSE(generator_index("x3", 2).has_value());
  Word w = parse_word("x3 x20^-1", 20);
  CHECK(to_string(w) == "x3 x20^-1");
  CHECK(parse_word(to_string(w), 20) == w);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_word("c", 2), ParseError);
  CHECK_THROWS_AS(parse_word("(a", 2), ParseError);
  CHECK_THROWS_AS(parse_word("a^", 2), ParseError);
  CHECK_THROWS_AS(parse_word("a $", 2), ParseError);
  CHECK_THROWS_AS(expand_expression("a^1000000000"), ParseError);
}

TEST_CASE("expression expansion") {
  auto s = expand_expression("(t b)^-2 k1");
  REQUIRE(s.size() == 5);
  CHECK(s[0] == Symbol{"b", true});
  CHECK(s[1] == Symbol{"t", true});
  CHECK(s[4] == Symbol{"k1", false});
  CHECK(expand_expression("T").front() == Symbol{"t", true});
}

TEST_CASE("shortlex order") {
  CHECK(parse_word("b", 2) < parse_word("aa", 2));
  CHECK(parse_word("a", 2) < parse_word("A", 2));
  CHECK(parse_word("A", 2) < parse_word("b", 2));
}
