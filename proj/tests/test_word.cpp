#include <doctest.h>

#include "growthlab/errors.hpp"
#include "growthlab/word.hpp"

using namespace growthlab;

TEST_CASE("free reduction on products") {
  Word ab = Word::parse("ab", 3);
  Word Bc = Word::parse("b^-1 c", 3);
  CHECK((ab * Bc) == Word::parse("ac", 3));

  Word w = Word::parse("abac", 3);
  CHECK((w * w.inverse()).empty());
  CHECK((w.inverse() * w).empty());
}

TEST_CASE("hand-reduced product oracle") {
  // (a b a^-1) * (a b) = a b b
  Word x = Word::parse("aba^-1", 2);
  Word y = Word::parse("ab", 2);
  CHECK((x * y) == Word::parse("abb", 2));
  CHECK((x * y).str() == "abb");
}

TEST_CASE("parser forms agree") {
  CHECK(Word::parse("aB", 2) == Word::parse("a b^-1", 2));
  CHECK(Word::parse("a^3", 2).length() == 3);
  CHECK(Word::parse("a^-2", 2) == Word::parse("AA", 2));
  CHECK(Word::parse("e", 2).empty());
  CHECK_THROWS_AS(Word::parse("z", 2), UsageError);
}

TEST_CASE("prefix helpers") {
  Word u = Word::parse("abab", 2);
  Word v = Word::parse("abba", 2);
  CHECK(u.common_prefix(v) == 2);
  CHECK(u.prefix(2) == Word::parse("ab", 2));
}
