#include "doctest.h"
#include "thompson/json_io.hpp"
#include "thompson/normal_word.hpp"
#include "thompson/rng.hpp"
#include "thompson/word.hpp"

using namespace thompson;

TEST_CASE("letter construction enforces the index cap") {
  CHECK(Letter(0, +1).index() == 0);
  CHECK(Letter(kIndexCap, -1).sign() == -1);
  CHECK_THROWS_AS(Letter(kIndexCap + 1, +1), IndexCapError);
  CHECK_THROWS_AS(Letter(3, 0), Error);
}

TEST_CASE("shift moves every index and rejects drops below x0") {
  CHECK(shifted(parse_word("x3"), +2) == parse_word("x5"));
  const Word w = parse_word("x0 x4^-1 x2");
  CHECK(shifted(w, 0) == w);
  CHECK_THROWS_AS(shifted(parse_word("x0 x4^-1"), -1), NegativeIndexError);
  CHECK(shifted(parse_word("x1 x4^-1"), -1) == parse_word("x0 x3^-1"));
}

TEST_CASE("invert reverses and flips signs") {
  CHECK(invert(parse_word("x0 x1^-1")) == parse_word("x1 x0^-1"));
  CHECK(invert(Word{}) == Word{});
  CHECK(invert(parse_word("x2^-1 x3")) == parse_word("x3^-1 x2"));
}

TEST_CASE("concat is purely syntactic") {
  CHECK(concat(parse_word("x0"), parse_word("x1")) == parse_word("x0 x1"));
  CHECK(concat(Word{}, parse_word("x7")) == parse_word("x7"));
  CHECK(concat(parse_word("x1"), parse_word("x1^-1")) ==
        parse_word("x1 x1^-1"));
}

TEST_CASE("as_word flattens pos ascending then neg descending inverted") {
  CHECK(as_word(SeminormalWord{{0, 2}, {0, 1}}) ==
        parse_word("x0 x2 x1^-1 x0^-1"));
  CHECK(as_word(SeminormalWord{}) == Word{});
  CHECK(as_word(SeminormalWord{{1}, {}}) == parse_word("x1"));
}

TEST_CASE("text syntax round-trips") {
  SplitMix64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng.next_below(40), 12, rng);
    CHECK(parse_word(to_text(w)) == w);
  }
  CHECK(parse_word("") == Word{});
  CHECK(parse_word("1") == Word{});
  CHECK(parse_word("  x3   x0^-1 ") == parse_word("x3 x0^-1"));
  CHECK_THROWS_AS(parse_word("y3"), ParseError);
  CHECK_THROWS_AS(parse_word("x"), ParseError);
  CHECK_THROWS_AS(parse_word("x2^-2"), ParseError);
  CHECK_THROWS_AS(parse_word("x2^1"), ParseError);
}

TEST_CASE("invert is an involution and concat adds lengths") {
  SplitMix64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Word u = random_word(rng.next_below(30), 9, rng);
    const Word v = random_word(rng.next_below(30), 9, rng);
    CHECK(invert(invert(u)) == u);
    CHECK(concat(u, v).size() == u.size() + v.size());
  }
}

TEST_CASE("normal word construction checks both conditions") {
  CHECK(NormalWord().empty());
  CHECK_NOTHROW(NormalWord::from_parts({0, 1, 2}, {1}));
  // unsorted run
  CHECK_THROWS_AS(NormalWord::from_parts({2, 0}, {}), NotNormalError);
  // x2 and x2^-1 occur but neither x3 nor x3^-1 does
  CHECK_THROWS_AS(NormalWord::from_parts({2}, {2}), NotNormalError);
  // anchored by the next index on either side
  CHECK_NOTHROW(NormalWord::from_parts({2, 3}, {2}));
  CHECK_NOTHROW(NormalWord::from_parts({2}, {2, 3}));
}

TEST_CASE("normal word inverse swaps the parts") {
  const NormalWord w = NormalWord::from_parts({0, 1, 2}, {1});
  const NormalWord inv = inverse(w);
  CHECK(inv.pos() == std::vector<Index>{1});
  CHECK(inv.neg() == std::vector<Index>{0, 1, 2});
  CHECK(inverse(inv) == w);
}

TEST_CASE("canonical JSON round-trips and rejects non-canonical input") {
  const NormalWord w = NormalWord::from_parts({0, 2}, {1});
  CHECK(to_canonical_json(w) == R"({"pos":[0,2],"neg":[1]})");
  CHECK(normal_word_from_json_text(to_canonical_json(w)) == w);
  CHECK(to_canonical_json(NormalWord()) == R"({"pos":[],"neg":[]})");

  CHECK_THROWS_AS(normal_word_from_json_text(R"({"pos":[2,0],"neg":[]})"),
                  NotNormalError);
  CHECK_THROWS_AS(normal_word_from_json_text(R"({"pos":[2],"neg":[2]})"),
                  NotNormalError);
  CHECK_THROWS_AS(normal_word_from_json_text(R"({"pos":[1]})"), ParseError);
  CHECK_THROWS_AS(normal_word_from_json_text(R"({"pos":[-1],"neg":[]})"),
                  ParseError);
  CHECK_THROWS_AS(normal_word_from_json_text("[1,2]"), ParseError);
  CHECK_THROWS_AS(normal_word_from_json_text("not json"), ParseError);
}
