#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gencase/ball.hpp"
#include "gencase/rng.hpp"
#include "gencase/word.hpp"

using namespace gencase;

TEST_CASE("free reduction basics") {
  CHECK(free_reduce(parse_word("aA")).empty());
  CHECK(format_word(free_reduce(parse_word("abBa"))) == "aa");
  CHECK(format_word(free_reduce(parse_word("abA"))) == "abA");
  CHECK(free_reduce(Word()).empty());
}

TEST_CASE("free reduction rejects bad letters") {
  Alphabet a2(2);
  CHECK_THROWS_AS(free_reduce(parse_word("abc"), a2), InvalidInputError);
  CHECK_THROWS_AS((void)Alphabet(0), InvalidInputError);
}

TEST_CASE("reduce is idempotent and length-nonincreasing on random words") {
  Alphabet alpha(2);
  Rng rng(42);
  for (int i = 0; i < 100000; ++i) {
    Word w = sample_word(alpha, 1 + static_cast<int>(rng.below(12)), rng);
    Word r = free_reduce(w);
    CHECK(r.size() <= w.size());
    CHECK(free_reduce(r) == r);
    CHECK(is_freely_reduced(r));
  }
}

TEST_CASE("reduction is a congruence: reduce(uv) = reduce(reduce(u)reduce(v))") {
  // exhaustive over |u|,|v| <= 6 would be 4^12 pairs; sample the same claim
  // densely and check the short exhaustive core
  Alphabet alpha(2);
  std::vector<Word> shorts;
  enumerate_ball(alpha, 3, BallMode::All,
                 [&](const Word& w) { shorts.push_back(w); });
  for (const Word& u : shorts)
    for (const Word& v : shorts)
      CHECK(free_reduce(concat(u, v)) ==
            free_reduce(concat(free_reduce(u), free_reduce(v))));
  Rng rng(7);
  for (int i = 0; i < 20000; ++i) {
    Word u = sample_word(alpha, static_cast<int>(rng.below(7)), rng);
    Word v = sample_word(alpha, static_cast<int>(rng.below(7)), rng);
    CHECK(free_reduce(concat(u, v)) ==
          free_reduce(concat(free_reduce(u), free_reduce(v))));
  }
}

TEST_CASE("word text format round-trips") {
  Alphabet alpha(3);
  CHECK(format_word(Word()) == "1");
  CHECK(parse_word("1").empty());
  CHECK(format_word(parse_word("aBcA")) == "aBcA");
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    Word w = sample_word(alpha, static_cast<int>(rng.below(20)), rng);
    CHECK(parse_word(format_word(w)) == w);
  }
  CHECK_THROWS_AS(parse_word("a b"), InvalidInputError);
}

TEST_CASE("shortlex order: +1 < -1 < +2 < -2") {
  CHECK(shortlex_less(parse_word("a"), parse_word("A")));
  CHECK(shortlex_less(parse_word("A"), parse_word("b")));
  CHECK(shortlex_less(parse_word("b"), parse_word("B")));
  CHECK(shortlex_less(parse_word("B"), parse_word("aa")));
  CHECK(!shortlex_less(parse_word("aa"), parse_word("aa")));
}

TEST_CASE("cyclic reduction and free conjugacy") {
  CHECK(format_word(cyclic_reduce(parse_word("aBbA"))) == "1");
  CHECK(format_word(cyclic_reduce(parse_word("abA"))) == "b");
  CHECK(free_conjugate(parse_word("ab"), parse_word("ba")));
  CHECK(!free_conjugate(parse_word("a"), parse_word("b")));
  CHECK(!free_conjugate(parse_word("a"), parse_word("A")));
  CHECK(free_conjugate(parse_word("aab"), parse_word("baa")));
  CHECK(!free_conjugate(parse_word("aab"), parse_word("abab")));
}

TEST_CASE("inverse and product") {
  Word w = parse_word("abA");
  CHECK(format_word(word_inverse(w)) == "aBA");
  CHECK(free_reduce(concat(w, word_inverse(w))).empty());
  CHECK(format_word(product(parse_word("ab"), parse_word("Ba"))) == "aa");
}
