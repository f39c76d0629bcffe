#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gencase/ball.hpp"
#include "gencase/presentation.hpp"
#include "gencase/rng.hpp"

using namespace gencase;

namespace {

Presentation surface2() {
  return parse_presentation("gens: a b c d\nrels: abABcdCD\n");
}

// all freely reduced identity words of the presentation up to `cap` letters,
// by closing {eps} under relator insertion (BFS oracle for the soundness
// suites; independent of dehn_reduce)
std::set<std::vector<Letter>> identity_words(const Presentation& p, int cap) {
  std::set<std::vector<Letter>> seen{{}};
  std::vector<Word> frontier{Word()};
  std::vector<Word> sym = p.symmetrized();
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (const Word& rho : sym) {
        for (std::size_t pos = 0; pos <= w.size(); ++pos) {
          std::vector<Letter> cand(w.letters.begin(), w.letters.begin() + pos);
          cand.insert(cand.end(), rho.letters.begin(), rho.letters.end());
          cand.insert(cand.end(), w.letters.begin() + pos, w.letters.end());
          Word r = free_reduce(Word(std::move(cand)));
          if (static_cast<int>(r.size()) > cap) continue;
          if (seen.insert(r.letters).second) next.push_back(r);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("presentation text round-trip") {
  Presentation p = surface2();
  CHECK(p.alphabet.k == 4);
  CHECK(p.relators.size() == 1);
  CHECK(format_presentation(p) == "gens: a b c d\nrels: abABcdCD\n");
  CHECK_THROWS_AS(parse_presentation("rels: ab\n"), InvalidInputError);
}

TEST_CASE("symmetrized relator set") {
  Presentation p = surface2();
  auto sym = p.symmetrized();
  CHECK(sym.size() == 16);  // 8 shifts of r and 8 of r^-1
  // proper power: shifts collapse
  Presentation q(Alphabet(1), {parse_word("aaaaaa")});
  CHECK(q.symmetrized().size() == 2);
}

TEST_CASE("small cancellation report") {
  SUBCASE("genus-2 relator is C'(1/6)") {
    auto rep = check_small_cancellation(surface2());
    CHECK(rep.max_piece == 1);
    CHECK(rep.min_relator == 8);
    CHECK(rep.satisfies);
  }
  SUBCASE("a^6 has pieces of length 5") {
    Presentation p(Alphabet(1), {parse_word("aaaaaa")});
    auto rep = check_small_cancellation(p);
    CHECK(rep.max_piece == 5);
    CHECK(!rep.satisfies);
  }
  SUBCASE("no relators: vacuous") {
    Presentation p(Alphabet(2), {});
    auto rep = check_small_cancellation(p);
    CHECK(rep.satisfies);
    CHECK(rep.max_piece == 0);
  }
}

TEST_CASE("dehn reduction on the surface group") {
  Presentation p = surface2();
  SUBCASE("the relator itself dies") {
    CHECK(dehn_reduce(p, parse_word("abABcdCD")).empty());
  }
  SUBCASE("short words are untouched") {
    CHECK(format_word(dehn_reduce(p, parse_word("ab"))) == "ab");
  }
  SUBCASE("empty word") { CHECK(dehn_reduce(p, Word()).empty()); }
  SUBCASE("commutator is exactly half: no replacement fires") {
    CHECK(format_word(dehn_reduce(p, parse_word("abAB"))) == "abAB");
  }
  SUBCASE("output is reduced and has no long relator subword") {
    Alphabet alpha(4);
    Rng rng(9);
    for (int i = 0; i < 2000; ++i) {
      Word w = sample_word(alpha, static_cast<int>(rng.below(16)), rng);
      Word r = dehn_reduce(p, w);
      CHECK(is_freely_reduced(r));
      CHECK(!has_long_relator_subword(p, r));
    }
  }
}

TEST_CASE("dehn agrees with the relator-insertion oracle up to length 6") {
  Presentation p = surface2();
  auto idwords = identity_words(p, 10);
  CHECK(idwords.size() == 17);  // eps and the 16 one-relator conjugacy shifts
  Alphabet alpha(4);
  long disagreements = 0;
  enumerate_ball(alpha, 6, BallMode::Reduced, [&](const Word& w) {
    bool dehn_trivial = dehn_reduce(p, w).empty();
    bool oracle_trivial = idwords.count(w.letters) > 0;
    if (dehn_trivial != oracle_trivial) ++disagreements;
  });
  CHECK(disagreements == 0);
}

TEST_CASE("homomorphism application") {
  SUBCASE("free target: killing a") {
    Homomorphism h = Homomorphism::to_free(2, {Word(), parse_word("a")});
    // F2 -> F1, a |-> 1, b |-> a
    CHECK(format_word(h.apply_free(parse_word("abA"))) == "a");
    CHECK(h.kills(parse_word("aa")));
    CHECK(!h.kills(parse_word("ab")));
  }
  SUBCASE("abelianization") {
    Homomorphism ab = Homomorphism::abelianization(2);
    CHECK(ab.apply_abelian(parse_word("abAB")) == AbelianVector{0, 0});
    CHECK(ab.apply_abelian(parse_word("aaaBB")) == AbelianVector{3, -2});
    CHECK(ab.kills(Word()));
  }
  SUBCASE("moduli") {
    Homomorphism h = Homomorphism::to_abelian(2, {{1}, {1}}, {3});
    CHECK(h.apply_abelian(parse_word("aaa")) == AbelianVector{0});
    CHECK(h.apply_abelian(parse_word("AA")) == AbelianVector{1});
  }
  SUBCASE("arity mismatch") {
    CHECK_THROWS_AS(Homomorphism::to_free(2, {Word()}), InvalidInputError);
  }
}

TEST_CASE("apply_hom is a homomorphism on random pairs") {
  Alphabet alpha(2);
  Homomorphism free_h = Homomorphism::to_free(2, {parse_word("ab"), parse_word("B")});
  Homomorphism ab = Homomorphism::abelianization(2);
  Rng rng(21);
  for (int i = 0; i < 10000; ++i) {
    Word u = sample_word(alpha, static_cast<int>(rng.below(10)), rng);
    Word v = sample_word(alpha, static_cast<int>(rng.below(10)), rng);
    CHECK(free_h.apply_free(concat(u, v)) ==
          product(free_h.apply_free(u), free_h.apply_free(v)));
    AbelianVector xy = ab.apply_abelian(concat(u, v));
    AbelianVector x = ab.apply_abelian(u), y = ab.apply_abelian(v);
    for (std::size_t j = 0; j < xy.size(); ++j) CHECK(xy[j] == x[j] + y[j]);
  }
}

TEST_CASE("quotient validation") {
  Presentation p = surface2();
  Homomorphism ab = Homomorphism::abelianization(4);
  ab.validated_quotient = false;
  ab.validate_quotient(p);  // surface relator is a product of commutators
  CHECK(ab.validated_quotient);

  Homomorphism bad = Homomorphism::to_abelian(2, {{1}, {0}});
  Presentation q(Alphabet(2), {parse_word("a")});
  CHECK_THROWS_AS(bad.validate_quotient(q), InvalidInputError);
}

TEST_CASE("total word-problem oracles") {
  WpOracle f = WpOracle::free_group(2);
  CHECK(f.is_identity(parse_word("aA")));
  CHECK(!f.is_identity(parse_word("ab")));

  WpOracle ab = WpOracle::abelian(Homomorphism::abelianization(2));
  CHECK(ab.is_identity(parse_word("abAB")));
  CHECK(!ab.is_identity(parse_word("aab")));

  WpOracle dehn = WpOracle::dehn(surface2());
  CHECK(dehn.is_identity(parse_word("abABcdCD")));
  CHECK(!dehn.is_identity(parse_word("abAB")));
  CHECK(!dehn.is_identity(parse_word("ab")));

  // refuses non-C'(1/6) input
  CHECK_THROWS_AS(WpOracle::dehn(Presentation(Alphabet(1), {parse_word("aaaaaa")})),
                  InvalidInputError);
}
