#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "gencase/ball.hpp"
#include "gencase/rng.hpp"

using namespace gencase;

TEST_CASE("ball counts: closed forms") {
  CHECK(count_ball_all(2, 0) == 1);
  CHECK(count_ball_all(2, 1) == 5);
  CHECK(count_ball_all(2, 2) == 21);
  CHECK(count_ball_all(1, 3) == 15);
  CHECK(count_ball_reduced(2, 0) == 1);
  CHECK(count_ball_reduced(2, 1) == 5);
  CHECK(count_ball_reduced(2, 2) == 17);
  CHECK(count_ball_reduced(1, 5) == 11);  // the line: 2n+1
  CHECK(count_pairs(2, 1) == 9);
  CHECK(count_pairs(2, 0) == 1);
}

TEST_CASE("enumeration counts match the closed forms for k in {1,2,3}, n <= 7") {
  for (int k : {1, 2, 3}) {
    Alphabet alpha(k);
    int nmax = k == 3 ? 6 : 7;  // keep 6^8 out of the default test budget
    for (int n = 0; n <= nmax; ++n) {
      BigInt all = 0, red = 0;
      enumerate_ball(alpha, n, BallMode::All, [&](const Word&) { ++all; });
      enumerate_ball(alpha, n, BallMode::Reduced, [&](const Word& w) {
        CHECK(is_freely_reduced(w));
        ++red;
      });
      CHECK(all == count_ball_all(k, n));
      CHECK(red == count_ball_reduced(k, n));
    }
  }
  // k=3, n=7 via the closed form against a single big enumeration
  Alphabet a3(3);
  BigInt red7 = 0;
  enumerate_ball(a3, 7, BallMode::Reduced, [&](const Word&) { ++red7; });
  CHECK(red7 == count_ball_reduced(3, 7));
}

TEST_CASE("enumeration is shortlex ordered and duplicate-free") {
  Alphabet alpha(2);
  std::vector<Word> words;
  enumerate_ball(alpha, 4, BallMode::All,
                 [&](const Word& w) { words.push_back(w); });
  std::set<std::vector<Letter>> seen;
  for (std::size_t i = 0; i < words.size(); ++i) {
    CHECK(seen.insert(words[i].letters).second);
    if (i > 0) CHECK(shortlex_less(words[i - 1], words[i]));
  }
  // spec'd prefix: eps, a, A, b, B
  CHECK(format_word(words[0]) == "1");
  CHECK(format_word(words[1]) == "a");
  CHECK(format_word(words[2]) == "A");
  CHECK(format_word(words[3]) == "b");
  CHECK(format_word(words[4]) == "B");
}

TEST_CASE("enumerate_ball refuses over budget with a size estimate") {
  Alphabet alpha(2);
  CHECK_THROWS_AS(enumerate_ball(alpha, 20, BallMode::All, [](const Word&) {}, 1000),
                  BudgetError);
  try {
    enumerate_ball(alpha, 20, BallMode::All, [](const Word&) {}, 1000);
  } catch (const BudgetError& e) {
    CHECK(std::string(e.what()).find("words") != std::string::npos);
  }
}

TEST_CASE("samplers are deterministic per seed") {
  Alphabet alpha(3);
  Rng a(123), b(123), c(124);
  Word w1 = sample_word(alpha, 30, a);
  Word w2 = sample_word(alpha, 30, b);
  Word w3 = sample_word(alpha, 30, c);
  CHECK(w1 == w2);
  CHECK(w1 != w3);
  CHECK(sample_word(alpha, 0, a).empty());
  CHECK(sample_reduced_word(alpha, 0, a).empty());
}

TEST_CASE("reduced sampler output is always reduced") {
  Alphabet alpha(2);
  Rng rng(5);
  for (int i = 0; i < 100000; ++i) {
    Word w = sample_reduced_word(alpha, 1 + static_cast<int>(rng.below(8)), rng);
    CHECK(is_freely_reduced(w));
  }
}

namespace {

// chi-square statistic of observed counts against the uniform expectation
double chi_square_uniform(const std::map<std::vector<Letter>, long>& counts,
                          double total, double cells) {
  double expect = total / cells;
  double stat = 0.0;
  long seen_total = 0;
  for (const auto& [w, c] : counts) {
    double d = c - expect;
    stat += d * d / expect;
    seen_total += c;
  }
  // cells never hit still contribute their expectation
  stat += (cells - static_cast<double>(counts.size())) * expect;
  CHECK(seen_total == static_cast<long>(total));
  return stat;
}

void check_sampler_uniform(int k, int n, BallMode mode, double chi2_threshold,
                           std::uint64_t seed) {
  Alphabet alpha(k);
  const long trials = 100000;
  std::map<std::vector<Letter>, long> counts;
  Rng rng(seed);
  for (long i = 0; i < trials; ++i) {
    Word w = mode == BallMode::All ? sample_word(alpha, n, rng)
                                   : sample_reduced_word(alpha, n, rng);
    ++counts[w.letters];
  }
  double cells = mode == BallMode::All
                     ? count_sphere_all(k, n).convert_to<double>()
                     : count_sphere_reduced(k, n).convert_to<double>();
  double stat = chi_square_uniform(counts, trials, cells);
  CHECK(stat < chi2_threshold);
}

}  // namespace

TEST_CASE("sampler distributions pass chi-square at 1e-3") {
  // 0.999 quantiles of chi2 with df = cells - 1
  check_sampler_uniform(2, 1, BallMode::All, 16.266, 11);       // df 3
  check_sampler_uniform(2, 3, BallMode::All, 103.442, 12);      // df 63
  check_sampler_uniform(3, 2, BallMode::All, 66.619, 13);       // df 35
  check_sampler_uniform(2, 1, BallMode::Reduced, 16.266, 14);   // df 3
  check_sampler_uniform(2, 3, BallMode::Reduced, 66.619, 15);   // df 35
  check_sampler_uniform(3, 2, BallMode::Reduced, 58.301, 16);   // df 29
}

TEST_CASE("sphere counts") {
  CHECK(count_sphere_all(2, 3) == 64);
  CHECK(count_sphere_reduced(2, 3) == 36);
  CHECK(count_sphere_reduced(2, 0) == 1);
}
