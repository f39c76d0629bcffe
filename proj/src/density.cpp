#include "gencase/density.hpp"

#include <algorithm>
#include <cmath>

#include "gencase/rng.hpp"

namespace gencase {

DensityPoint density_exact(const WordPred& pred, int k, int n, BallMode mode,
                           std::uint64_t budget) {
  Alphabet alpha(k);
  BigInt den = mode == BallMode::All ? count_ball_all(k, n)
                                     : count_ball_reduced(k, n);
  if (den > BigInt(budget))
    throw BudgetError("density_exact: ball has " + den.str() +
                      " words, budget " + std::to_string(budget) +
                      "; use density_mc");
  BigInt num = 0;
  enumerate_ball(alpha, n, mode, [&](const Word& w) {
    if (pred(w)) ++num;
  }, budget);
  DensityPoint p;
  p.n = n;
  p.method = DensityMethod::Exact;
  p.mode = mode == BallMode::All ? DensityMode::AllWords : DensityMode::ReducedWords;
  p.numerator = num;
  p.denominator = den;
  p.value = num.convert_to<double>() / den.convert_to<double>();
  return p;
}

namespace {

// cumulative sphere weights for drawing a length with P(i) ~ |sphere_i|
std::vector<long double> sphere_cdf(int k, int n, BallMode mode) {
  std::vector<long double> cum(n + 1);
  long double acc = 0.0L;
  for (int i = 0; i <= n; ++i) {
    long double si =
        mode == BallMode::All
            ? powl(static_cast<long double>(2 * k), i)
            : (i == 0 ? 1.0L
                      : 2.0L * k * powl(static_cast<long double>(2 * k - 1), i - 1));
    acc += si;
    cum[i] = acc;
  }
  for (auto& c : cum) c /= acc;
  return cum;
}

int draw_length(const std::vector<long double>& cdf, Rng& rng) {
  long double u = static_cast<long double>(rng.uniform01());
  auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
  return static_cast<int>(it - cdf.begin());
}

}  // namespace

DensityPoint density_mc(const WordPred& pred, int k, int n, std::int64_t trials,
                        std::uint64_t seed, BallMode mode) {
  if (trials < 100) throw InvalidInputError("density_mc: trials >= 100");
  Alphabet alpha(k);
  auto cdf = sphere_cdf(k, n, mode);
  std::int64_t hits = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
    int len = draw_length(cdf, rng);
    Word w = mode == BallMode::All ? sample_word(alpha, len, rng)
                                   : sample_reduced_word(alpha, len, rng);
    hits += pred(w);
  }
  DensityPoint p;
  p.n = n;
  p.method = DensityMethod::MonteCarlo;
  p.mode = mode == BallMode::All ? DensityMode::AllWords : DensityMode::ReducedWords;
  p.trials = trials;
  p.value = static_cast<double>(hits) / static_cast<double>(trials);
  p.stderr_ = std::sqrt(p.value * (1.0 - p.value) / static_cast<double>(trials));
  return p;
}

DensityPoint pair_density_exact(const PairPred& pred, int k, int n,
                                std::uint64_t budget) {
  Alphabet alpha(k);
  BigInt den = count_pairs(k, n);
  if (den > BigInt(budget))
    throw BudgetError("pair_density_exact: " + den.str() + " pairs, budget " +
                      std::to_string(budget) + "; use pair_density_mc");
  BigInt num = 0;
  // every pair with |w1|+|w2| = i is a split of one length-i word; visiting
  // splits of each word covers each pair exactly once
  enumerate_ball(alpha, n, BallMode::All, [&](const Word& w) {
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
      Word w1(std::vector<Letter>(w.letters.begin(), w.letters.begin() + cut));
      Word w2(std::vector<Letter>(w.letters.begin() + cut, w.letters.end()));
      if (pred(w1, w2)) ++num;
    }
  }, budget);
  DensityPoint p;
  p.n = n;
  p.method = DensityMethod::Exact;
  p.mode = DensityMode::Pairs;
  p.numerator = num;
  p.denominator = den;
  p.value = num.convert_to<double>() / den.convert_to<double>();
  return p;
}

DensityPoint pair_density_mc(const PairPred& pred, int k, int n,
                             std::int64_t trials, std::uint64_t seed) {
  if (trials < 100) throw InvalidInputError("pair_density_mc: trials >= 100");
  Alphabet alpha(k);
  // lengths weighted by (i+1) (2k)^i, then a uniform word and uniform cut
  std::vector<long double> cdf(n + 1);
  long double acc = 0.0L;
  for (int i = 0; i <= n; ++i) {
    acc += (i + 1) * powl(static_cast<long double>(2 * k), i);
    cdf[i] = acc;
  }
  for (auto& c : cdf) c /= acc;
  std::int64_t hits = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
    int len = draw_length(cdf, rng);
    Word w = sample_word(alpha, len, rng);
    int cut = static_cast<int>(rng.below(static_cast<std::uint64_t>(len) + 1));
    Word w1(std::vector<Letter>(w.letters.begin(), w.letters.begin() + cut));
    Word w2(std::vector<Letter>(w.letters.begin() + cut, w.letters.end()));
    hits += pred(w1, w2);
  }
  DensityPoint p;
  p.n = n;
  p.method = DensityMethod::MonteCarlo;
  p.mode = DensityMode::Pairs;
  p.trials = trials;
  p.value = static_cast<double>(hits) / static_cast<double>(trials);
  p.stderr_ = std::sqrt(p.value * (1.0 - p.value) / static_cast<double>(trials));
  return p;
}

const char* genericity_name(Genericity g) {
  switch (g) {
    case Genericity::Generic: return "Generic";
    case Genericity::StronglyGeneric: return "StronglyGeneric";
    case Genericity::Negligible: return "Negligible";
    case Genericity::StronglyNegligible: return "StronglyNegligible";
    case Genericity::Inconclusive: return "Inconclusive";
  }
  return "?";
}

GenericityReport genericity_report(const std::vector<DensityPoint>& points,
                                   int fit_min) {
  if (points.size() < 8)
    throw InvalidInputError("genericity_report: need at least 8 points");
  std::vector<DensityPoint> pts = points;
  std::sort(pts.begin(), pts.end(),
            [](const DensityPoint& a, const DensityPoint& b) { return a.n < b.n; });

  // which limit is the trajectory near?
  double tail_mean = 0.0;
  std::size_t q = std::max<std::size_t>(1, pts.size() / 4);
  for (std::size_t i = pts.size() - q; i < pts.size(); ++i)
    tail_mean += pts[i].value;
  tail_mean /= static_cast<double>(q);

  GenericityReport rep;
  rep.generic_side = tail_mean >= 0.5;

  int max_n = pts.back().n;
  std::vector<double> gap(max_n + 1, 0.0), se(max_n + 1, 0.0);
  std::vector<bool> present(max_n + 1, false);
  for (const auto& p : pts) {
    gap[p.n] = rep.generic_side ? 1.0 - p.value : p.value;
    se[p.n] = p.stderr_;
    present[p.n] = true;
  }
  for (int n = max_n; n >= 0; --n)
    if (present[n]) {
      rep.tail_gap = gap[n];
      break;
    }

  try {
    rep.fit = decay_fit(gap, std::max(fit_min, pts.front().n), max_n, se);
  } catch (const InvalidInputError&) {
    rep.fit.reset();
  }

  bool strongly = rep.fit && rep.fit->kind == DecayFit::Kind::Exponential;
  bool certified_decay =
      rep.fit && rep.fit->kind == DecayFit::Kind::Subexponential;
  // without a certified fit, a monotone-trending gap close to the limit
  bool near_limit = rep.tail_gap <= 0.05;
  bool trending = pts.back().value != pts.front().value &&
                  (rep.generic_side ? pts.back().value > pts.front().value
                                    : pts.back().value < pts.front().value);

  if (strongly)
    rep.verdict = rep.generic_side ? Genericity::StronglyGeneric
                                   : Genericity::StronglyNegligible;
  else if (certified_decay || (near_limit && trending))
    rep.verdict =
        rep.generic_side ? Genericity::Generic : Genericity::Negligible;
  else
    rep.verdict = Genericity::Inconclusive;
  return rep;
}

}  // namespace gencase
