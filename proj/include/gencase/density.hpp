#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gencase/ball.hpp"
#include "gencase/cogrowth.hpp"
#include "gencase/word.hpp"

namespace gencase {

enum class DensityMode { AllWords, ReducedWords, Pairs };
enum class DensityMethod { Exact, MonteCarlo };

/// One measurement of rho_n = |S cap B_n| / |B_n| (or the pair analogue
/// sigma_n / Q_n). Exact points carry the full-precision ratio.
struct DensityPoint {
  int n = 0;
  double value = 0.0;
  DensityMethod method = DensityMethod::Exact;
  DensityMode mode = DensityMode::AllWords;
  std::int64_t trials = 0;
  double stderr_ = 0.0;
  BigInt numerator, denominator;  // exact backend only
};

using WordPred = std::function<bool(const Word&)>;
using PairPred = std::function<bool(const Word&, const Word&)>;

/// Exact rho_n by full enumeration of the ball. Budget-refused with a
/// suggestion to fall back to density_mc.
DensityPoint density_exact(const WordPred& pred, int k, int n, BallMode mode,
                           std::uint64_t budget = enum_budget());

/// Unbiased Monte Carlo estimate of rho_n: lengths are drawn with weights
/// proportional to sphere sizes, so the estimand is exactly rho_n and not a
/// length-uniform surrogate.
DensityPoint density_mc(const WordPred& pred, int k, int n, std::int64_t trials,
                        std::uint64_t seed, BallMode mode);

/// Pair density over {(w1,w2) : |w1|+|w2| <= n} against Q_n. The exact
/// backend enumerates words of length i once and visits their i+1 splits,
/// evaluating the predicate on the actual pair.
DensityPoint pair_density_exact(const PairPred& pred, int k, int n,
                                std::uint64_t budget = enum_budget());
DensityPoint pair_density_mc(const PairPred& pred, int k, int n,
                             std::int64_t trials, std::uint64_t seed);

enum class Genericity {
  Generic,
  StronglyGeneric,
  Negligible,
  StronglyNegligible,
  Inconclusive,
};

const char* genericity_name(Genericity g);

struct GenericityReport {
  Genericity verdict = Genericity::Inconclusive;
  bool generic_side = false;  // true: rho -> 1 examined, false: rho -> 0
  std::optional<DecayFit> fit;  // fit of the gap sequence where available
  double tail_gap = 1.0;        // last usable distance from the limit
};

/// Classify a density trajectory. The gap (1 - rho for the generic side, rho
/// for the negligible side) is fitted with decay_fit over indices >= fit_min:
/// a certified Exponential gives the Strongly* verdict, a certified
/// Subexponential decay gives the plain verdict, and without certification a
/// monotone-trending gap within 0.05 of the limit still counts. Everything
/// else is Inconclusive. Needs at least 8 points.
GenericityReport genericity_report(const std::vector<DensityPoint>& points,
                                   int fit_min = 0);

}  // namespace gencase
