#include "gencase/randwalk.hpp"

#include <cmath>

#include "gencase/rng.hpp"

namespace gencase {

static WalkEstimate finish(int n, std::int64_t trials, std::int64_t hits) {
  WalkEstimate e;
  e.n = n;
  e.trials = trials;
  e.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
  e.stderr_ = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(trials));
  return e;
}

WalkEstimate mc_return(const CosetGraph& g, int n, std::int64_t trials,
                       std::uint64_t seed) {
  if (trials < 1) throw InvalidInputError("mc_return: trials >= 1");
  if (n > g.max_walk_length())
    throw RadiusError("mc_return: walk of length " + std::to_string(n) +
                      " can leave the explored region (horizon " +
                      std::to_string(g.horizon) + ")");
  const int d = g.degree();
  std::int64_t hits = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
    std::int32_t v = g.base;
    for (int i = 0; i < n; ++i)
      v = g.table[static_cast<std::size_t>(v) * d +
                  static_cast<int>(rng.below(d))];
    hits += (v == g.base);
  }
  return finish(n, trials, hits);
}

WalkEstimate mc_return(const QuotientOracle& oracle, int n, std::int64_t trials,
                       std::uint64_t seed) {
  if (trials < 1) throw InvalidInputError("mc_return: trials >= 1");
  const int d = 2 * oracle.k();
  std::int64_t hits = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
    auto s = oracle.start();
    for (int i = 0; i < n; ++i)
      s = oracle.apply(s, slot_letter(static_cast<int>(rng.below(d))));
    hits += oracle.at_identity(s);
  }
  return finish(n, trials, hits);
}

std::vector<double> free_group_return_exact(int k, int N) {
  if (k < 1 || N < 0)
    throw InvalidInputError("free_group_return_exact: k >= 1, N >= 0");
  const double d = 2.0 * k;
  std::vector<double> cur(N + 2, 0.0), nxt(N + 2, 0.0);
  cur[0] = 1.0;
  std::vector<double> out{1.0};
  for (int n = 1; n <= N; ++n) {
    std::fill(nxt.begin(), nxt.end(), 0.0);
    nxt[1] += cur[0];  // from the origin every step moves away
    for (int m = 1; m <= N; ++m) {
      if (cur[m] == 0.0) continue;
      nxt[m - 1] += cur[m] / d;
      if (m + 1 <= N + 1) nxt[m + 1] += cur[m] * (d - 1.0) / d;
    }
    cur.swap(nxt);
    out.push_back(cur[0]);
  }
  return out;
}

}  // namespace gencase
