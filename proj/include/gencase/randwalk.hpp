#pragma once

#include <cstdint>
#include <vector>

#include "gencase/schreier.hpp"

namespace gencase {

struct WalkEstimate {
  int n = 0;
  std::int64_t trials = 0;
  double p_hat = 0.0;
  double stderr_ = 0.0;  // sqrt(p(1-p)/trials)
};

/// Monte Carlo n-step return probability of the simple random walk from the
/// base. Returns are counted at step n exactly. Each trial draws from its own
/// counter-derived stream, so aggregation order cannot change the result.
/// Refused when walks could leave the explored region.
WalkEstimate mc_return(const CosetGraph& g, int n, std::int64_t trials,
                       std::uint64_t seed);

/// Same walk driven by canonical forms instead of a table; no radius limit.
WalkEstimate mc_return(const QuotientOracle& oracle, int n, std::int64_t trials,
                       std::uint64_t seed);

/// Exact return probabilities p(0..N) of the simple random walk on the
/// Cayley graph of F_k: the distance from the origin is a birth-death chain
/// (up with probability 1 from 0; down 1/2k, up (2k-1)/2k from m >= 1).
/// Independent of the coset-graph machinery; zero at odd steps.
std::vector<double> free_group_return_exact(int k, int N);

}  // namespace gencase
