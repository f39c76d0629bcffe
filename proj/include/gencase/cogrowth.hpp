#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "gencase/ball.hpp"
#include "gencase/schreier.hpp"

namespace gencase {

/// Normalized closed-path counts from the base vertex of a d-regular graph:
///   a_hat[n] = a_n / (d-1)^n   reduced (non-backtracking) closed paths
///   b_hat[n] = b_n / d^n       all closed paths (= n-step return probability)
///   r_hat, z_hat               cumulative analogues
/// b_hat lives in [0,1], a_hat in [0, d/(d-1)], both equal 1 at n = 0.
struct CogrowthSeries {
  int d = 0;
  bool bipartite = false;
  std::vector<double> a_hat, b_hat, r_hat, z_hat;
  double alpha_hat = 0.0;
  double beta_hat = 0.0;
  double nu_hat = 0.0;
};

/// Exact n-step return probabilities b_hat[0..N] by probability propagation
/// (one division by d per step; every step is a convex combination, so the
/// relative error stays at a small multiple of machine epsilon).
std::vector<double> count_unreduced(const CosetGraph& g, int N);

/// a_hat[0..N] by DP over (state, last letter), forbidding the inverse of
/// the last letter, one division by d-1 per step. On collar graphs the DP is
/// restricted to the folded core: a reduced closed path that crossed a bridge
/// into a hanging tree would have to backtrack over it.
std::vector<double> count_reduced(const CosetGraph& g, int N);

/// Exact integer path counts, for cross-checks against enumeration and for
/// pair-density identities. Same validity domains as the normalized DPs.
std::vector<BigInt> count_closed_exact(const CosetGraph& g, int N);
std::vector<BigInt> count_closed_reduced_exact(const CosetGraph& g, int N);

/// Spectral radius from the cogrowth rate:
///   nu = (sqrt(d-1)/d) (alpha/sqrt(d-1) + sqrt(d-1)/alpha)  if alpha > sqrt(d-1)
///   nu = 2 sqrt(d-1)/d                                      otherwise
/// with nu = 1 iff alpha = d-1. Requires 0 <= alpha <= d-1, d >= 3.
double nu_from_alpha(double alpha, int d);

/// limsup estimates: alpha_hat = (d-1) * max of a_hat[n]^(1/n) over the last
/// `window` usable (nonzero) indices; beta_hat analogous with d and b_hat.
/// Zero-padded (bipartite) indices drop out via the nonzero filter. An
/// all-zero tail gives 0.
double estimate_alpha(std::span<const double> a_hat, int d, int window = 5);
double estimate_beta(std::span<const double> b_hat, int d, int window = 5);

struct DecayFit {
  enum class Kind { Exponential, Subexponential, None };
  Kind kind = Kind::None;
  double sigma = 1.0;       // exp(fitted slope)
  double r2 = 0.0;          // weighted R^2 of the log-linear fit
  double max_tail_ratio = 1.0;  // largest per-step ratio over >=span gaps
  double decay_factor = 1.0;    // tail max / head max of usable values
  int points = 0;
};

struct DecayFitOptions {
  double r2_min = 0.99;
  double ratio_cutoff = 0.96;  // "bounded away from 1"
  int ratio_span = 4;          // minimum index gap for ratio probes
  double decay_cutoff = 0.5;   // tail/head below this counts as decay
  int min_points = 8;
  double significance = 10.0;  // value must exceed this many stderrs
};

/// Log-linear weighted least squares over the usable points of c[lo..hi]
/// (usable: positive and significantly nonzero given its stderr; exact
/// points pass always). Exponential needs negative slope, R^2 >= r2_min and
/// tail ratios bounded away from 1; Subexponential is certified decay
/// without the exponential gates; None means no decay over the range.
/// Fewer than min_points usable points is refused.
DecayFit decay_fit(std::span<const double> c, int lo, int hi,
                   std::span<const double> stderrs = {},
                   const DecayFitOptions& opts = {});

enum class Amenability { Amenable, Nonamenable, Undetermined };

/// Nonamenable needs a certified exponential decay of b_hat with
/// sigma <= 1 - tol. Amenable needs the absence of such decay together with
/// either beta_hat >= d(1 - tol) or a tail bounded away from zero (the fit
/// says None; positive limsup of b_hat forces beta = d). Everything else is
/// Undetermined. A certified exponential decay never classifies Amenable.
Amenability classify(const CogrowthSeries& s, double tol_amen,
                     const std::optional<DecayFit>& fit);

struct CumulativeCheck {
  bool pass = false;
  double tail_max = 0.0;
  double head_max = 0.0;
};

/// Numerical gate for "c_n / base^n -> 0 implies (sum c_i) / base^n -> 0":
/// given the normalized values c_hat[n] = c_n / base^n, accumulates
/// F_n = F_{n-1}/base + c_hat[n] and reports the tail maximum. Passes when
/// the tail max is below 1 and below half the head max.
CumulativeCheck cumulative_check(std::span<const double> c_hat, double base);

/// Full series with estimates and classification; the decay fit runs over
/// [max(10, N/4), N] when at least that much data exists.
CogrowthSeries compute_series(const CosetGraph& g, int N, int window = 5,
                              double tol_amen = 1e-3);
std::optional<DecayFit> series_decay_fit(const CogrowthSeries& s);

/// CSV: n,a_hat,b_hat,r_hat,z_hat with round-trip formatting.
void write_series_csv(const CogrowthSeries& s, std::ostream& out);

}  // namespace gencase
