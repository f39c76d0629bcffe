#pragma once

#include <cstdint>
#include <functional>

#include <boost/multiprecision/cpp_int.hpp>

#include "gencase/rng.hpp"
#include "gencase/word.hpp"

namespace gencase {

using BigInt = boost::multiprecision::cpp_int;

/// Number of all words of length <= n over the symmetrized alphabet:
/// ((2k)^(n+1) - 1) / (2k - 1).
BigInt count_ball_all(int k, int n);

/// Sphere of radius n (all words): (2k)^n.
BigInt count_sphere_all(int k, int n);

/// Number of freely reduced words of length <= n. For k >= 2 this is
/// 1 + k/(k-1) * ((2k-1)^n - 1); for k = 1 the ball is just 2n + 1.
/// The closed form is validated against exhaustive enumeration in the tests.
BigInt count_ball_reduced(int k, int n);

/// Freely reduced sphere: 2k (2k-1)^(n-1) for n >= 1, else 1.
BigInt count_sphere_reduced(int k, int n);

/// Number of pairs (w1, w2) with |w1| + |w2| <= n: sum (i+1) (2k)^i.
BigInt count_pairs(int k, int n);

enum class BallMode { All, Reduced };

/// Default cap on enumeration size (words); override per call or with the
/// GENCASE_ENUM_BUDGET environment variable.
std::uint64_t enum_budget();

/// Visit every word of length <= n exactly once in shortlex order
/// (+1 < -1 < +2 < -2 < ...). Throws BudgetError with the size estimate
/// if the ball exceeds the budget.
void enumerate_ball(const Alphabet& alpha, int n, BallMode mode,
                    const std::function<void(const Word&)>& visit,
                    std::uint64_t budget = enum_budget());

/// Uniform over all (2k)^n words of length exactly n.
Word sample_word(const Alphabet& alpha, int n, Rng& rng);

/// Uniform over the 2k (2k-1)^(n-1) freely reduced words of length n:
/// first letter uniform, each next uniform over the non-cancelling letters.
Word sample_reduced_word(const Alphabet& alpha, int n, Rng& rng);

}  // namespace gencase
