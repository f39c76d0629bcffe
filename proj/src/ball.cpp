#include "gencase/ball.hpp"

#include <cstdlib>
#include <string>

namespace gencase {

static BigInt ipow(BigInt b, int e) {
  BigInt r = 1;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

BigInt count_ball_all(int k, int n) {
  if (k < 1 || n < 0) throw InvalidInputError("count_ball_all: need k>=1, n>=0");
  return (ipow(2 * k, n + 1) - 1) / (2 * k - 1);
}

BigInt count_sphere_all(int k, int n) {
  if (k < 1 || n < 0) throw InvalidInputError("count_sphere_all: need k>=1, n>=0");
  return ipow(2 * k, n);
}

BigInt count_ball_reduced(int k, int n) {
  if (k < 1 || n < 0)
    throw InvalidInputError("count_ball_reduced: need k>=1, n>=0");
  if (k == 1) return 2 * n + 1;  // special case: the line
  // exponent n here, not n-1; checked against enumeration
  return 1 + BigInt(k) * (ipow(2 * k - 1, n) - 1) / (k - 1);
}

BigInt count_sphere_reduced(int k, int n) {
  if (k < 1 || n < 0)
    throw InvalidInputError("count_sphere_reduced: need k>=1, n>=0");
  if (n == 0) return 1;
  return BigInt(2 * k) * ipow(2 * k - 1, n - 1);
}

BigInt count_pairs(int k, int n) {
  if (k < 1 || n < 0) throw InvalidInputError("count_pairs: need k>=1, n>=0");
  BigInt q = 0;
  for (int i = 0; i <= n; ++i) q += BigInt(i + 1) * ipow(2 * k, i);
  return q;
}

std::uint64_t enum_budget() {
  if (const char* env = std::getenv("GENCASE_ENUM_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 50'000'000ULL;
}

void enumerate_ball(const Alphabet& alpha, int n, BallMode mode,
                    const std::function<void(const Word&)>& visit,
                    std::uint64_t budget) {
  BigInt total = mode == BallMode::All ? count_ball_all(alpha.k, n)
                                       : count_ball_reduced(alpha.k, n);
  if (total > BigInt(budget))
    throw BudgetError("enumerate_ball: ball has " + total.str() +
                      " words, budget is " + std::to_string(budget));

  const int d = alpha.degree();
  Word w;
  w.reduced = true;
  for (int len = 0; len <= n; ++len) {
    // lexicographic DFS over words of length len, letters in slot order
    w.letters.assign(len, 0);
    std::vector<int> slot(len, 0);
    int pos = 0;
    if (len == 0) {
      visit(w);
      continue;
    }
    while (pos >= 0) {
      if (slot[pos] >= d) {
        --pos;
        if (pos >= 0) ++slot[pos];
        continue;
      }
      Letter l = slot_letter(slot[pos]);
      if (mode == BallMode::Reduced && pos > 0 && w.letters[pos - 1] == -l) {
        ++slot[pos];
        continue;
      }
      w.letters[pos] = l;
      if (pos == len - 1) {
        visit(w);
        ++slot[pos];
      } else {
        ++pos;
        slot[pos] = 0;
      }
    }
  }
}

Word sample_word(const Alphabet& alpha, int n, Rng& rng) {
  if (n < 0) throw InvalidInputError("sample_word: n >= 0");
  std::vector<Letter> out;
  out.reserve(n);
  const int d = alpha.degree();
  for (int i = 0; i < n; ++i)
    out.push_back(slot_letter(static_cast<int>(rng.below(d))));
  return Word(std::move(out), false);
}

Word sample_reduced_word(const Alphabet& alpha, int n, Rng& rng) {
  if (n < 0) throw InvalidInputError("sample_reduced_word: n >= 0");
  std::vector<Letter> out;
  out.reserve(n);
  const int d = alpha.degree();
  for (int i = 0; i < n; ++i) {
    if (out.empty()) {
      out.push_back(slot_letter(static_cast<int>(rng.below(d))));
    } else {
      int forbidden = letter_slot(-out.back());
      int r = static_cast<int>(rng.below(d - 1));
      if (r >= forbidden) ++r;
      out.push_back(slot_letter(r));
    }
  }
  return Word(std::move(out), true);
}

}  // namespace gencase
