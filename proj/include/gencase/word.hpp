#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gencase/errors.hpp"

namespace gencase {

/// One signed generator letter: +i for x_i, -i for its inverse, 1-based.
using Letter = std::int32_t;

inline Letter inverse(Letter l) { return -l; }

/// Rank of a letter in the fixed order +1 < -1 < +2 < -2 < ...
/// This order drives enumeration, canonical coset names and table slots.
inline int letter_slot(Letter l) {
  return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1;
}

inline Letter slot_letter(int slot) {
  return (slot % 2 == 0) ? (slot / 2 + 1) : -(slot / 2 + 1);
}

/// Generator alphabet of rank k; the symmetrized alphabet has d = 2k letters.
struct Alphabet {
  int k;

  explicit Alphabet(int rank) : k(rank) {
    if (rank < 1) throw InvalidInputError("alphabet rank must be >= 1");
  }

  int degree() const { return 2 * k; }

  bool valid(Letter l) const { return l != 0 && l >= -k && l <= k; }

  void check(Letter l) const {
    if (!valid(l))
      throw InvalidInputError("letter " + std::to_string(l) +
                              " out of range for rank " + std::to_string(k));
  }
};

/// A word over a symmetrized alphabet. `reduced` means no adjacent
/// letter/inverse pair (trusted where set; free_reduce() establishes it).
struct Word {
  std::vector<Letter> letters;
  bool reduced = false;

  Word() : reduced(true) {}
  explicit Word(std::vector<Letter> ls, bool is_reduced = false)
      : letters(std::move(ls)), reduced(is_reduced) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  bool operator==(const Word& o) const { return letters == o.letters; }
  bool operator!=(const Word& o) const { return !(*this == o); }
};

/// Freely reduce by stack cancellation; linear time, idempotent.
Word free_reduce(const Word& w);
Word free_reduce(const Word& w, const Alphabet& alpha);

/// Concatenation (no reduction).
Word concat(const Word& u, const Word& v);

/// Reduced product u * v.
Word product(const Word& u, const Word& v);

Word word_inverse(const Word& w);

/// Strip matching conjugating prefix/suffix from a freely reduced word.
Word cyclic_reduce(const Word& w);

/// True if the freely reduced forms coincide.
bool is_freely_reduced(const Word& w);

/// Shortlex with +1 < -1 < +2 < -2 < ...
bool shortlex_less(const Word& a, const Word& b);

/// Text form: a..z are generators 1..26, A..Z their inverses, "1" is the
/// empty word. Round-trips exactly with format_word.
Word parse_word(const std::string& text);
Word parse_word(const std::string& text, const Alphabet& alpha);
std::string format_word(const Word& w);

/// True iff u and v are conjugate in the free group (cyclic words match
/// up to rotation). Brute-force correct; used as a test oracle and by the
/// conjugacy soundness suite.
bool free_conjugate(const Word& u, const Word& v);

}  // namespace gencase
