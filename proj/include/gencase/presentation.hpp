#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gencase/word.hpp"

namespace gencase {

/// Group presentation <x_1..x_k | r_1..r_m>. Relators are stored freely and
/// cyclically reduced; the symmetrized set (cyclic shifts of each relator and
/// its inverse) is materialized on demand.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;

  Presentation(Alphabet a, std::vector<Word> rels);

  /// All cyclic shifts of every relator and its inverse, deduplicated.
  std::vector<Word> symmetrized() const;
};

/// Text form:
///   gens: a b c d
///   rels: abAB cdCD
Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);

struct SmallCancellationReport {
  bool satisfies = false;
  int max_piece = 0;
  int min_relator = 0;
};

/// A piece is a proper cyclic subword occurring at two distinct positions of
/// the symmetrized relator set (positions = (relator, sign, shift), so a
/// proper power overlaps itself). C'(1/lambda_den) holds iff every piece is
/// strictly shorter than min |r| / lambda_den.
SmallCancellationReport check_small_cancellation(const Presentation& p,
                                                 int lambda_den = 6);

/// Greedy Dehn reduction: repeatedly replace, in the freely reduced word, the
/// leftmost longest subword u matching more than half of a symmetrized
/// relator u*v by v^-1, then re-reduce. Under C'(1/6) the result is empty
/// iff the word represents the identity. Matches of exactly half length
/// never fire. `steps` counts letters scanned across passes.
Word dehn_reduce(const Presentation& p, const Word& w,
                 std::int64_t* steps = nullptr);

/// True if some symmetrized-relator subword longer than half its relator
/// occurs in w (i.e. dehn_reduce would fire).
bool has_long_relator_subword(const Presentation& p, const Word& w);

// ---------------------------------------------------------------------------

/// Image vector under an abelianization-style map.
using AbelianVector = std::vector<std::int64_t>;

enum class TargetKind { Free, Abelian };

/// Map from F(source_k) to a free group F_m or to Z^m (optionally with
/// per-coordinate moduli, giving finite abelian targets). Declared quotient
/// maps of a presented group carry a validation flag; consumers that need
/// soundness check it.
struct Homomorphism {
  int source_k;
  TargetKind target = TargetKind::Abelian;
  int target_rank = 0;
  std::vector<Word> free_images;            // per generator, Free target
  std::vector<AbelianVector> abelian_images;  // per generator, Abelian target
  std::vector<std::int64_t> moduli;         // Abelian: 0 = no modulus
  bool validated_quotient = false;

  static Homomorphism to_free(int source_k, std::vector<Word> images);
  static Homomorphism to_abelian(int source_k,
                                 std::vector<AbelianVector> images,
                                 std::vector<std::int64_t> moduli = {});
  /// Abelianization of F_k: x_i -> e_i.
  static Homomorphism abelianization(int k);

  Word apply_free(const Word& w) const;
  AbelianVector apply_abelian(const Word& w) const;

  /// Image is the target identity.
  bool kills(const Word& w) const;

  /// Checks every relator maps to the identity; sets validated_quotient.
  void validate_quotient(const Presentation& p);
  /// Free source (no relators): trivially a quotient map.
  void mark_free_source_valid() { validated_quotient = true; }
};

// ---------------------------------------------------------------------------

/// Total word-problem solvers for the groups we ship: free groups (free
/// reduction), finitely generated abelian groups (exponent vectors), and
/// C'(1/6) presentations (Dehn's algorithm).
struct WpOracle {
  enum class Kind { Free, Abelian, Dehn };
  Kind kind;
  int k = 0;                       // Free
  std::optional<Homomorphism> ab;  // Abelian
  std::optional<Presentation> pres;  // Dehn

  static WpOracle free_group(int k);
  static WpOracle abelian(Homomorphism h);
  /// Refuses presentations that fail C'(1/6); Dehn carries no guarantee there.
  static WpOracle dehn(Presentation p);

  /// Total, correct identity test; steps counts letters processed.
  bool is_identity(const Word& w, std::int64_t* steps = nullptr) const;
};

}  // namespace gencase
