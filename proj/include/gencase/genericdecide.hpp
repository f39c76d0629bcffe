#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "gencase/presentation.hpp"
#include "gencase/stallings.hpp"

namespace gencase {

enum class Answer { DefinitelyNo, DefinitelyYes, Unknown };

const char* answer_name(Answer a);

/// Output of a partial algorithm. Definite answers must be sound; Unknown
/// carries no claim. Steps count letters processed.
struct Verdict {
  Answer answer = Answer::Unknown;
  std::int64_t steps = 0;
  std::string note;
};

/// Word problem fast check: w != 1 in G whenever the image under a validated
/// quotient map is nontrivial in the target. Never answers DefinitelyYes.
Verdict generic_wp(const Homomorphism& phi, const Word& w);

/// Membership oracle for the target subgroup Kbar of the quotient: either a
/// zero pattern on abelian coordinates or a subgroup graph in a free target.
struct TargetMembership {
  enum class Kind { AbelianZeroPattern, FreeSubgroup };
  Kind kind = Kind::AbelianZeroPattern;
  std::vector<int> zero_coords;           // abelian coordinates forced to 0
  std::optional<SubgroupGraph> subgraph;  // free-target subgroup

  static TargetMembership zero_pattern(std::vector<int> coords);
  static TargetMembership trivial_abelian(int rank);  // all coordinates zero
  static TargetMembership free_subgroup(SubgroupGraph g);

  bool contains_abelian(const AbelianVector& v) const;
  bool contains_free(const Word& w) const;
};

/// Data for the generic membership test of H <= G = F(A): a finite-index
/// overgroup G1 given by its Schreier rewriter (absent when G1 = G), a
/// quotient map phi defined on the Schreier generators (or on A directly),
/// and a total membership oracle for Kbar containing phi(H).
struct MembershipSetup {
  int k = 0;
  std::optional<SchreierRewriter> rewriter;
  Homomorphism phi;
  TargetMembership target;
  std::string name;

  void check_well_formed() const;
};

/// Trace w through the coset graph of G1 while rewriting; a coset mismatch or
/// an image outside Kbar is a sound DefinitelyNo. Never DefinitelyYes.
Verdict generic_mp(const MembershipSetup& setup, const Word& w);

/// Conjugacy fast check in a group with abelianization quotient: conjugate
/// words have equal image vectors, so unequal vectors are a sound no.
Verdict generic_cp(const Homomorphism& ab, const Word& w1, const Word& w2);
/// Free-group inputs: the abelianization of F_k.
Verdict generic_cp(int k, const Word& w1, const Word& w2);

/// One total solver raced against one partial solver under a simulated fair
/// interleaving (alternating 64-step quanta, partial solver first). The
/// definite answer with the earliest simulated finish wins; the result always
/// equals the total solver's answer, and a definite disagreement is a
/// SoundnessError, never masked.
struct RaceLog {
  std::string winner;  // "generic" or "total"
  std::int64_t steps_total = 0;
  std::int64_t steps_generic = 0;
};

struct RaceResult {
  bool yes = false;  // the total answer
  Verdict generic;
  RaceLog log;
};

using TotalSolver = std::function<bool(std::int64_t* steps)>;
using GenericSolver = std::function<Verdict()>;

RaceResult race(const TotalSolver& total, const GenericSolver& generic);

constexpr int kRaceQuantum = 64;

}  // namespace gencase
