#include "gencase/genericdecide.hpp"

#include <algorithm>

namespace gencase {

const char* answer_name(Answer a) {
  switch (a) {
    case Answer::DefinitelyNo: return "DefinitelyNo";
    case Answer::DefinitelyYes: return "DefinitelyYes";
    case Answer::Unknown: return "Unknown";
  }
  return "?";
}

Verdict generic_wp(const Homomorphism& phi, const Word& w) {
  if (!phi.validated_quotient)
    throw InvalidInputError(
        "generic_wp: quotient map not validated; a definite answer would be "
        "unsound");
  Verdict v;
  v.steps = static_cast<std::int64_t>(w.size());
  if (!phi.kills(w)) {
    v.answer = Answer::DefinitelyNo;
    v.note = "quotient image nontrivial";
  } else {
    v.answer = Answer::Unknown;
    v.note = "quotient image trivial";
  }
  return v;
}

TargetMembership TargetMembership::zero_pattern(std::vector<int> coords) {
  TargetMembership t;
  t.kind = Kind::AbelianZeroPattern;
  t.zero_coords = std::move(coords);
  return t;
}

TargetMembership TargetMembership::trivial_abelian(int rank) {
  std::vector<int> coords(rank);
  for (int i = 0; i < rank; ++i) coords[i] = i;
  return zero_pattern(std::move(coords));
}

TargetMembership TargetMembership::free_subgroup(SubgroupGraph g) {
  TargetMembership t;
  t.kind = Kind::FreeSubgroup;
  t.subgraph = std::move(g);
  return t;
}

bool TargetMembership::contains_abelian(const AbelianVector& v) const {
  for (int c : zero_coords) {
    if (c < 0 || c >= static_cast<int>(v.size()))
      throw InvalidInputError("zero pattern coordinate out of range");
    if (v[c] != 0) return false;
  }
  return true;
}

bool TargetMembership::contains_free(const Word& w) const {
  return member(*subgraph, w);
}

void MembershipSetup::check_well_formed() const {
  if (k < 1) throw InvalidInputError("membership setup: ambient rank >= 1");
  int expected_source = rewriter ? rewriter->num_schreier_gens() : k;
  if (phi.source_k != expected_source)
    throw InvalidInputError(
        "membership setup: phi must be defined on every Schreier generator (" +
        std::to_string(expected_source) + "), got rank " +
        std::to_string(phi.source_k));
  if (target.kind == TargetMembership::Kind::FreeSubgroup) {
    if (phi.target != TargetKind::Free)
      throw InvalidInputError("free-subgroup target needs a free-target map");
    if (!target.subgraph)
      throw InvalidInputError("free-subgroup target needs a subgroup graph");
  } else if (phi.target != TargetKind::Abelian) {
    throw InvalidInputError("zero-pattern target needs an abelian map");
  }
}

Verdict generic_mp(const MembershipSetup& setup, const Word& w) {
  setup.check_well_formed();
  Verdict out;
  Word v = w;
  if (setup.rewriter) {
    auto [rw, coset] = setup.rewriter->rewrite(w);
    out.steps += static_cast<std::int64_t>(w.size());
    if (coset != 0) {
      out.answer = Answer::DefinitelyNo;
      out.note = "coset mismatch";
      return out;
    }
    // |v| <= C |w| with C = max |u(t,x)| = 1 for free ambient groups
    if (rw.size() > w.size())
      throw SoundnessError("Schreier rewriting exceeded its length bound");
    v = std::move(rw);
  }
  out.steps += static_cast<std::int64_t>(v.size());
  bool inside;
  if (setup.target.kind == TargetMembership::Kind::AbelianZeroPattern)
    inside = setup.target.contains_abelian(setup.phi.apply_abelian(v));
  else
    inside = setup.target.contains_free(setup.phi.apply_free(v));
  if (!inside) {
    out.answer = Answer::DefinitelyNo;
    out.note = "image outside target subgroup";
  } else {
    out.answer = Answer::Unknown;
    out.note = "image inside target subgroup";
  }
  return out;
}

Verdict generic_cp(const Homomorphism& ab, const Word& w1, const Word& w2) {
  if (ab.target != TargetKind::Abelian)
    throw InvalidInputError("generic_cp needs an abelian quotient");
  if (!ab.validated_quotient)
    throw InvalidInputError("generic_cp: quotient map not validated");
  Verdict v;
  v.steps = static_cast<std::int64_t>(w1.size() + w2.size());
  AbelianVector x = ab.apply_abelian(w1), y = ab.apply_abelian(w2);
  if (x != y) {
    v.answer = Answer::DefinitelyNo;
    v.note = "abelianizations differ";
  } else {
    v.answer = Answer::Unknown;
    v.note = "abelianizations equal";
  }
  return v;
}

Verdict generic_cp(int k, const Word& w1, const Word& w2) {
  return generic_cp(Homomorphism::abelianization(k), w1, w2);
}

namespace {

// simulated global finish time under alternating quanta, generic lane first
std::int64_t finish_time(std::int64_t own_steps, bool generic_lane) {
  if (own_steps <= 0) own_steps = 1;
  std::int64_t q = (own_steps - 1) / kRaceQuantum;
  std::int64_t r = (own_steps - 1) % kRaceQuantum;
  return q * (2 * kRaceQuantum) + (generic_lane ? 0 : kRaceQuantum) + r + 1;
}

}  // namespace

RaceResult race(const TotalSolver& total, const GenericSolver& generic) {
  RaceResult res;
  res.generic = generic();
  std::int64_t total_steps = 0;
  bool yes = total(&total_steps);
  res.yes = yes;
  res.log.steps_total = total_steps;
  res.log.steps_generic = res.generic.steps;

  if (res.generic.answer == Answer::DefinitelyNo && yes)
    throw SoundnessError("race: generic solver denied what the total solver affirmed");
  if (res.generic.answer == Answer::DefinitelyYes && !yes)
    throw SoundnessError("race: generic solver affirmed what the total solver denied");

  if (res.generic.answer != Answer::Unknown &&
      finish_time(res.generic.steps, true) < finish_time(total_steps, false)) {
    res.log.winner = "generic";
  } else {
    res.log.winner = "total";
  }
  return res;
}

}  // namespace gencase
