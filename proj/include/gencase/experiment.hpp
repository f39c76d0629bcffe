#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gencase/config.hpp"
#include "gencase/density.hpp"
#include "gencase/genericdecide.hpp"
#include "gencase/randwalk.hpp"

namespace gencase {

/// A fast-check setup the CLI and sweeps can run by name: the partial solver
/// plus the matching total solver where one is shipped.
struct DecideSetup {
  std::string name;
  char problem = 'w';  // 'w', 'm', 'c'
  int k = 0;           // ambient alphabet rank
  std::optional<Homomorphism> wp_phi;
  std::optional<MembershipSetup> mp;
  std::optional<Homomorphism> cp_ab;
  std::optional<WpOracle> total_wp;  // total solver raced for WP setups

  Verdict decide(const Word& w) const;                 // wp / mp
  Verdict decide_pair(const Word& u, const Word& v) const;  // cp
};

/// Shipped setups:
///   wp_f2_abelian     WP fast check in F2 through Z^2
///   wp_f3_free        WP fast check in F3 through the free quotient F2
///   wp_surface_dehn   WP in the genus-2 surface group: abelian fast check
///                     raced against the total Dehn solver
///   mp_halfplane      H = <a> inside F2, zero pattern on the b-exponent
///   mp_even_kernel    H = <aa> inside the even-length kernel of F2,
///                     Schreier rewriting then an abelian zero pattern
///   mp_product_pairs  membership demo in F2 x F2 (pairs encoded over
///                     a,b|c,d) via an exponent-difference zero test
///   cp_f2             conjugacy fast check in F2 via abelianization
DecideSetup builtin_setup(const std::string& name);
std::vector<std::string> builtin_setup_names();

/// [setup] section: either `builtin = NAME`, or problem-specific fields
/// (see README).
DecideSetup parse_setup(const Config& cfg, const std::string& section = "setup");

struct ExperimentReport {
  std::string kind;
  std::vector<std::string> csv;  // header + rows
  std::string summary_json;
};

/// Dispatch on [experiment] kind = quotient | cogrowth | density | decide |
/// walk. Deterministic given the config and seed.
ExperimentReport run_experiment(const Config& cfg,
                                std::optional<std::uint64_t> seed_override = {});

ExperimentReport run_quotient_experiment(const Config& cfg, std::uint64_t seed);
ExperimentReport run_cogrowth_experiment(const Config& cfg, std::uint64_t seed);
ExperimentReport run_density_experiment(const Config& cfg, std::uint64_t seed);
ExperimentReport run_decide_sweep(const Config& cfg, std::uint64_t seed);
ExperimentReport run_walk_experiment(const Config& cfg, std::uint64_t seed);

std::string format_double(double v);

}  // namespace gencase
