#include "gencase/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "gencase/rng.hpp"

namespace gencase {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// --- shipped decide setups ---------------------------------------------------

static Presentation surface_presentation() {
  return parse_presentation("gens: a b c d\nrels: abABcdCD\n");
}

DecideSetup builtin_setup(const std::string& name) {
  DecideSetup s;
  s.name = name;
  if (name == "wp_f2_abelian") {
    s.problem = 'w';
    s.k = 2;
    s.wp_phi = Homomorphism::abelianization(2);
    s.total_wp = WpOracle::free_group(2);
  } else if (name == "wp_f3_free") {
    s.problem = 'w';
    s.k = 3;
    Homomorphism h = Homomorphism::to_free(
        3, {Word(), parse_word("a"), parse_word("b")});
    h.target_rank = 2;
    h.mark_free_source_valid();
    s.wp_phi = std::move(h);
    s.total_wp = WpOracle::free_group(3);
  } else if (name == "wp_surface_dehn") {
    s.problem = 'w';
    s.k = 4;
    Presentation p = surface_presentation();
    Homomorphism h = Homomorphism::abelianization(4);
    h.validated_quotient = false;
    h.validate_quotient(p);
    s.wp_phi = std::move(h);
    s.total_wp = WpOracle::dehn(std::move(p));
  } else if (name == "mp_halfplane") {
    s.problem = 'm';
    s.k = 2;
    MembershipSetup m;
    m.k = 2;
    m.phi = Homomorphism::abelianization(2);
    m.target = TargetMembership::zero_pattern({1});  // b-exponent zero
    m.name = name;
    s.mp = std::move(m);
  } else if (name == "mp_even_kernel") {
    s.problem = 'm';
    s.k = 2;
    SubgroupGraph g1 = build_subgroup_graph(
        2, {parse_word("aa"), parse_word("ab"), parse_word("aB")});
    MembershipSetup m;
    m.k = 2;
    m.rewriter = make_rewriter(g1);
    m.phi = Homomorphism::abelianization(m.rewriter->num_schreier_gens());
    // H = <aa>; aa is the Schreier generator with trivial images elsewhere
    std::vector<int> coords;
    for (std::int32_t j = 0; j < m.rewriter->num_schreier_gens(); ++j)
      if (!(m.rewriter->schreier_gens[j] == parse_word("aa"))) coords.push_back(j);
    if (static_cast<int>(coords.size()) != m.rewriter->num_schreier_gens() - 1)
      throw SoundnessError("even-kernel rewriter lost the aa generator");
    m.target = TargetMembership::zero_pattern(std::move(coords));
    m.name = name;
    s.mp = std::move(m);
  } else if (name == "mp_product_pairs") {
    // direct product F2 x F2 on letters a,b (left) and c,d (right); members
    // of the pair subgroup have equal left and right exponent vectors
    s.problem = 'm';
    s.k = 4;
    MembershipSetup m;
    m.k = 4;
    m.phi = Homomorphism::to_abelian(
        4, {{-1, 0}, {0, -1}, {1, 0}, {0, 1}});
    m.phi.mark_free_source_valid();
    m.target = TargetMembership::zero_pattern({0, 1});
    m.name = name;
    s.mp = std::move(m);
  } else if (name == "cp_f2") {
    s.problem = 'c';
    s.k = 2;
    s.cp_ab = Homomorphism::abelianization(2);
  } else {
    throw ConfigError("unknown builtin setup: " + name);
  }
  return s;
}

std::vector<std::string> builtin_setup_names() {
  return {"wp_f2_abelian",  "wp_f3_free",       "wp_surface_dehn", "mp_halfplane",
          "mp_even_kernel", "mp_product_pairs", "cp_f2"};
}

Verdict DecideSetup::decide(const Word& w) const {
  if (problem == 'w') return generic_wp(*wp_phi, w);
  if (problem == 'm') return generic_mp(*mp, w);
  throw InvalidInputError("setup " + name + " takes a pair of words");
}

Verdict DecideSetup::decide_pair(const Word& u, const Word& v) const {
  if (problem != 'c')
    throw InvalidInputError("setup " + name + " takes a single word");
  return generic_cp(*cp_ab, u, v);
}

DecideSetup parse_setup(const Config& cfg, const std::string& section) {
  if (cfg.has(section, "builtin")) return builtin_setup(cfg.get(section, "builtin"));
  const std::string problem = cfg.get(section, "problem");
  DecideSetup s;
  s.name = "custom";
  int k = static_cast<int>(cfg.get_int(section, "k"));
  s.k = k;
  if (problem == "wp") {
    s.problem = 'w';
    Config sub = cfg;  // instance-style quotient spec inside [setup]
    Instance inst = parse_instance(cfg, section);
    if (!inst.hom) throw ConfigError("[setup] wp needs a quotient map");
    s.wp_phi = std::move(*inst.hom);
    if (cfg.has(section, "presentation")) {
      Presentation p = parse_presentation(cfg.get(section, "presentation"));
      s.wp_phi->validated_quotient = false;
      s.wp_phi->validate_quotient(p);
    }
    s.total_wp = WpOracle::free_group(k);
  } else if (problem == "cp") {
    s.problem = 'c';
    s.cp_ab = Homomorphism::abelianization(k);
  } else if (problem == "mp") {
    s.problem = 'm';
    MembershipSetup m;
    m.k = k;
    if (cfg.has(section, "overgroup")) {
      std::vector<Word> gens;
      std::istringstream in(cfg.get(section, "overgroup"));
      std::string tok;
      while (in >> tok) gens.push_back(parse_word(tok));
      SubgroupGraph g1 = build_subgroup_graph(k, gens);
      if (!g1.complete())
        throw ConfigError("[setup] overgroup must have finite index");
      m.rewriter = make_rewriter(g1);
    }
    int source = m.rewriter ? m.rewriter->num_schreier_gens() : k;
    int rank = static_cast<int>(cfg.get_int(section, "rank"));
    m.phi = Homomorphism::to_abelian(
        source, parse_abelian_images(cfg.get(section, "images"), rank));
    m.phi.mark_free_source_valid();
    std::vector<int> coords;
    std::istringstream zc(cfg.get(section, "zero_coords"));
    int c;
    while (zc >> c) coords.push_back(c);
    m.target = TargetMembership::zero_pattern(std::move(coords));
    m.name = s.name;
    s.mp = std::move(m);
  } else {
    throw ConfigError("[setup] problem must be wp, mp or cp");
  }
  return s;
}

// --- experiment plumbing -----------------------------------------------------

namespace {

struct LengthRange {
  int n_min, n_max, n_step;
};

LengthRange parse_range(const Config& cfg) {
  LengthRange r;
  r.n_min = static_cast<int>(cfg.get_int_or("range", "n_min", 1));
  r.n_max = static_cast<int>(cfg.get_int("range", "n_max"));
  r.n_step = static_cast<int>(cfg.get_int_or("range", "n_step", 1));
  if (r.n_min < 0 || r.n_max < r.n_min || r.n_step < 1)
    throw ConfigError("[range] needs 0 <= n_min <= n_max, n_step >= 1");
  return r;
}

std::uint64_t require_seed(const Config& cfg,
                           std::optional<std::uint64_t> seed_override) {
  if (seed_override) return *seed_override;
  if (!cfg.has("experiment", "seed"))
    throw ConfigError("[experiment] seed is mandatory (or pass --seed)");
  return static_cast<std::uint64_t>(cfg.get_int("experiment", "seed"));
}

void assert_coherent(double exact, double mc, double stderr_, int n) {
  double slack = 4.0 * stderr_ + 1e-12;
  if (std::abs(exact - mc) > slack)
    throw SoundnessError("exact/MC mismatch at n=" + std::to_string(n) +
                         ": exact=" + format_double(exact) +
                         " mc=" + format_double(mc) +
                         " stderr=" + format_double(stderr_));
}

}  // namespace

ExperimentReport run_quotient_experiment(const Config& cfg, std::uint64_t seed) {
  Instance inst = parse_instance(cfg);
  if (!inst.hom)
    throw ConfigError("quotient experiment needs a quotient instance");
  LengthRange r = parse_range(cfg);
  const std::int64_t trials = cfg.get_int_or("params", "trials", 100000);
  const int exact_max = static_cast<int>(cfg.get_int_or("params", "exact_max", 12));
  const int fit_min = static_cast<int>(cfg.get_int_or("params", "fit_min", 6));
  const std::string mode_s = cfg.get_or("params", "mode", "reduced");
  const BallMode mode = mode_s == "all" ? BallMode::All : BallMode::Reduced;
  Alphabet alpha(inst.k);
  const Homomorphism& phi = *inst.hom;

  // exact backend: closed-path counts on the quotient coset ball
  std::vector<double> exact_frac;  // indexed by length; -1 = unavailable
  exact_frac.assign(r.n_max + 1, -1.0);
  if (exact_max >= r.n_min) {
    int N = std::min(exact_max, r.n_max);
    try {
      CosetGraph ball = inst.counting_graph(N);
      std::vector<double> hat = mode == BallMode::Reduced
                                    ? count_reduced(ball, N)
                                    : count_unreduced(ball, N);
      for (int l = 0; l <= N; ++l) {
        if (mode == BallMode::Reduced) {
          // a_l / (2k (2k-1)^(l-1)) = a_hat_l (2k-1)/(2k) for l >= 1
          exact_frac[l] = l == 0 ? 1.0
                                 : hat[l] * (2.0 * inst.k - 1.0) / (2.0 * inst.k);
        } else {
          exact_frac[l] = hat[l];
        }
      }
    } catch (const BudgetError&) {
      // fall through to Monte Carlo everywhere
    }
  }

  std::vector<std::string> csv;
  csv.push_back("n,nontrivial_ratio,trivial_fraction,method,stderr,trials");
  std::vector<DensityPoint> points;
  for (int l = r.n_min; l <= r.n_max; l += r.n_step) {
    DensityPoint p;
    p.n = l;
    p.mode = mode == BallMode::All ? DensityMode::AllWords : DensityMode::ReducedWords;
    double mc_frac = -1.0, mc_se = 0.0;
    bool want_mc = trials > 0;
    if (want_mc) {
      std::int64_t hits = 0;
      for (std::int64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed ^ (0x9e37u * static_cast<std::uint64_t>(l)),
                                 static_cast<std::uint64_t>(t));
        Word w = mode == BallMode::All ? sample_word(alpha, l, rng)
                                       : sample_reduced_word(alpha, l, rng);
        hits += phi.kills(w);
      }
      mc_frac = static_cast<double>(hits) / static_cast<double>(trials);
      mc_se = std::sqrt(mc_frac * (1.0 - mc_frac) / static_cast<double>(trials));
    }
    if (exact_frac[l] >= 0.0) {
      if (want_mc) assert_coherent(exact_frac[l], mc_frac, mc_se, l);
      p.method = DensityMethod::Exact;
      p.value = 1.0 - exact_frac[l];
      csv.push_back(std::to_string(l) + ',' + format_double(p.value) + ',' +
                    format_double(exact_frac[l]) + ",exact,0,0");
    } else {
      p.method = DensityMethod::MonteCarlo;
      p.value = 1.0 - mc_frac;
      p.trials = trials;
      p.stderr_ = mc_se;
      csv.push_back(std::to_string(l) + ',' + format_double(p.value) + ',' +
                    format_double(mc_frac) + ",mc," + format_double(mc_se) +
                    ',' + std::to_string(trials));
    }
    points.push_back(p);
  }

  GenericityReport rep = genericity_report(points, fit_min);
  json summary;
  summary["kind"] = "quotient";
  summary["mode"] = mode_s;
  summary["verdict"] = genericity_name(rep.verdict);
  if (rep.fit) {
    summary["fit"]["kind"] = rep.fit->kind == DecayFit::Kind::Exponential
                                 ? "exponential"
                                 : rep.fit->kind == DecayFit::Kind::Subexponential
                                       ? "subexponential"
                                       : "none";
    summary["fit"]["sigma"] = rep.fit->sigma;
    summary["fit"]["r2"] = rep.fit->r2;
    summary["fit"]["max_tail_ratio"] = rep.fit->max_tail_ratio;
  }
  ExperimentReport out;
  out.kind = "quotient";
  out.csv = std::move(csv);
  out.summary_json = summary.dump(2);
  return out;
}

ExperimentReport run_cogrowth_experiment(const Config& cfg, std::uint64_t seed) {
  (void)seed;  // exact computation; seed kept for the determinism contract
  Instance inst = parse_instance(cfg);
  const int N = static_cast<int>(cfg.get_int_or("params", "N", 50));
  const int window = static_cast<int>(cfg.get_int_or("params", "window", 5));
  const double tol = cfg.get_double_or("params", "tol_amen", 1e-3);
  CosetGraph g = inst.counting_graph(N);
  CogrowthSeries s = compute_series(g, N, window, tol);
  auto fit = series_decay_fit(s);
  Amenability cls = classify(s, tol, fit);

  ExperimentReport out;
  out.kind = "cogrowth";
  std::ostringstream csv;
  write_series_csv(s, csv);
  std::istringstream lines(csv.str());
  std::string line;
  while (std::getline(lines, line)) out.csv.push_back(line);

  json summary;
  summary["kind"] = "cogrowth";
  summary["N"] = N;
  summary["d"] = s.d;
  summary["alpha_hat"] = s.alpha_hat;
  summary["beta_hat"] = s.beta_hat;
  summary["nu_hat"] = s.nu_hat;
  summary["bipartite"] = s.bipartite;
  const char* cls_name = cls == Amenability::Amenable      ? "Amenable"
                         : cls == Amenability::Nonamenable ? "Nonamenable"
                                                           : "Undetermined";
  summary["classification"] = cls_name;
  if (fit) {
    summary["fit"]["sigma"] = fit->sigma;
    summary["fit"]["r2"] = fit->r2;
  }
  if (cfg.has("params", "expect")) {
    const std::string want = cfg.get("params", "expect");
    summary["expected"] = want;
    summary["expectation_met"] = want == cls_name;
  }
  out.summary_json = summary.dump(2);
  return out;
}

namespace {

WordPred instance_pred(const Instance& inst) {
  if (inst.hom) {
    Homomorphism phi = *inst.hom;
    return [phi](const Word& w) { return phi.kills(w); };
  }
  SubgroupGraph g = build_subgroup_graph(inst.k, inst.subgroup_gens);
  return [g](const Word& w) { return member(g, w); };
}

}  // namespace

ExperimentReport run_density_experiment(const Config& cfg, std::uint64_t seed) {
  Instance inst = parse_instance(cfg);
  LengthRange r = parse_range(cfg);
  const std::int64_t trials = cfg.get_int_or("params", "trials", 100000);
  const int exact_max = static_cast<int>(cfg.get_int_or("params", "exact_max", 10));
  const int fit_min = static_cast<int>(cfg.get_int_or("params", "fit_min", 0));
  const std::string mode_s = cfg.get_or("params", "mode", "reduced");
  const BallMode mode = mode_s == "all" ? BallMode::All : BallMode::Reduced;
  WordPred pred = instance_pred(inst);

  std::vector<std::string> csv{"n,rho,method,stderr,mode"};
  std::vector<DensityPoint> points;
  for (int n = r.n_min; n <= r.n_max; n += r.n_step) {
    DensityPoint p;
    bool exact_ok = n <= exact_max;
    if (exact_ok) {
      try {
        p = density_exact(pred, inst.k, n, mode);
      } catch (const BudgetError&) {
        exact_ok = false;
      }
    }
    if (!exact_ok)
      p = density_mc(pred, inst.k, n, trials, seed + static_cast<std::uint64_t>(n),
                     mode);
    points.push_back(p);
    csv.push_back(std::to_string(n) + ',' + format_double(p.value) + ',' +
                  (p.method == DensityMethod::Exact ? "exact" : "mc") + ',' +
                  format_double(p.stderr_) + ',' + mode_s);
  }
  GenericityReport rep = genericity_report(points, fit_min);
  json summary;
  summary["kind"] = "density";
  summary["verdict"] = genericity_name(rep.verdict);
  summary["tail_gap"] = rep.tail_gap;
  ExperimentReport out;
  out.kind = "density";
  out.csv = std::move(csv);
  out.summary_json = summary.dump(2);
  return out;
}

ExperimentReport run_decide_sweep(const Config& cfg, std::uint64_t seed) {
  DecideSetup setup = parse_setup(cfg);
  LengthRange r = parse_range(cfg);
  const std::int64_t trials = cfg.get_int_or("params", "trials", 10000);
  const std::string mode_s = cfg.get_or("params", "mode", "all");
  const BallMode mode = mode_s == "all" ? BallMode::All : BallMode::Reduced;
  Alphabet alpha(setup.k);

  std::vector<std::string> csv{"n,frac_no,frac_unknown,trials"};
  for (int n = r.n_min; n <= r.n_max; n += r.n_step) {
    std::int64_t no = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
      Rng rng = Rng::for_trial(seed ^ (0xd1b54a32d192ed03ULL * n),
                               static_cast<std::uint64_t>(t));
      Verdict v;
      if (setup.problem == 'c') {
        int n1 = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
        Word w1 = mode == BallMode::All ? sample_word(alpha, n1, rng)
                                        : sample_reduced_word(alpha, n1, rng);
        Word w2 = mode == BallMode::All
                      ? sample_word(alpha, n - n1, rng)
                      : sample_reduced_word(alpha, n - n1, rng);
        v = setup.decide_pair(w1, w2);
      } else {
        Word w = mode == BallMode::All ? sample_word(alpha, n, rng)
                                       : sample_reduced_word(alpha, n, rng);
        v = setup.decide(w);
      }
      no += v.answer == Answer::DefinitelyNo;
    }
    double fn = static_cast<double>(no) / static_cast<double>(trials);
    csv.push_back(std::to_string(n) + ',' + format_double(fn) + ',' +
                  format_double(1.0 - fn) + ',' + std::to_string(trials));
  }
  json summary;
  summary["kind"] = "decide";
  summary["setup"] = setup.name;
  ExperimentReport out;
  out.kind = "decide";
  out.csv = std::move(csv);
  out.summary_json = summary.dump(2);
  return out;
}

ExperimentReport run_walk_experiment(const Config& cfg, std::uint64_t seed) {
  Instance inst = parse_instance(cfg);
  LengthRange r = parse_range(cfg);
  const std::int64_t trials = cfg.get_int_or("params", "trials", 100000);
  const int exact_max = static_cast<int>(cfg.get_int_or("params", "exact_max", 30));

  std::vector<double> exact;
  try {
    int N = std::min(exact_max, r.n_max);
    CosetGraph g = inst.counting_graph(N);
    exact = count_unreduced(g, N);
  } catch (const BudgetError&) {
  }

  std::vector<std::string> csv{"n,p_hat,stderr,exact,trials"};
  for (int n = r.n_min; n <= r.n_max; n += r.n_step) {
    WalkEstimate e;
    if (inst.hom)
      e = mc_return(*inst.oracle(), n, trials, seed + static_cast<std::uint64_t>(n));
    else
      e = mc_return(inst.walk_graph(n), n, trials,
                    seed + static_cast<std::uint64_t>(n));
    std::string ex = "";
    if (n < static_cast<int>(exact.size())) {
      assert_coherent(exact[n], e.p_hat, e.stderr_, n);
      ex = format_double(exact[n]);
    }
    csv.push_back(std::to_string(n) + ',' + format_double(e.p_hat) + ',' +
                  format_double(e.stderr_) + ',' + ex + ',' +
                  std::to_string(trials));
  }
  json summary;
  summary["kind"] = "walk";
  summary["trials"] = trials;
  ExperimentReport out;
  out.kind = "walk";
  out.csv = std::move(csv);
  out.summary_json = summary.dump(2);
  return out;
}

ExperimentReport run_experiment(const Config& cfg,
                                std::optional<std::uint64_t> seed_override) {
  const std::string kind = cfg.get("experiment", "kind");
  std::uint64_t seed = require_seed(cfg, seed_override);
  if (kind == "quotient") return run_quotient_experiment(cfg, seed);
  if (kind == "cogrowth") return run_cogrowth_experiment(cfg, seed);
  if (kind == "density") return run_density_experiment(cfg, seed);
  if (kind == "decide") return run_decide_sweep(cfg, seed);
  if (kind == "walk") return run_walk_experiment(cfg, seed);
  throw ConfigError("[experiment] unknown kind: " + kind);
}

}  // namespace gencase
