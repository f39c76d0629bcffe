#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gencase/experiment.hpp"

using namespace gencase;
using nlohmann::json;

namespace {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BudgetError*>(&e)) return 3;
  if (dynamic_cast<const ConfigError*>(&e) ||
      dynamic_cast<const InvalidInputError*>(&e))
    return 2;
  return 1;
}

void write_lines(const std::vector<std::string>& lines, const std::string& path) {
  if (path.empty() || path == "-") {
    for (const auto& l : lines) std::cout << l << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path);
  for (const auto& l : lines) out << l << "\n";
}

Config inline_instance_config(int k, const std::string& subgroup,
                              const std::string& quotient,
                              const std::string& images) {
  std::ostringstream cfg;
  cfg << "[instance]\nk = " << k << "\n";
  if (!subgroup.empty()) cfg << "subgroup = " << subgroup << "\n";
  if (!quotient.empty()) {
    cfg << "quotient = " << quotient << "\n";
    cfg << "images = " << images << "\n";
  }
  return Config::parse(cfg.str(), "<flags>");
}

json verdict_json(const Verdict& v) {
  return json{{"answer", answer_name(v.answer)},
              {"steps", v.steps},
              {"note", v.note}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generic-case decision experiments on coset graphs"};
  app.require_subcommand(1);

  // --- cogrowth --------------------------------------------------------------
  auto* cog = app.add_subcommand("cogrowth", "cogrowth series of a coset graph");
  std::string cog_subgroup, cog_quotient, cog_images, cog_out, cog_config;
  int cog_k = 2, cog_N = 50;
  cog->add_option("--config", cog_config, "config file with [instance]");
  cog->add_option("--subgroup", cog_subgroup, "subgroup generators, e.g. \"aa b\"");
  cog->add_option("--quotient", cog_quotient, "quotient spec, e.g. \"abelian 1 mod 3\"");
  cog->add_option("--images", cog_images, "generator images for --quotient");
  cog->add_option("--k", cog_k, "alphabet rank");
  cog->add_option("--N", cog_N, "series length");
  cog->add_option("--out", cog_out, "CSV output path (default stdout)");

  // --- walk -------------------------------------------------------------------
  auto* walk = app.add_subcommand("walk", "Monte Carlo return probability");
  std::string walk_graph, walk_config, walk_subgroup, walk_quotient, walk_images;
  int walk_k = 2, walk_n = 10;
  std::int64_t walk_trials = 100000;
  std::uint64_t walk_seed = 0;
  bool walk_seed_set = false;
  walk->add_option("--graph", walk_graph, "graph dump file");
  walk->add_option("--config", walk_config, "config file with [instance]");
  walk->add_option("--subgroup", walk_subgroup, "subgroup generators");
  walk->add_option("--quotient", walk_quotient, "quotient spec");
  walk->add_option("--images", walk_images, "generator images");
  walk->add_option("--k", walk_k, "alphabet rank");
  walk->add_option("--n", walk_n, "walk length")->required();
  walk->add_option("--trials", walk_trials, "number of walks");
  walk->add_option("--seed", walk_seed, "RNG seed")
      ->each([&](const std::string&) { walk_seed_set = true; });

  // --- density ------------------------------------------------------------------
  auto* dens = app.add_subcommand("density", "asymptotic density of a word set");
  std::string dens_config;
  dens->add_option("--config", dens_config, "config file")->required();
  std::optional<std::uint64_t> dens_seed;
  dens->add_option("--seed", [&dens_seed](const std::vector<std::string>& v) {
    dens_seed = std::stoull(v[0]);
    return true;
  }, "seed override");
  std::string dens_out;
  dens->add_option("--out", dens_out, "CSV output path");

  // --- decide -------------------------------------------------------------------
  auto* dec = app.add_subcommand("decide", "run a partial decision algorithm");
  std::string dec_problem, dec_setup, dec_word, dec_w1, dec_w2, dec_words_file;
  bool dec_race = false;
  dec->add_option("--problem", dec_problem, "wp | mp | cp");
  dec->add_option("--setup", dec_setup, "setup config file or builtin name");
  dec->add_option("--word", dec_word, "input word (wp/mp)");
  dec->add_option("--w1", dec_w1, "first word (cp)");
  dec->add_option("--w2", dec_w2, "second word (cp)");
  dec->add_option("--words", dec_words_file, "file with one word per line");
  dec->add_flag("--race", dec_race, "race against the total solver (wp only)");

  // --- experiment -----------------------------------------------------------------
  auto* exp = app.add_subcommand("experiment", "run a config-driven experiment");
  std::string exp_config, exp_out;
  std::optional<std::uint64_t> exp_seed;
  exp->add_option("config", exp_config, "experiment config file")->required();
  exp->add_option("--seed", [&exp_seed](const std::vector<std::string>& v) {
    exp_seed = std::stoull(v[0]);
    return true;
  }, "seed override");
  exp->add_option("--out", exp_out, "CSV output path (default from config)");

  // --- graph dump -------------------------------------------------------------------
  auto* graph = app.add_subcommand("graph", "graph utilities");
  auto* gdump = graph->add_subcommand("dump", "write a coset graph dump");
  std::string gd_config, gd_subgroup, gd_quotient, gd_images, gd_out;
  int gd_k = 2, gd_radius = 0;
  gdump->add_option("--config", gd_config, "config file with [instance]");
  gdump->add_option("--subgroup", gd_subgroup, "subgroup generators");
  gdump->add_option("--quotient", gd_quotient, "quotient spec");
  gdump->add_option("--images", gd_images, "generator images");
  gdump->add_option("--k", gd_k, "alphabet rank");
  gdump->add_option("--radius", gd_radius, "exploration radius (quotient route)");
  gdump->add_option("--out", gd_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (cog->parsed()) {
      Config cfg = cog_config.empty()
                       ? inline_instance_config(cog_k, cog_subgroup, cog_quotient,
                                                cog_images)
                       : Config::load(cog_config);
      std::ostringstream extra;
      extra << "[experiment]\nkind = cogrowth\nseed = 0\n[params]\nN = " << cog_N
            << "\n";
      Config params = Config::parse(extra.str(), "<flags>");
      // merge: instance from cfg, params from flags
      std::string merged;
      for (const auto& [sec, kv] : cfg.sections()) {
        if (sec == "experiment" || sec == "params") continue;
        merged += "[" + sec + "]\n";
        for (const auto& [k2, v2] : kv) merged += k2 + " = " + v2 + "\n";
      }
      merged += "[experiment]\nkind = cogrowth\nseed = 0\n[params]\nN = " +
                std::to_string(cog_N) + "\n";
      ExperimentReport rep = run_experiment(Config::parse(merged, "<merged>"), 0);
      write_lines(rep.csv, cog_out);
      std::cout << rep.summary_json << "\n";
      return 0;
    }

    if (walk->parsed()) {
      if (!walk_seed_set) throw ConfigError("walk: --seed is mandatory");
      WalkEstimate e;
      if (!walk_graph.empty()) {
        std::ifstream in(walk_graph);
        if (!in) throw ConfigError("cannot open graph dump: " + walk_graph);
        CosetGraph g = parse_graph(in);
        e = mc_return(g, walk_n, walk_trials, walk_seed);
      } else {
        Config cfg = walk_config.empty()
                         ? inline_instance_config(walk_k, walk_subgroup,
                                                  walk_quotient, walk_images)
                         : Config::load(walk_config);
        Instance inst = parse_instance(cfg);
        if (inst.hom)
          e = mc_return(*inst.oracle(), walk_n, walk_trials, walk_seed);
        else
          e = mc_return(inst.walk_graph(walk_n), walk_n, walk_trials, walk_seed);
      }
      json out{{"n", e.n},
               {"trials", e.trials},
               {"p_hat", e.p_hat},
               {"stderr", e.stderr_}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (dens->parsed()) {
      Config cfg = Config::load(dens_config);
      ExperimentReport rep = run_density_experiment(
          cfg, dens_seed ? *dens_seed
                         : static_cast<std::uint64_t>(
                               cfg.get_int("experiment", "seed")));
      write_lines(rep.csv, dens_out.empty()
                               ? cfg.get_or("experiment", "out", "-")
                               : dens_out);
      std::cout << rep.summary_json << "\n";
      return 0;
    }

    if (dec->parsed()) {
      DecideSetup setup = [&]() {
        if (dec_setup.empty()) {
          if (dec_problem == "cp") return builtin_setup("cp_f2");
          if (dec_problem == "wp") return builtin_setup("wp_f2_abelian");
          throw ConfigError("decide: --setup required for mp");
        }
        for (const auto& n : builtin_setup_names())
          if (n == dec_setup) return builtin_setup(n);
        return parse_setup(Config::load(dec_setup));
      }();
      if (!dec_problem.empty()) {
        char want = dec_problem == "wp" ? 'w' : dec_problem == "mp" ? 'm' : 'c';
        if (want != setup.problem)
          throw ConfigError("decide: setup '" + setup.name + "' solves another problem");
      }
      json out;
      if (setup.problem == 'c') {
        if (dec_w1.empty() || dec_w2.empty())
          throw ConfigError("decide cp: need --w1 and --w2");
        out = verdict_json(setup.decide_pair(parse_word(dec_w1), parse_word(dec_w2)));
      } else if (!dec_words_file.empty()) {
        std::ifstream in(dec_words_file);
        if (!in) throw ConfigError("cannot open words file: " + dec_words_file);
        out = json::array();
        std::string line;
        while (std::getline(in, line)) {
          if (line.empty()) continue;
          json j = verdict_json(setup.decide(parse_word(line)));
          j["word"] = line;
          out.push_back(j);
        }
      } else {
        if (dec_word.empty()) throw ConfigError("decide: need --word");
        Word w = parse_word(dec_word);
        if (dec_race && setup.total_wp) {
          const Homomorphism& phi = *setup.wp_phi;
          RaceResult r = race(
              [&](std::int64_t* st) { return setup.total_wp->is_identity(w, st); },
              [&]() { return generic_wp(phi, w); });
          out = json{{"answer", r.yes ? "Yes" : "No"},
                     {"winner", r.log.winner},
                     {"steps_total", r.log.steps_total},
                     {"steps_generic", r.log.steps_generic},
                     {"generic", verdict_json(r.generic)}};
        } else {
          out = verdict_json(setup.decide(w));
        }
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (exp->parsed()) {
      Config cfg = Config::load(exp_config);
      ExperimentReport rep = run_experiment(cfg, exp_seed);
      std::string out_path =
          exp_out.empty() ? cfg.get_or("experiment", "out", "-") : exp_out;
      write_lines(rep.csv, out_path);
      std::cout << rep.summary_json << "\n";
      return 0;
    }

    if (graph->parsed() && gdump->parsed()) {
      Config cfg = gd_config.empty()
                       ? inline_instance_config(gd_k, gd_subgroup, gd_quotient,
                                                gd_images)
                       : Config::load(gd_config);
      Instance inst = parse_instance(cfg);
      CosetGraph g = inst.hom ? lazy_ball(*inst.oracle(),
                                          gd_radius > 0 ? gd_radius : 8)
                              : inst.counting_graph(gd_radius > 0 ? 2 * gd_radius : 16);
      if (gd_out.empty() || gd_out == "-") {
        dump_graph(g, std::cout);
      } else {
        std::ofstream out(gd_out);
        if (!out) throw ConfigError("cannot open output file: " + gd_out);
        dump_graph(g, out);
      }
      return 0;
    }

    std::cerr << "no subcommand executed\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
