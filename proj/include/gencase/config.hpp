#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gencase/presentation.hpp"
#include "gencase/schreier.hpp"
#include "gencase/stallings.hpp"

namespace gencase {

/// Flat key-value config with [section] headers and # comments.
/// Unknown keys are tolerated; missing ones raise ConfigError with context.
class Config {
 public:
  static Config parse(const std::string& text, const std::string& origin = "<string>");
  static Config load(const std::string& path);

  bool has(const std::string& sec, const std::string& key) const;
  std::string get(const std::string& sec, const std::string& key) const;
  std::string get_or(const std::string& sec, const std::string& key,
                     const std::string& fallback) const;
  std::int64_t get_int(const std::string& sec, const std::string& key) const;
  std::int64_t get_int_or(const std::string& sec, const std::string& key,
                          std::int64_t fallback) const;
  double get_double_or(const std::string& sec, const std::string& key,
                       double fallback) const;

  const std::map<std::string, std::map<std::string, std::string>>& sections()
      const {
    return sections_;
  }

 private:
  std::string origin_;
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

/// An instance names the graph/group under study: either a finitely
/// generated subgroup of F_k (Stallings route) or a quotient map with
/// canonical forms (lazy-ball route).
struct Instance {
  int k = 0;
  std::vector<Word> subgroup_gens;  // subgroup route when nonempty
  std::optional<Homomorphism> hom;  // quotient route

  bool is_subgroup() const { return !subgroup_gens.empty() || !hom; }

  /// Substrate with exact closed-path counts up to length N: a finite graph
  /// when the index/quotient is finite, a collar for infinitely generated...
  /// for infinite-index subgroups, a lazy ball for infinite quotients.
  CosetGraph counting_graph(int N, std::int64_t budget = vertex_budget()) const;

  /// Substrate for Monte Carlo walks of length n.
  CosetGraph walk_graph(int n, std::int64_t budget = vertex_budget()) const;

  std::optional<QuotientOracle> oracle() const;
};

/// Reads [instance]: k plus `subgroup = aa b` or
/// `quotient = free 2 | abelian m [mod m1 m2 ...]` with
/// `images = ...` (word tokens for free targets, `/`-separated integer
/// vectors for abelian targets).
Instance parse_instance(const Config& cfg, const std::string& section = "instance");

/// Parse one abelian image list like "1 0 / 0 1 / 1 1".
std::vector<AbelianVector> parse_abelian_images(const std::string& text, int rank);

}  // namespace gencase
