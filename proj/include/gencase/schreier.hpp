#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gencase/presentation.hpp"
#include "gencase/stallings.hpp"
#include "gencase/word.hpp"

namespace gencase {

enum class GraphKind {
  Finite,  // complete finite coset graph
  Ball,    // explored ball of an infinite graph; horizon = radius
  Collar,  // folded core plus regular trees, clipped at horizon = tree depth
};

/// Label-deterministic d-regular transition table for Gamma(G, H, A) with
/// base vertex 0. Undefined entries (-1) occur only beyond the horizon of
/// Ball/Collar graphs; every state a closed path of length <= horizon-ish can
/// touch is fully defined (see max_exact_count_length).
struct CosetGraph {
  int k = 0;
  GraphKind kind = GraphKind::Finite;
  std::int32_t num_states = 0;
  std::int32_t base = 0;
  std::vector<std::int32_t> table;  // num_states x 2k
  bool bipartite = false;           // computed for Finite graphs
  int horizon = 0;                  // radius (Ball) or tree depth (Collar)
  std::int32_t core_states = 0;     // Collar: states below this are the core

  int degree() const { return 2 * k; }

  std::int32_t step(std::int32_t v, Letter l) const {
    return table[static_cast<std::size_t>(v) * 2 * k + letter_slot(l)];
  }

  bool complete() const { return kind == GraphKind::Finite; }

  /// Largest path length N for which closed-path counts from the base are
  /// exact: paths of length N never touch a state with undefined transitions.
  std::int64_t max_exact_count_length() const;

  /// Walks of this length never read an undefined transition.
  std::int64_t max_walk_length() const;
};

/// Endpoint of the unique path labeled w from `start`. Throws RadiusError if
/// the path leaves the explored region.
std::int32_t trace(const CosetGraph& g, std::int32_t start, const Word& w);

/// Reinterpret a complete folded subgroup graph as the finite coset graph
/// Gamma(F, H, A). Refused for infinite index (build a collar instead).
CosetGraph coset_graph_from_subgroup(const SubgroupGraph& g);

/// Exact substrate for Gamma(F, H, A) when H has infinite index: the folded
/// core plus the regular trees hanging off its missing transitions, collapsed
/// by depth (walks in a hanging tree only feel the depth). States beyond
/// `depth` are clipped. Complete cores degenerate to Finite graphs.
CosetGraph collar_graph(const SubgroupGraph& core, int depth);

/// Coset namer for Gamma(G, ker-style H) given by a quotient map with
/// canonical forms: reduced words for free targets, integer vectors for
/// abelian targets (reduced mod the moduli when present).
struct QuotientOracle {
  Homomorphism phi;

  explicit QuotientOracle(Homomorphism h);

  int k() const { return phi.source_k; }

  struct State {
    Word free_w;
    AbelianVector vec;
  };

  State start() const;
  State apply(const State& s, Letter l) const;
  std::string key(const State& s) const;
  bool at_identity(const State& s) const;
};

/// Default lazy-exploration vertex budget; override with the
/// GENCASE_VERTEX_BUDGET environment variable or per call.
std::int64_t vertex_budget();

/// Explore Gamma out to radius R by BFS over canonical coset names. Returns a
/// Finite graph when the quotient closes up before R, else a Ball. Throws
/// BudgetError (with the attained radius) once the vertex budget is hit.
CosetGraph lazy_ball(const QuotientOracle& oracle, int radius,
                     std::int64_t budget = vertex_budget());

/// Dump format: header `d= V= base=0 bipartite=` then one line per vertex
/// with 2k target indices. Partial graphs carry kind= and horizon= fields.
void dump_graph(const CosetGraph& g, std::ostream& out);
CosetGraph parse_graph(std::istream& in);

}  // namespace gencase
