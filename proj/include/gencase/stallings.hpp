#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gencase/word.hpp"

namespace gencase {

/// Folded subgroup graph for a finitely generated H <= F(A). Transitions are
/// partial and symmetric: (v, x) -> u present iff (u, x^-1) -> v is. Closed
/// base loops with freely reduced labels are exactly the elements of H.
/// Vertices are numbered canonically by shortlex BFS from the base, so equal
/// subgroups produce identical tables regardless of generator order.
struct SubgroupGraph {
  int k = 0;
  std::int32_t num_vertices = 0;
  std::int32_t base = 0;
  std::vector<std::int32_t> table;  // num_vertices x 2k, -1 = undefined

  std::int32_t step(std::int32_t v, Letter l) const {
    return table[static_cast<std::size_t>(v) * 2 * k + letter_slot(l)];
  }

  /// Every vertex carries all 2k transitions (finite index).
  bool complete() const;

  int degree_of(std::int32_t v) const;
};

/// Wedge of loops at the base, folded to confluence, then core-trimmed
/// (degree-1 vertices removed except the base). Empty generator words are
/// dropped; an empty list yields the one-vertex graph of the trivial group.
SubgroupGraph build_subgroup_graph(int k, const std::vector<Word>& gens);

/// True iff the freely reduced w traces a defined path base -> base.
bool member(const SubgroupGraph& g, const Word& w);

/// Vertex count when the graph is complete, nullopt for infinite index.
std::optional<std::int64_t> subgroup_index(const SubgroupGraph& g);

/// Schreier rewriting data for a finite-index subgroup: shortlex-minimal
/// transversal T (T[0] empty), coset table, and tables u(t,x) / s(t,x) with
/// t x = u(t,x) s(t,x). Since the ambient group is free, each u(t,x) is a
/// single Schreier generator or trivial. Schreier generators are numbered in
/// BFS edge-discovery order and expanded over A in `schreier_gens`.
struct SchreierRewriter {
  int k = 0;
  std::int32_t index = 0;
  std::vector<Word> transversal;
  std::vector<std::int32_t> coset_table;  // index x 2k
  std::vector<std::int32_t> u_table;      // index x 2k; 0 = trivial, else +-j
  std::vector<std::int32_t> s_table;      // index x 2k
  std::vector<Word> schreier_gens;        // expression of generator j over A

  std::int32_t num_schreier_gens() const {
    return static_cast<std::int32_t>(schreier_gens.size());
  }

  /// Rewrite w over A as (v over B, final transversal index); w lies in the
  /// subgroup iff the final index is 0. |v| <= |w| since each u entry is at
  /// most one letter.
  std::pair<Word, std::int32_t> rewrite(const Word& w) const;

  /// Expand a word over B back to a reduced word over A.
  Word expand(const Word& v) const;
};

/// Requires finite index.
SchreierRewriter make_rewriter(const SubgroupGraph& g);

}  // namespace gencase
