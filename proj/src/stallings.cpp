#include "gencase/stallings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>

namespace gencase {

bool SubgroupGraph::complete() const {
  return std::none_of(table.begin(), table.end(),
                      [](std::int32_t t) { return t < 0; });
}

int SubgroupGraph::degree_of(std::int32_t v) const {
  int d = 0;
  for (int s = 0; s < 2 * k; ++s)
    if (table[static_cast<std::size_t>(v) * 2 * k + s] >= 0) ++d;
  return d;
}

namespace {

struct Builder {
  int k;
  // mutable multi-graph during folding: per vertex, per slot, list of targets
  std::vector<std::vector<std::vector<std::int32_t>>> adj;
  std::vector<std::int32_t> parent;  // union-find

  explicit Builder(int rank) : k(rank) {}

  std::int32_t fresh() {
    adj.emplace_back(2 * k);
    parent.push_back(static_cast<std::int32_t>(parent.size()));
    return static_cast<std::int32_t>(parent.size()) - 1;
  }

  std::int32_t find(std::int32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  void add_edge(std::int32_t u, Letter l, std::int32_t v) {
    adj[u][letter_slot(l)].push_back(v);
    adj[v][letter_slot(-l)].push_back(u);
  }

  void fold() {
    std::deque<std::int32_t> work;
    for (std::int32_t v = 0; v < static_cast<std::int32_t>(adj.size()); ++v)
      work.push_back(v);
    while (!work.empty()) {
      std::int32_t v = find(work.front());
      work.pop_front();
      bool merged = false;
      for (int s = 0; s < 2 * k && !merged; ++s) {
        std::vector<std::int32_t> outs = adj[v][s];
        for (auto& t : outs) t = find(t);
        std::sort(outs.begin(), outs.end());
        outs.erase(std::unique(outs.begin(), outs.end()), outs.end());
        adj[v][s] = outs;
        if (outs.size() >= 2) {
          // merge one conflicting pair, then revisit
          std::int32_t keep = outs[0], drop = outs[1];
          parent[drop] = keep;
          for (int s2 = 0; s2 < 2 * k; ++s2) {
            std::vector<std::int32_t> moved;
            moved.swap(adj[drop][s2]);
            auto& dst = adj[keep][s2];
            dst.insert(dst.end(), moved.begin(), moved.end());
          }
          work.push_back(keep);
          merged = true;
        }
      }
      if (merged) work.push_back(find(v));
    }
  }
};

}  // namespace

SubgroupGraph build_subgroup_graph(int k, const std::vector<Word>& gens) {
  Alphabet alpha(k);
  Builder b(k);
  std::int32_t base = b.fresh();
  for (const Word& g : gens) {
    Word r = free_reduce(g, alpha);
    if (r.empty()) continue;
    std::int32_t cur = base;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int32_t nxt = (i + 1 == r.size()) ? base : b.fresh();
      b.add_edge(cur, r.letters[i], nxt);
      cur = nxt;
    }
  }
  b.fold();

  // collect folded transitions on find-representatives
  std::int32_t root = b.find(base);
  std::map<std::int32_t, std::vector<std::int32_t>> tbl;
  for (std::int32_t v = 0; v < static_cast<std::int32_t>(b.adj.size()); ++v) {
    if (b.find(v) != v) continue;
    auto& row = tbl[v];
    row.assign(2 * k, -1);
    for (int s = 0; s < 2 * k; ++s) {
      for (auto t : b.adj[v][s]) {
        row[s] = b.find(t);
        break;
      }
      // after fold() every list has at most one distinct target
      for (auto t : b.adj[v][s])
        if (b.find(t) != row[s])
          throw SoundnessError("fold left a nondeterministic transition");
    }
  }

  // core-trim: drop degree<=1 vertices, base always kept
  std::map<std::int32_t, int> degree;
  for (auto& [v, row] : tbl)
    degree[v] = static_cast<int>(std::count_if(
        row.begin(), row.end(), [](std::int32_t t) { return t >= 0; }));
  bool changed = true;
  std::map<std::int32_t, bool> dead;
  while (changed) {
    changed = false;
    for (auto& [v, row] : tbl) {
      if (v == root || dead[v] || degree[v] > 1) continue;
      dead[v] = true;
      changed = true;
      for (int s = 0; s < 2 * k; ++s) {
        std::int32_t t = row[s];
        if (t < 0) continue;
        auto& trow = tbl[t];
        trow[letter_slot(-slot_letter(s))] = -1;
        --degree[t];
        row[s] = -1;
      }
    }
  }

  // canonical shortlex BFS renumbering from the base
  std::map<std::int32_t, std::int32_t> id;
  std::vector<std::int32_t> order;
  id[root] = 0;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::int32_t v = order[head];
    for (int s = 0; s < 2 * k; ++s) {
      std::int32_t t = tbl[v][s];
      if (t < 0) continue;
      if (!id.count(t)) {
        id[t] = static_cast<std::int32_t>(order.size());
        order.push_back(t);
      }
    }
  }

  SubgroupGraph g;
  g.k = k;
  g.base = 0;
  g.num_vertices = static_cast<std::int32_t>(order.size());
  g.table.assign(static_cast<std::size_t>(g.num_vertices) * 2 * k, -1);
  for (std::int32_t v = 0; v < g.num_vertices; ++v) {
    auto& row = tbl[order[v]];
    for (int s = 0; s < 2 * k; ++s)
      if (row[s] >= 0)
        g.table[static_cast<std::size_t>(v) * 2 * k + s] = id.at(row[s]);
  }
  return g;
}

bool member(const SubgroupGraph& g, const Word& w) {
  Word r = free_reduce(w);
  std::int32_t v = g.base;
  for (Letter l : r.letters) {
    v = g.step(v, l);
    if (v < 0) return false;
  }
  return v == g.base;
}

std::optional<std::int64_t> subgroup_index(const SubgroupGraph& g) {
  if (!g.complete()) return std::nullopt;
  return g.num_vertices;
}

SchreierRewriter make_rewriter(const SubgroupGraph& g) {
  if (!g.complete())
    throw InvalidInputError("make_rewriter: subgroup has infinite index");
  SchreierRewriter rw;
  rw.k = g.k;
  rw.index = g.num_vertices;
  const int d = 2 * g.k;

  // the canonical numbering is already a shortlex BFS from the base, so the
  // BFS tree gives shortlex-minimal transversal words
  rw.transversal.assign(g.num_vertices, Word());
  std::vector<bool> seen(g.num_vertices, false);
  std::vector<std::pair<std::int32_t, int>> tree_edge;  // (from, slot) per vertex
  tree_edge.assign(g.num_vertices, {-1, -1});
  std::queue<std::int32_t> q;
  q.push(g.base);
  seen[g.base] = true;
  while (!q.empty()) {
    std::int32_t v = q.front();
    q.pop();
    for (int s = 0; s < d; ++s) {
      std::int32_t t = g.step(v, slot_letter(s));
      if (!seen[t]) {
        seen[t] = true;
        tree_edge[t] = {v, s};
        std::vector<Letter> w = rw.transversal[v].letters;
        w.push_back(slot_letter(s));
        rw.transversal[t] = Word(std::move(w), true);
        q.push(t);
      }
    }
  }

  rw.coset_table = g.table;
  rw.u_table.assign(static_cast<std::size_t>(g.num_vertices) * d, 0);
  rw.s_table.assign(static_cast<std::size_t>(g.num_vertices) * d, -1);

  // Schreier generators in BFS edge-discovery order over non-tree edges;
  // each edge and its inverse share one generator
  std::map<std::pair<std::int32_t, int>, std::int32_t> gen_of_edge;
  for (std::int32_t t = 0; t < g.num_vertices; ++t) {
    for (int s = 0; s < d; ++s) {
      std::int32_t tgt = g.step(t, slot_letter(s));
      rw.s_table[static_cast<std::size_t>(t) * d + s] = tgt;
      bool is_tree = (tree_edge[tgt].first == t && tree_edge[tgt].second == s) ||
                     (tree_edge[t].first == tgt &&
                      tree_edge[t].second == letter_slot(-slot_letter(s)));
      if (is_tree) continue;  // u stays trivial
      auto key = std::make_pair(t, s);
      auto inv_key = std::make_pair(tgt, letter_slot(-slot_letter(s)));
      auto it = gen_of_edge.find(key);
      std::int32_t letter;
      if (it != gen_of_edge.end()) {
        letter = it->second;
      } else {
        // t x t'^-1, oriented so the stored expression is shortlex-minimal
        Word expr = product(
            concat(rw.transversal[t], Word({slot_letter(s)}, true)),
            word_inverse(rw.transversal[tgt]));
        Word inv = word_inverse(expr);
        bool flip = shortlex_less(inv, expr);
        rw.schreier_gens.push_back(flip ? inv : expr);
        std::int32_t j = static_cast<std::int32_t>(rw.schreier_gens.size());
        letter = flip ? -j : j;
        gen_of_edge[key] = letter;
        gen_of_edge[inv_key] = -letter;
      }
      rw.u_table[static_cast<std::size_t>(t) * d + s] = letter;
    }
  }
  return rw;
}

std::pair<Word, std::int32_t> SchreierRewriter::rewrite(const Word& w) const {
  const int d = 2 * k;
  std::int32_t t = 0;
  std::vector<Letter> v;
  for (Letter x : w.letters) {
    Alphabet(k).check(x);
    int s = letter_slot(x);
    std::int32_t u = u_table[static_cast<std::size_t>(t) * d + s];
    if (u != 0) v.push_back(u);
    t = s_table[static_cast<std::size_t>(t) * d + s];
  }
  return {Word(std::move(v), false), t};
}

Word SchreierRewriter::expand(const Word& v) const {
  Word out;
  out.reduced = true;
  for (Letter l : v.letters) {
    int j = l > 0 ? l : -l;
    if (j < 1 || j > num_schreier_gens())
      throw InvalidInputError("Schreier letter out of range");
    const Word& e = schreier_gens[j - 1];
    out = product(out, l > 0 ? e : word_inverse(e));
  }
  return out;
}

}  // namespace gencase
