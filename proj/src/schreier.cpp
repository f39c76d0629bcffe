#include "gencase/schreier.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace gencase {

std::int64_t CosetGraph::max_exact_count_length() const {
  if (kind == GraphKind::Finite) return std::numeric_limits<std::int64_t>::max();
  return 2 * static_cast<std::int64_t>(horizon) - 1;
}

std::int64_t CosetGraph::max_walk_length() const {
  if (kind == GraphKind::Finite) return std::numeric_limits<std::int64_t>::max();
  return horizon;
}

std::int32_t trace(const CosetGraph& g, std::int32_t start, const Word& w) {
  std::int32_t v = start;
  for (Letter l : w.letters) {
    Alphabet(g.k).check(l);
    v = g.step(v, l);
    if (v < 0)
      throw RadiusError("trace: path left the explored region (horizon " +
                        std::to_string(g.horizon) + ")");
    if (g.kind == GraphKind::Collar && v >= g.core_states)
      throw InvalidInputError(
          "trace: collar tree states are collapsed and not label-faithful; "
          "trace stays on the folded core");
  }
  return v;
}

static bool two_color(const CosetGraph& g) {
  std::vector<int> color(g.num_states, -1);
  std::queue<std::int32_t> q;
  color[g.base] = 0;
  q.push(g.base);
  while (!q.empty()) {
    std::int32_t v = q.front();
    q.pop();
    for (int s = 0; s < g.degree(); ++s) {
      std::int32_t t = g.table[static_cast<std::size_t>(v) * g.degree() + s];
      if (t < 0) continue;
      if (color[t] < 0) {
        color[t] = 1 - color[v];
        q.push(t);
      } else if (color[t] == color[v]) {
        return false;
      }
    }
  }
  return true;
}

CosetGraph coset_graph_from_subgroup(const SubgroupGraph& g) {
  if (!g.complete())
    throw InvalidInputError(
        "coset_graph_from_subgroup: infinite index; use collar_graph");
  CosetGraph out;
  out.k = g.k;
  out.kind = GraphKind::Finite;
  out.num_states = g.num_vertices;
  out.base = g.base;
  out.table = g.table;
  out.core_states = out.num_states;
  out.bipartite = two_color(out);
  return out;
}

CosetGraph collar_graph(const SubgroupGraph& core, int depth) {
  if (depth < 1) throw InvalidInputError("collar depth must be >= 1");
  if (core.complete()) return coset_graph_from_subgroup(core);
  const int d = 2 * core.k;

  std::vector<std::pair<std::int32_t, int>> slots;  // (vertex, slot) undefined
  for (std::int32_t v = 0; v < core.num_vertices; ++v)
    for (int s = 0; s < d; ++s)
      if (core.table[static_cast<std::size_t>(v) * d + s] < 0)
        slots.emplace_back(v, s);

  CosetGraph g;
  g.k = core.k;
  g.kind = GraphKind::Collar;
  g.horizon = depth;
  g.base = core.base;
  g.core_states = core.num_vertices;
  const std::int64_t ns =
      core.num_vertices + static_cast<std::int64_t>(slots.size()) * depth;
  g.num_states = static_cast<std::int32_t>(ns);
  g.table.assign(static_cast<std::size_t>(ns) * d, -1);

  auto tree_state = [&](std::size_t slot_idx, int dep) {
    return static_cast<std::int32_t>(core.num_vertices +
                                     slot_idx * static_cast<std::size_t>(depth) +
                                     (dep - 1));
  };

  // core carried over
  for (std::int32_t v = 0; v < core.num_vertices; ++v)
    for (int s = 0; s < d; ++s)
      g.table[static_cast<std::size_t>(v) * d + s] =
          core.table[static_cast<std::size_t>(v) * d + s];

  // Tree vertices at one depth of one hanging tree share a state: a walk
  // only feels "one of 2k slots returns, the rest go deeper". The labels
  // inside a collapsed tree are a convention, so the table is exact for
  // unreduced counting and for uniform random walks, but not for tracing a
  // particular word past the core (trace refuses that), and non-backtracking
  // counts must stay on the core, where reduced closed paths live anyway.
  for (std::size_t i = 0; i < slots.size(); ++i) {
    auto [v, s] = slots[i];
    g.table[static_cast<std::size_t>(v) * d + s] = tree_state(i, 1);
    for (int dep = 1; dep <= depth; ++dep) {
      std::int32_t st = tree_state(i, dep);
      int back_slot = (dep == 1) ? letter_slot(-slot_letter(s)) : 0;
      for (int s2 = 0; s2 < d; ++s2) {
        std::int32_t tgt;
        if (s2 == back_slot)
          tgt = (dep == 1) ? v : tree_state(i, dep - 1);
        else
          tgt = (dep < depth) ? tree_state(i, dep + 1) : -1;
        g.table[static_cast<std::size_t>(st) * d + s2] = tgt;
      }
    }
  }
  return g;
}

// --- quotient oracles -------------------------------------------------------

QuotientOracle::QuotientOracle(Homomorphism h) : phi(std::move(h)) {
  if (!phi.validated_quotient)
    throw InvalidInputError(
        "quotient oracle needs a validated quotient map (or a free source)");
}

QuotientOracle::State QuotientOracle::start() const {
  State s;
  if (phi.target == TargetKind::Abelian) s.vec.assign(phi.target_rank, 0);
  return s;
}

QuotientOracle::State QuotientOracle::apply(const State& s, Letter l) const {
  Alphabet(phi.source_k).check(l);
  State out = s;
  if (phi.target == TargetKind::Free) {
    Word im = phi.apply_free(Word({l}, true));
    out.free_w = product(out.free_w, im);
  } else {
    int i = l > 0 ? l : -l;
    const AbelianVector& im = phi.abelian_images[i - 1];
    for (int j = 0; j < phi.target_rank; ++j) {
      out.vec[j] += (l > 0 ? im[j] : -im[j]);
      if (!phi.moduli.empty() && phi.moduli[j] > 0) {
        out.vec[j] %= phi.moduli[j];
        if (out.vec[j] < 0) out.vec[j] += phi.moduli[j];
      }
    }
  }
  return out;
}

std::string QuotientOracle::key(const State& s) const {
  std::string k;
  if (phi.target == TargetKind::Free) {
    k.resize(s.free_w.size() * sizeof(Letter));
    if (!s.free_w.letters.empty())
      std::memcpy(k.data(), s.free_w.letters.data(), k.size());
  } else {
    k.resize(s.vec.size() * sizeof(std::int64_t));
    if (!s.vec.empty()) std::memcpy(k.data(), s.vec.data(), k.size());
  }
  return k;
}

bool QuotientOracle::at_identity(const State& s) const {
  if (phi.target == TargetKind::Free) return s.free_w.empty();
  return std::all_of(s.vec.begin(), s.vec.end(),
                     [](std::int64_t x) { return x == 0; });
}

std::int64_t vertex_budget() {
  if (const char* env = std::getenv("GENCASE_VERTEX_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 5'000'000;
}

CosetGraph lazy_ball(const QuotientOracle& oracle, int radius,
                     std::int64_t budget) {
  if (radius < 0) throw InvalidInputError("lazy_ball: radius >= 0");
  const int d = 2 * oracle.k();

  std::unordered_map<std::string, std::int32_t> id;
  std::vector<QuotientOracle::State> states;
  std::vector<int> dist;
  std::vector<std::int32_t> table;

  auto intern = [&](const QuotientOracle::State& s, int dd) -> std::int32_t {
    std::string key = oracle.key(s);
    auto it = id.find(key);
    if (it != id.end()) return it->second;
    if (static_cast<std::int64_t>(states.size()) >= budget)
      throw BudgetError("lazy_ball: vertex budget " + std::to_string(budget) +
                        " exhausted at radius " + std::to_string(dd) +
                        " of requested " + std::to_string(radius));
    std::int32_t v = static_cast<std::int32_t>(states.size());
    id.emplace(std::move(key), v);
    states.push_back(s);
    dist.push_back(dd);
    table.insert(table.end(), d, -1);
    return v;
  };

  intern(oracle.start(), 0);
  bool saturated = true;
  for (std::int32_t v = 0; v < static_cast<std::int32_t>(states.size()); ++v) {
    if (dist[v] >= radius) {
      saturated = false;  // unexpanded frontier
      continue;
    }
    for (int s = 0; s < d; ++s) {
      auto nb = oracle.apply(states[v], slot_letter(s));
      std::int32_t t = intern(nb, dist[v] + 1);
      table[static_cast<std::size_t>(v) * d + s] = t;
    }
  }

  CosetGraph g;
  g.k = oracle.k();
  g.base = 0;
  g.num_states = static_cast<std::int32_t>(states.size());
  g.core_states = g.num_states;
  g.table = std::move(table);
  if (saturated) {
    g.kind = GraphKind::Finite;
    g.horizon = radius;
    g.bipartite = two_color(g);
  } else {
    g.kind = GraphKind::Ball;
    g.horizon = radius;
  }
  return g;
}

void dump_graph(const CosetGraph& g, std::ostream& out) {
  out << "d=" << g.degree() << " V=" << g.num_states << " base=" << g.base
      << " bipartite=" << (g.bipartite ? 1 : 0);
  if (g.kind != GraphKind::Finite)
    out << " kind=" << (g.kind == GraphKind::Ball ? "ball" : "collar")
        << " horizon=" << g.horizon << " core=" << g.core_states;
  out << "\n";
  for (std::int32_t v = 0; v < g.num_states; ++v) {
    for (int s = 0; s < g.degree(); ++s) {
      if (s) out << ' ';
      out << g.table[static_cast<std::size_t>(v) * g.degree() + s];
    }
    out << "\n";
  }
}

CosetGraph parse_graph(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw InvalidInputError("empty graph dump");
  CosetGraph g;
  int d = -1;
  std::int32_t V = -1;
  {
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw InvalidInputError("bad header token: " + tok);
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "d") d = std::stoi(val);
      else if (key == "V") V = std::stoi(val);
      else if (key == "base") g.base = std::stoi(val);
      else if (key == "bipartite") g.bipartite = val == "1";
      else if (key == "kind")
        g.kind = val == "ball" ? GraphKind::Ball : GraphKind::Collar;
      else if (key == "horizon") g.horizon = std::stoi(val);
      else if (key == "core") g.core_states = std::stoi(val);
      else throw InvalidInputError("unknown header field: " + key);
    }
  }
  if (d <= 0 || d % 2 != 0 || V < 0)
    throw InvalidInputError("graph dump needs d= (even, positive) and V=");
  g.k = d / 2;
  g.num_states = V;
  if (g.kind != GraphKind::Collar) g.core_states = V;
  g.table.reserve(static_cast<std::size_t>(V) * d);
  for (std::int32_t v = 0; v < V; ++v) {
    for (int s = 0; s < d; ++s) {
      long long t;
      if (!(in >> t)) throw InvalidInputError("graph dump truncated");
      if (t >= V) throw InvalidInputError("target out of range in dump");
      g.table.push_back(static_cast<std::int32_t>(t));
      if (t < 0 && g.kind == GraphKind::Finite)
        throw InvalidInputError("finite graph dump has undefined transitions");
    }
  }
  return g;
}

}  // namespace gencase
