#include "gencase/config.hpp"

#include <fstream>
#include <sstream>

namespace gencase {

Config Config::parse(const std::string& text, const std::string& origin) {
  Config cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto strip = [](std::string s) {
      std::size_t a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      std::size_t b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(lineno) +
                          ": unterminated section header");
      section = strip(line.substr(1, line.size() - 2));
      cfg.sections_[section];
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": expected key = value");
    std::string key = strip(line.substr(0, eq));
    std::string val = strip(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    cfg.sections_[section][key] = val;
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

bool Config::has(const std::string& sec, const std::string& key) const {
  auto it = sections_.find(sec);
  return it != sections_.end() && it->second.count(key) > 0;
}

std::string Config::get(const std::string& sec, const std::string& key) const {
  auto it = sections_.find(sec);
  if (it == sections_.end())
    throw ConfigError(origin_ + ": missing section [" + sec + "]");
  auto jt = it->second.find(key);
  if (jt == it->second.end())
    throw ConfigError(origin_ + ": missing key '" + key + "' in [" + sec + "]");
  return jt->second;
}

std::string Config::get_or(const std::string& sec, const std::string& key,
                           const std::string& fallback) const {
  return has(sec, key) ? get(sec, key) : fallback;
}

std::int64_t Config::get_int(const std::string& sec, const std::string& key) const {
  const std::string v = get(sec, key);
  try {
    std::size_t pos = 0;
    std::int64_t out = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ": key '" + key + "' in [" + sec +
                      "] is not an integer: " + v);
  }
}

std::int64_t Config::get_int_or(const std::string& sec, const std::string& key,
                                std::int64_t fallback) const {
  return has(sec, key) ? get_int(sec, key) : fallback;
}

double Config::get_double_or(const std::string& sec, const std::string& key,
                             double fallback) const {
  if (!has(sec, key)) return fallback;
  const std::string v = get(sec, key);
  try {
    std::size_t pos = 0;
    double out = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ": key '" + key + "' in [" + sec +
                      "] is not a number: " + v);
  }
}

std::vector<AbelianVector> parse_abelian_images(const std::string& text, int rank) {
  std::vector<AbelianVector> out;
  std::istringstream in(text);
  std::string tok;
  AbelianVector cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    if (rank > 0 && static_cast<int>(cur.size()) != rank)
      throw ConfigError("abelian image has rank " + std::to_string(cur.size()) +
                        ", expected " + std::to_string(rank));
    out.push_back(cur);
    cur.clear();
  };
  while (in >> tok) {
    if (tok == "/") {
      flush();
    } else {
      try {
        cur.push_back(std::stoll(tok));
      } catch (const std::exception&) {
        throw ConfigError("bad integer in abelian images: " + tok);
      }
    }
  }
  flush();
  return out;
}

static std::vector<Word> parse_word_list(const std::string& text) {
  std::vector<Word> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(parse_word(tok));
  return out;
}

Instance parse_instance(const Config& cfg, const std::string& section) {
  Instance inst;
  inst.k = static_cast<int>(cfg.get_int(section, "k"));
  if (inst.k < 1) throw ConfigError("[" + section + "] k must be >= 1");
  bool has_sub = cfg.has(section, "subgroup");
  bool has_quot = cfg.has(section, "quotient");
  if (has_sub == has_quot)
    throw ConfigError("[" + section +
                      "] needs exactly one of 'subgroup' or 'quotient'");
  if (has_sub) {
    inst.subgroup_gens = parse_word_list(cfg.get(section, "subgroup"));
    Alphabet alpha(inst.k);
    for (const Word& w : inst.subgroup_gens)
      for (Letter l : w.letters) alpha.check(l);
    return inst;
  }

  std::istringstream qs(cfg.get(section, "quotient"));
  std::string kindtok;
  int rank = 0;
  if (!(qs >> kindtok >> rank) || rank < 0)
    throw ConfigError("[" + section + "] quotient = free|abelian RANK ...");
  std::vector<std::int64_t> moduli;
  std::string modtok;
  if (qs >> modtok) {
    if (modtok != "mod")
      throw ConfigError("[" + section + "] expected 'mod' in quotient spec");
    std::int64_t m;
    while (qs >> m) moduli.push_back(m);
    if (static_cast<int>(moduli.size()) != rank)
      throw ConfigError("[" + section + "] need one modulus per coordinate");
  }

  const std::string images = cfg.get(section, "images");
  Homomorphism h;
  if (kindtok == "free") {
    std::vector<Word> imgs = parse_word_list(images);
    if (static_cast<int>(imgs.size()) != inst.k)
      throw ConfigError("[" + section + "] need one image word per generator");
    Alphabet target(rank);
    for (const Word& w : imgs)
      for (Letter l : w.letters) target.check(l);
    h = Homomorphism::to_free(inst.k, std::move(imgs));
    h.target_rank = rank;
  } else if (kindtok == "abelian") {
    h = Homomorphism::to_abelian(inst.k, parse_abelian_images(images, rank),
                                 std::move(moduli));
  } else {
    throw ConfigError("[" + section + "] unknown quotient kind: " + kindtok);
  }
  h.mark_free_source_valid();
  inst.hom = std::move(h);
  return inst;
}

std::optional<QuotientOracle> Instance::oracle() const {
  if (!hom) return std::nullopt;
  return QuotientOracle(*hom);
}

CosetGraph Instance::counting_graph(int N, std::int64_t budget) const {
  if (hom) {
    return lazy_ball(*oracle(), N / 2 + 1, budget);
  }
  SubgroupGraph g = build_subgroup_graph(k, subgroup_gens);
  if (g.complete()) return coset_graph_from_subgroup(g);
  return collar_graph(g, N / 2 + 1);
}

CosetGraph Instance::walk_graph(int n, std::int64_t budget) const {
  if (hom) return lazy_ball(*oracle(), n, budget);
  SubgroupGraph g = build_subgroup_graph(k, subgroup_gens);
  if (g.complete()) return coset_graph_from_subgroup(g);
  return collar_graph(g, std::max(n, 1));
}

}  // namespace gencase
