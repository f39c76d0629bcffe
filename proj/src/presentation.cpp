#include "gencase/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gencase {

Presentation::Presentation(Alphabet a, std::vector<Word> rels)
    : alphabet(a), relators(std::move(rels)) {
  for (Word& r : relators) {
    for (Letter l : r.letters) alphabet.check(l);
    r = cyclic_reduce(r);
    if (r.empty()) throw InvalidInputError("empty relator");
  }
}

std::vector<Word> Presentation::symmetrized() const {
  std::set<std::vector<Letter>> seen;
  std::vector<Word> out;
  for (const Word& r : relators) {
    for (Word base : {r, word_inverse(r)}) {
      const std::size_t n = base.size();
      for (std::size_t s = 0; s < n; ++s) {
        std::vector<Letter> rot;
        rot.reserve(n);
        for (std::size_t i = 0; i < n; ++i) rot.push_back(base.letters[(s + i) % n]);
        if (seen.insert(rot).second) out.emplace_back(std::move(rot), true);
      }
    }
  }
  return out;
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int k = 0;
  std::vector<Word> rels;
  bool have_gens = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "gens:") {
      std::string g;
      while (ls >> g) {
        if (g.size() != 1 || g[0] != static_cast<char>('a' + k))
          throw InvalidInputError("generators must be a b c ... in order, got '" + g + "'");
        ++k;
      }
      have_gens = true;
    } else if (head == "rels:") {
      std::string tok;
      while (ls >> tok) rels.push_back(parse_word(tok));
    } else {
      throw InvalidInputError("unexpected line in presentation: " + line);
    }
  }
  if (!have_gens) throw InvalidInputError("presentation needs a 'gens:' line");
  return Presentation(Alphabet(k), std::move(rels));
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (int i = 1; i <= p.alphabet.k; ++i) {
    out += ' ';
    out += static_cast<char>('a' + i - 1);
  }
  out += "\nrels:";
  for (const Word& r : p.relators) out += ' ' + format_word(r);
  out += '\n';
  return out;
}

SmallCancellationReport check_small_cancellation(const Presentation& p,
                                                 int lambda_den) {
  SmallCancellationReport rep;
  if (p.relators.empty()) {
    rep.satisfies = true;
    return rep;
  }
  rep.min_relator = static_cast<int>(p.relators[0].size());
  for (const Word& r : p.relators)
    rep.min_relator = std::min(rep.min_relator, static_cast<int>(r.size()));

  // positioned occurrences: (relator index, sign, shift)
  struct Occ {
    const Word* r;
    std::vector<Letter> cyc;  // doubled word for subword reads
  };
  std::vector<Occ> occs;
  std::vector<Word> holders;
  for (const Word& r : p.relators)
    for (Word base : {r, word_inverse(r)}) holders.push_back(base);
  for (const Word& base : holders) {
    Occ o;
    o.r = &base;
    o.cyc = base.letters;
    o.cyc.insert(o.cyc.end(), base.letters.begin(), base.letters.end());
    occs.push_back(std::move(o));
  }

  // collect proper cyclic subwords by (occurrence, shift); a piece is a
  // subword seen from two distinct positions
  std::map<std::vector<Letter>, int> count;
  int best = 0;
  for (int len = 1; len <= rep.min_relator; ++len) {
    count.clear();
    bool any = false;
    for (std::size_t oi = 0; oi < occs.size(); ++oi) {
      const auto& o = occs[oi];
      int n = static_cast<int>(o.r->size());
      if (len > n - 1) continue;  // proper subwords only
      any = true;
      for (int s = 0; s < n; ++s) {
        std::vector<Letter> sub(o.cyc.begin() + s, o.cyc.begin() + s + len);
        ++count[sub];
      }
    }
    if (!any) break;
    for (const auto& [sub, c] : count)
      if (c >= 2) {
        best = len;
        break;
      }
    if (best < len) break;  // no piece this long, none longer either
  }
  rep.max_piece = best;
  rep.satisfies =
      static_cast<double>(best) < static_cast<double>(rep.min_relator) / lambda_den;
  return rep;
}

namespace {

struct DehnMatch {
  std::size_t pos = 0;
  std::size_t len = 0;
  const Word* relator = nullptr;
  std::size_t rel_len = 0;
};

// longest >half-relator match; leftmost position wins ties, then first
// relator in symmetrized order
std::optional<DehnMatch> find_match(const std::vector<Word>& sym, const Word& w) {
  DehnMatch best;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (const Word& rho : sym) {
      std::size_t lim = std::min(rho.size(), w.size() - pos);
      std::size_t m = 0;
      while (m < lim && w.letters[pos + m] == rho.letters[m]) ++m;
      if (2 * m > rho.size() && m > best.len) {
        best = {pos, m, &rho, rho.size()};
      }
    }
  }
  if (best.relator == nullptr) return std::nullopt;
  return best;
}

}  // namespace

Word dehn_reduce(const Presentation& p, const Word& w, std::int64_t* steps) {
  std::vector<Word> sym = p.symmetrized();
  Word cur = free_reduce(w);
  if (steps) *steps = static_cast<std::int64_t>(w.size());
  for (;;) {
    if (steps) *steps += static_cast<std::int64_t>(cur.size()) + 1;
    auto m = find_match(sym, cur);
    if (!m) return cur;
    // u = rho[0..len), replace by (rho[len..])^-1
    std::vector<Letter> next(cur.letters.begin(),
                             cur.letters.begin() + m->pos);
    for (std::size_t i = m->relator->size(); i > m->len; --i)
      next.push_back(-m->relator->letters[i - 1]);
    next.insert(next.end(), cur.letters.begin() + m->pos + m->len,
                cur.letters.end());
    cur = free_reduce(Word(std::move(next)));
  }
}

bool has_long_relator_subword(const Presentation& p, const Word& w) {
  std::vector<Word> sym = p.symmetrized();
  return find_match(sym, free_reduce(w)).has_value();
}

// ---------------------------------------------------------------------------

Homomorphism Homomorphism::to_free(int source_k, std::vector<Word> images) {
  if (static_cast<int>(images.size()) != source_k)
    throw InvalidInputError("need one image per source generator");
  Homomorphism h;
  h.source_k = source_k;
  h.target = TargetKind::Free;
  int rank = 0;
  for (Word& im : images) {
    im = free_reduce(im);
    for (Letter l : im.letters) rank = std::max(rank, l > 0 ? l : -l);
  }
  h.target_rank = std::max(rank, 1);
  h.free_images = std::move(images);
  return h;
}

Homomorphism Homomorphism::to_abelian(int source_k,
                                      std::vector<AbelianVector> images,
                                      std::vector<std::int64_t> moduli) {
  if (static_cast<int>(images.size()) != source_k)
    throw InvalidInputError("need one image per source generator");
  Homomorphism h;
  h.source_k = source_k;
  h.target = TargetKind::Abelian;
  h.target_rank = images.empty() ? 0 : static_cast<int>(images[0].size());
  for (const auto& v : images)
    if (static_cast<int>(v.size()) != h.target_rank)
      throw InvalidInputError("abelian images must share one rank");
  if (!moduli.empty() && static_cast<int>(moduli.size()) != h.target_rank)
    throw InvalidInputError("moduli rank mismatch");
  h.abelian_images = std::move(images);
  h.moduli = std::move(moduli);
  return h;
}

Homomorphism Homomorphism::abelianization(int k) {
  std::vector<AbelianVector> images;
  for (int i = 0; i < k; ++i) {
    AbelianVector v(k, 0);
    v[i] = 1;
    images.push_back(std::move(v));
  }
  Homomorphism h = to_abelian(k, std::move(images));
  h.validated_quotient = true;  // identity presentation of the free group
  return h;
}

Word Homomorphism::apply_free(const Word& w) const {
  if (target != TargetKind::Free)
    throw InvalidInputError("apply_free on non-free target");
  std::vector<Letter> out;
  for (Letter l : w.letters) {
    int i = l > 0 ? l : -l;
    if (i > source_k) throw InvalidInputError("letter outside source alphabet");
    const Word& im = free_images[i - 1];
    if (l > 0) {
      for (Letter x : im.letters) {
        if (!out.empty() && out.back() == -x)
          out.pop_back();
        else
          out.push_back(x);
      }
    } else {
      for (auto it = im.letters.rbegin(); it != im.letters.rend(); ++it) {
        Letter x = -*it;
        if (!out.empty() && out.back() == -x)
          out.pop_back();
        else
          out.push_back(x);
      }
    }
  }
  return Word(std::move(out), true);
}

AbelianVector Homomorphism::apply_abelian(const Word& w) const {
  if (target != TargetKind::Abelian)
    throw InvalidInputError("apply_abelian on non-abelian target");
  AbelianVector acc(target_rank, 0);
  for (Letter l : w.letters) {
    int i = l > 0 ? l : -l;
    if (i > source_k) throw InvalidInputError("letter outside source alphabet");
    const AbelianVector& im = abelian_images[i - 1];
    for (int j = 0; j < target_rank; ++j) acc[j] += (l > 0 ? im[j] : -im[j]);
  }
  if (!moduli.empty())
    for (int j = 0; j < target_rank; ++j)
      if (moduli[j] > 0) {
        acc[j] %= moduli[j];
        if (acc[j] < 0) acc[j] += moduli[j];
      }
  return acc;
}

bool Homomorphism::kills(const Word& w) const {
  if (target == TargetKind::Free) return apply_free(w).empty();
  AbelianVector v = apply_abelian(w);
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

void Homomorphism::validate_quotient(const Presentation& p) {
  if (p.alphabet.k != source_k)
    throw InvalidInputError("presentation rank mismatch");
  for (const Word& r : p.relators)
    if (!kills(r))
      throw InvalidInputError("map does not kill relator " + format_word(r));
  validated_quotient = true;
}

// ---------------------------------------------------------------------------

WpOracle WpOracle::free_group(int k) {
  WpOracle o;
  o.kind = Kind::Free;
  o.k = k;
  return o;
}

WpOracle WpOracle::abelian(Homomorphism h) {
  if (h.target != TargetKind::Abelian)
    throw InvalidInputError("abelian oracle needs an abelian map");
  WpOracle o;
  o.kind = Kind::Abelian;
  o.ab = std::move(h);
  return o;
}

WpOracle WpOracle::dehn(Presentation p) {
  auto rep = check_small_cancellation(p, 6);
  if (!rep.satisfies)
    throw InvalidInputError(
        "presentation fails C'(1/6) (max piece " + std::to_string(rep.max_piece) +
        ", min relator " + std::to_string(rep.min_relator) +
        "); Dehn's algorithm would carry no word-problem guarantee");
  WpOracle o;
  o.kind = Kind::Dehn;
  o.pres = std::move(p);
  return o;
}

bool WpOracle::is_identity(const Word& w, std::int64_t* steps) const {
  switch (kind) {
    case Kind::Free: {
      if (steps) *steps = static_cast<std::int64_t>(w.size());
      return free_reduce(w).empty();
    }
    case Kind::Abelian: {
      if (steps) *steps = static_cast<std::int64_t>(w.size());
      return ab->kills(w);
    }
    case Kind::Dehn: {
      std::int64_t s = 0;
      Word r = dehn_reduce(*pres, w, &s);
      if (steps) *steps = s;
      return r.empty();
    }
  }
  return false;
}

}  // namespace gencase
