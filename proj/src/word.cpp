#include "gencase/word.hpp"

#include <algorithm>
#include <cctype>

namespace gencase {

Word free_reduce(const Word& w) {
  if (w.reduced) return w;
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (Letter l : w.letters) {
    if (l == 0) throw InvalidInputError("zero letter in word");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out), true);
}

Word free_reduce(const Word& w, const Alphabet& alpha) {
  for (Letter l : w.letters) alpha.check(l);
  return free_reduce(w);
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out = u.letters;
  out.insert(out.end(), v.letters.begin(), v.letters.end());
  return Word(std::move(out), false);
}

Word product(const Word& u, const Word& v) { return free_reduce(concat(u, v)); }

Word word_inverse(const Word& w) {
  std::vector<Letter> out(w.letters.rbegin(), w.letters.rend());
  for (Letter& l : out) l = -l;
  return Word(std::move(out), w.reduced);
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.letters.size();
  while (j > i + 1 && r.letters[i] == -r.letters[j - 1]) {
    ++i;
    --j;
  }
  return Word(std::vector<Letter>(r.letters.begin() + i, r.letters.begin() + j),
              true);
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (w.letters[i] == -w.letters[i + 1]) return false;
  return true;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = letter_slot(a.letters[i]);
    int rb = letter_slot(b.letters[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

Word parse_word(const std::string& text) {
  if (text == "1") return Word();
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c <= 'z')
      out.push_back(static_cast<Letter>(c - 'a' + 1));
    else if (c >= 'A' && c <= 'Z')
      out.push_back(static_cast<Letter>(-(c - 'A' + 1)));
    else
      throw InvalidInputError(std::string("bad character '") + c + "' in word");
  }
  return Word(std::move(out), false);
}

Word parse_word(const std::string& text, const Alphabet& alpha) {
  Word w = parse_word(text);
  for (Letter l : w.letters) alpha.check(l);
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (Letter l : w.letters) {
    int i = l > 0 ? l : -l;
    if (i > 26) throw InvalidInputError("letter index beyond z");
    out.push_back(static_cast<char>((l > 0 ? 'a' : 'A') + i - 1));
  }
  return out;
}

bool free_conjugate(const Word& u, const Word& v) {
  Word cu = cyclic_reduce(u), cv = cyclic_reduce(v);
  if (cu.size() != cv.size()) return false;
  std::size_t n = cu.size();
  if (n == 0) return true;
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = cu.letters[(s + i) % n] == cv.letters[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace gencase
