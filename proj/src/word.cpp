#include "posetpi/word.hpp"

#include "posetpi/error.hpp"

#include <algorithm>
#include <string>

namespace posetpi {

Word reduce(Word w) {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (const Letter& l : w.letters) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    if (w.letters[i] == w.letters[i - 1].inverse()) return false;
  return true;
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> all = u.letters;
  all.insert(all.end(), v.letters.begin(), v.letters.end());
  return reduce(Word(std::move(all)));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.push_back(it->inverse());
  return reduce(Word(std::move(out)));
}

Word cyclic_reduce(Word w) {
  w = reduce(std::move(w));
  std::size_t lo = 0, hi = w.letters.size();
  while (hi - lo >= 2 && w.letters[lo] == w.letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(w.letters.begin() + static_cast<std::ptrdiff_t>(lo),
                                  w.letters.begin() + static_cast<std::ptrdiff_t>(hi)));
}

Word rotate(const Word& w, std::size_t offset) {
  if (w.empty()) return w;
  auto letters = w.letters;
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(offset % letters.size()), letters.end());
  return Word(std::move(letters));
}

Word substitute(const Word& w, std::span<const Word> images) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters) {
    if (l.generator >= images.size())
      throw Error(ErrorCode::AlphabetMismatch, "generator index " + std::to_string(l.generator) + " has no image");
    const Word piece = l.exponent > 0 ? images[l.generator] : invert(images[l.generator]);
    out.insert(out.end(), piece.letters.begin(), piece.letters.end());
  }
  return reduce(Word(std::move(out)));
}

std::vector<std::int64_t> exponent_sums(const Word& w, std::size_t rank) {
  std::vector<std::int64_t> sums(rank, 0);
  for (const Letter& l : w.letters) {
    if (l.generator >= rank)
      throw Error(ErrorCode::AlphabetMismatch,
                  "generator index " + std::to_string(l.generator) + " outside alphabet of size " +
                      std::to_string(rank));
    sums[l.generator] += l.exponent;
  }
  return sums;
}

std::size_t occurrences(const Word& w, std::size_t g) {
  return static_cast<std::size_t>(
      std::count_if(w.letters.begin(), w.letters.end(), [g](const Letter& l) { return l.generator == g; }));
}

}  // namespace posetpi
