#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace posetpi {

/// a_i^{±1}
struct Letter {
  std::size_t generator = 0;
  int exponent = 1;

  Letter inverse() const { return {generator, -exponent}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Element of a free group, as a letter sequence. Operations below return
/// freely reduced words; the constructor does not reduce.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}
  static Word generator(std::size_t g, int exponent = 1) { return Word({Letter{g, exponent}}); }

  bool empty() const noexcept { return letters.empty(); }
  std::size_t length() const noexcept { return letters.size(); }

  friend bool operator==(const Word&, const Word&) = default;
};

Word reduce(Word w);
bool is_reduced(const Word& w);
Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
/// Free and cyclic reduction (removes a^ε … a^-ε wrapping around the ends).
Word cyclic_reduce(Word w);
/// Rotation so the word starts at `offset`.
Word rotate(const Word& w, std::size_t offset);

/// Replaces generator g by images[g] and reduces.
Word substitute(const Word& w, std::span<const Word> images);

/// Exponent sum of every generator. Throws AlphabetMismatch if the word uses
/// a generator ≥ rank.
std::vector<std::int64_t> exponent_sums(const Word& w, std::size_t rank);

/// Number of occurrences of g, regardless of sign.
std::size_t occurrences(const Word& w, std::size_t g);

}  // namespace posetpi
