#pragma once

#include "posetpi/int_matrix.hpp"
#include "posetpi/smith.hpp"
#include "posetpi/word.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace posetpi {

/// ⟨a_1, …, a_k | r_1, …, r_s⟩ with freely and cyclically reduced relators.
/// Empty relators are kept: they are 2-cells attached along a constant path.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Reduces the relators and checks the alphabet (AlphabetMismatch).
  static GroupPresentation make(std::vector<std::string> generators, std::vector<Word> relators);

  std::size_t rank() const noexcept { return generators.size(); }
};

/// "a b^2 c^-1"; the empty word is "1".
std::string format_word(const Word& w, const std::vector<std::string>& names);
/// Case-encoded form accepted by parse_word ("abbC"); falls back to
/// format_word when some generator name is not a single lowercase letter.
std::string format_word_compact(const Word& w, const std::vector<std::string>& names);
/// "a,b | aa, abAB"
std::string format_presentation(const GroupPresentation& p);

/// Parses "g1,g2,… | w1, w2, …". Generator names are identifiers starting
/// with a lowercase letter. In relator words a name written with an uppercase
/// first letter denotes the inverse, and a token may carry an exponent
/// "^n" / "^-n". "1" is the empty word. Throws ParseError with the offending
/// position.
GroupPresentation parse_presentation(std::string_view text);
/// Parses one word over the given generator names.
Word parse_word(std::string_view text, const std::vector<std::string>& names);

/// Image of a word in ℤ^k = F/[F,F].
struct AbelianizedElement {
  std::vector<std::int64_t> exponents;

  friend bool operator==(const AbelianizedElement&, const AbelianizedElement&) = default;
};

/// Throws AlphabetMismatch.
AbelianizedElement abelianize(const GroupPresentation& p, const Word& w);

/// s × k matrix whose row j is the exponent vector of r_j.
IntMatrix abelianization_relation_matrix(const GroupPresentation& p);

/// Coordinates for G/[G,G] = ℤ^k / (row lattice of the relation matrix),
/// obtained from one Smith normal form U R V = D. A vector v maps to
/// v·V; its first `rank` coordinates live in the torsion/zero part and the
/// rest form the free part.
class AbelianInvariants {
public:
  explicit AbelianInvariants(const GroupPresentation& p);

  std::size_t generator_count() const noexcept { return V_.rows(); }
  std::size_t free_rank() const noexcept { return V_.cols() - relation_rank_; }
  /// Invariant factors > 1.
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  HomologyGroup group() const { return {free_rank(), torsion_}; }

  /// v·V restricted to the free coordinates.
  std::vector<Integer> free_part(const AbelianizedElement& v) const;
  /// Nonzero free part ⇔ infinite order in G/[G,G].
  bool has_infinite_order(const AbelianizedElement& v) const;
  /// v lies in the relation lattice, i.e. is zero in G/[G,G].
  bool is_trivial(const AbelianizedElement& v) const;

private:
  std::vector<Integer> transform(const AbelianizedElement& v) const;

  IntMatrix V_;
  std::vector<Integer> diagonal_;  // the relation_rank_ nonzero invariant factors
  std::size_t relation_rank_ = 0;
  std::vector<Integer> torsion_;
};

struct InfiniteOrderCertificate {
  bool infinite = false;
  AbelianizedElement image;
  /// Free-part coordinates of the image; all zero unless `infinite`.
  std::vector<Integer> free_coordinates;
};

/// Sound test only: true proves w has infinite order in the group; false
/// means the abelianization cannot tell.
InfiniteOrderCertificate has_infinite_order_in_abelianization(const GroupPresentation& p, const Word& w);

/// Result of Tietze simplification: the simplified presentation together
/// with the image of each original generator as a word in the new ones.
struct Simplification {
  GroupPresentation presentation;
  std::vector<Word> images;
};

/// Repeats until nothing changes: drop empty and duplicate relators, and
/// eliminate a generator g whenever some relator of length ≤ 2 contains g
/// exactly once (for two distinct letters the higher-indexed generator is
/// eliminated). Surviving generators keep their names and relative order, and
/// relators with negative exponent sum are inverted.
Simplification simplify_presentation(const GroupPresentation& p);

}  // namespace posetpi
