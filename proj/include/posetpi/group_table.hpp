#pragma once

#include "posetpi/presentation.hpp"
#include "posetpi/word.hpp"

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace posetpi {

inline constexpr std::size_t default_max_cosets = 10000;
/// Largest group order for which a full multiplication table is built.
inline constexpr std::size_t max_table_order = 4096;

/// A concrete finite group given by its multiplication table. Element 0 is
/// the identity. Elements are numbered in shortlex order of their normal-form
/// words over the generators, so the numbering is canonical for a
/// presentation.
class FiniteGroupTable {
public:
  using Element = std::uint32_t;

  FiniteGroupTable() = default;

  /// Builds the table from an explicit multiplication table (row-major,
  /// order × order) and the images of the generators. Throws
  /// InternalCheckFailed unless the table is a group with identity 0 that the
  /// given images generate.
  static FiniteGroupTable from_multiplication(std::size_t order, std::vector<Element> mult,
                                              std::vector<Element> gen_images);

  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element multiply(Element a, Element b) const { return mult_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inverse(Element a) const { return inv_[a]; }
  std::size_t generator_count() const noexcept { return gen_images_.size(); }
  Element generator(std::size_t g) const { return gen_images_.at(g); }
  const std::vector<Element>& generator_images() const noexcept { return gen_images_; }

  /// Shortlex-least word representing element e.
  const Word& normal_form(Element e) const { return words_.at(e); }
  /// Throws AlphabetMismatch for generators outside the table.
  Element evaluate(const Word& w) const;

  /// Exhaustive associativity check (order³ products).
  bool is_associative() const;

private:
  friend class TableBuilder;

  std::size_t order_ = 0;
  std::vector<Element> mult_;
  std::vector<Element> inv_;
  std::vector<Element> gen_images_;
  std::vector<Word> words_;
};

/// Coset enumeration did not close within the coset budget; |G| may be
/// infinite.
struct Exhausted {
  std::size_t max_cosets = 0;
};

/// HLT coset enumeration over the trivial subgroup. Returns the regular
/// representation as a FiniteGroupTable, or Exhausted once more than
/// max_cosets cosets would be defined. Throws GroupTooLarge when the group
/// closes with order above max_table_order.
std::variant<FiniteGroupTable, Exhausted> todd_coxeter(const GroupPresentation& p,
                                                       std::size_t max_cosets = default_max_cosets);

}  // namespace posetpi
