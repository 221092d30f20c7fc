#pragma once

#include "posetpi/coloring.hpp"
#include "posetpi/group_table.hpp"
#include "posetpi/incidence.hpp"
#include "posetpi/poset.hpp"
#include "posetpi/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace posetpi {

/// Covers are refused above this many elements.
inline constexpr std::size_t max_cover_elements = 20000;

/// E(c) = {(x, g)} with (y, g) ≺ (x, g·c(y, x)) for every cover y ≺ x.
/// The element (x, g) has id "<id of x>@<g>".
struct CoverPoset {
  Poset base;
  FiniteGroupTable group;
  Poset poset;
  std::vector<std::size_t> projection;              // cover index → base index
  std::vector<FiniteGroupTable::Element> sheet;      // cover index → g
  std::vector<std::size_t> lift;                     // base index · |G| + g → cover index

  std::size_t element(std::size_t x, FiniteGroupTable::Element g) const { return lift.at(x * group.order() + g); }
};

/// Throws GroupTooLarge if |P|·|G| exceeds max_cover_elements.
CoverPoset build_cover(const TableColoring& c);

/// Fiber sizes, down-set isomorphisms and unique edge lifting.
ValidationReport validate_cover(const CoverPoset& cp);

/// (x, g) ↦ (x, h·g) as a permutation of cover indices. Throws
/// UnknownElement if h is not in the group.
std::vector<std::size_t> deck_action(const CoverPoset& cp, FiniteGroupTable::Element h);

/// [(x, g) : (y, h)] = [x : y].
IncidenceAssignment lift_incidence(const CoverPoset& cp, const IncidenceAssignment& base);

struct UniversalityEvidence {
  /// False when π₁ of the base could not be enumerated; nothing else is then
  /// reported.
  bool applicable = false;
  std::string reason;
  std::size_t pi1_order = 0;
  std::size_t fiber_size = 0;
  std::size_t cover_components = 0;
  HomologyGroup h1;

  /// Necessary conditions for E(c) to be the universal cover.
  bool consistent() const {
    return applicable && cover_components == 1 && h1.trivial() && fiber_size == pi1_order;
  }
};

UniversalityEvidence universality_evidence(const CoverPoset& cp, std::size_t max_cosets = default_max_cosets);

}  // namespace posetpi
