#pragma once

#include "posetpi/coloring.hpp"
#include "posetpi/covering.hpp"
#include "posetpi/group_table.hpp"
#include "posetpi/incidence.hpp"
#include "posetpi/kernels.hpp"
#include "posetpi/poset.hpp"
#include "posetpi/smith.hpp"

#include <optional>
#include <stop_token>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace posetpi {

/// (element index, group element) labelling a row or column.
using CellSheet = std::pair<std::size_t, FiniteGroupTable::Element>;

/// One row per (height-1 element y, h) and one column per (height-2
/// element x, g), both ordered element-major. The row (y, h) holds [x:y] in
/// column (x, h·c(y, x)) for every x ≻ y, so its kernel is
/// {n : Σ_{x≻y} [x:y] n^x_{h·c(y,x)} = 0 for all y, h}. Throws WrongHeight if
/// p has height above 2.
IntMatrix pi2_kernel_equations(const Poset& p, const IncidenceAssignment& inc, const TableColoring& c);
std::vector<CellSheet> pi2_row_labels(const Poset& p, std::size_t order);
std::vector<CellSheet> pi2_column_labels(const Poset& p, std::size_t order);

struct Pi2Options {
  std::size_t max_cosets = default_max_cosets;
  Exec exec = Exec::Serial;
  /// Compare the kernel rank with H₂ of the universal cover; a mismatch
  /// throws InternalCheckFailed.
  bool cross_check = true;
  std::stop_token stop;
};

struct Pi2Result {
  FundamentalGroup pi1;
  FiniteGroupTable table;
  TableColoring coloring;
  IntMatrix equations;
  std::vector<CellSheet> columns;
  /// Kernel basis; each vector's first nonzero entry is positive.
  std::vector<std::vector<Integer>> generators;
  std::size_t zz_rank = 0;
  /// Free rank of H₂ of the cover when cross_check ran.
  std::optional<std::size_t> cover_h2_rank;
};

/// Returned instead of a result when π₁ could not be realized as a finite
/// table.
struct Refusal {
  GroupPresentation presentation;
  HomologyGroup abelianization;
  std::size_t max_cosets = 0;
  std::string reason;
};

/// π₂ of a connected complex of height ≤ 2 as the kernel of the equations
/// above for the universal coloring. Throws WrongHeight, Disconnected.
std::variant<Pi2Result, Refusal> pi2_of_2complex(const Poset& p, const IncidenceAssignment& inc,
                                                 const Pi2Options& opt = {});

/// H₀ … H_{n_max} of the universal cover (finite π₁ only).
std::variant<std::vector<HomologyGroup>, Refusal> cover_homology(const Poset& p, const IncidenceAssignment& inc,
                                                                 std::size_t n_max, const Pi2Options& opt = {});

enum class Hypothesis : std::uint8_t { Yes, No, Unknown };
std::string to_string(Hypothesis h);

struct LoopWitness {
  std::size_t component = 0;
  EdgePath loop;
  Word weight;
  std::optional<FiniteGroupTable::Element> element;
};

struct HurewiczVerdict {
  Hypothesis hypothesis = Hypothesis::Unknown;
  /// False when some loop weight could be neither shown trivial nor refuted.
  bool exact = false;
  std::size_t components = 0;
  std::size_t loops_checked = 0;
  std::optional<LoopWitness> witness;
  GroupPresentation pi1;
  std::optional<std::size_t> pi1_order;
  HomologyGroup h2;
  /// Empty unless hypothesis is Yes.
  std::string conclusion;
};

/// Examines the subdiagram of elements of height 1 and 2 (1 to 3 when p is
/// higher-dimensional): the hypothesis holds when every loop of a cycle basis
/// of each of its components has trivial weight under the universal
/// coloring. Throws Disconnected.
HurewiczVerdict hurewicz_hypothesis_check(const Poset& p, std::size_t max_cosets = default_max_cosets);

struct WedgeCheck {
  /// Unknown when π₁X is infinite or too large to enumerate.
  std::optional<std::size_t> rank_x;
  std::size_t rank_y = 0;
  std::optional<std::size_t> pi1_order_x;
  /// rank π₂X + |π₁X| · rank π₂Y, when π₁X is finite.
  std::optional<std::size_t> predicted;
  /// Kernel rank computed on the wedge itself.
  std::optional<std::size_t> direct;
  std::string formula;

  bool consistent() const { return !predicted || predicted == direct; }
};

/// Checks π₂(X ∨ Y) = π₂X ⊕ ℤ[π₁X] ⊗ π₂Y for simply-connected Y, wedging at
/// the minimal elements xp ∈ px and xq ∈ py. Throws YNotSimplyConnected.
WedgeCheck wedge_pi2(const Poset& px, const Poset& py, std::size_t xp, std::size_t xq, const Pi2Options& opt = {});

}  // namespace posetpi
