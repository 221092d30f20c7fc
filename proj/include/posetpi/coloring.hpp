#pragma once

#include "posetpi/graph.hpp"
#include "posetpi/group_table.hpp"
#include "posetpi/poset.hpp"
#include "posetpi/presentation.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace posetpi {

/// Hasse diagram of p as an undirected multigraph; edge i is p.edges()[i]
/// oriented lower → upper, so a forward step is an upward step.
std::vector<GraphEdge> hasse_graph(const Poset& p);

/// Converts between graph walks on hasse_graph(p) and edge paths.
EdgePath to_edge_path(const Poset& p, const GraphCycle& c);

/// Colors are words over a presentation. Edge i of the poset gets colors[i]
/// on its upward orientation.
struct SymbolicColoring {
  Poset poset;
  GroupPresentation group;
  std::vector<Word> colors;
};

/// Colors are elements of a concrete finite group.
struct TableColoring {
  Poset poset;
  FiniteGroupTable group;
  std::vector<FiniteGroupTable::Element> colors;
};

using Coloring = std::variant<SymbolicColoring, TableColoring>;

/// Throws InternalCheckFailed if the color list does not match the edges or
/// uses letters/elements outside the target.
void check_coloring(const SymbolicColoring& c);
void check_coloring(const TableColoring& c);

/// Ordered product of step colors, inverting downward steps. Throws
/// PathNotInPoset.
Word weight(const SymbolicColoring& c, const EdgePath& path);
FiniteGroupTable::Element weight(const TableColoring& c, const EdgePath& path);

/// Per-component BFS spanning tree of the Hasse diagram (see
/// bfs_spanning_forest for the visiting order).
struct SpanningTree {
  SpanningForest forest;
  /// Tree edges in ascending edge order.
  std::vector<std::size_t> edges;
};

SpanningTree spanning_tree(const Poset& p);

/// π₁ of a connected poset from a spanning tree. `raw` has one generator per
/// co-tree edge (named e1, e2, … in edge order) and one relator per pair of
/// distinct saturated chains with common endpoints, each compared against
/// the first chain in lexicographic order. `simplified` is its Tietze
/// simplification.
struct FundamentalGroup {
  std::vector<std::size_t> cotree_edges;
  GroupPresentation raw;
  Simplification simplified;

  const GroupPresentation& presentation() const noexcept { return simplified.presentation; }
};

/// Throws Disconnected unless p is nonempty and connected.
FundamentalGroup fundamental_group(const Poset& p, const SpanningTree& t);
GroupPresentation pi1_presentation(const Poset& p, const SpanningTree& t);

/// Tree edges colored 1, co-tree edges colored by the image of their
/// generator in the simplified presentation. Throws Disconnected.
SymbolicColoring universal_coloring(const Poset& p, const SpanningTree& t);
SymbolicColoring universal_coloring(const Poset& p, const FundamentalGroup& pi1);

/// Evaluates every color in a table for the same presentation (generator i of
/// the presentation ↦ table generator i). Throws AlphabetMismatch.
TableColoring push_to_table(const SymbolicColoring& c, const FiniteGroupTable& table);

struct AdmissibilityReport {
  bool admissible = true;
  /// False for symbolic colorings: equality was only tested in the
  /// abelianization, so `admissible` may be a false positive but a violation
  /// is genuine.
  bool exact = true;
  /// First violating pair of chains.
  std::optional<std::pair<Chain, Chain>> witness;
};

AdmissibilityReport check_admissible(const TableColoring& c);
AdmissibilityReport check_admissible(const SymbolicColoring& c);

/// c'(y, x) = φ(g_y · c(y, x) · g_x⁻¹) for every cover y ≺ x. `phi`, when
/// given, is a permutation of the group elements; throws NotAnAutomorphism
/// unless it is an automorphism. Throws InternalCheckFailed if g has the wrong
/// length.
TableColoring gauge_transform(const TableColoring& c, const std::vector<FiniteGroupTable::Element>& g,
                              const std::optional<std::vector<FiniteGroupTable::Element>>& phi = std::nullopt);
SymbolicColoring gauge_transform(const SymbolicColoring& c, const std::vector<Word>& g);

/// Gauge transform that makes every edge of `forest` (edge indices) trivial;
/// each forest component is rooted at its smallest element, which keeps
/// g = 1. Throws NotAForest if the edges contain a cycle.
TableColoring trivialize_on_subdiagram(const TableColoring& c, const std::vector<std::size_t>& forest);

/// The weights of closed paths at the basepoint of each component generate
/// the whole group. Throws Disconnected if the poset is not connected.
bool is_connected(const TableColoring& c);

/// Subgroup generated by the given elements.
std::vector<FiniteGroupTable::Element> generated_subgroup(const FiniteGroupTable& g,
                                                          const std::vector<FiniteGroupTable::Element>& gens);

}  // namespace posetpi
