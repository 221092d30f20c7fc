#pragma once

#include "posetpi/graph.hpp"
#include "posetpi/group_table.hpp"
#include "posetpi/poset.hpp"
#include "posetpi/presentation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace posetpi {

enum class Verdict : std::uint8_t { Aspherical, Inconclusive };
std::string to_string(Verdict v);

struct CycleWitness {
  /// Human-readable steps: element ids for posets, edge labels for digraphs.
  std::vector<std::string> steps;
  Word weight;
  AbelianizedElement image;
  std::vector<Integer> free_coordinates;
};

struct ComponentReport {
  std::size_t component = 0;
  std::vector<std::string> members;
  std::size_t basis_size = 0;
  /// Rank of the lattice spanned by the free parts of the basis-cycle weights.
  /// Some cycle of the component has an infinite-order abelianized weight
  /// iff this is positive.
  std::size_t free_rank = 0;
  std::optional<CycleWitness> witness;
};

/// Aspherical only if every component carries a witness whose weight has
/// infinite order in the abelianization; otherwise inconclusive.
struct AsphericityCertificate {
  Verdict verdict = Verdict::Inconclusive;
  GroupPresentation group;
  std::vector<ComponentReport> per_component;
  std::optional<std::string> failed_precondition;
  /// Set when coset enumeration shows the group is finite.
  std::optional<std::size_t> group_order;
};

struct AsphericityOptions {
  /// Bound on the number of basis cycles combined in a search. Weights add in
  /// the abelianization, so single basis cycles already decide the lattice
  /// test; the bound is accepted for completeness and must be ≥ 1.
  std::size_t depth = 2;
  std::size_t max_cosets = default_max_cosets;
  /// Digraph cycles tried before the cycle basis (main6_check only).
  std::vector<std::vector<GraphStep>> candidates;
};

/// 2-cells together with the 1-cells that are faces of exactly two 2-cells.
Poset subposet_Y(const Poset& p);

/// Cycles of each component of Y weighted by the universal coloring of p.
AsphericityCertificate main5_check(const Poset& p, const AsphericityOptions& opt = {});

struct DigraphEdge {
  std::size_t source = 0;  // generator index
  std::size_t target = 0;  // generator index
  Word color;
  std::size_t relator = 0;
  std::size_t position = 0;
};

/// D_P: vertices are the generators occurring exactly twice in total over all
/// relators; edges join consecutive vertex letters of each cyclic relator.
/// Edges are listed by relator, then by position of the source letter.
struct PresentationDigraph {
  std::vector<std::size_t> vertices;
  std::vector<DigraphEdge> edges;

  /// Undirected multigraph on vertex positions (index into `vertices`).
  std::vector<GraphEdge> graph() const;
  std::size_t vertex_position(std::size_t generator) const;
};

PresentationDigraph build_presentation_digraph(const GroupPresentation& p);

/// Every vertex is the source of exactly two edges and the target of exactly
/// two edges.
bool degrees_ok(const PresentationDigraph& d);

/// Product of edge colors along a walk, inverting reversed edges.
Word cycle_weight(const PresentationDigraph& d, const std::vector<GraphStep>& steps);

/// "E4 E1^-1 E3"
std::string format_digraph_cycle(const std::vector<GraphStep>& steps);
/// Parses the format above; throws ParseError.
std::vector<GraphStep> parse_digraph_cycle(std::string_view text);

/// Throws InvalidCycle if a candidate is not a closed walk in D_P.
AsphericityCertificate main6_check(const GroupPresentation& p, const AsphericityOptions& opt = {});

struct PresentationComplexReport {
  /// Cells of K_P by dimension.
  std::size_t kp[3] = {0, 0, 0};
  /// Cells of its regular subdivision K by dimension.
  std::size_t k[3] = {0, 0, 0};
  std::int64_t euler_characteristic = 0;
};

PresentationComplexReport presentation_complex_report(const GroupPresentation& p);

/// Face poset of the regular subdivision K of K_P: vertices v, v_a for each
/// generator and v_r for each relator; two half edges per generator; 2m
/// spokes and 2m triangles per relator of length m. Throws InvalidComplex for
/// an empty relator.
Poset presentation_complex_poset(const GroupPresentation& p);

}  // namespace posetpi
