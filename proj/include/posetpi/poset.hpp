#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posetpi {

/// A covering relation lower ≺ upper, stored by element index.
struct HasseEdge {
  std::size_t lower = 0;
  std::size_t upper = 0;

  friend auto operator<=>(const HasseEdge&, const HasseEdge&) = default;
};

/// Finite graded poset given by its Hasse diagram.
///
/// Elements are kept sorted by id (plain lexicographic string order), so an
/// element index doubles as its rank in the deterministic tie-break order used
/// throughout the library. The height of an element is the length of the
/// longest chain below it; every cover raises the height by exactly one.
///
/// Instances are immutable once built and safe to share between threads.
class Poset {
public:
  Poset() = default;

  /// Validates and builds a poset. Throws Error with UnknownElement,
  /// DuplicateElement, DuplicateEdge, CycleDetected, TransitiveEdge or
  /// NonGradedCover.
  static Poset build(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& hasse);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }

  const std::string& id(std::size_t i) const { return ids_.at(i); }
  std::span<const std::string> ids() const noexcept { return ids_; }
  std::optional<std::size_t> find(std::string_view id) const;
  /// Like find() but throws UnknownElement.
  std::size_t index_of(std::string_view id) const;

  int height(std::size_t i) const { return heights_.at(i); }
  /// -1 for the empty poset.
  int max_height() const noexcept { return max_height_; }
  std::vector<std::size_t> elements_of_height(int h) const;

  std::span<const std::size_t> lower_covers(std::size_t i) const { return lower_.at(i); }
  std::span<const std::size_t> upper_covers(std::size_t i) const { return upper_.at(i); }
  /// Neighbours in the undirected Hasse graph, ascending.
  std::vector<std::size_t> neighbours(std::size_t i) const;

  /// All covers sorted by (lower, upper).
  std::span<const HasseEdge> edges() const noexcept { return edges_; }
  std::optional<std::size_t> edge_index(std::size_t lower, std::size_t upper) const;

  /// x ≤ y in the order.
  bool less_equal(std::size_t x, std::size_t y) const;

  /// Σ (−1)^h · #{elements of height h}.
  std::int64_t euler_characteristic() const;

  std::vector<std::pair<std::string, std::string>> hasse_by_id() const;

private:
  std::vector<std::string> ids_;
  std::vector<int> heights_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<HasseEdge> edges_;
  int max_height_ = -1;
};

inline Poset build_poset(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& hasse) {
  return Poset::build(std::move(elements), hasse);
}

enum class Direction : std::uint8_t { Up, Down };

/// One traversal of a Hasse edge. Up means from ≺ to, Down means to ≺ from.
struct EdgeStep {
  std::size_t from = 0;
  std::size_t to = 0;
  Direction direction = Direction::Up;

  friend bool operator==(const EdgeStep&, const EdgeStep&) = default;
};

struct EdgePath {
  std::size_t basepoint = 0;
  std::vector<EdgeStep> steps;

  std::size_t end() const { return steps.empty() ? basepoint : steps.back().to; }
  bool closed() const { return end() == basepoint; }
  /// Appends a step from the current end to `next`; the direction is read off
  /// the poset. Throws PathNotInPoset if the two are not adjacent.
  void push(const Poset& p, std::size_t next);
  EdgePath reversed() const;
};

/// Checks that every step is a Hasse edge with the stated direction and that
/// consecutive steps are incident. Throws PathNotInPoset.
void validate_path(const Poset& p, const EdgePath& path);

/// A chain x_1 ≺ x_2 ≺ … ≺ x_k listed by element index, endpoints included.
using Chain = std::vector<std::size_t>;

struct ValidationReport {
  std::vector<std::string> violations;
  std::size_t component_count = 0;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks the combinatorial shape of a regular CW face poset: height-1
/// elements cover exactly two elements, every interval of length two is a
/// diamond, and the boundary of every cell of height ≥ 2 is connected.
ValidationReport validate_cw_face_poset(const Poset& p);

/// {y : y ≤ x}, ascending.
std::vector<std::size_t> down_set(const Poset& p, std::size_t x);
/// {y : y ≥ x}, ascending.
std::vector<std::size_t> up_set(const Poset& p, std::size_t x);

/// Connected components of the undirected Hasse graph. Each component is
/// sorted and components are ordered by their smallest element.
std::vector<std::vector<std::size_t>> components(const Poset& p);

/// Every saturated chain from x up to y, in lexicographic order of the
/// element sequences. (x, x) yields the single chain [x]. Throws
/// NotComparable unless x ≤ y.
std::vector<Chain> saturated_chains_between(const Poset& p, std::size_t x, std::size_t y);

/// Poset of nonempty chains ordered by inclusion. Chain ids are the member
/// ids joined by '<'.
Poset barycentric_subdivision(const Poset& p);

/// Disjoint union with the minimal elements xp ∈ p and xq ∈ q identified.
/// The identified point keeps p's id. q's ids are kept when they do not clash
/// with p's, otherwise every id of q is prefixed with "w2.". Throws
/// NotMinimal.
Poset wedge(const Poset& p, const Poset& q, std::size_t xp, std::size_t xq);

/// Induced subposet; covers and heights are re-derived inside the subset.
/// Throws UnknownElement for indices out of range and NonGradedCover if the
/// induced order is not graded.
Poset sub_poset(const Poset& p, std::span<const std::size_t> subset);

/// Vertex sets of the maximal simplices.
struct SimplicialComplex {
  std::vector<std::vector<std::string>> facets;
};

/// Throws InvalidComplex on empty facets, repeated vertices, duplicate facets
/// or one facet contained in another.
void validate_complex(const SimplicialComplex& sc);

/// Face poset: every nonempty face, ordered by inclusion. A face's id is its
/// vertex ids in ascending order joined by ','; vertex ids must not contain
/// ',' or '<'.
Poset face_poset(const SimplicialComplex& sc);

}  // namespace posetpi
