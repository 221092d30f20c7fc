#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace posetpi {

/// Undirected edge of a multigraph; loops and parallel edges are allowed.
struct GraphEdge {
  std::size_t u = 0;
  std::size_t v = 0;
};

/// One traversal of an edge: forward goes u → v.
struct GraphStep {
  std::size_t edge = 0;
  bool forward = true;

  friend bool operator==(const GraphStep&, const GraphStep&) = default;
};

/// A closed walk, listed as consecutive edge traversals.
struct GraphCycle {
  std::size_t start = 0;
  std::vector<GraphStep> steps;
};

inline constexpr std::size_t no_edge = static_cast<std::size_t>(-1);

/// BFS forest. Each component is rooted at its smallest vertex; vertices are
/// expanded in BFS order and their incident edges scanned in ascending order
/// of (neighbour, edge index).
struct SpanningForest {
  std::vector<bool> in_tree;              // per edge
  std::vector<std::size_t> parent_edge;   // per vertex, no_edge at roots
  std::vector<std::size_t> depth;         // per vertex
  std::vector<std::size_t> component;     // per vertex
  std::vector<std::size_t> roots;         // per component

  std::size_t component_count() const noexcept { return roots.size(); }
};

SpanningForest bfs_spanning_forest(std::size_t vertices, std::span<const GraphEdge> edges);

/// Chords (non-tree edges) in ascending edge order.
std::vector<std::size_t> chords(const SpanningForest& f);

/// The cycle closed by a chord: the chord u → v followed by the tree path
/// v → u through their lowest common ancestor.
GraphCycle fundamental_cycle(std::span<const GraphEdge> edges, const SpanningForest& f, std::size_t chord);

/// The chord's cycle conjugated to start and end at its component's root.
GraphCycle based_loop(std::span<const GraphEdge> edges, const SpanningForest& f, std::size_t chord);

/// One fundamental cycle per chord, in chord order.
std::vector<GraphCycle> cycle_basis(std::span<const GraphEdge> edges, const SpanningForest& f);

/// Checks that the steps form a closed walk from `start`.
bool is_closed_walk(std::span<const GraphEdge> edges, const GraphCycle& c);

}  // namespace posetpi
