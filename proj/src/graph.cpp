#include "posetpi/graph.hpp"

#include <algorithm>
#include <tuple>

namespace posetpi {

namespace {

std::size_t other_end(const GraphEdge& e, std::size_t x) { return e.u == x ? e.v : e.u; }

GraphStep step_from(const GraphEdge& e, std::size_t edge, std::size_t from) { return {edge, e.u == from}; }

// Steps walking from x up to the root.
std::vector<GraphStep> path_to_root(std::span<const GraphEdge> edges, const SpanningForest& f, std::size_t x) {
  std::vector<GraphStep> out;
  while (f.parent_edge[x] != no_edge) {
    const std::size_t e = f.parent_edge[x];
    out.push_back(step_from(edges[e], e, x));
    x = other_end(edges[e], x);
  }
  return out;
}

std::vector<GraphStep> reversed(std::vector<GraphStep> steps) {
  std::reverse(steps.begin(), steps.end());
  for (auto& s : steps) s.forward = !s.forward;
  return steps;
}

}  // namespace

SpanningForest bfs_spanning_forest(std::size_t vertices, std::span<const GraphEdge> edges) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(vertices);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].u].emplace_back(edges[e].v, e);
    if (edges[e].u != edges[e].v) adj[edges[e].v].emplace_back(edges[e].u, e);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  SpanningForest f;
  f.in_tree.assign(edges.size(), false);
  f.parent_edge.assign(vertices, no_edge);
  f.depth.assign(vertices, 0);
  f.component.assign(vertices, no_edge);
  for (std::size_t root = 0; root < vertices; ++root) {
    if (f.component[root] != no_edge) continue;
    const std::size_t id = f.roots.size();
    f.roots.push_back(root);
    f.component[root] = id;
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t x = queue[head];
      for (const auto& [y, e] : adj[x]) {
        if (f.component[y] != no_edge) continue;
        f.component[y] = id;
        f.parent_edge[y] = e;
        f.depth[y] = f.depth[x] + 1;
        f.in_tree[e] = true;
        queue.push_back(y);
      }
    }
  }
  return f;
}

std::vector<std::size_t> chords(const SpanningForest& f) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < f.in_tree.size(); ++e)
    if (!f.in_tree[e]) out.push_back(e);
  return out;
}

GraphCycle fundamental_cycle(std::span<const GraphEdge> edges, const SpanningForest& f, std::size_t chord) {
  const GraphEdge& c = edges[chord];
  GraphCycle cycle{c.u, {{chord, true}}};
  // walk v and u up to their common ancestor
  std::vector<GraphStep> from_v, from_u;
  std::size_t a = c.v, b = c.u;
  while (a != b) {
    if (f.depth[a] >= f.depth[b]) {
      const std::size_t e = f.parent_edge[a];
      from_v.push_back(step_from(edges[e], e, a));
      a = other_end(edges[e], a);
    } else {
      const std::size_t e = f.parent_edge[b];
      from_u.push_back(step_from(edges[e], e, b));
      b = other_end(edges[e], b);
    }
  }
  cycle.steps.insert(cycle.steps.end(), from_v.begin(), from_v.end());
  const auto back = reversed(std::move(from_u));
  cycle.steps.insert(cycle.steps.end(), back.begin(), back.end());
  return cycle;
}

GraphCycle based_loop(std::span<const GraphEdge> edges, const SpanningForest& f, std::size_t chord) {
  const GraphEdge& c = edges[chord];
  GraphCycle loop{f.roots[f.component[c.u]], reversed(path_to_root(edges, f, c.u))};
  loop.steps.push_back({chord, true});
  const auto home = path_to_root(edges, f, c.v);
  loop.steps.insert(loop.steps.end(), home.begin(), home.end());
  return loop;
}

std::vector<GraphCycle> cycle_basis(std::span<const GraphEdge> edges, const SpanningForest& f) {
  std::vector<GraphCycle> out;
  for (std::size_t e : chords(f)) out.push_back(fundamental_cycle(edges, f, e));
  return out;
}

bool is_closed_walk(std::span<const GraphEdge> edges, const GraphCycle& c) {
  std::size_t at = c.start;
  for (const GraphStep& s : c.steps) {
    if (s.edge >= edges.size()) return false;
    const GraphEdge& e = edges[s.edge];
    const std::size_t from = s.forward ? e.u : e.v;
    if (from != at) return false;
    at = s.forward ? e.v : e.u;
  }
  return at == c.start;
}

}  // namespace posetpi
