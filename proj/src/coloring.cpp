#include "posetpi/coloring.hpp"

#include "posetpi/error.hpp"

#include <algorithm>
#include <numeric>

namespace posetpi {

using Element = FiniteGroupTable::Element;

namespace {

std::size_t edge_of(const Poset& p, std::size_t lower, std::size_t upper) {
  const auto e = p.edge_index(lower, upper);
  if (!e) throw Error(ErrorCode::PathNotInPoset, "(" + p.id(lower) + ", " + p.id(upper) + ") is not a Hasse edge");
  return *e;
}

// Every pair x < y two or more levels apart that has more than one chain.
template <typename Visit>
void for_each_chain_family(const Poset& p, Visit&& visit) {
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (p.height(y) < 2) continue;
    for (std::size_t x : down_set(p, y)) {
      if (p.height(y) - p.height(x) < 2) continue;
      auto chains = saturated_chains_between(p, x, y);
      if (chains.size() > 1) visit(chains);
    }
  }
}

Word chain_word(const Poset& p, const std::vector<Word>& colors, const Chain& chain) {
  Word w;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) w = concat(w, colors[edge_of(p, chain[i], chain[i + 1])]);
  return w;
}

Element chain_element(const TableColoring& c, const Chain& chain) {
  Element e = FiniteGroupTable::identity();
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    e = c.group.multiply(e, c.colors[edge_of(c.poset, chain[i], chain[i + 1])]);
  return e;
}

void require_connected(const Poset& p) {
  if (p.empty()) throw Error(ErrorCode::Disconnected, "the poset is empty");
  const auto n = components(p).size();
  if (n != 1) throw Error(ErrorCode::Disconnected, "the poset has " + std::to_string(n) + " components");
}

}  // namespace

std::vector<GraphEdge> hasse_graph(const Poset& p) {
  std::vector<GraphEdge> out;
  for (const HasseEdge& e : p.edges()) out.push_back({e.lower, e.upper});
  return out;
}

EdgePath to_edge_path(const Poset& p, const GraphCycle& c) {
  EdgePath path{c.start, {}};
  for (const GraphStep& s : c.steps) {
    const HasseEdge& e = p.edges()[s.edge];
    if (s.forward)
      path.steps.push_back({e.lower, e.upper, Direction::Up});
    else
      path.steps.push_back({e.upper, e.lower, Direction::Down});
  }
  return path;
}

void check_coloring(const SymbolicColoring& c) {
  if (c.colors.size() != c.poset.edges().size())
    throw Error(ErrorCode::InternalCheckFailed, "coloring does not cover every Hasse edge");
  for (const Word& w : c.colors)
    for (const Letter& l : w.letters)
      if (l.generator >= c.group.rank()) throw Error(ErrorCode::AlphabetMismatch, "color uses an unknown generator");
}

void check_coloring(const TableColoring& c) {
  if (c.colors.size() != c.poset.edges().size())
    throw Error(ErrorCode::InternalCheckFailed, "coloring does not cover every Hasse edge");
  for (Element e : c.colors)
    if (e >= c.group.order()) throw Error(ErrorCode::InternalCheckFailed, "color outside the group");
}

Word weight(const SymbolicColoring& c, const EdgePath& path) {
  validate_path(c.poset, path);
  Word w;
  for (const EdgeStep& s : path.steps)
    w = concat(w, s.direction == Direction::Up ? c.colors[edge_of(c.poset, s.from, s.to)]
                                               : invert(c.colors[edge_of(c.poset, s.to, s.from)]));
  return w;
}

Element weight(const TableColoring& c, const EdgePath& path) {
  validate_path(c.poset, path);
  Element e = FiniteGroupTable::identity();
  for (const EdgeStep& s : path.steps)
    e = c.group.multiply(e, s.direction == Direction::Up ? c.colors[edge_of(c.poset, s.from, s.to)]
                                                         : c.group.inverse(c.colors[edge_of(c.poset, s.to, s.from)]));
  return e;
}

SpanningTree spanning_tree(const Poset& p) {
  const auto graph = hasse_graph(p);
  SpanningTree t{bfs_spanning_forest(p.size(), graph), {}};
  for (std::size_t e = 0; e < graph.size(); ++e)
    if (t.forest.in_tree[e]) t.edges.push_back(e);
  return t;
}

FundamentalGroup fundamental_group(const Poset& p, const SpanningTree& t) {
  require_connected(p);
  if (t.forest.in_tree.size() != p.edges().size())
    throw Error(ErrorCode::InternalCheckFailed, "spanning tree belongs to a different poset");
  FundamentalGroup out;
  std::vector<Word> colors(p.edges().size());
  std::vector<std::string> names;
  for (std::size_t e = 0; e < p.edges().size(); ++e)
    if (!t.forest.in_tree[e]) {
      colors[e] = Word::generator(out.cotree_edges.size());
      out.cotree_edges.push_back(e);
      names.push_back("e" + std::to_string(out.cotree_edges.size()));
    }
  std::vector<Word> relators;
  for_each_chain_family(p, [&](const std::vector<Chain>& chains) {
    const Word first = chain_word(p, colors, chains.front());
    for (std::size_t i = 1; i < chains.size(); ++i)
      relators.push_back(concat(first, invert(chain_word(p, colors, chains[i]))));
  });
  out.raw = GroupPresentation::make(std::move(names), std::move(relators));
  out.simplified = simplify_presentation(out.raw);
  return out;
}

GroupPresentation pi1_presentation(const Poset& p, const SpanningTree& t) {
  return fundamental_group(p, t).presentation();
}

SymbolicColoring universal_coloring(const Poset& p, const FundamentalGroup& pi1) {
  SymbolicColoring c{p, pi1.presentation(), std::vector<Word>(p.edges().size())};
  for (std::size_t g = 0; g < pi1.cotree_edges.size(); ++g) c.colors[pi1.cotree_edges[g]] = pi1.simplified.images[g];
  return c;
}

SymbolicColoring universal_coloring(const Poset& p, const SpanningTree& t) {
  return universal_coloring(p, fundamental_group(p, t));
}

TableColoring push_to_table(const SymbolicColoring& c, const FiniteGroupTable& table) {
  if (table.generator_count() != c.group.rank())
    throw Error(ErrorCode::AlphabetMismatch, "table has " + std::to_string(table.generator_count()) +
                                                 " generators, presentation has " + std::to_string(c.group.rank()));
  TableColoring out{c.poset, table, {}};
  for (const Word& w : c.colors) out.colors.push_back(table.evaluate(w));
  return out;
}

AdmissibilityReport check_admissible(const TableColoring& c) {
  check_coloring(c);
  AdmissibilityReport report;
  for_each_chain_family(c.poset, [&](const std::vector<Chain>& chains) {
    if (!report.admissible) return;
    const Element first = chain_element(c, chains.front());
    for (std::size_t i = 1; i < chains.size(); ++i)
      if (chain_element(c, chains[i]) != first) {
        report.admissible = false;
        report.witness.emplace(chains.front(), chains[i]);
        return;
      }
  });
  return report;
}

AdmissibilityReport check_admissible(const SymbolicColoring& c) {
  check_coloring(c);
  const AbelianInvariants inv(c.group);
  AdmissibilityReport report;
  report.exact = false;
  for_each_chain_family(c.poset, [&](const std::vector<Chain>& chains) {
    if (!report.admissible) return;
    const Word first = chain_word(c.poset, c.colors, chains.front());
    for (std::size_t i = 1; i < chains.size(); ++i) {
      const Word diff = concat(first, invert(chain_word(c.poset, c.colors, chains[i])));
      if (!inv.is_trivial(abelianize(c.group, diff))) {
        report.admissible = false;
        report.witness.emplace(chains.front(), chains[i]);
        return;
      }
    }
  });
  return report;
}

TableColoring gauge_transform(const TableColoring& c, const std::vector<Element>& g,
                              const std::optional<std::vector<Element>>& phi) {
  check_coloring(c);
  const FiniteGroupTable& G = c.group;
  if (g.size() != c.poset.size()) throw Error(ErrorCode::InternalCheckFailed, "gauge must assign every element");
  for (Element x : g)
    if (x >= G.order()) throw Error(ErrorCode::InternalCheckFailed, "gauge value outside the group");
  if (phi) {
    const auto& f = *phi;
    if (f.size() != G.order()) throw Error(ErrorCode::NotAnAutomorphism, "automorphism table has the wrong size");
    std::vector<bool> hit(G.order(), false);
    for (Element x : f) {
      if (x >= G.order() || hit[x]) throw Error(ErrorCode::NotAnAutomorphism, "map is not a permutation");
      hit[x] = true;
    }
    for (Element a = 0; a < G.order(); ++a)
      for (Element b = 0; b < G.order(); ++b)
        if (f[G.multiply(a, b)] != G.multiply(f[a], f[b]))
          throw Error(ErrorCode::NotAnAutomorphism, "map is not a homomorphism");
  }
  TableColoring out{c.poset, G, std::vector<Element>(c.colors.size())};
  const auto edges = c.poset.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Element v = G.multiply(G.multiply(g[edges[i].lower], c.colors[i]), G.inverse(g[edges[i].upper]));
    out.colors[i] = phi ? (*phi)[v] : v;
  }
  return out;
}

SymbolicColoring gauge_transform(const SymbolicColoring& c, const std::vector<Word>& g) {
  check_coloring(c);
  if (g.size() != c.poset.size()) throw Error(ErrorCode::InternalCheckFailed, "gauge must assign every element");
  SymbolicColoring out{c.poset, c.group, std::vector<Word>(c.colors.size())};
  const auto edges = c.poset.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    out.colors[i] = concat(concat(g[edges[i].lower], c.colors[i]), invert(g[edges[i].upper]));
  return out;
}

TableColoring trivialize_on_subdiagram(const TableColoring& c, const std::vector<std::size_t>& forest) {
  check_coloring(c);
  const auto all = c.poset.edges();
  std::vector<GraphEdge> sub;
  for (std::size_t e : forest) {
    if (e >= all.size()) throw Error(ErrorCode::UnknownElement, "edge index out of range");
    sub.push_back({all[e].lower, all[e].upper});
  }
  const SpanningForest f = bfs_spanning_forest(c.poset.size(), sub);
  if (std::find(f.in_tree.begin(), f.in_tree.end(), false) != f.in_tree.end())
    throw Error(ErrorCode::NotAForest, "the subdiagram contains a cycle");

  const FiniteGroupTable& G = c.group;
  std::vector<Element> g(c.poset.size(), FiniteGroupTable::identity());
  std::vector<std::size_t> order(c.poset.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f.depth[a] < f.depth[b]; });
  for (std::size_t b : order) {
    const std::size_t local = f.parent_edge[b];
    if (local == no_edge) continue;
    const std::size_t e = forest[local];
    const Element color = c.colors[e];
    if (all[e].upper == b)
      g[b] = G.multiply(g[all[e].lower], color);
    else
      g[b] = G.multiply(g[all[e].upper], G.inverse(color));
  }
  return gauge_transform(c, g);
}

std::vector<Element> generated_subgroup(const FiniteGroupTable& G, const std::vector<Element>& gens) {
  std::vector<bool> seen(G.order(), false);
  std::vector<Element> out{FiniteGroupTable::identity()};
  seen[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (Element s : gens) {
      const Element next = G.multiply(out[head], s);
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const TableColoring& c) {
  check_coloring(c);
  require_connected(c.poset);
  const auto graph = hasse_graph(c.poset);
  const SpanningForest f = bfs_spanning_forest(c.poset.size(), graph);
  std::vector<Element> weights;
  for (std::size_t e : chords(f)) weights.push_back(weight(c, to_edge_path(c.poset, based_loop(graph, f, e))));
  return generated_subgroup(c.group, weights).size() == c.group.order();
}

}  // namespace posetpi
