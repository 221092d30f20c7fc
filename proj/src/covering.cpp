#include "posetpi/covering.hpp"

#include "posetpi/error.hpp"

#include <algorithm>

namespace posetpi {

using Element = FiniteGroupTable::Element;

CoverPoset build_cover(const TableColoring& c) {
  check_coloring(c);
  const std::size_t n = c.poset.size(), order = c.group.order();
  if (n * order > max_cover_elements)
    throw Error(ErrorCode::GroupTooLarge, "cover would have " + std::to_string(n * order) + " elements");
  auto name = [&](std::size_t x, Element g) { return c.poset.id(x) + "@" + std::to_string(g); };

  std::vector<std::string> ids;
  ids.reserve(n * order);
  for (std::size_t x = 0; x < n; ++x)
    for (Element g = 0; g < order; ++g) ids.push_back(name(x, g));
  std::vector<std::pair<std::string, std::string>> hasse;
  const auto edges = c.poset.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (Element g = 0; g < order; ++g)
      hasse.emplace_back(name(edges[i].lower, g), name(edges[i].upper, c.group.multiply(g, c.colors[i])));

  CoverPoset cp{c.poset, c.group, Poset::build(std::move(ids), hasse), {}, {}, {}};
  cp.projection.resize(n * order);
  cp.sheet.resize(n * order);
  cp.lift.resize(n * order);
  for (std::size_t x = 0; x < n; ++x)
    for (Element g = 0; g < order; ++g) {
      const std::size_t i = cp.poset.index_of(name(x, g));
      cp.projection[i] = x;
      cp.sheet[i] = g;
      cp.lift[x * order + g] = i;
    }
  return cp;
}

ValidationReport validate_cover(const CoverPoset& cp) {
  ValidationReport report;
  const Poset& E = cp.poset;
  const Poset& X = cp.base;
  const std::size_t order = cp.group.order();
  report.component_count = components(E).size();
  auto fail = [&](std::string what) { report.violations.push_back(std::move(what)); };

  if (cp.projection.size() != E.size() || E.size() != X.size() * order) {
    fail("cover has " + std::to_string(E.size()) + " elements, expected " + std::to_string(X.size() * order));
    return report;
  }
  std::vector<std::size_t> fiber(X.size(), 0);
  for (std::size_t p : cp.projection) {
    if (p >= X.size()) {
      fail("projection leaves the base");
      return report;
    }
    ++fiber[p];
  }
  for (std::size_t x = 0; x < X.size(); ++x)
    if (fiber[x] != order) fail("fiber over '" + X.id(x) + "' has " + std::to_string(fiber[x]) + " elements");

  for (std::size_t e = 0; e < E.size(); ++e) {
    const std::size_t x = cp.projection[e];
    if (E.height(e) != X.height(x)) fail("'" + E.id(e) + "' and its image have different heights");

    // down-set isomorphism
    const auto down = down_set(E, e);
    std::vector<std::size_t> image;
    for (std::size_t d : down) image.push_back(cp.projection[d]);
    std::sort(image.begin(), image.end());
    const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
    if (!injective || image != down_set(X, x)) {
      fail("projection is not a bijection from the down-set of '" + E.id(e) + "'");
      continue;
    }
    std::size_t edges_below = 0, base_edges_below = 0;
    for (std::size_t d : down)
      for (std::size_t l : E.lower_covers(d)) {
        ++edges_below;
        if (!X.edge_index(cp.projection[l], cp.projection[d])) fail("edge below '" + E.id(e) + "' is not over an edge");
      }
    for (std::size_t d : down_set(X, x)) base_edges_below += X.lower_covers(d).size();
    if (edges_below != base_edges_below) fail("down-set of '" + E.id(e) + "' has the wrong number of covers");

    // unique lifting of covers in both directions
    for (const bool up : {true, false}) {
      const auto base_adj = up ? X.upper_covers(x) : X.lower_covers(x);
      const auto adj = up ? E.upper_covers(e) : E.lower_covers(e);
      std::vector<std::size_t> proj;
      for (std::size_t a : adj) proj.push_back(cp.projection[a]);
      std::sort(proj.begin(), proj.end());
      if (!std::equal(proj.begin(), proj.end(), base_adj.begin(), base_adj.end()))
        fail(std::string(up ? "upper" : "lower") + " covers of '" + E.id(e) + "' do not lift uniquely");
    }
  }
  return report;
}

std::vector<std::size_t> deck_action(const CoverPoset& cp, Element h) {
  if (h >= cp.group.order()) throw Error(ErrorCode::UnknownElement, "element " + std::to_string(h) + " is not in the group");
  std::vector<std::size_t> perm(cp.poset.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = cp.element(cp.projection[i], cp.group.multiply(h, cp.sheet[i]));
  return perm;
}

IncidenceAssignment lift_incidence(const CoverPoset& cp, const IncidenceAssignment& base) {
  IncidenceAssignment inc;
  for (const HasseEdge& e : cp.poset.edges())
    inc.sign.push_back(base.at(cp.base, cp.projection[e.lower], cp.projection[e.upper]));
  return inc;
}

UniversalityEvidence universality_evidence(const CoverPoset& cp, std::size_t max_cosets) {
  UniversalityEvidence ev;
  ev.fiber_size = cp.group.order();
  const auto pi1 = fundamental_group(cp.base, spanning_tree(cp.base));
  const auto table = todd_coxeter(pi1.presentation(), max_cosets);
  if (std::holds_alternative<Exhausted>(table)) {
    ev.reason = "coset enumeration for the fundamental group of the base did not close within " +
                std::to_string(max_cosets) + " cosets";
    return ev;
  }
  ev.applicable = true;
  ev.pi1_order = std::get<FiniteGroupTable>(table).order();
  ev.cover_components = components(cp.poset).size();
  const auto base_inc = assign_incidence(cp.base);
  const auto groups = homology(boundary_matrices(cp.poset, lift_incidence(cp, base_inc)));
  ev.h1 = groups.size() > 1 ? groups[1] : HomologyGroup{};
  return ev;
}

}  // namespace posetpi
