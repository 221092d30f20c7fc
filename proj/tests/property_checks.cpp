#include "property_checks.hpp"

#include "support.hpp"

#include "posetpi/asphericity.hpp"
#include "posetpi/covering.hpp"
#include "posetpi/incidence.hpp"
#include "posetpi/pi2.hpp"
#include "posetpi/smith.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace posetpi::test {

namespace {

using Element = FiniteGroupTable::Element;

struct Named {
  std::string name;
  Poset poset;
  bool simplicial = false;
};

FiniteGroupTable table_of(const char* presentation) {
  return std::get<FiniteGroupTable>(todd_coxeter(parse_presentation(presentation)));
}

std::vector<Named> all_fixtures() {
  std::vector<Named> out;
  for (const char* name : {"s2", "rp2_6vertex", "t2_7vertex", "genus2"}) out.push_back({name, fixture(name), true});
  for (const char* name : {"rp2_worked", "circle"}) out.push_back({name, fixture(name), false});
  for (const char* text : {"a | aa", "a,b | aaa, bb, abab", "a,b | aa, bb, abAB", "a,b | abaB"})
    out.push_back({std::string("K<") + text + ">", presentation_complex_poset(parse_presentation(text)), false});
  const Poset rp2 = fixture("rp2_6vertex"), s2 = fixture("s2");
  out.push_back({"rp2 v s2", wedge(rp2, s2, rp2.index_of("1"), s2.index_of("1")), true});
  return out;
}

// 2-dimensional fixtures whose fundamental group enumerates
std::vector<Named> finite_pi1_fixtures() {
  std::vector<Named> out;
  for (auto& f : all_fixtures()) {
    if (f.poset.max_height() > 2) continue;
    const auto pi1 = fundamental_group(f.poset, spanning_tree(f.poset));
    if (std::holds_alternative<FiniteGroupTable>(todd_coxeter(pi1.presentation(), 2000))) out.push_back(f);
  }
  return out;
}

bool is_unimodular(const IntMatrix& m) {
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

bool smith_shape(const IntMatrix& d) {
  Integer prev = 1;
  bool zero_seen = false;
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) {
      const Integer& x = d(r, c);
      if (r != c) {
        if (x != 0) return false;
        continue;
      }
      if (x < 0) return false;
      if (x == 0) {
        zero_seen = true;
      } else {
        if (zero_seen || x % prev != 0) return false;
        prev = x;
      }
    }
  return true;
}

TableColoring universal_table(const Poset& p) {
  const FundamentalGroup pi1 = fundamental_group(p, spanning_tree(p));
  return push_to_table(universal_coloring(p, pi1), std::get<FiniteGroupTable>(todd_coxeter(pi1.presentation())));
}

void cover_checks(const std::string& name, const CoverPoset& cp, Failures& out) {
  const std::size_t n = cp.group.order();
  if (!validate_cover(cp).ok()) out.push_back(name + ": validate_cover failed");
  std::vector<std::size_t> fiber(cp.base.size(), 0);
  for (std::size_t i = 0; i < cp.poset.size(); ++i) {
    ++fiber[cp.projection[i]];
    if (cp.element(cp.projection[i], cp.sheet[i]) != i) out.push_back(name + ": lift/projection mismatch");
    if (cp.poset.height(i) != cp.base.height(cp.projection[i])) out.push_back(name + ": height not preserved");
  }
  if (std::any_of(fiber.begin(), fiber.end(), [n](std::size_t f) { return f != n; }))
    out.push_back(name + ": fiber size differs from |G|");
  std::vector<std::vector<std::size_t>> deck;
  for (Element h = 0; h < n; ++h) deck.push_back(deck_action(cp, h));
  for (Element h = 0; h < n; ++h) {
    const auto& d = deck[h];
    std::vector<std::size_t> sorted = d;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> iota(d.size());
    std::iota(iota.begin(), iota.end(), std::size_t{0});
    if (sorted != iota) out.push_back(name + ": deck map is not a permutation");
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (cp.projection[d[i]] != cp.projection[i]) out.push_back(name + ": deck map moves fibers");
      if (h != 0 && d[i] == i) out.push_back(name + ": deck map has a fixed point");
    }
    for (const auto& e : cp.poset.edges())
      if (!cp.poset.edge_index(d[e.lower], d[e.upper])) out.push_back(name + ": deck map breaks an edge");
    for (Element g = 0; g < n; ++g) {
      const auto& dg = deck[g];
      const auto& dgh = deck[cp.group.multiply(g, h)];
      for (std::size_t i = 0; i < d.size(); ++i)
        if (dg[d[i]] != dgh[i]) {
          out.push_back(name + ": deck action is not a homomorphism");
          break;
        }
    }
  }
}

}  // namespace

Failures check_boundary_squares() {
  Failures out;
  auto squares = [&](const std::string& name, const Poset& p, const IncidenceAssignment& inc) {
    if (!check_incidence(p, inc).empty()) out.push_back(name + ": sum conditions fail");
    const ChainComplex cc = boundary_matrices(p, inc);
    for (std::size_t n = 1; n < cc.boundaries.size(); ++n)
      if (!(cc.boundaries[n - 1] * cc.boundaries[n]).is_zero()) out.push_back(name + ": d o d != 0");
  };
  for (const auto& f : all_fixtures()) {
    squares(f.name + " (gf2)", f.poset, assign_incidence(f.poset));
    if (f.simplicial) squares(f.name + " (simplicial)", f.poset, simplicial_incidence(f.poset));
  }
  return out;
}

Failures check_random_smith(int trials) {
  Failures out;
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int t = 0; t < trials; ++t) {
    const IntMatrix m = random_matrix(rng, dim(rng), dim(rng), -6, 6);
    const SmithForm s = smith_normal_form(m);
    if (!(s.U * m * s.V == s.D)) out.push_back("U m V != D for\n" + to_string(m));
    if (!is_unimodular(s.U) || !is_unimodular(s.V)) out.push_back("non-unimodular transform for\n" + to_string(m));
    if (!smith_shape(s.D)) out.push_back("D is not in Smith form for\n" + to_string(m));
    if (s.rank != rational_rank(m)) out.push_back("rank differs from the rational oracle for\n" + to_string(m));
  }
  return out;
}

Failures check_cover_invariants() {
  Failures out;
  for (const auto& f : finite_pi1_fixtures()) cover_checks(f.name, build_cover(universal_table(f.poset)), out);
  // random gauges of admissible colorings, connected or not
  std::mt19937_64 rng(31337);
  const FiniteGroupTable groups[] = {table_of("a | aa"), table_of("a,b | aaa, bb, abab")};
  for (const char* name : {"rp2_6vertex", "s2", "circle"}) {
    const Poset p = fixture(name);
    for (const auto& g : groups) {
      const TableColoring trivial{p, g, std::vector<Element>(p.edges().size(), 0)};
      std::vector<Element> gauge(p.size());
      for (auto& x : gauge) x = static_cast<Element>(rng() % g.order());
      cover_checks(std::string(name) + " (random gauge)", build_cover(gauge_transform(trivial, gauge)), out);
    }
  }
  const TableColoring rp2 = universal_table(fixture("rp2_6vertex"));
  std::vector<Element> gauge(rp2.poset.size());
  for (auto& x : gauge) x = static_cast<Element>(rng() % 2);
  cover_checks("rp2_6vertex (gauged universal)", build_cover(gauge_transform(rp2, gauge)), out);
  return out;
}

Failures check_kernel_vs_cover() {
  Failures out;
  for (const auto& f : finite_pi1_fixtures()) {
    const IncidenceAssignment inc = assign_incidence(f.poset);
    Pi2Options opt;
    opt.cross_check = false;
    const Pi2Result r = std::get<Pi2Result>(pi2_of_2complex(f.poset, inc, opt));
    const auto h = std::get<std::vector<HomologyGroup>>(cover_homology(f.poset, inc, 2));
    const std::size_t rational = r.equations.cols() - rational_rank(r.equations);
    if (r.zz_rank != h[2].free_rank || r.zz_rank != rational)
      out.push_back(f.name + ": kernel rank " + std::to_string(r.zz_rank) + ", rational nullity " +
                    std::to_string(rational) + ", cover H2 " + h[2].to_string());
    if (!h[1].trivial()) out.push_back(f.name + ": cover is not simply connected in homology");
  }
  return out;
}

Failures check_gauge_invariance(int trials) {
  Failures out;
  std::mt19937_64 rng(2718);
  const FiniteGroupTable groups[] = {table_of("a | aa"), table_of("a | aaa"), table_of("a,b | aaa, bb, abab"),
                                     table_of("a,b | aaaa, bb, abab"), table_of("a,b | aaaa, aabb, abaB")};
  const Poset posets[] = {fixture("s2"), fixture("rp2_6vertex"), fixture("rp2_worked"), fixture("circle")};
  for (int t = 0; t < trials; ++t) {
    const FiniteGroupTable& G = groups[rng() % std::size(groups)];
    const Poset& p = posets[rng() % std::size(posets)];
    const auto n = static_cast<Element>(G.order());
    TableColoring c{p, G, std::vector<Element>(p.edges().size())};
    for (auto& x : c.colors) x = static_cast<Element>(rng() % n);
    std::vector<Element> g(p.size());
    for (auto& x : g) x = static_cast<Element>(rng() % n);
    // inner automorphism x -> a x a^-1
    const auto a = static_cast<Element>(rng() % n);
    std::vector<Element> phi(n);
    for (Element x = 0; x < n; ++x) phi[x] = G.multiply(G.multiply(a, x), G.inverse(a));
    const TableColoring d = gauge_transform(c, g, phi);

    const auto graph = hasse_graph(p);
    const SpanningForest forest = bfs_spanning_forest(p.size(), graph);
    for (const GraphCycle& cycle : cycle_basis(graph, forest)) {
      const EdgePath path = to_edge_path(p, cycle);
      const Element w = weight(c, path);
      const Element b = g[path.basepoint];
      const Element expected = phi[G.multiply(G.multiply(b, w), G.inverse(b))];
      if (weight(d, path) != expected) {
        out.push_back("closed-path weight not preserved up to conjugation (trial " + std::to_string(t) + ")");
        break;
      }
    }
  }
  return out;
}

Failures check_digraph_degrees(int trials) {
  Failures out;
  std::mt19937_64 rng(161803);
  for (int t = 0; t < trials; ++t) {
    const std::size_t k = 2 + rng() % 5;
    const std::size_t s = 1 + rng() % 3;
    // letters: some appear exactly twice, the rest 1 or 3 times
    std::vector<Letter> pool;
    for (std::size_t g = 0; g < k; ++g) {
      const std::size_t times = (rng() % 3 == 0) ? (rng() % 2 ? 1 : 3) : 2;
      for (std::size_t i = 0; i < times; ++i) pool.push_back({g, rng() % 2 ? 1 : -1});
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Word> rels(s);
    for (std::size_t i = 0; i < pool.size(); ++i) rels[i < s ? i : rng() % s].letters.push_back(pool[i]);
    std::vector<std::string> names;
    for (std::size_t g = 0; g < k; ++g) names.push_back(std::string(1, static_cast<char>('a' + g)));
    const GroupPresentation p = GroupPresentation::make(names, rels);

    const PresentationDigraph d = build_presentation_digraph(p);
    std::vector<std::size_t> twice;
    for (std::size_t g = 0; g < k; ++g) {
      std::size_t total = 0;
      for (const Word& r : p.relators) total += occurrences(r, g);
      if (total == 2) twice.push_back(g);
    }
    const std::string where = "presentation " + format_presentation(p);
    if (d.vertices != twice) out.push_back(where + ": wrong vertex set");
    if (!degrees_ok(d)) out.push_back(where + ": degree invariant fails");
    if (d.edges.size() != 2 * d.vertices.size()) out.push_back(where + ": edge count is not twice the vertex count");
  }
  return out;
}

}  // namespace posetpi::test
