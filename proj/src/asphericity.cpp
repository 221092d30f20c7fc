#include "posetpi/asphericity.hpp"

#include "posetpi/coloring.hpp"
#include "posetpi/error.hpp"
#include "posetpi/smith.hpp"

#include <algorithm>
#include <cctype>

namespace posetpi {

std::string to_string(Verdict v) { return v == Verdict::Aspherical ? "aspherical" : "inconclusive"; }

namespace {

bool nonzero(const std::vector<Integer>& v) {
  return std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
}

// Collects basis-cycle weights of one component and picks the first
// infinite-order one.
class ComponentSearch {
public:
  explicit ComponentSearch(const GroupPresentation& g) : group_(g), inv_(g) {}

  // true when the cycle became the component's witness
  bool offer(ComponentReport& report, const Word& w, std::vector<std::string> steps, bool basis) {
    AbelianizedElement image = abelianize(group_, w);
    auto free = inv_.free_part(image);
    if (basis) {
      ++report.basis_size;
      rows_[report.component].push_back(free);
    }
    if (report.witness || !nonzero(free)) return false;
    // independent re-check through a fresh Smith normal form
    if (!has_infinite_order_in_abelianization(group_, w).infinite)
      throw Error(ErrorCode::InternalCheckFailed, "witness did not re-verify");
    report.witness = CycleWitness{std::move(steps), w, std::move(image), std::move(free)};
    return true;
  }

  void finish(std::vector<ComponentReport>& reports) {
    for (auto& r : reports) {
      const auto& rows = rows_[r.component];
      const std::size_t cols = inv_.free_rank();
      if (rows.empty() || cols == 0) continue;
      IntMatrix m(rows.size(), cols);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
      r.free_rank = rank(m);
      if ((r.free_rank > 0) != r.witness.has_value())
        throw Error(ErrorCode::InternalCheckFailed, "lattice rank and witness search disagree");
    }
  }

  void resize(std::size_t components) { rows_.resize(components); }

private:
  const GroupPresentation& group_;
  AbelianInvariants inv_;
  std::vector<std::vector<std::vector<Integer>>> rows_;
};

void conclude(AsphericityCertificate& cert) {
  const bool all = std::all_of(cert.per_component.begin(), cert.per_component.end(),
                               [](const ComponentReport& r) { return r.witness.has_value(); });
  cert.verdict = all && !cert.failed_precondition ? Verdict::Aspherical : Verdict::Inconclusive;
}

void record_order(AsphericityCertificate& cert, std::size_t max_cosets) {
  const auto tc = todd_coxeter(cert.group, max_cosets);
  if (const auto* t = std::get_if<FiniteGroupTable>(&tc)) cert.group_order = t->order();
}

}  // namespace

Poset subposet_Y(const Poset& p) {
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.height(x) == 2) keep.push_back(x);
    if (p.height(x) == 1) {
      const auto up = p.upper_covers(x);
      if (std::count_if(up.begin(), up.end(), [&](std::size_t u) { return p.height(u) == 2; }) == 2) keep.push_back(x);
    }
  }
  return sub_poset(p, keep);
}

AsphericityCertificate main5_check(const Poset& p, const AsphericityOptions& opt) {
  AsphericityCertificate cert;
  if (p.max_height() > 2) {
    cert.failed_precondition = "the complex has dimension " + std::to_string(p.max_height()) + ", expected at most 2";
    return cert;
  }
  const auto shape = validate_cw_face_poset(p);
  if (!shape.ok()) {
    cert.failed_precondition = "not a regular CW face poset: " + shape.violations.front();
    return cert;
  }
  if (shape.component_count != 1) {
    cert.failed_precondition = "the complex is not connected";
    return cert;
  }
  const FundamentalGroup pi1 = fundamental_group(p, spanning_tree(p));
  cert.group = pi1.presentation();
  record_order(cert, opt.max_cosets);
  const SymbolicColoring universal = universal_coloring(p, pi1);

  const Poset Y = subposet_Y(p);
  const auto graph = hasse_graph(Y);
  const SpanningForest forest = bfs_spanning_forest(Y.size(), graph);
  for (std::size_t c = 0; c < forest.component_count(); ++c) cert.per_component.push_back({c, {}, 0, 0, {}});
  for (std::size_t x = 0; x < Y.size(); ++x) cert.per_component[forest.component[x]].members.push_back(Y.id(x));

  ComponentSearch search(cert.group);
  search.resize(forest.component_count());
  for (const GraphCycle& cycle : cycle_basis(graph, forest)) {
    EdgePath loop{p.index_of(Y.id(cycle.start)), {}};
    std::vector<std::string> steps{Y.id(cycle.start)};
    for (const EdgeStep& s : to_edge_path(Y, cycle).steps) {
      loop.steps.push_back({p.index_of(Y.id(s.from)), p.index_of(Y.id(s.to)), s.direction});
      steps.push_back(Y.id(s.to));
    }
    search.offer(cert.per_component[forest.component[cycle.start]], weight(universal, loop), std::move(steps), true);
  }
  search.finish(cert.per_component);
  conclude(cert);
  return cert;
}

std::vector<GraphEdge> PresentationDigraph::graph() const {
  std::vector<GraphEdge> out;
  for (const auto& e : edges) out.push_back({vertex_position(e.source), vertex_position(e.target)});
  return out;
}

std::size_t PresentationDigraph::vertex_position(std::size_t generator) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), generator);
  if (it == vertices.end() || *it != generator)
    throw Error(ErrorCode::UnknownElement, "generator " + std::to_string(generator) + " is not a vertex");
  return static_cast<std::size_t>(it - vertices.begin());
}

PresentationDigraph build_presentation_digraph(const GroupPresentation& p) {
  PresentationDigraph d;
  std::vector<std::size_t> count(p.rank(), 0);
  for (const Word& r : p.relators)
    for (const Letter& l : r.letters) ++count[l.generator];
  for (std::size_t g = 0; g < p.rank(); ++g)
    if (count[g] == 2) d.vertices.push_back(g);

  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    const auto& r = p.relators[j].letters;
    const std::size_t t = r.size();
    auto is_vertex = [&](std::size_t pos) { return count[r[pos].generator] == 2; };
    for (std::size_t l = 0; l < t; ++l) {
      if (!is_vertex(l)) continue;
      std::size_t m = 1;
      while (m < t && !is_vertex((l + m) % t)) ++m;
      const std::size_t next = (l + m) % t;
      std::vector<Letter> color;
      if (r[l].exponent < 0) color.push_back(r[l]);
      for (std::size_t k = 1; k < m; ++k) color.push_back(r[(l + k) % t]);
      if (r[next].exponent > 0) color.push_back(r[next]);
      d.edges.push_back({r[l].generator, r[next].generator, reduce(Word(std::move(color))), j, l});
    }
  }
  return d;
}

bool degrees_ok(const PresentationDigraph& d) {
  std::vector<std::size_t> out(d.vertices.size(), 0), in(d.vertices.size(), 0);
  for (const auto& e : d.edges) {
    ++out[d.vertex_position(e.source)];
    ++in[d.vertex_position(e.target)];
  }
  for (std::size_t v = 0; v < d.vertices.size(); ++v)
    if (out[v] != 2 || in[v] != 2) return false;
  return true;
}

Word cycle_weight(const PresentationDigraph& d, const std::vector<GraphStep>& steps) {
  Word w;
  for (const GraphStep& s : steps) {
    const Word& c = d.edges.at(s.edge).color;
    w = concat(w, s.forward ? c : invert(c));
  }
  return w;
}

std::string format_digraph_cycle(const std::vector<GraphStep>& steps) {
  std::string out;
  for (const GraphStep& s : steps) {
    if (!out.empty()) out += ' ';
    out += 'E' + std::to_string(s.edge);
    if (!s.forward) out += "^-1";
  }
  return out;
}

std::vector<GraphStep> parse_digraph_cycle(std::string_view text) {
  std::vector<GraphStep> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(i));
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (c != 'E' && c != 'e') fail("expected an edge label E<n>");
    ++i;
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail("expected an edge number");
    GraphStep step{std::stoul(std::string(text.substr(start, i - start))), true};
    if (i < text.size() && text[i] == '^') {
      const auto rest = text.substr(i + 1);
      if (rest.starts_with("-1")) {
        step.forward = false;
        i += 3;
      } else if (rest.starts_with("1")) {
        i += 2;
      } else {
        fail("exponent must be 1 or -1");
      }
    }
    out.push_back(step);
  }
  if (out.empty()) fail("empty cycle");
  return out;
}

AsphericityCertificate main6_check(const GroupPresentation& p, const AsphericityOptions& opt) {
  AsphericityCertificate cert;
  cert.group = p;
  const PresentationDigraph d = build_presentation_digraph(p);
  if (!degrees_ok(d)) throw Error(ErrorCode::InternalCheckFailed, "digraph degree invariant violated");
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    const auto& r = p.relators[j].letters;
    if (std::none_of(r.begin(), r.end(), [&](const Letter& l) {
          return std::binary_search(d.vertices.begin(), d.vertices.end(), l.generator);
        })) {
      cert.failed_precondition = "relator " + std::to_string(j + 1) + " contains no vertex of the digraph";
      break;
    }
  }
  record_order(cert, opt.max_cosets);

  const auto graph = d.graph();
  const SpanningForest forest = bfs_spanning_forest(d.vertices.size(), graph);
  for (std::size_t c = 0; c < forest.component_count(); ++c) cert.per_component.push_back({c, {}, 0, 0, {}});
  for (std::size_t v = 0; v < d.vertices.size(); ++v)
    cert.per_component[forest.component[v]].members.push_back(p.generators[d.vertices[v]]);

  ComponentSearch search(p);
  search.resize(forest.component_count());
  for (const auto& steps : opt.candidates) {
    if (steps.empty() || steps.front().edge >= graph.size())
      throw Error(ErrorCode::InvalidCycle, "cycle refers to an unknown edge");
    const GraphEdge& first = graph[steps.front().edge];
    const GraphCycle cycle{steps.front().forward ? first.u : first.v, steps};
    if (!is_closed_walk(graph, cycle))
      throw Error(ErrorCode::InvalidCycle, "'" + format_digraph_cycle(steps) + "' is not a closed walk");
    search.offer(cert.per_component[forest.component[cycle.start]], cycle_weight(d, steps),
                 {format_digraph_cycle(steps)}, false);
  }
  for (const GraphCycle& cycle : cycle_basis(graph, forest))
    search.offer(cert.per_component[forest.component[cycle.start]], cycle_weight(d, cycle.steps),
                 {format_digraph_cycle(cycle.steps)}, true);
  search.finish(cert.per_component);
  conclude(cert);
  return cert;
}

PresentationComplexReport presentation_complex_report(const GroupPresentation& p) {
  PresentationComplexReport r;
  const std::size_t k = p.rank(), s = p.relators.size();
  std::size_t corners = 0;
  for (const Word& w : p.relators) corners += 2 * w.length();
  r.kp[0] = 1;
  r.kp[1] = k;
  r.kp[2] = s;
  r.k[0] = 1 + k + s;
  r.k[1] = 2 * k + corners;
  r.k[2] = corners;
  r.euler_characteristic = 1 - static_cast<std::int64_t>(k) + static_cast<std::int64_t>(s);
  return r;
}

Poset presentation_complex_poset(const GroupPresentation& p) {
  std::vector<std::string> ids{"v"};
  std::vector<std::pair<std::string, std::string>> hasse;
  for (const auto& a : p.generators) {
    ids.push_back("v." + a);
    for (const char* half : {".0", ".1"}) {
      ids.push_back(a + half);
      hasse.emplace_back("v", a + half);
      hasse.emplace_back("v." + a, a + half);
    }
  }
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    const auto& r = p.relators[j].letters;
    if (r.empty()) throw Error(ErrorCode::InvalidComplex, "relator " + std::to_string(j + 1) + " is empty");
    const std::string rv = "r" + std::to_string(j + 1);
    const std::size_t corners = 2 * r.size();
    ids.push_back(rv);
    auto spoke = [&](std::size_t i) { return rv + ".s" + std::to_string(i % corners); };
    for (std::size_t i = 0; i < corners; ++i) {
      const Letter& l = r[i / 2];
      const std::string& a = p.generators[l.generator];
      const std::string corner = i % 2 == 0 ? "v" : "v." + a;
      const bool first_half = (i % 2 == 0) == (l.exponent > 0);
      const std::string half = a + (first_half ? ".0" : ".1");
      const std::string tri = rv + ".t" + std::to_string(i);
      ids.push_back(spoke(i));
      ids.push_back(tri);
      hasse.emplace_back(rv, spoke(i));
      hasse.emplace_back(corner, spoke(i));
      hasse.emplace_back(spoke(i), tri);
      hasse.emplace_back(spoke(i + 1), tri);
      hasse.emplace_back(half, tri);
    }
  }
  return Poset::build(std::move(ids), hasse);
}

}  // namespace posetpi
