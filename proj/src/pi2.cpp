#include "posetpi/pi2.hpp"

#include "posetpi/error.hpp"

#include <algorithm>

namespace posetpi {

using Element = FiniteGroupTable::Element;

namespace {

void require_height(const Poset& p, int max) {
  if (p.max_height() > max)
    throw Error(ErrorCode::WrongHeight, "expected height at most " + std::to_string(max) + ", got " +
                                            std::to_string(p.max_height()));
}

std::vector<CellSheet> labels(const Poset& p, int height, std::size_t order) {
  std::vector<CellSheet> out;
  for (std::size_t x : p.elements_of_height(height))
    for (Element g = 0; g < order; ++g) out.emplace_back(x, g);
  return out;
}

struct Pipeline {
  FundamentalGroup pi1;
  std::optional<FiniteGroupTable> table;
  std::size_t max_cosets = 0;
};

Pipeline enumerate_pi1(const Poset& p, std::size_t max_cosets) {
  Pipeline out{fundamental_group(p, spanning_tree(p)), std::nullopt, max_cosets};
  auto tc = todd_coxeter(out.pi1.presentation(), max_cosets);
  if (auto* t = std::get_if<FiniteGroupTable>(&tc)) out.table = std::move(*t);
  return out;
}

Refusal refuse(const Pipeline& pl) {
  Refusal r;
  r.presentation = pl.pi1.presentation();
  r.abelianization = AbelianInvariants(r.presentation).group();
  r.max_cosets = pl.max_cosets;
  r.reason = "coset enumeration of the fundamental group did not close within " + std::to_string(pl.max_cosets) +
             " cosets; the group may be infinite";
  return r;
}

TableColoring universal_table_coloring(const Poset& p, const Pipeline& pl) {
  return push_to_table(universal_coloring(p, pl.pi1), *pl.table);
}

void normalize_sign(std::vector<Integer>& v) {
  const auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (first != v.end() && *first < 0)
    for (auto& x : v) x = -x;
}

}  // namespace

std::vector<CellSheet> pi2_row_labels(const Poset& p, std::size_t order) { return labels(p, 1, order); }
std::vector<CellSheet> pi2_column_labels(const Poset& p, std::size_t order) { return labels(p, 2, order); }

IntMatrix pi2_kernel_equations(const Poset& p, const IncidenceAssignment& inc, const TableColoring& c) {
  require_height(p, 2);
  check_coloring(c);
  const std::size_t order = c.group.order();
  const auto ones = p.elements_of_height(1);
  const auto twos = p.elements_of_height(2);
  std::vector<std::size_t> column_of(p.size(), 0);
  for (std::size_t j = 0; j < twos.size(); ++j) column_of[twos[j]] = j;

  IntMatrix m(ones.size() * order, twos.size() * order);
  for (std::size_t i = 0; i < ones.size(); ++i) {
    const std::size_t y = ones[i];
    for (std::size_t x : p.upper_covers(y)) {
      const auto e = *p.edge_index(y, x);
      const int sign = inc.sign.at(e);
      for (Element h = 0; h < order; ++h)
        m(i * order + h, column_of[x] * order + c.group.multiply(h, c.colors[e])) += sign;
    }
  }
  return m;
}

std::variant<Pi2Result, Refusal> pi2_of_2complex(const Poset& p, const IncidenceAssignment& inc,
                                                 const Pi2Options& opt) {
  require_height(p, 2);
  Pipeline pl = enumerate_pi1(p, opt.max_cosets);
  if (!pl.table) return refuse(pl);

  TableColoring coloring = universal_table_coloring(p, pl);
  IntMatrix equations = pi2_kernel_equations(p, inc, coloring);
  const SmithForm snf = smith_normal_form(equations, opt.exec, opt.stop);
  std::vector<std::vector<Integer>> generators;
  for (std::size_t c = snf.rank; c < equations.cols(); ++c) {
    generators.push_back(snf.V.column(c));
    normalize_sign(generators.back());
  }
  Pi2Result r{std::move(pl.pi1), *pl.table, std::move(coloring), std::move(equations),
              pi2_column_labels(p, pl.table->order()), std::move(generators), 0, std::nullopt};
  r.zz_rank = r.generators.size();

  if (opt.cross_check) {
    const CoverPoset cover = build_cover(r.coloring);
    const auto groups = homology(boundary_matrices(cover.poset, lift_incidence(cover, inc)), opt.exec);
    r.cover_h2_rank = groups.size() > 2 ? groups[2].free_rank : 0;
    if (*r.cover_h2_rank != r.zz_rank)
      throw Error(ErrorCode::InternalCheckFailed, "kernel rank " + std::to_string(r.zz_rank) +
                                                      " differs from the rank of H2 of the cover, " +
                                                      std::to_string(*r.cover_h2_rank));
  }
  return r;
}

std::variant<std::vector<HomologyGroup>, Refusal> cover_homology(const Poset& p, const IncidenceAssignment& inc,
                                                                 std::size_t n_max, const Pi2Options& opt) {
  Pipeline pl = enumerate_pi1(p, opt.max_cosets);
  if (!pl.table) return refuse(pl);
  const CoverPoset cover = build_cover(universal_table_coloring(p, pl));
  auto groups = homology(boundary_matrices(cover.poset, lift_incidence(cover, inc)), opt.exec);
  groups.resize(n_max + 1);
  return groups;
}

std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::Yes: return "yes";
    case Hypothesis::No: return "no";
    case Hypothesis::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

std::string describe_pi2(const HomologyGroup& h2, std::optional<std::size_t> order) {
  if (order == 1) return "pi2 = H2 = " + h2.to_string();
  if (!order) return "pi2 = Z[pi1] (x) H2 = Z[pi1] (x) (" + h2.to_string() + ")";
  HomologyGroup sum{h2.free_rank * *order, {}};
  for (const auto& t : h2.torsion) sum.torsion.insert(sum.torsion.end(), *order, t);
  return "pi2 = Z[pi1] (x) H2 = " + sum.to_string() + " (|pi1| = " + std::to_string(*order) + ")";
}

}  // namespace

HurewiczVerdict hurewicz_hypothesis_check(const Poset& p, std::size_t max_cosets) {
  HurewiczVerdict v;
  const auto pi1 = fundamental_group(p, spanning_tree(p));
  v.pi1 = pi1.presentation();
  const SymbolicColoring universal = universal_coloring(p, pi1);
  const auto tc = todd_coxeter(v.pi1, max_cosets);
  const FiniteGroupTable* table = std::get_if<FiniteGroupTable>(&tc);
  if (table) v.pi1_order = table->order();
  const bool free_group = v.pi1.relators.empty();

  const auto groups = homology(boundary_matrices(p, assign_incidence(p)));
  v.h2 = groups.size() > 2 ? groups[2] : HomologyGroup{};

  const int top = std::max(2, std::min(3, p.max_height()));
  std::vector<std::size_t> subset;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.height(x) >= 1 && p.height(x) <= top) subset.push_back(x);
  const Poset L = sub_poset(p, subset);
  const auto graph = hasse_graph(L);
  const SpanningForest forest = bfs_spanning_forest(L.size(), graph);
  v.components = forest.component_count();

  const AbelianInvariants ab(v.pi1);
  bool unknown = false;
  for (const GraphCycle& cycle : cycle_basis(graph, forest)) {
    ++v.loops_checked;
    // translate the loop from L back to p
    EdgePath loop{p.index_of(L.id(cycle.start)), {}};
    for (const EdgeStep& s : to_edge_path(L, cycle).steps)
      loop.steps.push_back({p.index_of(L.id(s.from)), p.index_of(L.id(s.to)), s.direction});
    const Word w = weight(universal, loop);

    bool trivial = false, refuted = false;
    std::optional<Element> element;
    if (table) {
      element = table->evaluate(w);
      trivial = *element == FiniteGroupTable::identity();
      refuted = !trivial;
    } else if (w.empty()) {
      trivial = true;
    } else {
      refuted = free_group || !ab.is_trivial(abelianize(v.pi1, w));
    }
    if (refuted) {
      v.hypothesis = Hypothesis::No;
      v.exact = true;
      v.witness = LoopWitness{forest.component[cycle.start], loop, w, element};
      return v;
    }
    if (!trivial) unknown = true;
  }
  v.hypothesis = unknown ? Hypothesis::Unknown : Hypothesis::Yes;
  v.exact = !unknown;
  if (v.hypothesis == Hypothesis::Yes) v.conclusion = describe_pi2(v.h2, v.pi1_order);
  return v;
}

WedgeCheck wedge_pi2(const Poset& px, const Poset& py, std::size_t xp, std::size_t xq, const Pi2Options& opt) {
  const auto pi1_y = fundamental_group(py, spanning_tree(py));
  const auto tc_y = todd_coxeter(pi1_y.presentation(), opt.max_cosets);
  const auto* table_y = std::get_if<FiniteGroupTable>(&tc_y);
  if (!table_y || table_y->order() != 1)
    throw Error(ErrorCode::YNotSimplyConnected, "the second space is not simply connected (presentation " +
                                                    format_presentation(pi1_y.presentation()) + ")");
  const Poset w = wedge(px, py, xp, xq);

  WedgeCheck out;
  const auto ry = pi2_of_2complex(py, assign_incidence(py), opt);
  out.rank_y = std::get<Pi2Result>(ry).zz_rank;
  const auto rx = pi2_of_2complex(px, assign_incidence(px), opt);
  if (const auto* x = std::get_if<Pi2Result>(&rx)) {
    out.rank_x = x->zz_rank;
    out.pi1_order_x = x->table.order();
    out.predicted = *out.rank_x + *out.pi1_order_x * out.rank_y;
    const auto rw = pi2_of_2complex(w, assign_incidence(w), opt);
    if (const auto* d = std::get_if<Pi2Result>(&rw)) out.direct = d->zz_rank;
  }
  out.formula = "pi2(X v Y) = pi2(X) + Z[pi1(X)] (x) pi2(Y)";
  if (out.predicted)
    out.formula += ": rank " + std::to_string(*out.rank_x) + " + " + std::to_string(*out.pi1_order_x) + " * " +
                   std::to_string(out.rank_y) + " = " + std::to_string(*out.predicted);
  return out;
}

}  // namespace posetpi
