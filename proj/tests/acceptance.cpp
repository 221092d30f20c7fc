// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include "property_checks.hpp"
#include "support.hpp"

#include "posetpi/asphericity.hpp"
#include "posetpi/cli.hpp"
#include "posetpi/covering.hpp"
#include "posetpi/incidence.hpp"
#include "posetpi/pi2.hpp"
#include "posetpi/smith.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace posetpi;
using namespace posetpi::test;
using Element = FiniteGroupTable::Element;

namespace {

struct Checker {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

std::size_t pi1_order(const Poset& p) {
  const auto pi1 = fundamental_group(p, spanning_tree(p));
  const auto t = todd_coxeter(pi1.presentation());
  return std::holds_alternative<FiniteGroupTable>(t) ? std::get<FiniteGroupTable>(t).order() : 0;
}

void rp2_end_to_end(Checker& c) {
  const Poset p = fixture("rp2_6vertex");
  const auto pi1 = fundamental_group(p, spanning_tree(p));
  const auto table = todd_coxeter(pi1.presentation());
  c.expect(std::holds_alternative<FiniteGroupTable>(table), "pi1 did not enumerate");
  if (!std::holds_alternative<FiniteGroupTable>(table)) return;
  const FiniteGroupTable& g = std::get<FiniteGroupTable>(table);
  c.expect(g.order() == 2, "pi1 order " + std::to_string(g.order()));

  const CoverPoset cover = build_cover(push_to_table(universal_coloring(p, pi1), g));
  c.expect(cover.poset.size() == 62, "cover has " + std::to_string(cover.poset.size()) + " elements");
  c.expect(validate_cover(cover).ok(), "validate_cover");
  const IncidenceAssignment inc = assign_incidence(p);
  const auto h = std::get<std::vector<HomologyGroup>>(cover_homology(p, inc, 2));
  c.expect(h.size() == 3 && h[1].trivial() && h[2] == HomologyGroup{1, {}}, "cover homology");

  const auto r = pi2_of_2complex(p, inc);
  c.expect(std::holds_alternative<Pi2Result>(r), "pi2 refused");
  if (std::holds_alternative<Pi2Result>(r)) c.expect(std::get<Pi2Result>(r).zz_rank == 1, "kernel rank");
}

// Edge signs and colors for the worked RP² poset: the upper edges are fixed,
// the twelve lower edges are searched exhaustively.
void rp2_worked_example(Checker& c) {
  const Poset p = fixture("rp2_worked");
  c.expect(validate_cw_face_poset(p).ok(), "not a regular CW face poset");

  const auto pi1 = fundamental_group(p, spanning_tree(p));
  const GroupPresentation& pres = pi1.presentation();
  const bool gamma_squared = pres.generators.size() == 1 && pres.relators.size() == 1 &&
                             pres.relators[0].letters == std::vector<Letter>{{0, 1}, {0, 1}};
  c.expect(gamma_squared, "pi1 presentation " + format_presentation(pres));

  const auto edge = [&](const char* lo, const char* up) { return *p.edge_index(p.index_of(lo), p.index_of(up)); };
  struct Upper {
    const char *lo, *up;
    int sign;
    Element color;
  };
  const Upper upper[] = {
      {"q", "w", 1, 0},  {"q", "z", 1, 0},  {"r", "x", 1, 0},  {"r", "y", 1, 0},
      {"s", "w", -1, 0}, {"s", "x", -1, 0}, {"t", "y", -1, 0}, {"t", "z", -1, 0},
      {"u", "w", 1, 0},  {"u", "y", 1, 1},  {"v", "x", 1, 0},  {"v", "z", 1, 1},
  };
  std::vector<std::size_t> lower;
  for (std::size_t e = 0; e < p.edges().size(); ++e)
    if (p.height(p.edges()[e].upper) == 1) lower.push_back(e);
  c.expect(lower.size() == 12 && p.edges().size() == 24, "edge counts");

  IncidenceAssignment inc{std::vector<int>(p.edges().size(), 1)};
  for (const auto& u : upper) inc.sign[edge(u.lo, u.up)] = u.sign;
  bool signed_ok = false;
  for (std::uint32_t mask = 0; mask < (1u << lower.size()) && !signed_ok; ++mask) {
    for (std::size_t i = 0; i < lower.size(); ++i) inc.sign[lower[i]] = (mask >> i) & 1 ? -1 : 1;
    signed_ok = check_incidence(p, inc).empty();
  }
  c.expect(signed_ok, "no lower signs satisfy the sum conditions");

  const FiniteGroupTable z2 = std::get<FiniteGroupTable>(todd_coxeter(parse_presentation("a | aa")));
  TableColoring col{p, z2, std::vector<Element>(p.edges().size(), 0)};
  for (const auto& u : upper) col.colors[edge(u.lo, u.up)] = u.color;
  bool colored = false;
  for (std::uint32_t mask = 0; mask < (1u << lower.size()) && !colored; ++mask) {
    for (std::size_t i = 0; i < lower.size(); ++i) col.colors[lower[i]] = (mask >> i) & 1;
    colored = check_admissible(col).admissible;
  }
  c.expect(colored, "no admissible lower coloring");
  if (!signed_ok || !colored) return;

  const IntMatrix m = pi2_kernel_equations(p, inc, col);
  c.expect(m == worked_rp2_system(), "kernel equations differ:\n" + to_string(m));
  const auto basis = kernel_basis(m);
  c.expect(basis.size() == 1, "kernel rank " + std::to_string(basis.size()));
  if (basis.size() == 1) {
    std::vector<Integer> v = basis[0];
    if (v[0] < 0)
      for (auto& x : v) x = -x;
    c.expect(v == std::vector<Integer>{1, -1, -1, 1, 1, -1, -1, 1}, "kernel generator");
  }

  // the automatic pipeline agrees on rank and on the ±1 sheet pattern
  const auto r = pi2_of_2complex(p, assign_incidence(p));
  c.expect(std::holds_alternative<Pi2Result>(r), "pipeline refused");
  if (!std::holds_alternative<Pi2Result>(r)) return;
  const Pi2Result& res = std::get<Pi2Result>(r);
  c.expect(res.equations.rows() == 12 && res.equations.cols() == 8 && res.zz_rank == 1, "pipeline shape");
  if (res.generators.size() == 1)
    for (std::size_t i = 0; i + 1 < res.generators[0].size(); i += 2)
      c.expect(abs(res.generators[0][i]) == 1 && res.generators[0][i] == -res.generators[0][i + 1],
               "pipeline generator pattern");
}

void presentation_witness(Checker& c) {
  std::ostringstream out, err;
  const int code = cli::run({"aspherical", "presentation", "a,b,c,d,e | bbcABdba, Cdebe", "--cycle", "E4 E1^-1 E3",
                             "--format", "json"},
                            out, err);
  c.expect(code == 0, "exit code " + std::to_string(code) + " " + err.str());
  if (code != 0) return;
  const Json j = Json::parse(out.str());
  c.expect(j["verdict"] == "aspherical", "verdict");
  const Json& w = j["components"][0]["witness"];
  c.expect(w["weight"] == "c^-1 b a b^2 c", "weight " + w["weight"].dump());
  c.expect(w["abelianized"] == Json::array({1, 3, 0, 0, 0}), "abelianized image");
  c.expect(j["components"][0]["members"] == Json::array({"a", "c", "d", "e"}), "vertex set");

  const Json& edges = j["digraph"]["edges"];
  auto find = [&](const std::string& label) -> const Json* {
    for (const auto& e : edges)
      if (e["label"] == label) return &e;
    return nullptr;
  };
  struct Want {
    const char *label, *source, *target, *color;
  };
  for (const Want& want : {Want{"E4", "c", "d", "c^-1 d"}, Want{"E1", "a", "d", "a^-1 b^-1 d"},
                           Want{"E3", "a", "c", "b^2 c"}}) {
    const Json* e = find(want.label);
    c.expect(e && (*e)["source"] == want.source && (*e)["target"] == want.target && (*e)["color"] == want.color,
             std::string("edge ") + want.label);
  }
}

void surfaces(Checker& c) {
  const std::pair<const char*, Verdict> cases[] = {{"t2_7vertex", Verdict::Aspherical},
                                                   {"genus2", Verdict::Aspherical},
                                                   {"s2", Verdict::Inconclusive},
                                                   {"rp2_6vertex", Verdict::Inconclusive}};
  for (const auto& [name, want] : cases) {
    const AsphericityCertificate cert = main5_check(fixture(name));
    c.expect(cert.verdict == want, std::string(name) + ": " + to_string(cert.verdict));
    for (const auto& comp : cert.per_component)
      if (comp.witness)
        c.expect(has_infinite_order_in_abelianization(cert.group, comp.witness->weight).infinite,
                 std::string(name) + ": witness has finite order");
  }
}

void wedge_formula(Checker& c) {
  const Poset rp2 = fixture("rp2_6vertex"), s2 = fixture("s2");
  const WedgeCheck w = wedge_pi2(rp2, s2, rp2.index_of("1"), s2.index_of("1"));
  c.expect(w.predicted == std::optional<std::size_t>{3}, "predicted");
  c.expect(w.direct == std::optional<std::size_t>{3}, "direct");
  c.expect(pi1_order(wedge(rp2, s2, rp2.index_of("1"), s2.index_of("1"))) == 2, "wedge pi1 order");
}

void hurewicz(Checker& c) {
  const HurewiczVerdict s2 = hurewicz_hypothesis_check(fixture("s2"));
  c.expect(s2.hypothesis == Hypothesis::Yes && s2.exact, "S2 hypothesis");
  c.expect(s2.conclusion == "pi2 = H2 = Z", "S2 conclusion '" + s2.conclusion + "'");

  const HurewiczVerdict rp2 = hurewicz_hypothesis_check(fixture("rp2_6vertex"));
  c.expect(rp2.hypothesis == Hypothesis::No && rp2.exact, "RP2 hypothesis");
  c.expect(rp2.witness.has_value(), "RP2 witness");
  if (!rp2.witness) return;
  c.expect(rp2.witness->element == std::optional<Element>{1}, "witness element");
  c.expect(rp2.witness->weight.letters.size() == 1 && std::abs(rp2.witness->weight.letters[0].exponent) == 1,
           "witness weight is not a single generator");
  c.expect(rp2.witness->loop.closed(), "witness loop is not closed");
}

void properties(Checker& c) {
  const std::pair<const char*, std::function<Failures()>> checks[] = {
      {"boundary squares", [] { return check_boundary_squares(); }},
      {"smith", [] { return check_random_smith(200); }},
      {"cover", [] { return check_cover_invariants(); }},
      {"kernel vs cover", [] { return check_kernel_vs_cover(); }},
      {"gauge", [] { return check_gauge_invariance(100); }},
      {"digraph degrees", [] { return check_digraph_degrees(100); }},
  };
  for (const auto& [name, run] : checks)
    for (const auto& f : run()) c.problems.push_back(std::string(name) + ": " + f);
}

}  // namespace

int main() {
  const std::pair<const char*, void (*)(Checker&)> criteria[] = {
      {"RP2 6-vertex: pi1 = Z/2, 62-element cover with H1 = 0, H2 = Z, kernel rank 1", rp2_end_to_end},
      {"worked RP2 poset: pi1 = <g | g^2>, 12x8 kernel system and its generator", rp2_worked_example},
      {"presentation digraph witness c^-1 b a b^2 c with image (1,3,0,0,0)", presentation_witness},
      {"subposet criterion on T2, genus 2, S2, RP2", surfaces},
      {"wedge RP2 v S2 has kernel rank 1 + 2*1 = 3", wedge_formula},
      {"Hurewicz hypothesis: S2 yes, RP2 no with an order-2 loop", hurewicz},
      {"property checks", properties},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [title, fn] : criteria) {
    ++n;
    Checker c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (c.problems.empty() ? "PASS" : "FAIL") << " [" << n << "] " << title << '\n';
    for (const auto& p : c.problems) std::cout << "    " << p << '\n';
    failed += !c.problems.empty();
  }
  return failed == 0 ? 0 : 1;
}
