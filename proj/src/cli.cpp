#include "posetpi/cli.hpp"

#include "posetpi/asphericity.hpp"
#include "posetpi/coloring.hpp"
#include "posetpi/covering.hpp"
#include "posetpi/error.hpp"
#include "posetpi/incidence.hpp"
#include "posetpi/io.hpp"
#include "posetpi/pi2.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

namespace posetpi::cli {

namespace {

struct Options {
  std::string format = "text";
  std::size_t max_cosets = default_max_cosets;
  std::size_t depth = 2;
  std::string incidence = "gf2";
  bool parallel = false;
  std::vector<std::string> cycles;
  std::string output;
  std::string input;
  std::string second_input;
  std::string at_x;
  std::string at_y;
};

// What a command produced: a JSON document and its text rendering.
struct Report {
  Json json = Json::object();
  std::ostringstream text;
  int status = exit_ok;
};

Exec exec_of(const Options& o) { return o.parallel ? Exec::Parallel : Exec::Serial; }

Pi2Options pi2_options(const Options& o) {
  Pi2Options p;
  p.max_cosets = o.max_cosets;
  p.exec = exec_of(o);
  return p;
}

Poset load_poset(const std::string& path) { return poset_from_json(read_json(path)); }

IncidenceAssignment incidence_for(const Poset& p, const Options& o) {
  IncidenceAssignment inc = o.incidence == "simplicial" ? simplicial_incidence(p) : assign_incidence(p);
  if (const auto bad = check_incidence(p, inc); !bad.empty())
    throw Error(ErrorCode::InternalCheckFailed, "incidence numbers violate the sum conditions: " + bad.front());
  return inc;
}

Json homology_json(const std::vector<HomologyGroup>& groups) {
  Json j = Json::array();
  for (const auto& g : groups) j.push_back(g.to_string());
  return j;
}

std::vector<std::size_t> cells_by_height(const Poset& p) {
  std::vector<std::size_t> out;
  for (int h = 0; h <= p.max_height(); ++h) out.push_back(p.elements_of_height(h).size());
  return out;
}

std::string describe_group(const GroupPresentation& g, std::optional<std::size_t> order) {
  const HomologyGroup ab = AbelianInvariants(g).group();
  if (g.relators.empty() && g.rank() > 0)
    return g.rank() == 1 ? "Z" : "free group of rank " + std::to_string(g.rank());
  if (!order) return "infinite or unknown (abelianization " + ab.to_string() + ")";
  if (*order == 1) return "1";
  Integer ab_order = 1;
  for (const auto& t : ab.torsion) ab_order *= t;
  if (ab.free_rank == 0 && ab_order == *order) return ab.to_string();
  return "nonabelian group of order " + std::to_string(*order);
}

std::optional<std::size_t> group_order(const GroupPresentation& g, std::size_t max_cosets) {
  const auto tc = todd_coxeter(g, max_cosets);
  if (const auto* t = std::get_if<FiniteGroupTable>(&tc)) return t->order();
  return std::nullopt;
}

std::string presentation_text(const GroupPresentation& g) {
  return g.rank() == 0 && g.relators.empty() ? "< | >" : "< " + format_presentation(g) + " >";
}

Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string path_text(const Poset& p, const EdgePath& path) {
  std::string out = p.id(path.basepoint);
  for (const auto& s : path.steps) out += (s.direction == Direction::Up ? " < " : " > ") + p.id(s.to);
  return out;
}

// ---------------------------------------------------------------- commands

void cmd_validate(const Options& o, Report& r) {
  const Poset p = load_poset(o.input);
  const ValidationReport v = validate_cw_face_poset(p);
  r.json = {{"command", "validate"},
            {"elements", p.size()},
            {"cells_by_height", cells_by_height(p)},
            {"components", v.component_count},
            {"euler_characteristic", p.euler_characteristic()},
            {"valid", v.ok()},
            {"violations", v.violations}};
  if (v.ok()) {
    r.text << "valid regular CW face poset\n";
  } else {
    r.text << "not a regular CW face poset\n";
    for (const auto& s : v.violations) r.text << "  " << s << '\n';
    r.status = exit_input_error;
  }
  r.text << "elements: " << p.size() << ", components: " << v.component_count
         << ", euler characteristic: " << p.euler_characteristic() << '\n';
}

void cmd_pi1(const Options& o, Report& r) {
  const Poset p = load_poset(o.input);
  const FundamentalGroup pi1 = fundamental_group(p, spanning_tree(p));
  const auto order = group_order(pi1.presentation(), o.max_cosets);
  const std::string desc = describe_group(pi1.presentation(), order);
  r.json = {{"command", "pi1"},
            {"presentation", format_presentation(pi1.presentation())},
            {"raw_generators", pi1.raw.rank()},
            {"raw_relators", pi1.raw.relators.size()},
            {"order", optional_json(order)},
            {"enumeration", order ? "complete" : "exhausted"},
            {"max_cosets", o.max_cosets},
            {"abelianization", AbelianInvariants(pi1.presentation()).group().to_string()},
            {"description", desc},
            {"provenance", "edge-path group from a BFS spanning tree, simplified by Tietze moves"}};
  r.text << "pi1 = " << desc << '\n'
         << "presentation: " << presentation_text(pi1.presentation()) << '\n'
         << "(from " << pi1.raw.rank() << " co-tree edges and " << pi1.raw.relators.size() << " chain relations)\n";
  if (!order) r.text << "coset enumeration exhausted after " << o.max_cosets << " cosets\n";
}

void cmd_homology(const Options& o, Report& r) {
  const Poset p = load_poset(o.input);
  const IncidenceAssignment inc = incidence_for(p, o);
  const ChainComplex cc = boundary_matrices(p, inc);
  const auto groups = homology(cc, exec_of(o));
  Json hashes = Json::array();
  for (const auto& d : cc.boundaries) hashes.push_back(matrix_sha256(d));
  r.json = {{"command", "homology"},
            {"homology", homology_json(groups)},
            {"incidence", o.incidence},
            {"boundary_sha256", hashes},
            {"provenance", "cellular chain complex of the face poset, Smith normal form"}};
  for (std::size_t n = 0; n < groups.size(); ++n) r.text << 'H' << n << " = " << groups[n].to_string() << '\n';
}

void cmd_pi2(const Options& o, Report& r) {
  const Poset p = load_poset(o.input);
  const IncidenceAssignment inc = incidence_for(p, o);
  const auto result = pi2_of_2complex(p, inc, pi2_options(o));
  r.json["command"] = "pi2";
  if (const auto* refusal = std::get_if<Refusal>(&result)) {
    r.json["refused"] = true;
    r.json["reason"] = refusal->reason;
    r.json["pi1_presentation"] = format_presentation(refusal->presentation);
    r.json["abelianization"] = refusal->abelianization.to_string();
    r.text << "pi1 = " << describe_group(refusal->presentation, std::nullopt) << "; pi2 not computed\n"
           << refusal->reason << '\n'
           << "presentation: " << presentation_text(refusal->presentation) << '\n';
    return;
  }
  const auto& res = std::get<Pi2Result>(result);
  const std::string desc = describe_group(res.pi1.presentation(), res.table.order());
  Json gens = Json::array();
  for (const auto& g : res.generators) {
    Json terms = Json::array();
    for (std::size_t c = 0; c < g.size(); ++c)
      if (g[c] != 0)
        terms.push_back({{"cell", p.id(res.columns[c].first)},
                         {"sheet", res.columns[c].second},
                         {"coefficient", integer_to_json(g[c])}});
    gens.push_back(terms);
  }
  r.json["refused"] = false;
  r.json["pi1"] = desc;
  r.json["pi1_presentation"] = format_presentation(res.pi1.presentation());
  r.json["pi1_order"] = res.table.order();
  r.json["pi2_rank"] = res.zz_rank;
  r.json["equations"] = {{"rows", res.equations.rows()},
                         {"cols", res.equations.cols()},
                         {"sha256", matrix_sha256(res.equations)}};
  r.json["generators"] = gens;
  r.json["cross_check"] = {{"kernel_rank", res.zz_rank},
                           {"cover_h2_rank", optional_json(res.cover_h2_rank)},
                           {"consistent", res.cover_h2_rank == res.zz_rank}};
  r.json["provenance"] = "kernel of the Z[pi1]-linear cellular differential for the universal coloring";

  r.text << "pi1 = " << desc << "; pi2 rank " << res.zz_rank << " over Z-basis of cover\n"
         << "kernel equations: " << res.equations.rows() << " x " << res.equations.cols() << '\n';
  for (std::size_t i = 0; i < res.generators.size(); ++i) {
    std::vector<std::string> terms;
    for (std::size_t c = 0; c < res.generators[i].size(); ++c)
      if (res.generators[i][c] != 0)
        terms.push_back(res.generators[i][c].str() + "*" + p.id(res.columns[c].first) + "@" +
                        std::to_string(res.columns[c].second));
    r.text << "generator " << i + 1 << ": " << join(terms, " + ") << '\n';
  }
  r.text << "cross-check: H2 of the universal cover has rank " << *res.cover_h2_rank << '\n';
}

void cmd_cover(const Options& o, Report& r) {
  const Poset p = load_poset(o.input);
  const IncidenceAssignment inc = incidence_for(p, o);
  const FundamentalGroup pi1 = fundamental_group(p, spanning_tree(p));
  const auto tc = todd_coxeter(pi1.presentation(), o.max_cosets);
  r.json["command"] = "cover";
  if (!std::holds_alternative<FiniteGroupTable>(tc)) {
    r.json["refused"] = true;
    r.json["reason"] = "coset enumeration exhausted after " + std::to_string(o.max_cosets) + " cosets";
    r.text << "pi1 = " << describe_group(pi1.presentation(), std::nullopt) << "; universal cover not built\n";
    return;
  }
  const auto& table = std::get<FiniteGroupTable>(tc);
  const CoverPoset cover = build_cover(push_to_table(universal_coloring(p, pi1), table));
  const ValidationReport v = validate_cover(cover);
  if (!v.ok()) throw Error(ErrorCode::InternalCheckFailed, "cover failed validation: " + v.violations.front());
  const UniversalityEvidence ev = universality_evidence(cover, o.max_cosets);
  const auto groups = homology(boundary_matrices(cover.poset, lift_incidence(cover, inc)), exec_of(o));
  r.json["refused"] = false;
  r.json["elements"] = cover.poset.size();
  r.json["fiber"] = table.order();
  r.json["components"] = v.component_count;
  r.json["valid"] = v.ok();
  r.json["homology"] = homology_json(groups);
  r.json["evidence"] = {{"kind", "necessary conditions only"},
                        {"connected", ev.cover_components == 1},
                        {"h1", ev.h1.to_string()},
                        {"fiber_matches_order", ev.fiber_size == ev.pi1_order},
                        {"consistent", ev.consistent()}};
  if (!o.output.empty()) {
    std::ofstream f(o.output);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + o.output + "'");
    f << cover_to_json(cover).dump(1) << '\n';
    r.json["written"] = o.output;
  }
  r.text << "universal cover: " << cover.poset.size() << " elements, fiber " << table.order() << ", "
         << v.component_count << " component(s), validation " << (v.ok() ? "passed" : "failed") << '\n';
  for (std::size_t n = 0; n < groups.size(); ++n) r.text << "H" << n << "(cover) = " << groups[n].to_string() << '\n';
  r.text << "universality evidence (necessary conditions): " << (ev.consistent() ? "consistent" : "inconsistent")
         << '\n';
  if (!o.output.empty()) r.text << "cover written to " << o.output << '\n';
}

void cmd_hurewicz(const Options& o, Report& r) {
  const Poset p = load_poset(o.input);
  const HurewiczVerdict v = hurewicz_hypothesis_check(p, o.max_cosets);
  r.json = {{"command", "hurewicz"},
            {"hypothesis", to_string(v.hypothesis)},
            {"exact", v.exact},
            {"components", v.components},
            {"loops_checked", v.loops_checked},
            {"pi1_presentation", format_presentation(v.pi1)},
            {"pi1_order", optional_json(v.pi1_order)},
            {"h2", v.h2.to_string()},
            {"conclusion", v.conclusion.empty() ? Json(nullptr) : Json(v.conclusion)},
            {"provenance", "loops among cells of height 1 and 2 under the universal coloring"}};
  r.text << "hypothesis: " << to_string(v.hypothesis) << (v.exact ? "" : " (not decided exactly)") << '\n';
  if (v.witness) {
    const std::string w = format_word(v.witness->weight, v.pi1.generators);
    r.json["witness"] = {{"loop", path_text(p, v.witness->loop)},
                         {"weight", w},
                         {"element", v.witness->element ? Json(*v.witness->element) : Json(nullptr)}};
    r.text << "violating loop: " << path_text(p, v.witness->loop) << '\n' << "weight: " << w << '\n';
  }
  if (!v.conclusion.empty()) r.text << "conclusion: " << v.conclusion << '\n';
}

std::size_t basepoint(const Poset& p, const std::string& id) {
  if (!id.empty()) return p.index_of(id);
  const auto minimal = p.elements_of_height(0);
  if (minimal.empty()) throw Error(ErrorCode::NotMinimal, "empty poset");
  return minimal.front();
}

void cmd_wedge(const Options& o, Report& r) {
  const Poset x = load_poset(o.input);
  const Poset y = load_poset(o.second_input);
  const WedgeCheck w = wedge_pi2(x, y, basepoint(x, o.at_x), basepoint(y, o.at_y), pi2_options(o));
  r.json = {{"command", "wedge-check"},
            {"rank_x", optional_json(w.rank_x)},
            {"rank_y", w.rank_y},
            {"pi1_order_x", optional_json(w.pi1_order_x)},
            {"predicted", optional_json(w.predicted)},
            {"direct", optional_json(w.direct)},
            {"consistent", w.consistent()},
            {"formula", w.formula}};
  r.text << w.formula << '\n';
  if (w.direct) r.text << "direct kernel computation on the wedge: rank " << *w.direct << '\n';
  else r.text << "pi1 of the first space is not finite; no direct comparison\n";
  if (!w.consistent())
    throw Error(ErrorCode::InternalCheckFailed, "wedge formula and direct computation disagree");
}

Json certificate_json(const AsphericityCertificate& c) {
  Json comps = Json::array();
  for (const auto& comp : c.per_component) {
    Json j = {{"component", comp.component},
              {"members", comp.members},
              {"basis_size", comp.basis_size},
              {"free_rank", comp.free_rank}};
    if (comp.witness) {
      Json free = Json::array();
      for (const auto& x : comp.witness->free_coordinates) free.push_back(integer_to_json(x));
      j["witness"] = {{"cycle", comp.witness->steps},
                      {"weight", format_word(comp.witness->weight, c.group.generators)},
                      {"abelianized", comp.witness->image.exponents},
                      {"free_coordinates", free}};
    } else {
      j["witness"] = nullptr;
    }
    comps.push_back(j);
  }
  return {{"verdict", to_string(c.verdict)},
          {"group", format_presentation(c.group)},
          {"group_order", optional_json(c.group_order)},
          {"failed_precondition", c.failed_precondition ? Json(*c.failed_precondition) : Json(nullptr)},
          {"components", comps}};
}

void certificate_text(const AsphericityCertificate& c, const std::string& separator, Report& r) {
  r.text << "verdict: " << to_string(c.verdict) << '\n';
  if (c.failed_precondition) r.text << "precondition failed: " << *c.failed_precondition << '\n';
  if (c.group_order) r.text << "the group is finite of order " << *c.group_order << '\n';
  for (const auto& comp : c.per_component) {
    r.text << "component " << comp.component << " (" << comp.members.size() << " cells: " << join(comp.members, " ")
           << "): ";
    if (!comp.witness) {
      r.text << "no cycle of infinite order found (" << comp.basis_size << " basis cycles)\n";
      continue;
    }
    std::vector<std::string> image;
    for (auto e : comp.witness->image.exponents) image.push_back(std::to_string(e));
    r.text << "witness " << join(comp.witness->steps, separator) << '\n'
           << "  weight " << format_word(comp.witness->weight, c.group.generators) << ", abelianized ("
           << join(image, ",") << ")\n";
  }
}

AsphericityOptions asphericity_options(const Options& o) {
  AsphericityOptions a;
  a.depth = o.depth;
  a.max_cosets = o.max_cosets;
  for (const auto& c : o.cycles) a.candidates.push_back(parse_digraph_cycle(c));
  return a;
}

void cmd_aspherical_complex(const Options& o, Report& r) {
  const Poset p = load_poset(o.input);
  const AsphericityCertificate c = main5_check(p, asphericity_options(o));
  r.json = certificate_json(c);
  r.json["command"] = "aspherical complex";
  r.json["criterion"] = "cycles through 2-cells and doubly covered 1-cells";
  r.json["depth"] = o.depth;
  certificate_text(c, " ", r);
}

void cmd_aspherical_presentation(const Options& o, Report& r) {
  const GroupPresentation g = parse_presentation(o.input);
  const AsphericityCertificate c = main6_check(g, asphericity_options(o));
  const PresentationDigraph d = build_presentation_digraph(g);
  const PresentationComplexReport counts = presentation_complex_report(g);
  Json vertices = Json::array(), edges = Json::array();
  for (std::size_t v : d.vertices) vertices.push_back(g.generators[v]);
  for (std::size_t i = 0; i < d.edges.size(); ++i)
    edges.push_back({{"label", "E" + std::to_string(i)},
                     {"source", g.generators[d.edges[i].source]},
                     {"target", g.generators[d.edges[i].target]},
                     {"color", format_word(d.edges[i].color, g.generators)},
                     {"relator", d.edges[i].relator + 1},
                     {"position", d.edges[i].position}});
  r.json = certificate_json(c);
  r.json["command"] = "aspherical presentation";
  r.json["criterion"] = "cycles of the presentation digraph";
  r.json["depth"] = o.depth;
  r.json["digraph"] = {{"vertices", vertices}, {"edges", edges}};
  r.json["complex"] = {{"cells", {counts.kp[0], counts.kp[1], counts.kp[2]}},
                       {"subdivided_cells", {counts.k[0], counts.k[1], counts.k[2]}},
                       {"euler_characteristic", counts.euler_characteristic}};

  std::vector<std::string> names;
  for (std::size_t v : d.vertices) names.push_back(g.generators[v]);
  r.text << "digraph vertices: {" << join(names, ", ") << "}\n";
  for (std::size_t i = 0; i < d.edges.size(); ++i)
    r.text << "  E" << i << ": " << g.generators[d.edges[i].source] << " -> " << g.generators[d.edges[i].target]
           << "  color " << format_word(d.edges[i].color, g.generators) << '\n';
  certificate_text(c, " ", r);
  r.text << "euler characteristic " << counts.euler_characteristic << '\n';
}

// ------------------------------------------------------------------ parser

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-cosets", o.max_cosets, "Coset enumeration budget")->check(CLI::Range(1, 100000000));
  cmd->add_flag("--parallel", o.parallel, "Use the OpenMP elimination kernels");
}

void add_incidence(CLI::App* cmd, Options& o) {
  cmd->add_option("--incidence", o.incidence, "Incidence numbers: gf2 (any regular CW poset) or simplicial")
      ->check(CLI::IsMember({"gf2", "simplicial"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Second homotopy groups and asphericity via colorings of face posets", "posetpi"};
  app.require_subcommand(1);
  std::function<void(const Options&, Report&)> action;

  auto file_command = [&](const char* name, const char* help, auto fn, bool incidence) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("input", o.input, "Poset or simplicial complex JSON")->required();
    add_common(cmd, o);
    if (incidence) add_incidence(cmd, o);
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };
  file_command("validate", "Check that a poset is a regular CW face poset", cmd_validate, false);
  file_command("pi1", "Presentation and order of the fundamental group", cmd_pi1, false);
  file_command("homology", "Cellular homology", cmd_homology, true);
  file_command("pi2", "Second homotopy group of a 2-complex with finite fundamental group", cmd_pi2, true);
  CLI::App* cover = file_command("cover", "Build and check the universal cover", cmd_cover, true);
  cover->add_option("--output", o.output, "Write the cover as poset JSON");
  file_command("hurewicz", "Check the loop hypothesis giving pi2 = Z[pi1] (x) H2", cmd_hurewicz, false);

  CLI::App* wedge_cmd = app.add_subcommand("wedge-check", "Compare pi2 of a wedge with the wedge formula");
  wedge_cmd->add_option("x", o.input, "First space")->required();
  wedge_cmd->add_option("y", o.second_input, "Simply connected second space")->required();
  wedge_cmd->add_option("--at-x", o.at_x, "Minimal element of the first space (default: first vertex)");
  wedge_cmd->add_option("--at-y", o.at_y, "Minimal element of the second space (default: first vertex)");
  add_common(wedge_cmd, o);
  wedge_cmd->callback([&] { action = cmd_wedge; });

  CLI::App* asph = app.add_subcommand("aspherical", "Sufficient criteria for asphericity");
  asph->require_subcommand(1);
  CLI::App* complex = asph->add_subcommand("complex", "2-dimensional regular CW complex");
  complex->add_option("input", o.input, "Poset or simplicial complex JSON")->required();
  CLI::App* pres = asph->add_subcommand("presentation", "Group presentation \"a,b | abAB\"");
  pres->add_option("presentation", o.input, "Generators and relators")->required();
  pres->add_option("--cycle", o.cycles, "Digraph cycle to try first, e.g. \"E4 E1^-1 E3\"");
  for (CLI::App* c : {complex, pres}) {
    add_common(c, o);
    c->add_option("--depth", o.depth, "Combination depth of the cycle search")->check(CLI::Range(1, 64));
  }
  complex->callback([&] { action = cmd_aspherical_complex; });
  pres->callback([&] { action = cmd_aspherical_presentation; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  Report r;
  try {
    action(o, r);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InternalCheckFailed ? exit_check_failed : exit_input_error;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_check_failed;
  }
  if (o.format == "json")
    out << r.json.dump(2) << '\n';
  else
    out << r.text.str();
  return r.status;
}

}  // namespace posetpi::cli
