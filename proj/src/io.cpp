#include "posetpi/io.hpp"

#include "posetpi/error.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace posetpi {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::string id_string(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  bad("ids must be strings or integers");
}

}  // namespace

bool is_simplicial_json(const Json& j) { return j.is_object() && j.contains("facets"); }

SimplicialComplex complex_from_json(const Json& j) {
  if (!is_simplicial_json(j) || !j["facets"].is_array()) bad("expected an object with a \"facets\" array");
  SimplicialComplex sc;
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) bad("every facet must be an array of vertex ids");
    std::vector<std::string> facet;
    for (const auto& v : f) facet.push_back(id_string(v));
    sc.facets.push_back(std::move(facet));
  }
  return sc;
}

Poset poset_from_json(const Json& j) {
  if (is_simplicial_json(j)) return face_poset(complex_from_json(j));
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    bad("expected an object with an \"elements\" array");
  std::vector<std::string> elements;
  for (const auto& e : j["elements"]) {
    if (e.is_object() && e.contains("id"))
      elements.push_back(id_string(e["id"]));
    else
      elements.push_back(id_string(e));
  }
  std::vector<std::pair<std::string, std::string>> hasse;
  if (j.contains("hasse")) {
    if (!j["hasse"].is_array()) bad("\"hasse\" must be an array");
    for (const auto& e : j["hasse"]) {
      if (!e.is_array() || e.size() != 2) bad("every Hasse edge must be a pair [lower, upper]");
      hasse.emplace_back(id_string(e[0]), id_string(e[1]));
    }
  }
  return Poset::build(std::move(elements), hasse);
}

Json poset_to_json(const Poset& p) {
  Json elements = Json::array(), hasse = Json::array();
  for (const auto& id : p.ids()) elements.push_back({{"id", id}});
  for (const auto& [lo, up] : p.hasse_by_id()) hasse.push_back({lo, up});
  return {{"elements", elements}, {"hasse", hasse}};
}

Json cover_to_json(const CoverPoset& cp) {
  Json j = poset_to_json(cp.poset);
  Json projection = Json::object(), sheet = Json::object();
  for (std::size_t i = 0; i < cp.poset.size(); ++i) {
    projection[cp.poset.id(i)] = cp.base.id(cp.projection[i]);
    sheet[cp.poset.id(i)] = cp.sheet[i];
  }
  j["projection"] = projection;
  j["sheet"] = sheet;
  return j;
}

Coloring coloring_from_json(const Poset& p, const Json& j, std::size_t max_cosets) {
  if (!j.is_object() || !j.contains("group") || !j["group"].is_string())
    bad("a coloring needs a \"group\" presentation string");
  const std::string target = j.value("target", "presentation");
  if (target != "presentation" && target != "table") bad("\"target\" must be \"presentation\" or \"table\"");
  const GroupPresentation group = parse_presentation(j["group"].get<std::string>());

  std::optional<FiniteGroupTable> table;
  if (target == "table") {
    auto tc = todd_coxeter(group, max_cosets);
    if (!std::holds_alternative<FiniteGroupTable>(tc)) bad("coset enumeration of the coloring group did not close");
    table = std::get<FiniteGroupTable>(std::move(tc));
  }
  std::vector<Word> words(p.edges().size());
  std::vector<FiniteGroupTable::Element> elements(p.edges().size(), FiniteGroupTable::identity());
  std::vector<bool> seen(p.edges().size(), false);
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) bad("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 3) bad("every colored edge must be [lower, upper, color]");
      const std::size_t lo = p.index_of(id_string(e[0])), up = p.index_of(id_string(e[1]));
      const auto idx = p.edge_index(lo, up);
      if (!idx) bad("(" + id_string(e[0]) + ", " + id_string(e[1]) + ") is not a Hasse edge");
      if (seen[*idx]) bad("edge (" + id_string(e[0]) + ", " + id_string(e[1]) + ") colored twice");
      seen[*idx] = true;
      if (e[2].is_number_integer()) {
        if (!table) bad("element indices need a table target");
        const auto v = e[2].get<std::int64_t>();
        if (v < 0 || static_cast<std::size_t>(v) >= table->order()) bad("element index out of range");
        elements[*idx] = static_cast<FiniteGroupTable::Element>(v);
      } else if (e[2].is_string()) {
        words[*idx] = parse_word(e[2].get<std::string>(), group.generators);
        if (table) elements[*idx] = table->evaluate(words[*idx]);
      } else {
        bad("a color must be a word or an element index");
      }
    }
  }
  if (table) return TableColoring{p, *table, std::move(elements)};
  return SymbolicColoring{p, group, std::move(words)};
}

Json coloring_to_json(const Coloring& c, const GroupPresentation* group) {
  Json j;
  Json edges = Json::array();
  if (const auto* s = std::get_if<SymbolicColoring>(&c)) {
    j["target"] = "presentation";
    j["group"] = format_presentation(s->group);
    for (std::size_t i = 0; i < s->colors.size(); ++i) {
      const HasseEdge& e = s->poset.edges()[i];
      edges.push_back({s->poset.id(e.lower), s->poset.id(e.upper), format_word_compact(s->colors[i], s->group.generators)});
    }
  } else {
    const auto& t = std::get<TableColoring>(c);
    j["target"] = "table";
    if (group) j["group"] = format_presentation(*group);
    j["order"] = t.group.order();
    for (std::size_t i = 0; i < t.colors.size(); ++i) {
      const HasseEdge& e = t.poset.edges()[i];
      edges.push_back({t.poset.id(e.lower), t.poset.id(e.upper), t.colors[i]});
    }
  }
  j["edges"] = edges;
  return j;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

std::string matrix_sha256(const IntMatrix& m) {
  std::ostringstream text;
  text << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) text << (c ? " " : "") << m(r, c);
    text << '\n';
  }
  const std::string data = text.str();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::InternalCheckFailed, "SHA-256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

}  // namespace posetpi
