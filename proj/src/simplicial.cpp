#include "posetpi/error.hpp"
#include "posetpi/poset.hpp"

#include <algorithm>
#include <set>

namespace posetpi {

namespace {

std::string join(const std::vector<std::string>& vertices) {
  std::string id;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (k) id += ',';
    id += vertices[k];
  }
  return id;
}

}  // namespace

void validate_complex(const SimplicialComplex& sc) {
  std::vector<std::vector<std::string>> sorted;
  for (const auto& f : sc.facets) {
    if (f.empty()) throw Error(ErrorCode::InvalidComplex, "empty facet");
    auto s = f;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorCode::InvalidComplex, "facet {" + join(s) + "} repeats a vertex");
    for (const auto& v : s)
      if (v.empty() || v.find_first_of(",<") != std::string::npos)
        throw Error(ErrorCode::InvalidComplex, "vertex id '" + v + "' is empty or contains ',' or '<'");
    sorted.push_back(std::move(s));
  }
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = 0; b < sorted.size(); ++b) {
      if (a == b) continue;
      if (sorted[a] == sorted[b] && a < b)
        throw Error(ErrorCode::InvalidComplex, "facet {" + join(sorted[a]) + "} listed twice");
      if (sorted[a].size() < sorted[b].size() &&
          std::includes(sorted[b].begin(), sorted[b].end(), sorted[a].begin(), sorted[a].end()))
        throw Error(ErrorCode::InvalidComplex,
                    "facet {" + join(sorted[a]) + "} is contained in {" + join(sorted[b]) + "}");
    }
}

Poset face_poset(const SimplicialComplex& sc) {
  validate_complex(sc);
  std::set<std::vector<std::string>> faces;
  for (const auto& f : sc.facets) {
    auto s = f;
    std::sort(s.begin(), s.end());
    const std::size_t n = s.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::string> face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) face.push_back(s[i]);
      faces.insert(std::move(face));
    }
  }
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> hasse;
  for (const auto& face : faces) {
    elements.push_back(join(face));
    if (face.size() < 2) continue;
    for (std::size_t i = 0; i < face.size(); ++i) {
      auto sub = face;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
      hasse.emplace_back(join(sub), elements.back());
    }
  }
  return Poset::build(std::move(elements), hasse);
}

}  // namespace posetpi
