#include "support.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace posetpi::test {

std::string fixture_path(const std::string& name) { return std::string(POSETPI_FIXTURES) + "/" + name + ".json"; }

Poset fixture(const std::string& name) { return poset_from_json(read_json(fixture_path(name))); }

SimplicialComplex fixture_complex(const std::string& name) { return complex_from_json(read_json(fixture_path(name))); }

std::size_t rational_rank(const IntMatrix& m) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a(m.rows(), std::vector<Q>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = Q(m(r, c));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (a[r][c] == 0) continue;
      const Q f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod(const IntMatrix& m, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer x = m(r, c) % p;
      if (x < 0) x += p;
      a[r][c] = static_cast<std::int64_t>(x);
    }
  auto inv = [p](std::int64_t x) {
    for (std::int64_t y = 1; y < p; ++y)
      if (x * y % p == 1) return y;
    return std::int64_t{0};
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t iv = inv(a[rank][c]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c] * iv % p;
      for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

HomologyOracle simplicial_homology_oracle(const SimplicialComplex& sc) {
  // all faces by dimension
  std::vector<std::set<std::vector<std::string>>> faces;
  for (auto facet : sc.facets) {
    std::sort(facet.begin(), facet.end());
    const std::size_t n = facet.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::string> f;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) f.push_back(facet[i]);
      if (faces.size() < f.size()) faces.resize(f.size());
      faces[f.size() - 1].insert(f);
    }
  }
  const std::size_t top = faces.size();
  std::vector<std::map<std::vector<std::string>, std::size_t>> index(top);
  for (std::size_t d = 0; d < top; ++d) {
    std::size_t i = 0;
    for (const auto& f : faces[d]) index[d][f] = i++;
  }
  // boundary[d]: C_{d+1} -> C_d
  std::vector<IntMatrix> boundary;
  for (std::size_t d = 0; d + 1 < top; ++d) {
    IntMatrix b(faces[d].size(), faces[d + 1].size());
    for (const auto& [f, col] : index[d + 1])
      for (std::size_t i = 0; i < f.size(); ++i) {
        auto g = f;
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
        b(index[d].at(g), col) = i % 2 ? -1 : 1;
      }
    boundary.push_back(b);
  }
  HomologyOracle o;
  auto dims = [&](auto rank_of) {
    std::vector<std::size_t> h;
    for (std::size_t d = 0; d < top; ++d) {
      const std::size_t in = d + 1 < top ? rank_of(boundary[d]) : 0;
      const std::size_t out = d > 0 ? rank_of(boundary[d - 1]) : 0;
      h.push_back(faces[d].size() - out - in);
    }
    return h;
  };
  o.betti = dims([](const IntMatrix& m) { return rational_rank(m); });
  o.mod2 = dims([](const IntMatrix& m) { return rank_mod(m, 2); });
  o.mod3 = dims([](const IntMatrix& m) { return rank_mod(m, 3); });
  return o;
}

std::vector<HomologyGroup> oracle_groups(const HomologyOracle& o) {
  std::vector<HomologyGroup> out;
  std::size_t t2_prev = 0, t3_prev = 0;
  for (std::size_t n = 0; n < o.betti.size(); ++n) {
    // dim H_n(F_p) = b_n + t_n(p) + t_{n-1}(p)
    const std::size_t t2 = o.mod2[n] - o.betti[n] - t2_prev;
    const std::size_t t3 = o.mod3[n] - o.betti[n] - t3_prev;
    HomologyGroup g{o.betti[n], {}};
    if (t2 && t3) throw std::logic_error("mixed 2- and 3-torsion is outside the oracle");
    g.torsion.assign(t2 + t3, Integer(t2 ? 2 : 3));
    out.push_back(g);
    t2_prev = t2;
    t3_prev = t3;
  }
  return out;
}

IntMatrix worked_rp2_system() {
  IntMatrix m(12, 8);
  enum { W, X, Y, Z };
  for (std::size_t h = 0; h < 2; ++h) {
    const std::size_t hg = 1 - h;
    auto put = [&](std::size_t row, int cell, std::size_t g, int v) { m(2 * row + h, 2 * cell + g) = v; };
    put(0, W, h, 1), put(0, Z, h, 1);
    put(1, X, h, 1), put(1, Y, h, 1);
    put(2, W, h, -1), put(2, X, h, -1);
    put(3, Y, h, -1), put(3, Z, h, -1);
    put(4, W, h, 1), put(4, Y, hg, 1);
    put(5, X, h, 1), put(5, Z, hg, 1);
  }
  return m;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

GroupPresentation random_presentation(std::mt19937_64& rng, std::size_t generators, std::size_t relators,
                                      std::size_t max_length) {
  std::vector<std::string> names;
  for (std::size_t g = 0; g < generators; ++g) names.push_back(std::string(1, static_cast<char>('a' + g)));
  std::uniform_int_distribution<std::size_t> gen(0, generators - 1), len(1, max_length);
  std::bernoulli_distribution sign;
  std::vector<Word> rels;
  for (std::size_t r = 0; r < relators; ++r) {
    Word w;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) w.letters.push_back({gen(rng), sign(rng) ? 1 : -1});
    rels.push_back(w);
  }
  return GroupPresentation::make(names, rels);
}

Poset subdivided_circle(std::size_t n, const std::string& prefix) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> hasse;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back(prefix + "v" + std::to_string(i));
    ids.push_back(prefix + "e" + std::to_string(i));
    hasse.emplace_back(prefix + "v" + std::to_string(i), prefix + "e" + std::to_string(i));
    hasse.emplace_back(prefix + "v" + std::to_string((i + 1) % n), prefix + "e" + std::to_string(i));
  }
  return build_poset(ids, hasse);
}

Poset point(const std::string& id) { return build_poset({id}, {}); }

}  // namespace posetpi::test
