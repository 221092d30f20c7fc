#include "posetpi/incidence.hpp"

#include "posetpi/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace posetpi {

namespace {

class Gf2System {
public:
  explicit Gf2System(std::size_t vars) : vars_(vars), words_((vars + 1 + 63) / 64) {}

  void add(const std::vector<std::size_t>& vars, bool rhs) {
    std::vector<std::uint64_t> row(words_, 0);
    for (std::size_t v : vars) row[v / 64] ^= std::uint64_t{1} << (v % 64);
    if (rhs) row[vars_ / 64] ^= std::uint64_t{1} << (vars_ % 64);
    rows_.push_back(std::move(row));
  }

  // Reduced row echelon form; free variables are 0. Empty on inconsistency.
  std::optional<std::vector<bool>> solve() {
    std::vector<std::size_t> pivot_col;
    std::size_t next = 0;
    for (std::size_t c = 0; c < vars_ && next < rows_.size(); ++c) {
      std::size_t r = next;
      while (r < rows_.size() && !bit(rows_[r], c)) ++r;
      if (r == rows_.size()) continue;
      std::swap(rows_[r], rows_[next]);
      for (std::size_t o = 0; o < rows_.size(); ++o)
        if (o != next && bit(rows_[o], c))
          for (std::size_t w = 0; w < words_; ++w) rows_[o][w] ^= rows_[next][w];
      pivot_col.push_back(c);
      ++next;
    }
    for (std::size_t r = next; r < rows_.size(); ++r)
      if (bit(rows_[r], vars_)) return std::nullopt;
    std::vector<bool> x(vars_, false);
    for (std::size_t r = 0; r < next; ++r) x[pivot_col[r]] = bit(rows_[r], vars_);
    return x;
  }

private:
  std::size_t vars_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;

  static bool bit(const std::vector<std::uint64_t>& row, std::size_t c) { return (row[c / 64] >> (c % 64)) & 1U; }
};

std::size_t edge_of(const Poset& p, std::size_t lower, std::size_t upper) {
  const auto e = p.edge_index(lower, upper);
  if (!e) throw Error(ErrorCode::UnknownElement, "(" + p.id(lower) + ", " + p.id(upper) + ") is not a Hasse edge");
  return *e;
}

// For x, the elements two levels below grouped with the middle elements.
std::map<std::size_t, std::vector<std::size_t>> intervals_below(const Poset& p, std::size_t x) {
  std::map<std::size_t, std::vector<std::size_t>> out;
  for (std::size_t y : p.lower_covers(x))
    for (std::size_t z : p.lower_covers(y)) out[z].push_back(y);
  return out;
}

}  // namespace

int IncidenceAssignment::at(const Poset& p, std::size_t lower, std::size_t upper) const {
  return sign.at(edge_of(p, lower, upper));
}

IncidenceAssignment assign_incidence(const Poset& p) {
  Gf2System sys(p.edges().size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.height(x) == 1) {
      const auto lower = p.lower_covers(x);
      if (lower.size() != 2)
        throw Error(ErrorCode::NoAssignment, "'" + p.id(x) + "' has " + std::to_string(lower.size()) + " lower covers");
      sys.add({edge_of(p, lower[0], x), edge_of(p, lower[1], x)}, true);
    }
    for (const auto& [z, middle] : intervals_below(p, x)) {
      if (middle.size() != 2)
        throw Error(ErrorCode::NoAssignment, "interval [" + p.id(z) + ", " + p.id(x) + "] is not a diamond");
      sys.add({edge_of(p, z, middle[0]), edge_of(p, middle[0], x), edge_of(p, z, middle[1]), edge_of(p, middle[1], x)},
              true);
    }
  }
  const auto solution = sys.solve();
  if (!solution) throw Error(ErrorCode::NoAssignment, "the incidence conditions are inconsistent");
  IncidenceAssignment inc;
  for (bool b : *solution) inc.sign.push_back(b ? -1 : 1);
  return inc;
}

IncidenceAssignment simplicial_incidence(const Poset& p) {
  std::vector<std::vector<std::size_t>> vertices(p.size());
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p.height(a) < p.height(b); });
  for (std::size_t x : order) {
    if (p.height(x) == 0) {
      vertices[x] = {x};
      continue;
    }
    std::vector<std::size_t> v;
    for (std::size_t y : p.lower_covers(x)) v.insert(v.end(), vertices[y].begin(), vertices[y].end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.size() != static_cast<std::size_t>(p.height(x)) + 1 ||
        p.lower_covers(x).size() != static_cast<std::size_t>(p.height(x)) + 1)
      throw Error(ErrorCode::NotSimplicial, "'" + p.id(x) + "' is not a simplex");
    vertices[x] = std::move(v);
  }
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (!seen.insert(vertices[x]).second)
      throw Error(ErrorCode::NotSimplicial, "'" + p.id(x) + "' shares its vertex set with another cell");
  IncidenceAssignment inc;
  for (const HasseEdge& e : p.edges()) {
    const auto& outer = vertices[e.upper];
    const auto& inner = vertices[e.lower];
    std::size_t omitted = outer.size();
    for (std::size_t i = 0; i < outer.size(); ++i)
      if (!std::binary_search(inner.begin(), inner.end(), outer[i])) {
        if (omitted != outer.size()) omitted = outer.size() + 1;
        else omitted = i;
      }
    if (omitted >= outer.size() || inner.size() + 1 != outer.size())
      throw Error(ErrorCode::NotSimplicial, "'" + p.id(e.lower) + "' is not a facet of '" + p.id(e.upper) + "'");
    inc.sign.push_back(omitted % 2 == 0 ? 1 : -1);
  }
  return inc;
}

std::vector<std::string> check_incidence(const Poset& p, const IncidenceAssignment& inc) {
  std::vector<std::string> out;
  if (inc.sign.size() != p.edges().size()) return {"assignment has the wrong number of edges"};
  for (int s : inc.sign)
    if (s != 1 && s != -1) return {"incidence numbers must be ±1"};
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.height(x) == 1) {
      int sum = 0;
      for (std::size_t y : p.lower_covers(x)) sum += inc.at(p, y, x);
      if (sum != 0) out.push_back("boundary of '" + p.id(x) + "' does not sum to zero");
    }
    for (const auto& [z, middle] : intervals_below(p, x)) {
      int sum = 0;
      for (std::size_t y : middle) sum += inc.at(p, y, x) * inc.at(p, z, y);
      if (sum != 0) out.push_back("interval [" + p.id(z) + ", " + p.id(x) + "] does not sum to zero");
    }
  }
  return out;
}

ChainComplex boundary_matrices(const Poset& p, const IncidenceAssignment& inc) {
  ChainComplex cc;
  if (p.empty()) return cc;
  std::vector<std::vector<std::size_t>> levels;
  std::vector<std::size_t> position(p.size());
  for (int h = 0; h <= p.max_height(); ++h) {
    levels.push_back(p.elements_of_height(h));
    for (std::size_t i = 0; i < levels.back().size(); ++i) position[levels.back()[i]] = i;
    cc.dims.push_back(levels.back().size());
  }
  for (std::size_t n = 1; n < levels.size(); ++n) {
    IntMatrix d(levels[n - 1].size(), levels[n].size());
    for (std::size_t j = 0; j < levels[n].size(); ++j)
      for (std::size_t y : p.lower_covers(levels[n][j])) d(position[y], j) = inc.at(p, y, levels[n][j]);
    cc.boundaries.push_back(std::move(d));
  }
  return cc;
}

}  // namespace posetpi
