#include "posetpi/poset.hpp"

#include "posetpi/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace posetpi {

namespace {

// Fixed-width bit rows; n is at most a few thousand here.
class BitMatrix {
public:
  explicit BitMatrix(std::size_t n) : words_((n + 63) / 64), bits_(n * words_, 0) {}

  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  bool test(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void or_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] |= bits_[src * words_ + w];
  }

private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

Poset Poset::build(std::vector<std::string> elements,
                   const std::vector<std::pair<std::string, std::string>>& hasse) {
  Poset p;
  std::sort(elements.begin(), elements.end());
  if (auto dup = std::adjacent_find(elements.begin(), elements.end()); dup != elements.end())
    throw Error(ErrorCode::DuplicateElement, "element '" + *dup + "' listed twice");
  p.ids_ = std::move(elements);
  const std::size_t n = p.ids_.size();

  p.edges_.reserve(hasse.size());
  for (const auto& [lo, hi] : hasse) {
    const std::size_t a = p.index_of(lo);
    const std::size_t b = p.index_of(hi);
    if (a == b) throw Error(ErrorCode::CycleDetected, "self-loop at '" + lo + "'");
    p.edges_.push_back({a, b});
  }
  std::sort(p.edges_.begin(), p.edges_.end());
  if (auto dup = std::adjacent_find(p.edges_.begin(), p.edges_.end()); dup != p.edges_.end())
    throw Error(ErrorCode::DuplicateEdge,
                "edge (" + p.ids_[dup->lower] + ", " + p.ids_[dup->upper] + ") listed twice");

  p.lower_.assign(n, {});
  p.upper_.assign(n, {});
  for (const auto& e : p.edges_) {
    p.upper_[e.lower].push_back(e.upper);
    p.lower_[e.upper].push_back(e.lower);
  }
  for (auto& v : p.lower_) std::sort(v.begin(), v.end());

  // Kahn's algorithm; a leftover element means a directed cycle.
  std::vector<std::size_t> indegree(n);
  for (std::size_t i = 0; i < n; ++i) indegree[i] = p.lower_[i].size();
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) order.push_back(i);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t u : p.upper_[order[k]])
      if (--indegree[u] == 0) order.push_back(u);
  if (order.size() != n) {
    const auto it = std::find_if(indegree.begin(), indegree.end(), [](std::size_t d) { return d > 0; });
    throw Error(ErrorCode::CycleDetected,
                "directed cycle through '" + p.ids_[static_cast<std::size_t>(it - indegree.begin())] + "'");
  }

  // strictly-above sets, filled in reverse topological order
  BitMatrix above(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (std::size_t u : p.upper_[*it]) {
      above.set(*it, u);
      above.or_row(*it, u);
    }
  }
  for (const auto& e : p.edges_) {
    for (std::size_t mid : p.upper_[e.lower]) {
      if (mid != e.upper && above.test(mid, e.upper))
        throw Error(ErrorCode::TransitiveEdge, "edge (" + p.ids_[e.lower] + ", " + p.ids_[e.upper] +
                                                   ") is implied by a chain through '" + p.ids_[mid] + "'");
    }
  }

  p.heights_.assign(n, 0);
  for (std::size_t x : order)
    for (std::size_t y : p.lower_[x]) p.heights_[x] = std::max(p.heights_[x], p.heights_[y] + 1);
  for (const auto& e : p.edges_) {
    if (p.heights_[e.upper] != p.heights_[e.lower] + 1)
      throw Error(ErrorCode::NonGradedCover, "edge (" + p.ids_[e.lower] + ", " + p.ids_[e.upper] +
                                                 ") skips from height " + std::to_string(p.heights_[e.lower]) +
                                                 " to " + std::to_string(p.heights_[e.upper]));
  }
  p.max_height_ = n == 0 ? -1 : *std::max_element(p.heights_.begin(), p.heights_.end());
  return p;
}

std::optional<std::size_t> Poset::find(std::string_view id) const {
  const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t Poset::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorCode::UnknownElement, "no element '" + std::string(id) + "'");
}

std::vector<std::size_t> Poset::elements_of_height(int h) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (heights_[i] == h) out.push_back(i);
  return out;
}

std::vector<std::size_t> Poset::neighbours(std::size_t i) const {
  std::vector<std::size_t> out(lower_.at(i).begin(), lower_.at(i).end());
  out.insert(out.end(), upper_[i].begin(), upper_[i].end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> Poset::edge_index(std::size_t lower, std::size_t upper) const {
  const HasseEdge key{lower, upper};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Poset::less_equal(std::size_t x, std::size_t y) const {
  if (x >= size() || y >= size()) throw Error(ErrorCode::UnknownElement, "index out of range");
  if (x == y) return true;
  if (heights_[x] >= heights_[y]) return false;
  std::vector<char> seen(size(), 0);
  std::vector<std::size_t> stack{x};
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : upper_[u]) {
      if (v == y) return true;
      if (!seen[v] && heights_[v] < heights_[y]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return false;
}

std::int64_t Poset::euler_characteristic() const {
  std::int64_t chi = 0;
  for (int h : heights_) chi += (h % 2 == 0) ? 1 : -1;
  return chi;
}

std::vector<std::pair<std::string, std::string>> Poset::hasse_by_id() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(ids_[e.lower], ids_[e.upper]);
  return out;
}

void EdgePath::push(const Poset& p, std::size_t next) {
  const std::size_t from = end();
  if (p.edge_index(from, next)) {
    steps.push_back({from, next, Direction::Up});
  } else if (p.edge_index(next, from)) {
    steps.push_back({from, next, Direction::Down});
  } else {
    throw Error(ErrorCode::PathNotInPoset, "'" + p.id(from) + "' and '" + p.id(next) + "' are not adjacent");
  }
}

EdgePath EdgePath::reversed() const {
  EdgePath r;
  r.basepoint = end();
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    r.steps.push_back({it->to, it->from, it->direction == Direction::Up ? Direction::Down : Direction::Up});
  return r;
}

void validate_path(const Poset& p, const EdgePath& path) {
  if (path.basepoint >= p.size()) throw Error(ErrorCode::PathNotInPoset, "basepoint out of range");
  std::size_t at = path.basepoint;
  for (const auto& s : path.steps) {
    if (s.from != at) throw Error(ErrorCode::PathNotInPoset, "consecutive steps are not incident");
    if (s.from >= p.size() || s.to >= p.size()) throw Error(ErrorCode::PathNotInPoset, "step out of range");
    const bool ok = s.direction == Direction::Up ? p.edge_index(s.from, s.to).has_value()
                                                 : p.edge_index(s.to, s.from).has_value();
    if (!ok)
      throw Error(ErrorCode::PathNotInPoset,
                  "step '" + p.id(s.from) + "' -> '" + p.id(s.to) + "' is not a Hasse edge in that direction");
    at = s.to;
  }
}

std::vector<std::size_t> down_set(const Poset& p, std::size_t x) {
  if (x >= p.size()) throw Error(ErrorCode::UnknownElement, "index out of range");
  std::vector<char> seen(p.size(), 0);
  std::vector<std::size_t> stack{x}, out;
  seen[x] = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (std::size_t v : p.lower_covers(u))
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> up_set(const Poset& p, std::size_t x) {
  if (x >= p.size()) throw Error(ErrorCode::UnknownElement, "index out of range");
  std::vector<char> seen(p.size(), 0);
  std::vector<std::size_t> stack{x}, out;
  seen[x] = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (std::size_t v : p.upper_covers(u))
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> components(const Poset& p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (std::size_t v : p.neighbours(u))
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Chain> saturated_chains_between(const Poset& p, std::size_t x, std::size_t y) {
  if (!p.less_equal(x, y))
    throw Error(ErrorCode::NotComparable, "'" + p.id(x) + "' is not below '" + p.id(y) + "'");
  std::vector<char> below_y(p.size(), 0);
  for (std::size_t z : down_set(p, y)) below_y[z] = 1;

  std::vector<Chain> out;
  Chain current{x};
  // Upper covers are ascending, so depth-first order is lexicographic.
  auto extend = [&](auto&& self) -> void {
    const std::size_t top = current.back();
    if (top == y) {
      out.push_back(current);
      return;
    }
    for (std::size_t u : p.upper_covers(top)) {
      if (!below_y[u]) continue;
      current.push_back(u);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

ValidationReport validate_cw_face_poset(const Poset& p) {
  ValidationReport report;
  report.component_count = components(p).size();
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.height(x) == 1 && p.lower_covers(x).size() != 2)
      report.violations.push_back("height-1 element '" + p.id(x) + "' covers " +
                                  std::to_string(p.lower_covers(x).size()) + " elements, expected 2");
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.height(x) < 2) continue;
    // count two-step chains from each z two levels below
    std::map<std::size_t, std::size_t> middle_count;
    for (std::size_t y : p.lower_covers(x))
      for (std::size_t z : p.lower_covers(y)) ++middle_count[z];
    for (const auto& [z, count] : middle_count)
      if (count != 2)
        report.violations.push_back("interval ('" + p.id(z) + "', '" + p.id(x) + "') has " + std::to_string(count) +
                                    " middle elements, expected 2");

    // boundary of the cell: the strict down-set must be connected
    auto below = down_set(p, x);
    below.erase(std::find(below.begin(), below.end(), x));
    std::set<std::size_t> members(below.begin(), below.end());
    std::set<std::size_t> seen{below.front()};
    std::vector<std::size_t> stack{below.front()};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : p.neighbours(u))
        if (members.count(v) && seen.insert(v).second) stack.push_back(v);
    }
    if (seen.size() != members.size())
      report.violations.push_back("boundary of '" + p.id(x) + "' is disconnected");
  }
  return report;
}

Poset barycentric_subdivision(const Poset& p) {
  std::vector<std::vector<std::size_t>> strictly_above(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    strictly_above[x] = up_set(p, x);
    strictly_above[x].erase(std::find(strictly_above[x].begin(), strictly_above[x].end(), x));
  }
  auto chain_id = [&](const std::vector<std::size_t>& chain) {
    std::string id;
    for (std::size_t k = 0; k < chain.size(); ++k) {
      if (k) id += '<';
      id += p.id(chain[k]);
    }
    return id;
  };

  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> hasse;
  std::vector<std::size_t> chain;
  auto extend = [&](auto&& self) -> void {
    const std::string id = chain_id(chain);
    elements.push_back(id);
    if (chain.size() > 1) {
      for (std::size_t k = 0; k < chain.size(); ++k) {
        std::vector<std::size_t> face = chain;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        hasse.emplace_back(chain_id(face), id);
      }
    }
    for (std::size_t u : strictly_above[chain.back()]) {
      chain.push_back(u);
      self(self);
      chain.pop_back();
    }
  };
  for (std::size_t x = 0; x < p.size(); ++x) {
    chain = {x};
    extend(extend);
  }
  return Poset::build(std::move(elements), hasse);
}

Poset wedge(const Poset& p, const Poset& q, std::size_t xp, std::size_t xq) {
  if (xp >= p.size() || xq >= q.size()) throw Error(ErrorCode::UnknownElement, "wedge point out of range");
  if (!p.lower_covers(xp).empty()) throw Error(ErrorCode::NotMinimal, "'" + p.id(xp) + "' is not minimal");
  if (!q.lower_covers(xq).empty()) throw Error(ErrorCode::NotMinimal, "'" + q.id(xq) + "' is not minimal");

  bool clash = false;
  for (std::size_t i = 0; i < q.size() && !clash; ++i)
    clash = i != xq && p.find(q.id(i)).has_value();
  auto rename = [&](std::size_t i) -> std::string {
    if (i == xq) return p.id(xp);
    return clash ? "w2." + q.id(i) : q.id(i);
  };

  std::vector<std::string> elements(p.ids().begin(), p.ids().end());
  for (std::size_t i = 0; i < q.size(); ++i)
    if (i != xq) elements.push_back(rename(i));
  auto hasse = p.hasse_by_id();
  for (const auto& e : q.edges()) hasse.emplace_back(rename(e.lower), rename(e.upper));
  return Poset::build(std::move(elements), hasse);
}

Poset sub_poset(const Poset& p, std::span<const std::size_t> subset) {
  std::vector<std::size_t> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (std::size_t m : members)
    if (m >= p.size()) throw Error(ErrorCode::UnknownElement, "index out of range");

  const std::size_t k = members.size();
  std::vector<std::vector<char>> less(k, std::vector<char>(k, 0));
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<char> above(p.size(), 0);
    for (std::size_t u : up_set(p, members[a])) above[u] = 1;
    for (std::size_t b = 0; b < k; ++b) less[a][b] = a != b && above[members[b]];
  }
  std::vector<std::string> elements;
  for (std::size_t m : members) elements.push_back(p.id(m));
  std::vector<std::pair<std::string, std::string>> hasse;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (!less[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < k && cover; ++c) cover = !(less[a][c] && less[c][b]);
      if (cover) hasse.emplace_back(p.id(members[a]), p.id(members[b]));
    }
  return Poset::build(std::move(elements), hasse);
}

}  // namespace posetpi
