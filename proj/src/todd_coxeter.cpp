#include "posetpi/error.hpp"
#include "posetpi/group_table.hpp"

#include <deque>
#include <numeric>

namespace posetpi {

using Element = FiniteGroupTable::Element;

class TableBuilder {
public:
  // Fills words, multiplication and inverses from generator images, keeping
  // the caller's element numbering. `right[e][g]` is e·a_g. Throws
  // InternalCheckFailed if the generators do not reach every element.
  static FiniteGroupTable from_right_action(std::size_t order, const std::vector<std::vector<Element>>& right,
                                            std::vector<Element> gen_images) {
    FiniteGroupTable t;
    t.order_ = order;
    t.gen_images_ = std::move(gen_images);
    const std::size_t k = t.gen_images_.size();
    const auto right_inverse = invert_action(order, right, k);

    // BFS from the identity with letters ordered a_0, a_0^-1, a_1, ...
    std::vector<bool> seen(order, false);
    std::vector<Element> bfs{0};
    std::vector<std::pair<Element, Letter>> parent(order, {0, Letter{}});
    t.words_.assign(order, Word{});
    seen[0] = true;
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      const Element e = bfs[head];
      for (std::size_t g = 0; g < k; ++g)
        for (int s : {1, -1}) {
          const Element f = s > 0 ? right[e][g] : right_inverse[e][g];
          if (seen[f]) continue;
          seen[f] = true;
          parent[f] = {e, Letter{g, s}};
          t.words_[f] = t.words_[e];
          t.words_[f].letters.push_back(Letter{g, s});
          bfs.push_back(f);
        }
    }
    if (bfs.size() != order) throw Error(ErrorCode::InternalCheckFailed, "generators do not generate the group");

    t.mult_.assign(order * order, 0);
    for (std::size_t a = 0; a < order; ++a) {
      t.mult_[a * order] = static_cast<Element>(a);
      for (std::size_t i = 1; i < order; ++i) {
        const Element b = bfs[i];
        const auto [pb, letter] = parent[b];
        const Element ap = t.mult_[a * order + pb];
        t.mult_[a * order + b] = letter.exponent > 0 ? right[ap][letter.generator] : right_inverse[ap][letter.generator];
      }
    }
    t.inv_.assign(order, 0);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        if (t.mult_[a * order + b] == 0) t.inv_[a] = static_cast<Element>(b);
    return t;
  }

private:
  static std::vector<std::vector<Element>> invert_action(std::size_t order,
                                                         const std::vector<std::vector<Element>>& right,
                                                         std::size_t k) {
    std::vector<std::vector<Element>> inv(order, std::vector<Element>(k, 0));
    for (std::size_t e = 0; e < order; ++e)
      for (std::size_t g = 0; g < k; ++g) inv[right[e][g]][g] = static_cast<Element>(e);
    return inv;
  }
};

FiniteGroupTable FiniteGroupTable::from_multiplication(std::size_t order, std::vector<Element> mult,
                                                       std::vector<Element> gen_images) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::InternalCheckFailed, what); };
  if (order == 0 || mult.size() != order * order) fail("multiplication table has the wrong size");
  for (Element x : mult)
    if (x >= order) fail("multiplication table entry out of range");
  for (Element g : gen_images)
    if (g >= order) fail("generator image out of range");
  for (std::size_t a = 0; a < order; ++a) {
    if (mult[a] != a || mult[a * order] != a) fail("element 0 is not the identity");
    std::vector<bool> hit(order, false);
    for (std::size_t b = 0; b < order; ++b) hit[mult[a * order + b]] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) fail("row " + std::to_string(a) + " is not a permutation");
  }
  std::vector<std::vector<Element>> right(order, std::vector<Element>(gen_images.size()));
  for (std::size_t e = 0; e < order; ++e)
    for (std::size_t g = 0; g < gen_images.size(); ++g) right[e][g] = mult[e * order + gen_images[g]];
  FiniteGroupTable t = TableBuilder::from_right_action(order, right, std::move(gen_images));
  if (t.mult_ != mult || !t.is_associative()) fail("table is not associative");
  return t;
}

Element FiniteGroupTable::evaluate(const Word& w) const {
  Element e = identity();
  for (const Letter& l : w.letters) {
    if (l.generator >= gen_images_.size())
      throw Error(ErrorCode::AlphabetMismatch, "generator " + std::to_string(l.generator) + " outside the table");
    const Element g = gen_images_[l.generator];
    e = multiply(e, l.exponent > 0 ? g : inverse(g));
  }
  return e;
}

bool FiniteGroupTable::is_associative() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) {
      const Element ab = mult_[a * order_ + b];
      for (std::size_t c = 0; c < order_; ++c)
        if (mult_[ab * order_ + c] != mult_[a * order_ + mult_[b * order_ + c]]) return false;
    }
  return true;
}

namespace {

constexpr int undefined = -1;

// Coset table with columns 2g (a_g) and 2g+1 (a_g^-1).
class CosetEnumerator {
public:
  CosetEnumerator(const GroupPresentation& p, std::size_t max_cosets)
      : columns_(2 * p.rank()), max_cosets_(max_cosets) {
    for (const Word& r : p.relators) {
      std::vector<std::size_t> cols;
      for (const Letter& l : r.letters) cols.push_back(2 * l.generator + (l.exponent > 0 ? 0 : 1));
      if (!cols.empty()) relators_.push_back(std::move(cols));
    }
    new_coset();
  }

  // false when the budget ran out
  bool run() {
    for (std::size_t alpha = 0; alpha < table_.size(); ++alpha) {
      for (const auto& r : relators_) {
        if (!live(alpha)) break;
        if (!scan_and_fill(alpha, r)) return false;
      }
      for (std::size_t x = 0; x < columns_ && live(alpha); ++x)
        if (table_[alpha][x] == undefined && !define(alpha, x)) return false;
    }
    return true;
  }

  // Live cosets renumbered in BFS order from coset 0; result[e][g] = e·a_g.
  std::vector<std::vector<Element>> standardized() const {
    std::vector<int> number(table_.size(), undefined);
    std::vector<std::size_t> order{0};
    number[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
      for (std::size_t x = 0; x < columns_; ++x) {
        const std::size_t next = root(static_cast<std::size_t>(table_[order[head]][x]));
        if (number[next] == undefined) {
          number[next] = static_cast<int>(order.size());
          order.push_back(next);
        }
      }
    std::vector<std::vector<Element>> right(order.size(), std::vector<Element>(columns_ / 2));
    for (std::size_t e = 0; e < order.size(); ++e)
      for (std::size_t g = 0; g < columns_ / 2; ++g)
        right[e][g] = static_cast<Element>(number[root(static_cast<std::size_t>(table_[order[e]][2 * g]))]);
    return right;
  }

private:
  std::size_t columns_;
  std::size_t max_cosets_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::vector<int>> table_;
  std::vector<std::size_t> parent_;
  std::deque<std::size_t> queue_;

  static std::size_t inv(std::size_t x) { return x ^ 1U; }
  bool live(std::size_t c) const { return parent_[c] == c; }
  std::size_t root(std::size_t c) const {
    while (parent_[c] != c) c = parent_[c];
    return c;
  }

  void new_coset() {
    table_.emplace_back(columns_, undefined);
    parent_.push_back(parent_.size());
  }

  bool define(std::size_t alpha, std::size_t x) {
    if (table_.size() >= max_cosets_) return false;
    const std::size_t beta = table_.size();
    new_coset();
    table_[alpha][x] = static_cast<int>(beta);
    table_[beta][inv(x)] = static_cast<int>(alpha);
    return true;
  }

  bool scan_and_fill(std::size_t alpha, const std::vector<std::size_t>& r) {
    std::size_t f = alpha, b = alpha;
    std::size_t i = 0, j = r.size();  // unscanned letters are r[i..j)
    for (;;) {
      while (i < j && table_[f][r[i]] != undefined) f = static_cast<std::size_t>(table_[f][r[i++]]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j > i && table_[b][inv(r[j - 1])] != undefined) b = static_cast<std::size_t>(table_[b][inv(r[--j])]);
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        table_[f][r[i]] = static_cast<int>(b);
        table_[b][inv(r[i])] = static_cast<int>(f);
        return true;
      }
      if (!define(f, r[i])) return false;
    }
  }

  std::size_t rep(std::size_t c) {
    std::size_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const std::size_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::size_t a, std::size_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    const std::size_t lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    queue_.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    merge(a, b);
    while (!queue_.empty()) {
      const std::size_t gamma = queue_.front();
      queue_.pop_front();
      for (std::size_t x = 0; x < columns_; ++x) {
        if (table_[gamma][x] == undefined) continue;
        const auto delta = static_cast<std::size_t>(table_[gamma][x]);
        table_[delta][inv(x)] = undefined;
        const std::size_t mu = rep(gamma), nu = rep(delta);
        if (table_[mu][x] != undefined) {
          merge(nu, static_cast<std::size_t>(table_[mu][x]));
        } else if (table_[nu][inv(x)] != undefined) {
          merge(mu, static_cast<std::size_t>(table_[nu][inv(x)]));
        } else {
          table_[mu][x] = static_cast<int>(nu);
          table_[nu][inv(x)] = static_cast<int>(mu);
        }
      }
    }
  }
};

}  // namespace

std::variant<FiniteGroupTable, Exhausted> todd_coxeter(const GroupPresentation& p, std::size_t max_cosets) {
  if (max_cosets == 0) throw Error(ErrorCode::Exhausted, "max_cosets must be at least 1");
  CosetEnumerator tc(p, max_cosets);
  if (!tc.run()) return Exhausted{max_cosets};
  const auto right = tc.standardized();
  if (right.size() > max_table_order)
    throw Error(ErrorCode::GroupTooLarge, "group of order " + std::to_string(right.size()) + " exceeds the table limit of " +
                                              std::to_string(max_table_order));
  std::vector<Element> gens;
  for (std::size_t g = 0; g < p.rank(); ++g) gens.push_back(right[0][g]);
  return TableBuilder::from_right_action(right.size(), right, std::move(gens));
}

}  // namespace posetpi
