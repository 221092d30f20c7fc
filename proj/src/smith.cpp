#include "posetpi/smith.hpp"

#include "posetpi/error.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace posetpi {

namespace {

using boost::multiprecision::abs;

struct Pos {
  std::size_t row, col;
};

class Eliminator {
public:
  Eliminator(const IntMatrix& m, bool track, Exec exec) : D(m), track_(track), exec_(exec) {
    if (track_) {
      U = IntMatrix::identity(m.rows());
      V = IntMatrix::identity(m.cols());
    }
  }

  IntMatrix D, U, V;

  void run(const std::stop_token& stop) {
    const std::size_t steps = std::min(D.rows(), D.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (stop.stop_requested()) throw Error(ErrorCode::Cancelled, "Smith normal form cancelled");
      auto pivot = smallest_entry(t, t);
      if (!pivot) break;
      move_to(*pivot, t);
      while (clear_column(t) || clear_row(t) || enforce_divisibility(t)) {
      }
      if (D(t, t) < 0) negate_row(t);
    }
  }

private:
  bool track_;
  Exec exec_;

  std::optional<Pos> smallest_entry(std::size_t row0, std::size_t col0) const {
    std::optional<Pos> best;
    Integer best_abs;
    for (std::size_t i = row0; i < D.rows(); ++i)
      for (std::size_t j = col0; j < D.cols(); ++j) {
        if (D(i, j) == 0) continue;
        Integer a = abs(D(i, j));
        if (!best || a < best_abs) {
          best = Pos{i, j};
          best_abs = std::move(a);
          if (best_abs == 1) return best;
        }
      }
    return best;
  }

  void move_to(Pos p, std::size_t t) {
    if (p.row != t) {
      D.swap_rows(p.row, t);
      if (track_) U.swap_rows(p.row, t);
    }
    if (p.col != t) {
      D.swap_cols(p.col, t);
      if (track_) V.swap_cols(p.col, t);
    }
  }

  void negate_row(std::size_t t) {
    for (auto& x : D.row(t)) x = -x;
    if (track_)
      for (auto& x : U.row(t)) x = -x;
  }

  // Reduces column t below the pivot; returns true when a smaller remainder
  // was swapped into the pivot position and another pass is needed.
  bool clear_column(std::size_t t) {
    std::vector<kernels::Update> updates;
    for (std::size_t i = t + 1; i < D.rows(); ++i)
      if (D(i, t) != 0) updates.push_back({i, D(i, t) / D(t, t)});
    if (updates.empty()) return false;
    kernels::subtract_row_multiples(D, t, updates, t, exec_);
    if (track_) kernels::subtract_row_multiples(U, t, updates, 0, exec_);
    std::optional<Pos> rest;
    Integer best;
    for (std::size_t i = t + 1; i < D.rows(); ++i)
      if (D(i, t) != 0 && (!rest || abs(D(i, t)) < best)) {
        rest = Pos{i, t};
        best = abs(D(i, t));
      }
    if (!rest) return false;
    move_to(*rest, t);
    return true;
  }

  bool clear_row(std::size_t t) {
    std::vector<kernels::Update> updates;
    for (std::size_t j = t + 1; j < D.cols(); ++j)
      if (D(t, j) != 0) updates.push_back({j, D(t, j) / D(t, t)});
    if (updates.empty()) return false;
    kernels::subtract_col_multiples(D, t, updates, t, exec_);
    if (track_) kernels::subtract_col_multiples(V, t, updates, 0, exec_);
    std::optional<Pos> rest;
    Integer best;
    for (std::size_t j = t + 1; j < D.cols(); ++j)
      if (D(t, j) != 0 && (!rest || abs(D(t, j)) < best)) {
        rest = Pos{t, j};
        best = abs(D(t, j));
      }
    if (!rest) return false;
    move_to(*rest, t);
    return true;
  }

  // With row and column t clear, every remaining entry must be a multiple of
  // the pivot; otherwise fold the offending row into row t and go again.
  bool enforce_divisibility(std::size_t t) {
    const Integer& pivot = D(t, t);
    if (abs(pivot) == 1) return false;
    for (std::size_t i = t + 1; i < D.rows(); ++i)
      for (std::size_t j = t + 1; j < D.cols(); ++j)
        if (D(i, j) % pivot != 0) {
          const kernels::Update add{t, Integer(-1)};
          kernels::subtract_row_multiples(D, i, std::span(&add, 1), t, Exec::Serial);
          if (track_) kernels::subtract_row_multiples(U, i, std::span(&add, 1), 0, Exec::Serial);
          return true;
        }
    return false;
  }
};

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m, Exec exec, std::stop_token stop) {
  Eliminator e(m, true, exec);
  e.run(stop);
  SmithForm out{std::move(e.U), std::move(e.D), std::move(e.V), 0};
  out.rank = out.invariant_factors().size();
  return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& m, Exec exec, std::stop_token stop) {
  Eliminator e(m, false, exec);
  e.run(stop);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (e.D(i, i) != 0) out.push_back(e.D(i, i));
  return out;
}

std::size_t rank(const IntMatrix& m) { return invariant_factors(m).size(); }

std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m, Exec exec) {
  const SmithForm snf = smith_normal_form(m, exec);
  std::vector<std::vector<Integer>> basis;
  for (std::size_t c = snf.rank; c < m.cols(); ++c) basis.push_back(snf.V.column(c));
  return basis;
}

std::string HomologyGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return first ? "0" : os.str();
}

void check_chain_complex(const ChainComplex& cc, Exec exec) {
  const std::size_t expected = cc.dims.empty() ? 0 : cc.dims.size() - 1;
  if (cc.boundaries.size() != expected)
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(expected) + " boundary maps, got " +
                                                  std::to_string(cc.boundaries.size()));
  for (std::size_t n = 0; n < cc.boundaries.size(); ++n) {
    const auto& d = cc.boundaries[n];
    if (d.rows() != cc.dims[n] || d.cols() != cc.dims[n + 1])
      throw Error(ErrorCode::DimensionMismatch, "boundary " + std::to_string(n + 1) + " has the wrong shape");
  }
  for (std::size_t n = 0; n + 1 < cc.boundaries.size(); ++n)
    if (!kernels::multiply(cc.boundaries[n], cc.boundaries[n + 1], exec).is_zero())
      throw Error(ErrorCode::NotAChainComplex,
                  "boundary " + std::to_string(n + 1) + " composed with boundary " + std::to_string(n + 2) +
                      " is nonzero");
}

std::vector<HomologyGroup> homology(const ChainComplex& cc, Exec exec) {
  check_chain_complex(cc, exec);
  std::vector<std::vector<Integer>> factors;
  for (const auto& d : cc.boundaries) factors.push_back(invariant_factors(d, exec));
  std::vector<HomologyGroup> out(cc.dims.size());
  for (std::size_t n = 0; n < cc.dims.size(); ++n) {
    const std::size_t rank_out = n == 0 ? 0 : factors[n - 1].size();
    const std::size_t rank_in = n < factors.size() ? factors[n].size() : 0;
    out[n].free_rank = cc.dims[n] - rank_out - rank_in;
    if (n < factors.size())
      for (const auto& f : factors[n])
        if (f > 1) out[n].torsion.push_back(f);
  }
  return out;
}

HomologyGroup cokernel_of_rows(const IntMatrix& m) {
  HomologyGroup g;
  const auto factors = invariant_factors(m);
  g.free_rank = m.cols() - factors.size();
  for (const auto& f : factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

}  // namespace posetpi
