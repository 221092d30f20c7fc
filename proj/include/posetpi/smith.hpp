#pragma once

#include "posetpi/int_matrix.hpp"
#include "posetpi/kernels.hpp"

#include <stop_token>
#include <string>
#include <vector>

namespace posetpi {

/// U · m · V = D with U, V unimodular and D diagonal, d_1 | d_2 | … ≥ 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  /// The nonzero diagonal entries, in divisibility order.
  std::vector<Integer> invariant_factors() const;
};

/// Pivots on the entry of least absolute value to keep coefficients small.
/// Cancellation is cooperative: the token is polled once per pivot and a
/// requested stop raises Error(Cancelled).
SmithForm smith_normal_form(const IntMatrix& m, Exec exec = Exec::Serial, std::stop_token stop = {});

/// Same diagonal as smith_normal_form without accumulating U and V.
std::vector<Integer> invariant_factors(const IntMatrix& m, Exec exec = Exec::Serial, std::stop_token stop = {});

std::size_t rank(const IntMatrix& m);

/// Basis of {v ∈ ℤ^cols : m · v = 0}; the basis is primitive (it extends to a
/// basis of ℤ^cols).
std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m, Exec exec = Exec::Serial);

/// Finitely generated abelian group ℤ^free_rank ⊕ ℤ/t_1 ⊕ … with t_i | t_{i+1}.
struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2", …
  std::string to_string() const;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// dims[n] = rank of C_n; boundaries[n] is ∂_{n+1} : C_{n+1} → C_n, a
/// dims[n] × dims[n+1] matrix.
struct ChainComplex {
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> boundaries;
};

/// Throws DimensionMismatch on inconsistent shapes and NotAChainComplex if
/// some ∂_n ∂_{n+1} ≠ 0.
void check_chain_complex(const ChainComplex& cc, Exec exec = Exec::Serial);

/// H_0 … H_{dims.size()−1}. Validates the complex first.
std::vector<HomologyGroup> homology(const ChainComplex& cc, Exec exec = Exec::Serial);

/// Cokernel ℤ^cols / (row lattice of m) as an abstract group.
HomologyGroup cokernel_of_rows(const IntMatrix& m);

}  // namespace posetpi
