#pragma once

#include "posetpi/poset.hpp"
#include "posetpi/smith.hpp"

#include <string>
#include <vector>

namespace posetpi {

/// Incidence numbers [x:y] = ±1, one per Hasse edge, indexed like
/// Poset::edges().
struct IncidenceAssignment {
  std::vector<int> sign;

  /// [upper : lower]; throws UnknownElement if (lower, upper) is not a cover.
  int at(const Poset& p, std::size_t lower, std::size_t upper) const;
};

/// Solves the two sum conditions over GF(2) (sign = (−1)^b). Free variables
/// are set to 0 in edge order. Throws NoAssignment if the system is
/// inconsistent or the poset is not shaped like a regular CW face poset.
IncidenceAssignment assign_incidence(const Poset& p);

/// Alternating orientation of a simplicial face poset: removing the i-th
/// smallest vertex of σ gives sign (−1)^i. Throws NotSimplicial.
IncidenceAssignment simplicial_incidence(const Poset& p);

/// Violations of the two sum conditions; empty when the assignment is valid.
std::vector<std::string> check_incidence(const Poset& p, const IncidenceAssignment& inc);

/// Cellular chain complex: dims[n] = #height-n elements and boundaries[n] is
/// ∂_{n+1} with rows and columns in element order.
ChainComplex boundary_matrices(const Poset& p, const IncidenceAssignment& inc);

}  // namespace posetpi
