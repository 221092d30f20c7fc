#pragma once

#include "posetpi/io.hpp"
#include "posetpi/poset.hpp"
#include "posetpi/presentation.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace posetpi::test {

std::string fixture_path(const std::string& name);
Poset fixture(const std::string& name);
SimplicialComplex fixture_complex(const std::string& name);

// rank over Q by plain Gaussian elimination on rationals
std::size_t rational_rank(const IntMatrix& m);
// rank over GF(p)
std::size_t rank_mod(const IntMatrix& m, std::int64_t p);

// Homology of a simplicial complex from its own boundary matrices, without
// the library's incidence or Smith code. betti[n] over Q, mod2[n] and mod3[n]
// are dimensions over GF(2) and GF(3).
struct HomologyOracle {
  std::vector<std::size_t> betti;
  std::vector<std::size_t> mod2;
  std::vector<std::size_t> mod3;
};
HomologyOracle simplicial_homology_oracle(const SimplicialComplex& sc);

// Groups predicted by the oracle, assuming torsion of prime order 2 or 3 only.
std::vector<HomologyGroup> oracle_groups(const HomologyOracle& o);

// The twelve equations of the worked RP² example: rows (q,r,s,t,u,v) x h,
// columns (w,x,y,z) x g, with h and g in Z/2 = {0, 1}.
IntMatrix worked_rp2_system();

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi);
GroupPresentation random_presentation(std::mt19937_64& rng, std::size_t generators, std::size_t relators,
                                      std::size_t max_length);

// subdivided circle with n vertices and n edges: "v0..", "e0.."
Poset subdivided_circle(std::size_t n, const std::string& prefix = "");
Poset point(const std::string& id = "pt");

}  // namespace posetpi::test
