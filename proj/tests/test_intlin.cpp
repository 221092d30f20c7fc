#include "support.hpp"

#include "posetpi/error.hpp"
#include "posetpi/incidence.hpp"
#include "posetpi/smith.hpp"

#include <doctest.h>

#include <stop_token>

using namespace posetpi;
using namespace posetpi::test;

namespace {

bool is_unimodular(const IntMatrix& m) {
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

bool is_smith_diagonal(const IntMatrix& d) {
  Integer prev = 1;
  bool zero_seen = false;
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (r != c && d(r, c) != 0) return false;
      if (r != c) continue;
      const Integer& x = d(r, c);
      if (x < 0) return false;
      if (x == 0) {
        zero_seen = true;
        continue;
      }
      if (zero_seen || x % prev != 0) return false;
      prev = x;
    }
  return true;
}

}  // namespace

TEST_CASE("smith_normal_form examples") {
  const SmithForm two = smith_normal_form(IntMatrix::from_rows({{2}}));
  CHECK(two.D == IntMatrix::from_rows({{2}}));
  const IntMatrix e = IntMatrix::from_rows({{1, 0}, {0, 0}});
  CHECK(smith_normal_form(e).D == e);
  CHECK(smith_normal_form(e).rank == 1);

  const IntMatrix m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const SmithForm s = smith_normal_form(m);
  CHECK(s.invariant_factors() == std::vector<Integer>{2, 6, 12});
  CHECK(s.U * m * s.V == s.D);
}

TEST_CASE("smith_normal_form of the RP² boundary detects Z/2") {
  const Poset rp2 = fixture("rp2_6vertex");
  const ChainComplex cc = boundary_matrices(rp2, assign_incidence(rp2));
  const auto f = invariant_factors(cc.boundaries[1]);
  std::size_t twos = 0;
  for (const auto& x : f) {
    CHECK((x == 1 || x == 2));
    twos += x == 2;
  }
  CHECK(twos == 1);
}

TEST_CASE("SNF identities on random matrices") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = random_matrix(rng, dim(rng), dim(rng), -5, 5);
    const SmithForm s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    CHECK(is_smith_diagonal(s.D));
    CHECK(s.rank == rational_rank(m));
    CHECK(invariant_factors(m) == s.invariant_factors());
  }
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(IntMatrix(2, 2)).size() == 2);
  CHECK(kernel_basis(IntMatrix::identity(3)).empty());

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = random_matrix(rng, 3, 5, -3, 3);
    const auto basis = kernel_basis(m);
    CHECK(basis.size() == 5 - rational_rank(m));
    for (const auto& v : basis)
      for (const auto& x : multiply(m, v)) CHECK(x == 0);
  }
}

TEST_CASE("kernel of the worked RP² system") {
  const IntMatrix m = worked_rp2_system();
  CHECK(rational_rank(m) == 7);
  const auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  std::vector<Integer> v = basis[0];
  if (v[0] < 0)
    for (auto& x : v) x = -x;
  // w - γw - x + γx + y - γy - z + γz
  CHECK(v == std::vector<Integer>{1, -1, -1, 1, 1, -1, -1, 1});
}

TEST_CASE("homology of fixtures against the simplicial oracle") {
  for (const char* name : {"s2", "rp2_6vertex", "t2_7vertex", "genus2"}) {
    const Poset p = fixture(name);
    const auto lib = homology(boundary_matrices(p, assign_incidence(p)));
    const auto oracle = oracle_groups(simplicial_homology_oracle(fixture_complex(name)));
    CHECK_MESSAGE(lib == oracle, name);
  }
  const Poset s2 = fixture("s2");
  CHECK(homology(boundary_matrices(s2, assign_incidence(s2))) ==
        std::vector<HomologyGroup>{{1, {}}, {0, {}}, {1, {}}});
  const Poset rp2 = fixture("rp2_6vertex");
  CHECK(homology(boundary_matrices(rp2, assign_incidence(rp2))) ==
        std::vector<HomologyGroup>{{1, {}}, {0, {Integer(2)}}, {0, {}}});
  const Poset t2 = fixture("t2_7vertex");
  CHECK(homology(boundary_matrices(t2, assign_incidence(t2))) ==
        std::vector<HomologyGroup>{{1, {}}, {2, {}}, {1, {}}});
}

TEST_CASE("homology rejects non-complexes") {
  ChainComplex bad{{1, 1, 1}, {IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})}};
  CHECK_THROWS_AS(homology(bad), Error);
  ChainComplex shape{{2, 1}, {IntMatrix(1, 1)}};
  CHECK_THROWS_AS(homology(shape), Error);
}

TEST_CASE("HomologyGroup formatting") {
  CHECK(HomologyGroup{}.to_string() == "0");
  CHECK(HomologyGroup{1, {}}.to_string() == "Z");
  CHECK(HomologyGroup{2, {Integer(2)}}.to_string() == "Z^2 + Z/2");
  CHECK(cokernel_of_rows(IntMatrix::from_rows({{2, 0}})) == HomologyGroup{1, {Integer(2)}});
}

TEST_CASE("determinant and products") {
  CHECK(determinant(IntMatrix::from_rows({{2, 1}, {7, 4}})) == 1);
  CHECK(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK_THROWS_AS(IntMatrix(2, 3) * IntMatrix(2, 3), Error);
  const IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(a * IntMatrix::identity(2) == a);
  CHECK(a.transposed().transposed() == a);
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix a = random_matrix(rng, 40, 70, -9, 9);
    const IntMatrix b = random_matrix(rng, 70, 30, -9, 9);
    CHECK(kernels::serial::multiply(a, b) == kernels::parallel::multiply(a, b));

    IntMatrix s = a, p = a;
    std::vector<kernels::Update> ups;
    for (std::size_t r = 1; r < a.rows(); ++r) ups.push_back({r, Integer(static_cast<long>(r % 7) - 3)});
    kernels::serial::subtract_row_multiples(s, 0, ups, 2);
    kernels::parallel::subtract_row_multiples(p, 0, ups, 2);
    CHECK(s == p);

    IntMatrix sc = a, pc = a;
    std::vector<kernels::Update> cups;
    for (std::size_t c = 1; c < a.cols(); ++c) cups.push_back({c, Integer(static_cast<long>(c % 5) - 2)});
    kernels::serial::subtract_col_multiples(sc, 0, cups, 0);
    kernels::parallel::subtract_col_multiples(pc, 0, cups, 0);
    CHECK(sc == pc);
  }
  const IntMatrix m = random_matrix(rng, 60, 60, -4, 4);
  const SmithForm s = smith_normal_form(m, Exec::Serial);
  const SmithForm p = smith_normal_form(m, Exec::Parallel);
  CHECK(s.D == p.D);
  CHECK(s.U == p.U);
  CHECK(s.V == p.V);
}

TEST_CASE("cancellation") {
  std::stop_source src;
  src.request_stop();
  std::mt19937_64 rng(1);
  try {
    smith_normal_form(random_matrix(rng, 5, 5, -3, 3), Exec::Serial, src.get_token());
    FAIL("expected Cancelled");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Cancelled);
  }
}
