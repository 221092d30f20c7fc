#include "property_checks.hpp"

#include <doctest.h>

using namespace posetpi::test;

namespace {

void require_none(const Failures& f) {
  for (const auto& msg : f) FAIL_CHECK(msg);
  CHECK(f.empty());
}

}  // namespace

TEST_CASE("boundary of boundary vanishes") { require_none(check_boundary_squares()); }

TEST_CASE("Smith normal form identities") { require_none(check_random_smith(200)); }

TEST_CASE("cover fibers and deck transformations") { require_none(check_cover_invariants()); }

TEST_CASE("kernel rank equals H2 of the cover") { require_none(check_kernel_vs_cover()); }

TEST_CASE("gauge transforms conjugate closed-path weights") { require_none(check_gauge_invariance(100)); }

TEST_CASE("presentation digraph degrees") { require_none(check_digraph_degrees(100)); }
