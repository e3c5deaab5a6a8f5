#include "doctest.h"
#include "properties.hpp"

using namespace testing;

namespace {

const Settings& settings() {
  static const Settings s;
  return s;
}

void check(const PropertyStats& s) {
  CHECK(s.instances >= 100);
  CHECK_MESSAGE(s.failures == 0, summary(s));
}

}  // namespace

TEST_CASE("vec θ is left exact on Noy kernels") { check(left_exactness(settings(), 11, 120)); }
TEST_CASE("θ_Δ is long exact at cones") { check(cone_long_exactness(settings(), 12, 120)); }
TEST_CASE("Künneth dimension identity") { check(kunneth(settings(), 13, 120)); }
TEST_CASE("θ_Δ is homotopy invariant") { check(homotopy_invariance(settings(), 14, 120)); }
TEST_CASE("tensor products of complexes square to zero") { check(koszul_signs(settings(), 15, 120)); }
