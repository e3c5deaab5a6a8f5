#include "doctest.h"
#include "hk/homotopy.hpp"
#include "hk/presentations.hpp"
#include "module_oracle.hpp"

using namespace hk;

// tests/oracles/module_homs.py: dim Hom_R(ker f, ker g) for R = k[x]/x^2, objects in this order.
TEST_CASE("Noy homs over the dual numbers match module homs between kernels") {
  const std::vector<std::vector<std::size_t>> expected{
      {2, 1, 4, 1, 3, 2, 0, 2, 2}, {1, 1, 2, 1, 2, 2, 0, 1, 1}, {4, 2, 8, 2, 6, 4, 0, 4, 4},
      {1, 1, 2, 1, 2, 2, 0, 1, 1}, {3, 2, 6, 2, 5, 4, 0, 3, 3}, {2, 2, 4, 2, 4, 4, 0, 2, 2},
      {0, 0, 0, 0, 0, 0, 0, 0, 0}, {2, 1, 4, 1, 3, 2, 0, 2, 2}, {2, 1, 4, 1, 3, 2, 0, 2, 2}};
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
    auto c = dual_numbers(f);
    auto objs = testing::module_test_objects(*c);
    REQUIRE(objs.size() == expected.size());
    for (std::size_t i = 0; i < objs.size(); ++i)
      for (std::size_t j = 0; j < objs.size(); ++j) {
        std::size_t noy = noy_hom(objs[i].morphism, objs[j].morphism).space.dim();
        CHECK_MESSAGE(noy == expected[i][j], objs[i].name << " -> " << objs[j].name << " over " << f.name());
        CHECK(testing::module_hom_dim(objs[i].matrix, objs[j].matrix, f) == expected[i][j]);
      }
  }
}
