#include <doctest.h>

#include "hallforge/catalog.hpp"
#include "hallforge/errors.hpp"

using namespace hallforge;

TEST_CASE("catalog entries are indecomposable and pairwise distinct") {
  for (const std::string alg : {"kronecker", "kronecker-dup", "d4tilde", "d4tilde-dup"}) {
    for (std::uint64_t q : {2, 3}) {
      auto f = Field::of_order(q);
      std::vector<Module> ms;
      for (const auto& b : catalog(alg)) {
        Module m = instantiate(b, alg, f);
        INFO(alg << " " << b << " over GF(" << q << ")");
        CHECK(is_indecomposable(m));
        for (const auto& o : ms) CHECK_FALSE(is_isomorphic(m, o));
        ms.push_back(m);
      }
    }
  }
}

TEST_CASE("projective-injective vertices") {
  CHECK(projective_injective_vertices("kronecker-dup") == std::vector<std::string>{"1'", "2'"});
  CHECK(projective_injective_vertices("d4tilde-dup").size() == 5);
  CHECK(projective_injective_vertices("kronecker").empty());
  CHECK(simple_blueprints("kronecker-dup") == std::vector<std::string>{"S1", "S2", "S1'", "S2'"});
}
