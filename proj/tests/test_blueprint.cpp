#include <doctest.h>

#include "hallforge/blueprint.hpp"
#include "hallforge/errors.hpp"

using namespace hallforge;

TEST_CASE("parsing and printing") {
  for (const std::string s : {"S1", "P1'", "rad(P1')", "syz(-1,S1)", "S1+S1", "tau(S2)", "tau(-2,P1)", "(S1+S2)^2",
                              "socq(P2')", "ext(S2,S1)", "0"}) {
    CHECK(parse_blueprint(s, "kronecker-dup").to_string() == s);
  }
  CHECK(parse_blueprint("  S1 + S2 ", "kronecker-dup").to_string() == "S1+S2");
  CHECK(parse_blueprint("H2", "kronecker").to_string() == "H2");
  CHECK_THROWS_AS(parse_blueprint("S9", "kronecker"), InvalidArgument);
  CHECK_THROWS_AS(parse_blueprint("S1+", "kronecker"), InvalidArgument);
  CHECK_THROWS_AS(parse_blueprint("syz(S1)", "kronecker"), InvalidArgument);
  CHECK_THROWS_AS(parse_blueprint("syz(5,S1)", "kronecker"), InvalidArgument);
  CHECK_THROWS_AS(parse_blueprint("R0'", "kronecker"), InvalidArgument);
  CHECK_NOTHROW(parse_blueprint("R0'", "kronecker-dup"));
}

TEST_CASE("instantiation") {
  auto f5 = Field::of_order(5);
  CHECK(instantiate("S1", "kronecker", f5).dim() == 1);
  CHECK(instantiate("S1+S1", "kronecker-dup", f5).dim() == 2);
  CHECK(loewy_series(instantiate("rad(P1')", "kronecker-dup", f5)) == "22/1");
  CHECK(loewy_series(instantiate("socq(P2')", "kronecker-dup", f5)) == "2'/1'1'");
  CHECK(instantiate("syz(-1,S1)", "kronecker-dup", f5).dims() == std::vector<std::size_t>{0, 2, 1, 0});
  CHECK(instantiate("tau(-1,P1)", "kronecker", f5).dims() == std::vector<std::size_t>{3, 2});
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    auto f = Field::of_order(q);
    auto j = instantiate("J2", "kronecker", f);
    CHECK(is_indecomposable(j));
    CHECK(j.dims() == std::vector<std::size_t>{2, 2});
    auto t = instantiate("T6", "d4tilde-dup", f);
    CHECK(t.dims() == std::vector<std::size_t>{2, 1, 1, 1, 1, 0, 0, 0, 0, 0});
    CHECK(is_indecomposable(t));
    CHECK(instantiate("R0'", "kronecker-dup", f).dims() == std::vector<std::size_t>{0, 0, 1, 1});
  }
  CHECK_THROWS_AS(instantiate("ext(S1,S2)", "kronecker", f5), InvalidArgument);
  CHECK(local_end(instantiate("H2", "kronecker", Field::of_order(2))).residue_degree == 2);
}

TEST_CASE("tower coherence") {
  auto f2 = Field::of_order(2), f4 = Field::of_order(4), f8 = Field::of_order(8);
  for (const std::string s : {"P1'", "I2", "rad(P1')", "syz(-1,S2)", "R1", "J2", "tau(S2')"}) {
    auto b = parse_blueprint(s, "kronecker-dup");
    CHECK(tower_coherent(b, "kronecker-dup", f2, f4));
    CHECK(tower_coherent(b, "kronecker-dup", f2, f8));
  }
  CHECK(tower_coherent(parse_blueprint("T6", "d4tilde-dup"), "d4tilde-dup", f2, f4));
}
