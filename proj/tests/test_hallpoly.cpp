#include <doctest.h>

#include "hallforge/errors.hpp"
#include "hallforge/hallpoly.hpp"

using namespace hallforge;

TEST_CASE("integer polynomial fitting") {
  // 2x^2 - 3x + 1
  auto f = [](std::uint64_t q) { return BigInt(2 * q * q) - BigInt(3 * q) + 1; };
  std::vector<Sample> pts, hold{{11, f(11)}};
  for (std::uint64_t q : {2, 3, 5, 7, 9}) pts.emplace_back(q, f(q));
  auto r = fit_integer_polynomial(pts, hold, 1);
  REQUIRE(r.ok);
  CHECK(r.poly.to_string() == "2x^2 - 3x + 1");
  CHECK(r.points_used == 4);
  CHECK(r.poly.shifted_at_one() == std::vector<BigInt>{0, 1, 2});

  // a cubic cannot stabilise on three points
  std::vector<Sample> cubic;
  for (std::uint64_t q : {2, 3, 5}) cubic.emplace_back(q, BigInt(q * q * q));
  CHECK_FALSE(fit_integer_polynomial(cubic, {}, 1).ok);

  // x/2 + 1/2 has no integer coefficients
  std::vector<Sample> half{{3, 2}, {5, 3}, {7, 4}};
  auto h = fit_integer_polynomial(half, {}, 1);
  CHECK_FALSE(h.ok);
  CHECK(h.message.find("non-integer") != std::string::npos);

  // wrong hold-out value
  auto w = fit_integer_polynomial(pts, {{11, f(11) + 1}}, 1);
  CHECK_FALSE(w.ok);
}

TEST_CASE("leading zero samples do not fix the degree") {
  // (q-1)^3 (q-2)(q-3) / 6 vanishes at 2 and 3
  auto f = [](std::uint64_t q) {
    BigInt a = q - 1;
    return a * a * a * BigInt(q - 2) * BigInt(q - 3) / 6;
  };
  std::vector<Sample> pts;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8}) pts.emplace_back(q, f(q));
  auto r = fit_rational_polynomial(pts, {{9, f(9)}}, 1);
  REQUIRE(r.ok);
  CHECK(r.poly.c.size() == 6);
  CHECK(r.poly.eval(11) == Rational(f(11)));
  CHECK_FALSE(fit_rational_polynomial(pts, {}, 1).ok);
  CHECK_FALSE(fit_rational_polynomial(pts, {{9, f(9) + 1}}, 1).ok);
}

TEST_CASE("Hall polynomial of a square of simples") {
  auto g = interpolate("kronecker", "S1", "S1", "S1^2", {2, 3, 5}, {});
  REQUIRE(g.ok);
  CHECK(g.poly.to_string() == "x + 1");
  CHECK(g.poly.eval(7) == 8);
  CHECK(g.poly.eval(9) == 10);
  CHECK(g.lemma_case == "L5.1-2a");
  auto v = lemma51_check(g, Field::of_order(2));
  CHECK(v.holds);
  CHECK(v.value == 2);
}

TEST_CASE("Hall polynomials on the Kronecker quiver") {
  auto split = interpolate("kronecker", "S2", "S1", "S1+S2", {2, 3, 4, 5}, {7});
  REQUIRE(split.ok);
  CHECK(split.poly.to_string() == "1");
  CHECK(lemma51_check(split, Field::of_order(2)).holds);

  // a regular simple of dimension (1,1): g = 1, but (q - 1) does not divide it
  auto reg = interpolate("kronecker", "S2", "S1", "R0", {2, 3, 4, 5}, {7});
  REQUIRE(reg.ok);
  CHECK(reg.poly.to_string() == "1");
  auto v = lemma51_check(reg, Field::of_order(2));
  CHECK(v.case_name == "L5.1-1");
  CHECK(v.flagged);

  auto none = interpolate("kronecker", "S1", "S2", "R0", {2, 3, 4}, {5});
  REQUIRE(none.ok);
  CHECK(none.poly.c.empty());
}

TEST_CASE("conservativity and hom exponents") {
  auto h2 = parse_blueprint("H2", "kronecker");
  auto c = conservative_degrees({h2}, "kronecker", Field::of_order(2), 6);
  CHECK(c.residue_degrees == std::vector<std::size_t>{2});
  CHECK(c.allowed == std::vector<std::size_t>{1, 3, 5});

  auto g = interpolate("kronecker", "H2", "0", "H2", {2, 3, 4, 5, 7, 8}, {9});
  CHECK(g.skipped == std::vector<std::uint64_t>{4, 9});

  std::vector<FieldPtr> tower{Field::of_order(2), Field::of_order(4), Field::of_order(8)};
  CHECK(hom_exponent(parse_blueprint("P1'", "kronecker-dup"), parse_blueprint("S1'", "kronecker-dup"),
                     "kronecker-dup", tower) == 1);
  CHECK(hom_exponent(parse_blueprint("P1", "kronecker"), parse_blueprint("R0", "kronecker"), "kronecker", tower) ==
        1);
}
