#include <doctest.h>

#include "hallforge/catalog.hpp"
#include "hallforge/errors.hpp"
#include "hallforge/liecomp.hpp"

using namespace hallforge;

TEST_CASE("degenerate products") {
  DegenContext k("kronecker");
  auto s1 = k.u("S1"), s2 = k.u("S2");
  CHECK(k.mul(k.one(), s1) == s1);
  CHECK(k.mul(s2, k.one()) == s2);
  auto sq = k.mul(s2, s2);
  CHECK(sq.to_string() == "2 u[S2^2]");
  CHECK(sq.provenance.at("S2^2").to_string() == "x + 1");
  CHECK(k.mul(s1, sq).to_string() == "2 u[S1+S2^2]");
  CHECK(k.mul(s1, k.u("S2^2")).to_string() == "u[S1+S2^2]");
}

TEST_CASE("brackets of simples") {
  DegenContext k("kronecker");
  CHECK(k.bracket("S1", "S1").is_zero());
  auto b = k.bracket("S2", "S1");
  CHECK(b.to_string() == "u[R0] + u[Rinf]");
  // split terms cancel exactly, not only at x = 1
  CHECK(b.provenance.count("S1+S2") == 0);
  // the third rational point and the irrational ones do not exist at (1,1);
  // over GF(q) the bundle has q - 1 members
  REQUIRE(b.keys.count("B(1,1)"));
  CHECK(b.keys.at("B(1,1)").members.to_string() == "x - 1");
  CHECK(b.provenance.at("B(1,1)").to_string() == "x - 1");
  for (auto q : k.fields()) {
    // q + 1 indecomposables of dimension (1,1) appear in the exact bracket
    CHECK(b.lift.at(q).size() == q + 1);
  }
  CHECK(k.bracket("S1", "S2").terms.at("R0") == -1);

  DegenContext d("kronecker-dup");
  CHECK(d.bracket("S1", "S2'").is_zero());
  CHECK(d.bracket("S1'", "rad(P1')").to_string() == "u[P1']");
}

TEST_CASE("the nested commutator for P1'") {
  DegenContext d("kronecker-dup");
  auto inner = d.bracket(d.u("S1"), d.mul(d.u("S2"), d.u("S2")));
  CHECK(inner.terms.at("rad(P1')") == -2);
  auto outer = d.bracket(d.u("S1'"), inner);
  CHECK(outer.terms.at("P1'") == -2);
  CHECK(outer.provenance.at("P1'").to_string() == "-x - 1");
  CHECK_FALSE(outer == d.u("P1'"));
}

TEST_CASE("commutator identities for projective-injectives") {
  auto a = verify_skew_identity("kronecker-dup", "P1'", {2, 3});
  CHECK(a.branch == 'A');
  CHECK(a.factor == "22/1");
  CHECK(a.simple == "S1'");
  CHECK(a.ok());
  auto b = verify_skew_identity("kronecker-dup", "P2'", {2, 3});
  CHECK(b.branch == 'B');
  CHECK(b.factor == "2'/1'1'");
  CHECK(b.ok());
  auto c = verify_skew_identity("d4tilde-dup", "P3'", {2, 3});
  CHECK(c.branch == 'B');
  CHECK(c.factor == "3'/1'");
  CHECK(c.ok());
  for (const auto& v : projective_injective_vertices("d4tilde-dup"))
    CHECK(verify_skew_identity("d4tilde-dup", "P" + v, {2, 3}).ok());
  CHECK_THROWS_AS(verify_skew_identity("kronecker-dup", "S1", {2}), InvalidArgument);
}

TEST_CASE("skew commutator search") {
  auto leaf = iterated_skew_search("kronecker-dup", "S2'");
  REQUIRE(leaf.found);
  CHECK(leaf.expr->is_leaf());
  CHECK(leaf.expr->to_json() == "\"S_2'\"");

  auto thin = iterated_skew_search("d4tilde", "P2");
  REQUIRE(thin.found);
  CHECK(thin.expr->depth() == 1);
  CHECK(thin.expr->to_json() == "[\"1\",\"1\",\"S_2\",\"S_1\"]");

  // every word S1' S2 S2 S1 meets P1' in q + 1 flags
  auto p = iterated_skew_search("kronecker-dup", "P1'");
  CHECK_FALSE(p.found);
  CHECK(p.message.find("prime to 3") != std::string::npos);

  CHECK_THROWS_AS(iterated_skew_search("d4tilde-dup", "T6"), InvalidArgument);

  SkewSearchOptions tight;
  tight.max_products = 10;
  tight.max_words = 0;
  CHECK_THROWS_AS(iterated_skew_search("kronecker-dup", "P1'", tight), CapExceeded);
}

TEST_CASE("Lie axioms on small Kronecker classes") {
  DegenContext k("kronecker");
  auto r = lie_axiom_suite(k, {"S1", "S2", "R0", "P2"}, 4);
  for (const auto& p : r.pairs) {
    INFO(p.x << "," << p.y << ": " << p.bracket << " " << p.error);
    CHECK(p.error.empty());
    CHECK(p.antisymmetric);
    CHECK(p.closed);
  }
  std::size_t computed = 0;
  for (const auto& t : r.triples) {
    INFO(t.x << "," << t.y << "," << t.z << ": " << t.error);
    if (!t.computed) continue;
    ++computed;
    CHECK(t.jacobi);
  }
  CHECK(computed > 0);
  CHECK(r.ok());
}
