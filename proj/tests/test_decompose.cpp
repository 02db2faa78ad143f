#include <doctest.h>

#include "hallforge/decompose.hpp"
#include "hallforge/errors.hpp"

using namespace hallforge;

namespace {

Module S(const AlgebraPtr& a, const std::string& v) { return simple_module(a, a->vertex_index(v)); }
Module P(const AlgebraPtr& a, const std::string& v) { return projective_module(a, a->vertex_index(v)); }

// Kronecker representation V_2 -> V_1 given by the two arrow matrices
Module kron(const AlgebraPtr& a, std::size_t d1, std::size_t d2, std::vector<std::int64_t> x, std::vector<std::int64_t> y) {
  auto f = a->field();
  return Module(a, {d1, d2}, {Mat::from_ints(f, d1, d2, x), Mat::from_ints(f, d1, d2, y)});
}

// |Aut m| by counting bijective endomorphisms directly
std::uint64_t count_automorphisms(const Module& m) {
  const auto basis = hom_space(m, m);
  const Field& F = *m.field();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) total *= F.q();
  std::uint64_t count = 0;
  std::vector<Elem> c(basis.size());
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t t = code;
    for (auto& x : c) {
      x = static_cast<Elem>(t % F.q());
      t /= F.q();
    }
    count += linear_combination(m, m, basis, c).is_bijective();
  }
  return count;
}

}  // namespace

TEST_CASE("decomposition of direct sums") {
  for (std::uint64_t q : {2, 3, 4}) {
    auto f = Field::of_order(q);
    auto k = builtin_algebra("kronecker-dup", f);
    auto p = P(k, "1'");
    auto d = decompose(direct_sum(p, p));
    REQUIRE(d.summands.size() == 1);
    CHECK(d.summands[0].multiplicity == 2);
    CHECK(d.num_pieces() == 2);
    CHECK(d.witness.is_bijective());

    auto s = decompose(direct_sum(S(k, "1"), S(k, "2")));
    REQUIRE(s.summands.size() == 2);
    for (const auto& x : s.summands) {
      CHECK(x.multiplicity == 1);
      CHECK(x.module.dim() == 1);
    }
    CHECK(is_indecomposable(p));
    CHECK(local_end(p).residue_degree == 1);
    CHECK_FALSE(is_indecomposable(Module::zero(k)));
    CHECK_THROWS_AS(local_end(direct_sum(p, p)), InvalidArgument);
  }
}

TEST_CASE("decomposition of a mixed sum is stable under the seed") {
  auto f = Field::of_order(3);
  auto k = builtin_algebra("kronecker-dup", f);
  auto m = direct_sum({P(k, "1'"), S(k, "2"), P(k, "2'"), S(k, "2"), P(k, "1'")});
  for (std::uint64_t seed : {0u, 1u, 17u}) {
    auto d = decompose(m, seed);
    CHECK(d.num_pieces() == 5);
    CHECK(d.summands.size() == 3);
    std::size_t total = 0;
    for (const auto& s : d.summands) total += s.multiplicity * s.module.dim();
    CHECK(total == m.dim());
    CHECK(d.witness.is_bijective());
    CHECK(is_homomorphism(direct_sum(d.pieces), m, d.witness));
  }
}

TEST_CASE("Kronecker modules of dimension (1,1)") {
  auto f = Field::of_order(3);
  auto a = builtin_algebra("kronecker", f);
  auto x = kron(a, 1, 1, {1}, {0});
  auto y = kron(a, 1, 1, {0}, {1});
  auto z = kron(a, 1, 1, {2}, {2});
  auto w = kron(a, 1, 1, {1}, {1});
  CHECK(is_indecomposable(x));
  CHECK_FALSE(is_isomorphic(x, y));
  CHECK(is_isomorphic(z, w));
  CHECK_FALSE(is_isomorphic(direct_sum(x, x), direct_sum(x, y)));
  CHECK(is_isomorphic(direct_sum(x, y), direct_sum(y, x)));
  auto d = decompose(kron(a, 1, 1, {0}, {0}));
  CHECK(d.num_pieces() == 2);
}

TEST_CASE("automorphism group orders") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    auto f = Field::of_order(q);
    auto k = builtin_algebra("kronecker-dup", f);
    auto s = S(k, "1");
    CHECK(aut_order(s) == q - 1);
    CHECK(aut_order(direct_sum(s, s)) == BigInt((q * q - 1) * (q * q - q)));
    CHECK(aut_order(Module::zero(k)) == 1);
    CHECK(gl_order(0, q) == 1);
  }
  for (std::uint64_t q : {2, 3}) {
    auto f = Field::of_order(q);
    auto k = builtin_algebra("kronecker-dup", f);
    auto a = builtin_algebra("kronecker", f);
    std::vector<Module> ms = {P(k, "1'"), direct_sum(P(k, "1'"), S(k, "1")), direct_sum(S(k, "2"), P(k, "2'")),
                              direct_sum(kron(a, 1, 1, {1}, {0}), kron(a, 1, 1, {1}, {1})),
                              direct_sum(kron(a, 1, 1, {1}, {0}), kron(a, 1, 1, {1}, {0})),
                              direct_sum(kron(a, 1, 1, {1}, {0}), S(a, "1"))};
    for (const auto& m : ms) CHECK(aut_order(m) == count_automorphisms(m));
  }
}

TEST_CASE("an indecomposable with residue field of degree two") {
  auto f2 = Field::of_order(2);
  auto a = builtin_algebra("kronecker", f2);
  // V_2 = V_1 = F^2, arrows I and the companion matrix of x^2 + x + 1
  auto h = kron(a, 2, 2, {1, 0, 0, 1}, {0, 1, 1, 1});
  REQUIRE(is_indecomposable(h));
  auto le = local_end(h);
  CHECK(le.end_dim == 2);
  CHECK(le.rad_dim == 0);
  CHECK(le.residue_degree == 2);
  CHECK(aut_order(h) == 3);
  CHECK(count_automorphisms(h) == 3);

  auto f4 = Field::of_order(4);
  auto a4 = builtin_algebra("kronecker", f4);
  auto h4 = base_change(h, embed(f2, f4), a4);
  auto d = decompose(h4);
  REQUIRE(d.num_pieces() == 2);
  CHECK(d.summands.size() == 2);
  CHECK_FALSE(is_isomorphic(d.pieces[0], d.pieces[1]));

  // a tube module of length two over the same point: End = GF(4)[t]/t^2
  auto h2 = kron(a, 4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1},
                 {0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1});
  REQUIRE(h2.satisfies_relations());
  auto l2 = local_end(h2);
  CHECK(l2.end_dim == 4);
  CHECK(l2.residue_degree == 2);
  CHECK(l2.rad_dim == 2);
  CHECK(aut_order(h2) == count_automorphisms(h2));
}
