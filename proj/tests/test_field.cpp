#include <doctest.h>

#include <set>

#include "hallforge/errors.hpp"
#include "hallforge/field.hpp"

using namespace hallforge;

namespace {

// Schoolbook product of coordinate vectors reduced by the modulus, used as an
// oracle against the table arithmetic.
std::vector<std::uint32_t> naive_mul(const Field& f, std::vector<std::uint32_t> a, std::vector<std::uint32_t> b) {
  const auto p = f.p();
  const auto r = f.r();
  std::vector<std::uint64_t> prod(2 * r, 0);
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  const auto& m = f.modulus();
  for (std::size_t d = 2 * r; d-- > r;) {
    const auto lead = prod[d];
    if (lead == 0) continue;
    for (std::uint32_t i = 0; i <= r; ++i) prod[d - r + i] = (prod[d - r + i] + (p - lead) * m[i]) % p;
  }
  return {prod.begin(), prod.begin() + r};
}

}  // namespace

TEST_CASE("moduli of small fields") {
  CHECK(Field::make(2, 1)->modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK(Field::make(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(Field::make(3, 2)->q() == 9);
  CHECK(Field::make(2, 2) == Field::make(2, 2));
}

TEST_CASE("quadratic modulus over GF(2) is the only irreducible quadratic") {
  // x^2, x^2+1 = (x+1)^2, x^2+x = x(x+1) are reducible; x^2+x+1 has no root.
  auto f = Field::make(2, 2);
  const auto& m = f->modulus();
  for (std::uint32_t x = 0; x < 2; ++x) CHECK((m[0] + m[1] * x + m[2] * x * x) % 2 == 1);
}

TEST_CASE("prime field arithmetic") {
  auto f = Field::make(3, 1);
  CHECK(f->add(2, 2) == 1);
  CHECK(f->inv(1) == 1);
  CHECK(f->mul(2, 2) == 1);
  CHECK_THROWS_AS(f->inv(0), InvalidArgument);
  CHECK_THROWS_AS(Field::make(4, 1), InvalidArgument);
  CHECK_THROWS_AS(Field::make(2, 20), CapExceeded);
}

TEST_CASE("generator squares to generator plus one in GF(4)") {
  auto f = Field::make(2, 2);
  const Elem g = f->generator();
  CHECK(f->mul(g, g) == f->add(g, 1));
  FieldElem a(f, g);
  CHECK(a * a == a + FieldElem(f, 1));
}

TEST_CASE("table arithmetic agrees with schoolbook arithmetic") {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {7, 1}}) {
    auto f = Field::make(p, r);
    for (Elem a = 0; a < f->q(); ++a) {
      for (Elem b = 0; b < f->q(); ++b) {
        CHECK(f->coords(f->mul(a, b)) == naive_mul(*f, f->coords(a), f->coords(b)));
        auto ca = f->coords(a), cb = f->coords(b);
        for (std::uint32_t i = 0; i < r; ++i) ca[i] = (ca[i] + cb[i]) % p;
        CHECK(f->add(a, b) == f->from_coords(ca));
      }
    }
  }
}

TEST_CASE("multiplicative group order and additive inverses") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49, 64, 81, 125, 128, 243, 256}) {
    auto f = Field::of_order(q);
    REQUIRE(f->q() == q);
    for (Elem a = 1; a < q; ++a) CHECK(f->pow(a, q - 1) == 1);
    for (Elem a = 0; a < q; ++a) CHECK(f->add(a, f->neg(a)) == 0);
    for (Elem a = 1; a < q; ++a) CHECK(f->mul(a, f->inv(a)) == 1);
  }
}

TEST_CASE("arith dispatch and owner checks") {
  auto f4 = Field::make(2, 2);
  auto f3 = Field::make(3, 1);
  FieldElem a(f4, 2), b(f4, 3);
  CHECK(arith(a, b, ArithOp::add) == a + b);
  CHECK(arith(a, b, ArithOp::mul) == a * b);
  CHECK(arith(a, b, ArithOp::inv) * a == FieldElem(f4, 1));
  CHECK(arith(a, b, ArithOp::neg) + a == FieldElem(f4, 0));
  CHECK_THROWS_AS(a + FieldElem(f3, 1), InvalidArgument);
  CHECK_THROWS_AS(FieldElem(f4, 0).inverse(), InvalidArgument);
}

TEST_CASE("embeddings") {
  auto f2 = Field::make(2, 1), f4 = Field::make(2, 2), f8 = Field::make(2, 3), f16 = Field::make(2, 4);
  auto e = embed(f2, f4);
  CHECK(e(0) == 0);
  CHECK(e(1) == 1);
  CHECK_THROWS_AS(embed(f8, f4), InvalidArgument);
  CHECK_THROWS_AS(embed(Field::make(3, 1), f4), InvalidArgument);

  auto e416 = embed(f4, f16);
  const Elem x = e416(f4->generator());
  CHECK(f16->add(f16->add(f16->mul(x, x), x), 1) == 0);

  for (auto [src, dst] : std::vector<std::pair<FieldPtr, FieldPtr>>{{f2, f8}, {f4, f16}, {f2, f16}, {Field::make(3, 1), Field::make(3, 2)}}) {
    auto emb = embed(src, dst);
    std::set<Elem> image;
    for (Elem a = 0; a < src->q(); ++a) {
      image.insert(emb(a));
      for (Elem b = 0; b < src->q(); ++b) {
        CHECK(emb(src->mul(a, b)) == dst->mul(emb(a), emb(b)));
        CHECK(emb(src->add(a, b)) == dst->add(emb(a), emb(b)));
      }
    }
    CHECK(image.size() == src->q());
  }

  auto chain = embed(f2, f4).then(embed(f4, f16));
  auto direct = embed(f2, f16);
  for (Elem a = 0; a < 2; ++a) CHECK(chain(a) == direct(a));
}
