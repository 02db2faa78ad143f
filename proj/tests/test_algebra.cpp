#include <doctest.h>

#include "hallforge/errors.hpp"
#include "hallforge/module.hpp"

using namespace hallforge;

namespace {

std::size_t count_arrows(const Algebra& a, const std::string& s, const std::string& t) {
  for (const auto& arr : gabriel_quiver(a)) {
    if (a.vertex_label(arr.source) == s && a.vertex_label(arr.target) == t) return arr.multiplicity;
  }
  return 0;
}

}  // namespace

TEST_CASE("path algebra dimensions") {
  auto f = Field::make(2, 1);
  CHECK(path_algebra(Quiver{{"1"}, {}}, f)->dim() == 1);
  CHECK(builtin_algebra("kronecker", f)->dim() == 4);
  CHECK(builtin_algebra("d4tilde", f)->dim() == 9);
  CHECK_THROWS_AS(path_algebra(Quiver{{"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}}}, f), InvalidArgument);
  // A3 linear quiver 1 -> 2 -> 3 has 6 paths
  CHECK(path_algebra(Quiver{{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}}, f)->dim() == 6);
}

TEST_CASE("duplicated algebras") {
  for (std::uint64_t q : {2, 3}) {
    auto f = Field::of_order(q);
    auto k = builtin_algebra("kronecker-dup", f);
    CHECK(k->dim() == 12);
    CHECK(k->num_vertices() == 4);
    CHECK(validate(*k).ok);
    auto d = builtin_algebra("d4tilde-dup", f);
    CHECK(d->dim() == 27);
    CHECK(d->num_vertices() == 10);
    CHECK(validate(*d).ok);
    CHECK(k->tame()->delta == std::vector<int>{1, 1});
    CHECK(k->tame()->m == 2);
    CHECK(d->tame()->delta == std::vector<int>{2, 1, 1, 1, 1});
    CHECK(d->tame()->m == 6);
  }
}

TEST_CASE("both corners of the duplicated algebra are copies of A") {
  auto f = Field::make(3, 1);
  auto a = builtin_algebra("d4tilde", f);
  auto d = builtin_algebra("d4tilde-dup", f);
  const std::size_t n = a->dim();
  for (std::size_t copy = 0; copy < 2; ++copy) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& big = d->mult(copy * n + i, copy * n + j);
        const auto& small = a->mult(i, j);
        REQUIRE(big.size() == small.size());
        for (std::size_t t = 0; t < big.size(); ++t) {
          CHECK(big[t].k == copy * n + small[t].k);
          CHECK(big[t].c == small[t].c);
        }
      }
    }
  }
}

TEST_CASE("validation localizes a corrupted structure constant") {
  auto f = Field::make(3, 1);
  auto a3 = path_algebra(Quiver{{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}}, f);
  CHECK(validate(*a3).ok);
  Algebra::Spec s = a3->spec();
  const std::size_t n = a3->dim();
  std::size_t e3 = 0, ba = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.labels[i] == "e3") e3 = i;
    if (s.labels[i] == "b.a") ba = i;
  }
  REQUIRE(s.mult[e3 * n + ba].size() == 1);
  s.mult[e3 * n + ba][0].c = 2;
  auto r = validate_spec(f, s);
  CHECK_FALSE(r.ok);
  bool localized = false;
  for (const auto& msg : r.failures) localized = localized || msg == "associativity fails on (e3, b, a)";
  CHECK(localized);
}

TEST_CASE("opposite algebra") {
  auto f = Field::make(2, 1);
  auto one = path_algebra(Quiver{{"1"}, {}}, f);
  CHECK(opposite(one)->spec().mult == one->spec().mult);
  auto k = builtin_algebra("kronecker", f);
  auto rev = path_algebra(Quiver{{"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}}}, f);
  auto op = opposite(k);
  REQUIRE(op->dim() == rev->dim());
  for (std::size_t i = 0; i < op->dim(); ++i) {
    for (std::size_t j = 0; j < op->dim(); ++j) {
      const auto& x = op->mult(i, j);
      const auto& y = rev->mult(i, j);
      REQUIRE(x.size() == y.size());
      for (std::size_t t = 0; t < x.size(); ++t) CHECK(x[t].k == y[t].k);
    }
  }
  auto kd = builtin_algebra("kronecker-dup", f);
  CHECK(opposite(opposite(kd))->spec().mult == kd->spec().mult);
  CHECK(validate(*opposite(kd)).ok);
}

TEST_CASE("Gabriel quivers of the builtins") {
  auto f = Field::make(2, 1);
  auto k = builtin_algebra("kronecker-dup", f);
  CHECK(count_arrows(*k, "2", "1") == 2);
  CHECK(count_arrows(*k, "1'", "2") == 2);
  CHECK(count_arrows(*k, "2'", "1'") == 2);
  CHECK(k->num_generators() == 6);
  auto d = builtin_algebra("d4tilde-dup", f);
  for (int i = 2; i <= 5; ++i) {
    const auto v = std::to_string(i);
    CHECK(count_arrows(*d, v, "1") == 1);
    CHECK(count_arrows(*d, "1'", v) == 1);
    CHECK(count_arrows(*d, v + "'", "1'") == 1);
  }
  const auto dot = gabriel_dot(*d);
  std::size_t vertices = 0;
  for (const auto& v : d->vertex_labels()) vertices += dot.find("\"" + v + "\";") != std::string::npos;
  CHECK(vertices == 10);
}
