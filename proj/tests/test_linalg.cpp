#include <doctest.h>

#include <random>
#include <set>

#include "hallforge/errors.hpp"
#include "hallforge/linalg.hpp"

using namespace hallforge;

namespace {

Mat random_mat(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  Mat m(f, r, c);
  std::uniform_int_distribution<Elem> d(0, f->q() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Gaussian binomial [n choose k]_q by the product formula.
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (std::uint64_t j = 0; j < n - i; ++j) a *= q;
    for (std::uint64_t j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("gauss examples") {
  auto f3 = Field::make(3, 1), f2 = Field::make(2, 1);
  auto g = gauss(Mat::identity(f3, 2));
  CHECK(g.rank == 2);
  CHECK(g.kernel.rows() == 0);

  auto z = gauss(Mat(f3, 3, 2));
  CHECK(z.rank == 0);
  CHECK(z.kernel.rows() == 2);

  const std::int64_t ones[] = {1, 1, 1, 1};
  auto o = gauss(Mat::from_ints(f2, 2, 2, ones));
  CHECK(o.rank == 1);
  REQUIRE(o.kernel.rows() == 1);
  CHECK(o.kernel.row_vec(0) == Vec{1, 1});
}

TEST_CASE("rank-nullity, rref idempotence and solving on random instances") {
  std::mt19937 rng(7);
  for (std::uint64_t q : {2, 3, 4}) {
    auto f = Field::of_order(q);
    for (int t = 0; t < 100; ++t) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      Mat m = random_mat(f, r, c, rng);
      auto g = gauss(m);
      CHECK(g.rank + g.kernel.rows() == c);
      CHECK((m * g.kernel.transpose()).is_zero());
      CHECK(gauss(g.rref).rref == g.rref);
      CHECK(g.image_basis.rows() == g.rank);

      Vec b(r);
      for (auto& x : b) x = static_cast<Elem>(rng() % q);
      auto image = Subspace::span(m.transpose());
      auto x = solve(m, b);
      CHECK(x.has_value() == image.contains(b));
      if (x) CHECK(m.apply(*x) == b);
    }
  }
}

TEST_CASE("inverse") {
  std::mt19937 rng(3);
  auto f = Field::make(5, 1);
  for (int t = 0; t < 50; ++t) {
    Mat m = random_mat(f, 4, 4, rng);
    auto inv = inverse(m);
    CHECK(inv.has_value() == (rank(m) == 4));
    if (inv) CHECK((m * *inv).is_identity());
  }
}

TEST_CASE("row reducer matches batch rref") {
  std::mt19937 rng(11);
  auto f = Field::make(3, 1);
  for (int t = 0; t < 50; ++t) {
    Mat m = random_mat(f, 6, 5, rng);
    RowReducer rr(f, 5);
    for (std::size_t i = 0; i < m.rows(); ++i) rr.add(m.row_vec(i));
    auto g = gauss(m);
    CHECK(rr.rank() == g.rank);
    CHECK(rr.rref() == g.rref.block(0, 0, g.rank, 5));
  }
}

TEST_CASE("subspace operations") {
  auto f2 = Field::make(2, 1);
  auto a = Subspace::span(f2, 2, {{1, 0}});
  auto b = Subspace::span(f2, 2, {{1, 1}});
  CHECK(subspace_intersect(a, a) == a);
  CHECK(subspace_sum(a, b).dim() == 2);
  CHECK(subspace_intersect(a, b).dim() == 0);
  auto full = Subspace::full(f2, 2);
  CHECK(full.contains(a));
  CHECK(full.contains(Vec{1, 1}));
  CHECK_THROWS_AS(subspace_sum(a, Subspace::full(f2, 3)), InvalidArgument);

  std::mt19937 rng(5);
  for (std::uint64_t q : {2, 3, 4}) {
    auto f = Field::of_order(q);
    for (int t = 0; t < 100; ++t) {
      auto u = Subspace::span(random_mat(f, rng() % 4, 5, rng));
      auto v = Subspace::span(random_mat(f, rng() % 4, 5, rng));
      auto s = subspace_sum(u, v), i = subspace_intersect(u, v);
      CHECK(s.dim() + i.dim() == u.dim() + v.dim());
      CHECK(u.contains(i));
      CHECK(v.contains(i));
      CHECK(s.contains(u));
      Mat qm = u.quotient_map();
      CHECK(qm.rows() == 5 - u.dim());
      CHECK(rank(qm) == qm.rows());
      CHECK(Subspace::span(kernel(qm)) == u);
    }
  }
}

TEST_CASE("subspace enumeration counts match Gaussian binomials") {
  for (std::uint64_t q : {2, 3}) {
    auto f = Field::of_order(q);
    for (std::size_t n = 0; n <= 5; ++n) {
      for (std::size_t d = 0; d <= n + 1; ++d) {
        std::set<std::vector<Elem>> seen;
        std::size_t count = 0;
        std::vector<std::vector<Elem>> order;
        enumerate_subspaces(n, d, f, [&](const Subspace& s) {
          CHECK(s.dim() == d);
          seen.insert(s.basis().data());
          ++count;
        });
        CHECK(count == seen.size());
        CHECK(count == (d > n ? 0 : gaussian_binomial(n, d, q)));
      }
    }
  }
  auto f2 = Field::make(2, 1);
  std::size_t lines = 0;
  enumerate_subspaces(2, 1, f2, [&](const Subspace&) { ++lines; });
  CHECK(lines == 3);
  std::size_t zero = 0;
  enumerate_subspaces(3, 0, f2, [&](const Subspace& s) { zero += s.dim() == 0; });
  CHECK(zero == 1);
  CHECK_THROWS_AS(enumerate_subspaces(30, 1, f2, [](const Subspace&) {}), CapExceeded);
}
