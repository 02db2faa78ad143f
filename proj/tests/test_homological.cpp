#include <doctest.h>

#include "hallforge/errors.hpp"
#include "hallforge/homological.hpp"

using namespace hallforge;

namespace {

Module S(const AlgebraPtr& a, const std::string& v) { return simple_module(a, a->vertex_index(v)); }
Module P(const AlgebraPtr& a, const std::string& v) { return projective_module(a, a->vertex_index(v)); }

// module with given dims; the generators from s to t (in order) get the listed 1x1 scalars
Module thin(const AlgebraPtr& a, std::vector<std::size_t> dims, const std::string& s, const std::string& t,
            std::vector<std::int64_t> scalars) {
  std::vector<Mat> blocks;
  std::size_t used = 0;
  for (std::size_t g = 0; g < a->num_generators(); ++g) {
    const std::size_t gs = a->gen_src(g), gt = a->gen_tgt(g);
    Mat b(a->field(), dims[gt], dims[gs]);
    if (gs == a->vertex_index(s) && gt == a->vertex_index(t) && used < scalars.size()) {
      b = Mat::from_ints(a->field(), 1, 1, std::vector<std::int64_t>{scalars[used++]});
    }
    blocks.push_back(std::move(b));
  }
  return Module(a, std::move(dims), std::move(blocks));
}

std::vector<Module> indecomposable_sample(const AlgebraPtr& k) {
  std::vector<Module> out;
  for (std::size_t x = 0; x < k->num_vertices(); ++x) {
    out.push_back(simple_module(k, x));
    out.push_back(projective_module(k, x));
    out.push_back(injective_module(k, x));
  }
  return out;
}

}  // namespace

TEST_CASE("Ext on the Kronecker algebra") {
  for (std::uint64_t q : {2, 3}) {
    auto a = builtin_algebra("kronecker", Field::of_order(q));
    CHECK(ext_dim(1, S(a, "2"), S(a, "1")) == 2);
    CHECK(ext_dim(1, S(a, "1"), S(a, "2")) == 0);
    CHECK(ext_dim(0, S(a, "1"), S(a, "1")) == 1);
    for (int i = 1; i <= 4; ++i) {
      CHECK(ext_dim(i, P(a, "2"), S(a, "1")) == 0);
      CHECK(ext_dim(i, P(a, "1"), S(a, "2")) == 0);
    }
    CHECK(ext_dim(2, S(a, "2"), S(a, "1")) == 0);
    auto e = ext_space(1, S(a, "2"), S(a, "1"));
    REQUIRE(e.cocycles.size() == 2);
    for (const auto& c : e.cocycles) {
      auto m = extension_module(e, S(a, "1"), c);
      CHECK(m.dims() == std::vector<std::size_t>{1, 1});
      CHECK(m.satisfies_relations());
      CHECK(is_indecomposable(m));
    }
    auto split = extension_module(e, S(a, "1"), zero_map(e.syz, S(a, "1")));
    CHECK(is_isomorphic(split, direct_sum(S(a, "1"), S(a, "2"))));
  }
}

TEST_CASE("syzygies") {
  auto f = Field::of_order(2);
  auto k = builtin_algebra("kronecker-dup", f);
  for (std::size_t x = 0; x < k->num_vertices(); ++x) {
    CHECK(syzygy(projective_module(k, x), 1).is_zero());
    CHECK(syzygy(injective_module(k, x), -1).is_zero());
  }
  // exactness of covers and envelopes
  for (const auto& m : indecomposable_sample(k)) {
    auto c = projective_cover(m);
    CHECK(submodule(c.module, kernel(c.module, c.map)).dim() == c.module.dim() - m.dim());
    auto e = injective_envelope(m);
    CHECK(quotient(e.module, image(e.module, e.map)).dim() == e.module.dim() - m.dim());
  }
  auto s1 = S(k, "1");
  auto cos = syzygy(s1, -1);
  CHECK(is_indecomposable(cos));
  CHECK(part_of(cos) == Piece::A01);
  CHECK(syzygy(s1, 0) == s1);
  CHECK_THROWS_AS(syzygy(s1, 5), InvalidArgument);
  // S_1 is projective, so Ω Ω^{-1} S_1 vanishes after stripping; S_2 is not
  CHECK(syzygy(cos, 1).is_zero());
  CHECK(is_isomorphic(syzygy(syzygy(S(k, "2"), -1), 1), S(k, "2")));
  // the first cosyzygies of the A_0 projectives are again indecomposable
  for (const std::string v : {"1", "2"}) {
    auto c = syzygy(P(k, v), -1);
    CHECK(is_indecomposable(c));
    CHECK_FALSE(is_projective(c));
  }
}

TEST_CASE("Auslander-Reiten translate") {
  for (std::uint64_t q : {2, 3}) {
    auto a = builtin_algebra("kronecker", Field::of_order(q));
    CHECK(ar_translate(P(a, "1"), TauDirection::tau).is_zero());
    CHECK(ar_translate(P(a, "2"), TauDirection::tau).is_zero());
    auto t = ar_translate(P(a, "1"), TauDirection::tau_inverse);
    CHECK(t.dims() == std::vector<std::size_t>{3, 2});
    CHECK(is_indecomposable(t));
    CHECK(ext_dim(1, t, P(a, "1")) > 0);
    auto tt = ar_translate(t, TauDirection::tau_inverse);
    CHECK(tt.dims() == std::vector<std::size_t>{5, 4});
    CHECK(is_isomorphic(ar_translate(tt, TauDirection::tau), t));
    auto reg = thin(a, {1, 1}, "2", "1", {1, 0});
    CHECK(is_isomorphic(ar_translate(reg, TauDirection::tau), reg));
    CHECK(ar_translate(S(a, "2"), TauDirection::tau_inverse).is_zero());
  }
  auto f = Field::of_order(2);
  for (const auto& name : {"kronecker-dup", "d4tilde-dup"}) {
    auto k = builtin_algebra(name, f);
    for (const auto& n : indecomposable_sample(k)) {
      if (is_projective(n)) {
        CHECK(ar_translate(n, TauDirection::tau).is_zero());
        continue;
      }
      auto t = ar_translate(n, TauDirection::tau);
      CHECK(is_indecomposable(t));
      CHECK_FALSE(is_injective(t));
      CHECK(is_isomorphic(ar_translate(t, TauDirection::tau_inverse), n));
    }
  }
}

TEST_CASE("exceptional modules") {
  auto f = Field::of_order(2);
  for (const auto& name : {"kronecker-dup", "d4tilde-dup"}) {
    auto k = builtin_algebra(name, f);
    for (std::size_t x = 0; x < k->num_vertices(); ++x) {
      auto p = projective_module(k, x);
      if (is_injective(p)) CHECK(is_exceptional(p));
    }
  }
  auto a = builtin_algebra("kronecker", f);
  CHECK(is_exceptional(S(a, "1")));
  CHECK(is_exceptional(S(a, "2")));
  auto reg = thin(a, {1, 1}, "2", "1", {1, 1});
  CHECK_FALSE(is_exceptional(reg));
  CHECK(exceptional_report(reg).ext[0] == 1);
}

TEST_CASE("component locator") {
  auto f = Field::of_order(2);
  auto k = builtin_algebra("kronecker-dup", f);
  CHECK(classify_component(S(k, "1"), 4) == Component::P0);
  auto reg = thin(k, {1, 1, 0, 0}, "2", "1", {1, 0});
  CHECK(is_indecomposable(reg));
  CHECK(classify_component(reg, 4) == Component::R0);
  CHECK(classify_component(reg, 0) == Component::unknown);
  CHECK(component_name(Component::R01) == "R01");
}
