#pragma once

// Hall numbers by submodule enumeration, Ext censuses, the Riedtmann
// cross-check, an iso-class registry, and Hall-algebra arithmetic.

#include <functional>
#include <map>
#include <unordered_map>

#include "hallforge/homological.hpp"

namespace hallforge {

inline constexpr std::uint64_t kDefaultSubmoduleCap = 2'000'000;
inline constexpr std::uint64_t kDefaultCocycleCap = 100'000;

struct HallOptions {
  std::uint64_t cap_submodules = kDefaultSubmoduleCap;
  std::uint64_t cap_cocycles = kDefaultCocycleCap;
  std::uint64_t seed = 0;
};

/// Calls emit once for every submodule of m (with dimension vector dimvec when
/// given).  Vertex subspaces are chosen along a topological order of the
/// Gabriel quiver, each one ranging over the subspaces containing the images
/// already forced by arrows into that vertex, so every emitted tuple is a
/// submodule.  Throws CapExceeded once more than cap partial tuples are visited.
void for_each_submodule(const Module& m, const std::vector<std::size_t>* dimvec,
                        const std::function<void(const GradedSubspace&)>& emit,
                        std::uint64_t cap = kDefaultSubmoduleCap);
std::vector<GradedSubspace> submodules(const Module& m, std::uint64_t cap = kDefaultSubmoduleCap);

/// Certified isomorphism test against one fixed module, caching its invariants.
class IsoMatcher {
 public:
  explicit IsoMatcher(Module target, std::uint64_t seed = 0);
  bool matches(const Module& x);
  const Module& target() const { return t_; }

 private:
  Module t_;
  std::size_t end_dim_ = 0;
  std::uint64_t seed_;
  std::optional<DecompResult> dec_;
};

/// G^m_{n,l}: submodules U of m with U ≅ l and m/U ≅ n.
BigInt hall_number(const Module& m, const Module& n, const Module& l, std::uint64_t cap = kDefaultSubmoduleCap);

using ClassId = std::size_t;
inline constexpr ClassId kZeroClass = 0;

/// Iso classes of modules over one algebra.  Indecomposables are stored once
/// each; a class is the multiset of its indecomposable summands.
class Registry {
 public:
  explicit Registry(AlgebraPtr a, std::uint64_t seed = 0);

  const AlgebraPtr& algebra() const { return alg_; }
  ClassId class_of(const Module& m);
  /// Class of ⊕ indecomposable(i)^mult.
  ClassId class_of_sum(std::vector<std::pair<std::size_t, std::size_t>> parts);
  ClassId class_of_sum(ClassId a, ClassId b);

  std::size_t num_classes() const { return classes_.size(); }
  const Module& representative(ClassId c) const { return classes_.at(c).rep; }
  /// (indecomposable index, multiplicity) sorted by index.
  const std::vector<std::pair<std::size_t, std::size_t>>& summands(ClassId c) const { return classes_.at(c).parts; }
  bool is_indecomposable(ClassId c) const;
  const std::vector<std::size_t>& dims(ClassId c) const { return classes_.at(c).rep.dims(); }
  std::size_t end_dim(ClassId c);
  BigInt aut_order(ClassId c);

  std::size_t num_indecomposables() const { return indec_.size(); }
  const Module& indecomposable(std::size_t i) const { return indec_.at(i).module; }
  const LocalEnd& indecomposable_end(std::size_t i) const { return indec_.at(i).end; }
  /// Index of an indecomposable module, inserting it when new.
  std::size_t indecomposable_index(const Module& x, const LocalEnd& end);

  void set_name(ClassId c, const std::string& name);
  std::string name(ClassId c) const;

 private:
  struct Indec {
    Module module;
    LocalEnd end;
    std::string name;
  };
  struct Class {
    Module rep;
    std::vector<std::pair<std::size_t, std::size_t>> parts;
    std::optional<std::size_t> end_dim;
    std::optional<BigInt> aut;
  };
  AlgebraPtr alg_;
  std::uint64_t seed_;
  std::vector<Indec> indec_;
  std::map<std::string, std::vector<std::size_t>> buckets_;  // fingerprint -> indecomposables
  std::vector<Class> classes_;
  std::map<std::vector<std::pair<std::size_t, std::size_t>>, ClassId> by_parts_;
  std::unordered_map<Module, ClassId, ModuleHash> exact_;
};

/// Finite integer combination of iso classes; zero coefficients never stored.
using HallElement = std::map<ClassId, BigInt>;

void add_to(HallElement& x, const HallElement& y, const BigInt& scale = 1);
HallElement scaled(const HallElement& x, const BigInt& c);

struct ExtCensus {
  ClassId n = 0, l = 0;
  std::size_t ext_dim = 0;
  BigInt total;                        // q^{ext_dim}
  std::map<ClassId, BigInt> counts;    // middle term -> number of Ext classes
  ClassId split = 0;
};

/// Hall-algebra arithmetic over one finite field, with caches for Hall
/// numbers, censuses and basis products.
class HallAlgebra {
 public:
  enum class Method { enumerate, riedtmann };

  explicit HallAlgebra(AlgebraPtr a, HallOptions opt = {});

  Registry& registry() { return reg_; }
  const AlgebraPtr& algebra() const { return reg_.algebra(); }
  const HallOptions& options() const { return opt_; }
  std::uint64_t q() const { return reg_.algebra()->field()->q(); }
  void set_method(Method m) { method_ = m; }

  ClassId class_of(const Module& m) { return reg_.class_of(m); }
  HallElement u(const Module& m) { return {{reg_.class_of(m), 1}}; }
  HallElement u(ClassId c) { return {{c, 1}}; }
  HallElement one() { return {{kZeroClass, 1}}; }

  /// G^m_{n,l} by submodule enumeration.
  const BigInt& hall_number(ClassId m, ClassId n, ClassId l);
  /// Right side of Riedtmann's formula from the census.
  BigInt riedtmann_value(ClassId m, ClassId n, ClassId l);
  const ExtCensus& census(ClassId n, ClassId l);
  const HallElement& basis_product(ClassId n, ClassId l);
  HallElement mul(const HallElement& x, const HallElement& y);

  std::string format(const HallElement& x) const;

 private:
  Registry reg_;
  HallOptions opt_;
  Method method_ = Method::enumerate;
  std::map<std::array<ClassId, 3>, BigInt> numbers_;
  std::map<std::pair<ClassId, ClassId>, ExtCensus> censuses_;
  std::map<std::pair<ClassId, ClassId>, HallElement> products_;
};

struct RiedtmannRow {
  ClassId m = 0;
  BigInt ext_classes, aut_m, brute, formula;
  bool agrees = false;
};
struct RiedtmannReport {
  ClassId n = 0, l = 0;
  BigInt aut_n, aut_l, hom;
  std::vector<RiedtmannRow> rows;
  bool ok = true;
};
RiedtmannReport riedtmann_check(HallAlgebra& h, const Module& n, const Module& l);

struct TriangularReport {
  Module m0, m01, m1;
  BigInt g_inner;   // G^{M_01 ⊕ M_1}_{M_01, M_1}
  BigInt g_outer;   // G^{M}_{M_0, M_01 ⊕ M_1}
  HallElement product;
  bool product_is_m = false;
  bool ok() const { return product_is_m && g_inner == 1 && g_outer == 1; }
};
/// Splits m by parts and checks u_{M_0} u_{M_01} u_{M_1} = u_M.
TriangularReport triangular_factor(HallAlgebra& h, const Module& m);

}  // namespace hallforge
