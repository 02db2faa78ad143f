#pragma once

// Left modules over a basic algebra.  The basis of a module is grouped by
// vertex, so a module is determined by its dimension vector and one block
// matrix (dims[tgt] x dims[src]) per algebra generator.  The action of an
// arbitrary basis element is assembled from its generator words.

#include <string>
#include <vector>

#include "hallforge/algebra.hpp"

namespace hallforge {

/// One subspace of each vertex space of a module.
using GradedSubspace = std::vector<Subspace>;

class Module {
 public:
  Module() = default;
  Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> blocks);
  static Module zero(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  const FieldPtr& field() const { return alg_->field(); }
  std::size_t dim() const { return total_; }
  bool is_zero() const { return total_ == 0; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim_at(std::size_t x) const { return dims_[x]; }
  std::size_t offset(std::size_t x) const { return offsets_[x]; }
  const Mat& block(std::size_t g) const { return blocks_[g]; }
  const std::vector<Mat>& blocks() const { return blocks_; }

  /// Action of basis element b restricted to e_t M <- e_s M (t = tgt b, s = src b).
  const Mat& corner_action(std::size_t b) const;
  /// Full dim x dim action matrix of basis element b.
  Mat action(std::size_t b) const;
  /// All action matrices in table order.
  std::vector<Mat> actions() const;

  /// Checks that the basis actions define an algebra morphism.
  bool satisfies_relations() const;

  bool operator==(const Module& o) const;
  std::size_t hash() const;

 private:
  AlgebraPtr alg_;
  std::vector<std::size_t> dims_, offsets_;
  std::size_t total_ = 0;
  std::vector<Mat> blocks_;
  mutable std::vector<Mat> corner_cache_;
  mutable std::vector<bool> corner_ready_;
};

struct ModuleHash {
  std::size_t operator()(const Module& m) const { return m.hash(); }
};

/// A module homomorphism as one block per vertex (dst dims x src dims).
struct ModMap {
  std::vector<Mat> blocks;
  Mat full() const;
  std::size_t rank() const;
  bool is_bijective() const;
  bool is_zero() const;
};

ModMap compose(const ModMap& g, const ModMap& f);  // g after f
/// Concatenated row-major blocks, for linear algebra on spaces of maps.
Vec flatten(const ModMap& f);
ModMap identity_map(const Module& m);
ModMap zero_map(const Module& src, const Module& dst);
ModMap linear_combination(const Module& src, const Module& dst, const std::vector<ModMap>& basis, std::span<const Elem> coeffs);
bool is_homomorphism(const Module& src, const Module& dst, const ModMap& f);

enum class StandardKind { simple, projective, injective };
Module standard_module(const AlgebraPtr& a, StandardKind kind, std::size_t vertex);
Module simple_module(const AlgebraPtr& a, std::size_t x);
Module projective_module(const AlgebraPtr& a, std::size_t x);
Module injective_module(const AlgebraPtr& a, std::size_t x);

/// Basis of Hom(m, n).
std::vector<ModMap> hom_space(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

Module direct_sum(const std::vector<Module>& ms);
Module direct_sum(const Module& a, const Module& b);
Module power(const Module& m, std::size_t k);

/// Submodule / quotient carried by an action-stable graded subspace.
bool is_stable(const Module& m, const GradedSubspace& u);
Module submodule(const Module& m, const GradedSubspace& u);
Module quotient(const Module& m, const GradedSubspace& u);
/// Inclusion of submodule(m, u) into m.
ModMap inclusion_map(const Module& m, const GradedSubspace& u);
/// Projection of m onto quotient(m, u).
ModMap projection_map(const Module& m, const GradedSubspace& u);
GradedSubspace zero_subspace(const Module& m);
GradedSubspace full_subspace(const Module& m);
GradedSubspace kernel(const Module& src, const ModMap& f);
GradedSubspace image(const Module& dst, const ModMap& f);

GradedSubspace radical(const Module& m);
/// Radical of the submodule u, in the coordinates of m.
GradedSubspace radical_of(const Module& m, const GradedSubspace& u);
GradedSubspace socle(const Module& m);
Module top(const Module& m);
/// Per-vertex dimensions of the top and of the socle.
std::vector<std::size_t> top_dims(const Module& m);
std::vector<std::size_t> socle_dims(const Module& m);

/// Radical layers top-first, e.g. "1'/22/1".
std::string loewy_series(const Module& m);
std::vector<std::vector<std::size_t>> loewy_layers(const Module& m);

struct Cover {
  Module module;                  // direct sum of indecomposable projectives (injectives)
  std::vector<std::size_t> summand_vertices;
  ModMap map;                     // cover -> m  (envelope: m -> envelope)
};
Cover projective_cover(const Module& m);
Cover injective_envelope(const Module& m);

Module base_change(const Module& m, const FieldEmbedding& e, const AlgebraPtr& target);

/// Where an indecomposable lives in a duplicated algebra: support inside the
/// A_0 copy, inside the A_1 copy, or meeting both.
enum class Piece { A0, A01, A1 };
Piece part_of(const Module& m);
std::string piece_name(Piece p);

}  // namespace hallforge
