#pragma once

// Finite-dimensional basic algebras given by structure constants.
//
// Every basis element b is vertex-homogeneous: b = e_t b e_s for vertices
// s = src(b), t = tgt(b).  Modules are left modules, so b carries the s-part
// of a module into its t-part.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hallforge/linalg.hpp"

namespace hallforge {

struct Arrow {
  std::string name;
  std::size_t source = 0, target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  bool acyclic() const;
};

struct TameRootData {
  std::vector<int> delta;
  int m = 0;
};

/// Which copy of the base algebra a vertex belongs to in a duplicated algebra.
enum class Part { A0, A1, none };

struct Term {
  std::size_t k;
  Elem c;
  bool operator==(const Term&) const = default;
};

/// A linear combination of words in the chosen generators.  A word lists
/// generator positions in the order they act (first acts first).
struct WordExpr {
  std::vector<std::pair<Elem, std::vector<std::size_t>>> terms;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
 public:
  struct Spec {
    std::string name;
    std::string kind = "table";  // table | path | duplicated
    std::vector<std::string> labels;
    std::vector<std::string> vertex_labels;
    std::vector<std::size_t> vertex_idem;
    std::vector<Part> vertex_part;
    std::vector<std::vector<Term>> mult;  // dim*dim, row-major (i, j) -> b_i b_j
    std::optional<TameRootData> tame;
    std::optional<Quiver> quiver;
  };

  /// Builds and derives vertices of basis elements, generators and words.
  /// Throws InvalidArgument when the table is not vertex-homogeneous or its
  /// vertex corners are not one-dimensional.
  static AlgebraPtr make(FieldPtr f, Spec spec);

  const FieldPtr& field() const { return f_; }
  const std::string& name() const { return s_.name; }
  const std::string& kind() const { return s_.kind; }
  std::size_t dim() const { return s_.labels.size(); }
  const std::vector<std::string>& labels() const { return s_.labels; }
  std::size_t num_vertices() const { return s_.vertex_labels.size(); }
  const std::vector<std::string>& vertex_labels() const { return s_.vertex_labels; }
  const std::string& vertex_label(std::size_t x) const { return s_.vertex_labels[x]; }
  std::size_t vertex_index(const std::string& label) const;
  std::size_t idempotent(std::size_t x) const { return s_.vertex_idem[x]; }
  Part part(std::size_t x) const { return s_.vertex_part.empty() ? Part::none : s_.vertex_part[x]; }
  const std::optional<TameRootData>& tame() const { return s_.tame; }
  const std::optional<Quiver>& quiver() const { return s_.quiver; }

  const std::vector<Term>& mult(std::size_t i, std::size_t j) const { return s_.mult[i * dim() + j]; }
  /// Product of two coordinate vectors.
  Vec multiply(std::span<const Elem> a, std::span<const Elem> b) const;
  Vec unit() const;

  std::size_t src(std::size_t b) const { return src_[b]; }
  std::size_t tgt(std::size_t b) const { return tgt_[b]; }
  bool is_idempotent_basis(std::size_t b) const { return is_idem_[b]; }

  /// Generators: basis elements whose classes form a basis of rad/rad^2.
  std::size_t num_generators() const { return gens_.size(); }
  std::size_t generator(std::size_t g) const { return gens_[g]; }
  std::size_t gen_src(std::size_t g) const { return src_[gens_[g]]; }
  std::size_t gen_tgt(std::size_t g) const { return tgt_[gens_[g]]; }
  /// Expression of a non-idempotent basis element in generator words.
  const WordExpr& word(std::size_t b) const { return words_[b]; }
  /// Basis elements in e_t A e_s.
  const std::vector<std::size_t>& corner(std::size_t t, std::size_t s) const { return corner_[t * num_vertices() + s]; }
  /// Loewy length of the regular module.
  std::size_t loewy_length() const { return loewy_; }

  const Spec& spec() const { return s_; }

 private:
  Algebra(FieldPtr f, Spec spec);
  void derive();

  FieldPtr f_;
  Spec s_;
  std::vector<std::size_t> src_, tgt_;
  std::vector<bool> is_idem_;
  std::vector<std::size_t> gens_;
  std::vector<WordExpr> words_;
  std::vector<std::vector<std::size_t>> corner_;
  std::size_t loewy_ = 0;
};

/// Path algebra of an acyclic quiver.  Paths compose as b.a = "a then b".
AlgebraPtr path_algebra(const Quiver& q, FieldPtr f, std::string name = "path");
/// Duplicated algebra of a path algebra: A_0 + DA + A_1 with
/// (a0, f, a1)(b0, g, b1) = (a0 b0, a0 g + f b1, a1 b1).
AlgebraPtr duplicated(const AlgebraPtr& a, std::string name = "");
AlgebraPtr opposite(const AlgebraPtr& a);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
};
ValidationReport validate(const Algebra& a);
/// Same checks on a raw table that may not even be vertex-homogeneous.
ValidationReport validate_spec(const FieldPtr& f, const Algebra::Spec& s);

/// Builtins: kronecker, kronecker-dup, d4tilde, d4tilde-dup.  Cached per field.
AlgebraPtr builtin_algebra(const std::string& name, const FieldPtr& f);
std::vector<std::string> builtin_names();

struct GabrielArrow {
  std::size_t source, target, multiplicity;
};
std::vector<GabrielArrow> gabriel_quiver(const Algebra& a);
std::string gabriel_dot(const Algebra& a);

}  // namespace hallforge
