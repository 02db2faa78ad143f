#pragma once

// The degenerate Hall ring at q = 1 and the commutator identities of the
// composition algebra.
//
// A degenerate element is carried as an exact Hall element over every
// scheduled field (its lift).  Classes are matched across fields by the
// stable catalog; the remaining indecomposables of a dimension vector form a
// bundle.  The coefficient of each key is interpolated in q and specialised
// at q = 1.

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hallforge/hallpoly.hpp"

namespace hallforge {

struct Bundle {
  std::vector<std::size_t> dims;
  RatPoly members;                  // member count n(x)
  std::vector<std::string> stable;  // stable catalog entries of these dims
};

struct KeyInfo {
  bool indecomposable = false;
  bool bundled = false;  // at least one summand belongs to a bundle
  std::vector<std::size_t> dims;
  RatPoly members;       // number of classes behind the key
};

struct DegenElement {
  std::map<std::string, Rational> terms;      // nonzero values at x = 1
  std::map<std::string, RatPoly> provenance;  // coefficient polynomial of every key met
  std::map<std::string, KeyInfo> keys;
  std::map<std::uint64_t, HallElement> lift;

  bool operator==(const DegenElement& o) const { return terms == o.terms; }
  bool is_zero() const { return terms.empty(); }
  std::string to_string() const;
};

struct DegenOptions {
  std::vector<std::uint64_t> points{2, 3, 4, 5, 7, 8};
  std::vector<std::uint64_t> holdout{9};
  HallOptions hall;
  /// Stable classes; empty means stable_catalog(algebra).
  std::vector<std::string> stable;
};

class DegenContext {
 public:
  explicit DegenContext(std::string algebra, DegenOptions opt = {});

  const std::string& algebra() const { return algebra_; }
  const DegenOptions& options() const { return opt_; }
  /// Points followed by hold-out fields.
  std::vector<std::uint64_t> fields() const;
  HallAlgebra& hall(std::uint64_t q);

  DegenElement u(const std::string& blueprint);
  DegenElement one();
  DegenElement mul(const DegenElement& a, const DegenElement& b);
  /// c a - d b with integer polynomial scalars evaluated at each q.
  DegenElement combine(const IntPoly& c, const DegenElement& a, const IntPoly& d, const DegenElement& b);
  DegenElement sub(const DegenElement& a, const DegenElement& b);
  DegenElement bracket(const DegenElement& a, const DegenElement& b);
  DegenElement bracket(const std::string& x, const std::string& y);

  /// Field-independent name of a class over GF(q).
  std::string key_of(std::uint64_t q, ClassId c);

  /// Interpolates every key coefficient of an exact family of Hall elements;
  /// throws CheckFailed when some coefficient is not polynomial in q.
  DegenElement certify(std::map<std::uint64_t, HallElement> lift);

 private:
  struct PerField {
    std::unique_ptr<HallAlgebra> hall;
    std::map<std::size_t, std::string> stable_of;  // indecomposable index -> stable name
    bool stable_ready = false;
  };
  PerField& field(std::uint64_t q);
  std::string indec_key(std::uint64_t q, std::size_t idx);

  std::string algebra_;
  DegenOptions opt_;
  std::map<std::uint64_t, PerField> fields_;
};

/// Iterated skew commutator c L R - d R L with simple leaves.
struct SkewExpr {
  std::string leaf;  // "S<label>" at a leaf
  std::shared_ptr<const SkewExpr> left, right;
  IntPoly c, d;

  bool is_leaf() const { return !left; }
  std::size_t depth() const;
  /// Nested JSON array [c, d, L, R]; leaves are "S_<label>".
  std::string to_json() const;
  std::string to_string() const;
};
using SkewPtr = std::shared_ptr<const SkewExpr>;

SkewPtr skew_leaf(const std::string& simple);
SkewPtr skew_node(SkewPtr l, SkewPtr r, IntPoly c, IntPoly d);
HallElement evaluate(const SkewExpr& e, HallAlgebra& h);

/// {1, x, x - 1, x + 1, x^2, x^3}
std::vector<IntPoly> default_skew_scalars();

struct SkewSearchOptions {
  std::size_t depth = 3;
  std::vector<IntPoly> scalars = default_skew_scalars();
  std::vector<std::uint64_t> certify_fields{2, 3};
  std::vector<std::uint64_t> verify_fields{2, 3, 4, 5, 7};
  std::uint64_t max_products = 2'000'000;
  std::size_t max_words = 5040;  // words tried by the divisibility pre-check
  HallOptions hall;
};

struct SkewSearchResult {
  bool found = false;
  SkewPtr expr;
  std::size_t candidates = 0;  // distinct values generated
  std::uint64_t products = 0;
  std::string message;
};

/// Breadth-first search for an iterated skew commutator of simples equal to
/// u_[m] over the certification fields, re-verified over every verify field.
/// NotFound (found = false) only says the bounded search came up empty, unless
/// the message reports the divisibility obstruction, which rules out every
/// depth.
/// Throws InvalidArgument when m is not exceptional, CapExceeded past
/// max_products.
SkewSearchResult iterated_skew_search(const std::string& algebra, const std::string& m,
                                      const SkewSearchOptions& opt = {});

struct SkewIdentityRow {
  std::uint64_t q = 0;
  std::string lhs, rhs;
  bool holds = false;
};
struct SkewIdentityReport {
  std::string module;
  char branch = '?';        // 'A': u_M = [S_i', rad M]; 'B': u_M = [M/soc M, S_i]
  std::string factor;       // rad M or M/soc M as a Loewy series
  std::string simple;       // S_i' or S_i
  std::vector<SkewIdentityRow> rows;
  bool ok() const;
};
/// Throws InvalidArgument unless m is an indecomposable projective-injective.
SkewIdentityReport verify_skew_identity(const std::string& algebra, const std::string& m,
                                        const std::vector<std::uint64_t>& fields, const HallOptions& opt = {});

struct LieReport {
  struct Pair {
    std::string x, y;
    bool antisymmetric = false;
    bool closed = false;  // bracket supported on indecomposable keys
    std::string bracket;
    std::string error;
  };
  struct Triple {
    std::string x, y, z;
    bool computed = false;
    bool jacobi = false;
    std::string error;
  };
  std::vector<Pair> pairs;
  std::vector<std::pair<std::string, std::string>> skipped_pairs;  // rejected by the pair filter
  std::vector<Triple> triples;
  bool ok() const;
};

using PairFilter = std::function<bool(const std::string&, const std::string&)>;

/// Antisymmetry and closure on all pairs accepted by the filter (all pairs if
/// empty), Jacobi on the triples of total dimension at most max_triple_dim
/// whose double brackets certify.
LieReport lie_axiom_suite(DegenContext& ctx, const std::vector<std::string>& classes, std::size_t max_triple_dim = 5,
                          const PairFilter& filter = {});

}  // namespace hallforge
