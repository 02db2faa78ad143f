#pragma once

// Field-independent recipes for modules over the builtin algebras, and the
// small expression language used on the command line:
//
//   S1  P1'  I2          simple, projective, injective at a vertex
//   rad(X) top(X) soc(X) socq(X)   radical, top, socle, X/soc X
//   syz(i,X)             Ω^i X, i in [-4, 4]
//   tau(X) tau(i,X)      τ^i X (negative i for τ^{-1})
//   ext(Y,X)             middle term of the first basis cocycle of Ext^1(Y, X)
//   X+Y  X^3  0          direct sums, powers, the zero module
//   R0 H2 T6 ...         named raw modules of the algebra (see named_modules)

#include <string>
#include <vector>

#include "hallforge/homological.hpp"

namespace hallforge {

/// Integer action matrix of the ordinal-th generator from src to tgt.
struct RawBlock {
  std::string src, tgt;
  std::size_t ordinal = 0;
  std::vector<std::int64_t> entries;  // row-major, dims[tgt] x dims[src]
};

struct RawModule {
  std::vector<std::pair<std::string, std::size_t>> dims;  // vertex label -> dimension
  std::vector<RawBlock> blocks;                           // unlisted generators act by 0
};

struct Blueprint {
  enum class Tag { zero, simple, projective, injective, rad, top, soc, socq, syzygy, tau, ext, sum, power, raw };
  Tag tag = Tag::zero;
  std::string vertex;              // simple / projective / injective
  int degree = 0;                  // syzygy, tau, power
  std::vector<Blueprint> children;
  RawModule raw;
  std::string name;                // named raw module, or empty

  std::string to_string() const;
};

Blueprint parse_blueprint(const std::string& text, const std::string& algebra);
Module instantiate(const Blueprint& b, const AlgebraPtr& a);
/// Shorthand: parse and instantiate over the builtin algebra on field f.
Module instantiate(const std::string& text, const std::string& algebra, const FieldPtr& f);

/// Names resolvable by parse_blueprint for this builtin algebra.
std::vector<std::string> named_modules(const std::string& algebra);

/// instantiate over big ≅ base change of the instantiation over small.
bool tower_coherent(const Blueprint& b, const std::string& algebra, const FieldPtr& small, const FieldPtr& big);

}  // namespace hallforge
