#pragma once

// Krull-Schmidt decomposition, certified isomorphism tests and |Aut M|.
//
// An indecomposable piece is only reported once its endomorphism ring is
// certified local: either End is one-dimensional, or a nilpotent ideal J of
// End is exhibited with End/J a field, or End is enumerated completely.  When
// none of these succeed within the cap the call throws Undecided.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "hallforge/module.hpp"

namespace hallforge {

using BigInt = boost::multiprecision::cpp_int;

/// Default cap on q^{dim End} for enumerating an endomorphism ring.
inline constexpr std::uint64_t kDefaultEndCap = 1u << 16;

struct LocalEnd {
  std::size_t end_dim = 0;
  std::size_t rad_dim = 0;         // dim J(End)
  std::size_t residue_degree = 1;  // dim End/J
};

struct DecompResult {
  struct Summand {
    Module module;
    std::size_t multiplicity = 0;
    LocalEnd end;
  };
  std::vector<Summand> summands;   // pairwise non-isomorphic
  std::vector<Module> pieces;      // every indecomposable piece, in discovery order
  std::vector<std::size_t> piece_class;  // index into summands per piece
  ModMap witness;                  // direct_sum(pieces) -> m, bijective

  std::size_t num_pieces() const { return pieces.size(); }
};

DecompResult decompose(const Module& m, std::uint64_t seed = 0, std::uint64_t cap = kDefaultEndCap);
bool is_indecomposable(const Module& m, std::uint64_t seed = 0, std::uint64_t cap = kDefaultEndCap);
/// Locality data of End(m) for an indecomposable m; throws Undecided, or
/// InvalidArgument when m turns out to be decomposable.
LocalEnd local_end(const Module& m, std::uint64_t seed = 0, std::uint64_t cap = kDefaultEndCap);

/// Both modules indecomposable (certified by the caller): isomorphic iff some
/// element of a Hom basis is bijective, because the non-isomorphisms between
/// isomorphic modules with local End form a proper subspace.
bool indecomposables_isomorphic(const Module& x, const Module& y);

bool is_isomorphic(const Module& m, const Module& n, std::uint64_t seed = 0, std::uint64_t cap = kDefaultEndCap);

/// Fitting power g^N of a module endomorphism, N = max vertex dimension.
ModMap fitting_power(const ModMap& g);

/// |Aut m| = q^{dim rad End} * prod |GL_{a_i}(q^{d_i})|.
BigInt aut_order(const Module& m, std::uint64_t seed = 0, std::uint64_t cap = kDefaultEndCap);
BigInt aut_order(const DecompResult& d, std::size_t end_dim, std::uint64_t q);
BigInt gl_order(std::size_t n, const BigInt& q);

}  // namespace hallforge
