#pragma once

// Syzygies, Ext groups from projective presentations, the Auslander-Reiten
// translate through the Nakayama functor, exceptionality, and a heuristic
// locator for AR components.

#include <array>
#include <string>

#include "hallforge/decompose.hpp"

namespace hallforge {

bool is_projective(const Module& m);
bool is_injective(const Module& m);
/// Indecomposable projective (injective) iff the top (socle) is simple and the
/// dimension vector is that of P_x (I_x).
bool is_indecomposable_projective(const Module& m);
bool is_indecomposable_injective(const Module& m);

/// m with all projective (injective) direct summands removed.
Module strip_projective(const Module& m, std::uint64_t seed = 0);
Module strip_injective(const Module& m, std::uint64_t seed = 0);

/// i > 0: iterated kernel of projective covers, projective summands removed
/// after each step; i < 0: iterated cokernel of injective envelopes with
/// injective summands removed; i = 0: m itself.
Module syzygy(const Module& m, int i, std::uint64_t seed = 0);

/// Ext^i(n, l).  For i >= 1 the group is Ext^1(Ω^{i-1} n, l) computed from the
/// presentation 0 -> K -> P_0 -> N' -> 0 of N' = Ω^{i-1} n; cocycles are coset
/// representatives in Hom(K, l) modulo restrictions of Hom(P_0, l).
struct ExtSpace {
  int degree = 1;
  std::size_t dim = 0;
  Module cover;                   // P_0
  Module syz;                     // K
  ModMap inclusion;               // K -> P_0
  ModMap projection;              // P_0 -> N'
  std::vector<ModMap> cocycles;   // basis of a complement of the coboundaries
};
ExtSpace ext_space(int i, const Module& n, const Module& l);
std::size_t ext_dim(int i, const Module& n, const Module& l);

/// Middle term of the extension class of phi: K -> l, i.e. the pushout of
/// P_0 <- K -> l.  The sequence is 0 -> l -> E -> N' -> 0.
Module extension_module(const ExtSpace& e, const Module& l, const ModMap& phi);

enum class TauDirection { tau, tau_inverse };
/// D Tr and Tr D: computed as ker ν(P_1 -> P_0) for a minimal projective
/// presentation, respectively coker ν^{-1}(I^0 -> I^1).
Module ar_translate(const Module& m, TauDirection d);

struct ExceptionalReport {
  std::array<std::size_t, 4> ext{};  // dim Ext^i(m, m) for i = 1..4
  bool exceptional = false;
};
ExceptionalReport exceptional_report(const Module& m);
/// Ext^i(m, m) = 0 for i = 1, 2, 3, with Ext^4 checked as well.  Throws
/// CheckFailed when Ext^4 survives while Ext^1..3 vanish.
bool is_exceptional(const Module& m);

enum class Component { P0, R0, X0, R01, X1, R1, I1, unknown };
std::string component_name(Component c);
/// Best effort: follows the τ and τ^{-1} orbits for at most cap steps.  A
/// return to an isomorphic module gives a tube, reaching a projective
/// (injective) end gives a non-regular part.  Never used in counting code.
Component classify_component(const Module& m, std::size_t cap);

}  // namespace hallforge
