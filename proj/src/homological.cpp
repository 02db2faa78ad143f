#include "hallforge/homological.hpp"

#include "hallforge/errors.hpp"

namespace hallforge {

namespace {

std::vector<std::size_t> corner_positions(const Algebra& a) {
  std::vector<std::size_t> pos(a.dim());
  for (std::size_t t = 0; t < a.num_vertices(); ++t) {
    for (std::size_t s = 0; s < a.num_vertices(); ++s) {
      const auto& c = a.corner(t, s);
      for (std::size_t i = 0; i < c.size(); ++i) pos[c[i]] = i;
    }
  }
  return pos;
}

// A map between sums of indecomposable projectives ⊕P_U -> ⊕P_V is right
// multiplication by a matrix of algebra elements a[v][u] in e_{U[u]} A e_{V[v]}.
struct ElemMatrix {
  std::vector<std::size_t> U, V;
  std::vector<std::vector<Vec>> a;  // coefficients over corner(U[u], V[v])
};

// Offsets of each summand inside vertex t of ⊕P_verts (proj) or ⊕I_verts.
std::vector<std::size_t> summand_offsets(const Algebra& alg, const std::vector<std::size_t>& verts, std::size_t t, bool proj) {
  std::vector<std::size_t> off(verts.size() + 1, 0);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    off[i + 1] = off[i] + (proj ? alg.corner(t, verts[i]).size() : alg.corner(verts[i], t).size());
  }
  return off;
}

Module sum_of(const AlgebraPtr& a, const std::vector<std::size_t>& verts, bool proj) {
  if (verts.empty()) return Module::zero(a);
  std::vector<Module> ms;
  for (auto v : verts) ms.push_back(proj ? projective_module(a, v) : injective_module(a, v));
  return direct_sum(ms);
}

ElemMatrix extract_elements(const Algebra& alg, const ModMap& g, const std::vector<std::size_t>& U,
                            const std::vector<std::size_t>& V) {
  ElemMatrix em{U, V, std::vector<std::vector<Vec>>(V.size(), std::vector<Vec>(U.size()))};
  for (std::size_t u = 0; u < U.size(); ++u) {
    const std::size_t x = U[u];
    // the generator e_x of the u-th summand is the first basis vector at vertex x
    const std::size_t col = summand_offsets(alg, U, x, true)[u];
    const auto roff = summand_offsets(alg, V, x, true);
    for (std::size_t v = 0; v < V.size(); ++v) {
      Vec c(roff[v + 1] - roff[v]);
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = g.blocks[x](roff[v] + k, col);
      em.a[v][u] = std::move(c);
    }
  }
  return em;
}

ModMap projective_map(const Algebra& alg, const ElemMatrix& em) {
  const Field& F = *alg.field();
  const auto pos = corner_positions(alg);
  ModMap out;
  for (std::size_t t = 0; t < alg.num_vertices(); ++t) {
    const auto roff = summand_offsets(alg, em.V, t, true);
    const auto coff = summand_offsets(alg, em.U, t, true);
    Mat b(alg.field(), roff.back(), coff.back());
    for (std::size_t u = 0; u < em.U.size(); ++u) {
      const auto& bs = alg.corner(t, em.U[u]);
      for (std::size_t v = 0; v < em.V.size(); ++v) {
        const auto& as = alg.corner(em.U[u], em.V[v]);
        for (std::size_t k = 0; k < as.size(); ++k) {
          const Elem alpha = em.a[v][u][k];
          if (alpha == 0) continue;
          for (std::size_t bi = 0; bi < bs.size(); ++bi) {
            for (const auto& term : alg.mult(bs[bi], as[k])) {
              Elem& e = b(roff[v] + pos[term.k], coff[u] + bi);
              e = F.add(e, F.mul(alpha, term.c));
            }
          }
        }
      }
    }
    out.blocks.push_back(std::move(b));
  }
  return out;
}

// ν of projective_map(em): ⊕I_U -> ⊕I_V, φ |-> φ(a ·)
ModMap nakayama_map(const Algebra& alg, const ElemMatrix& em) {
  const Field& F = *alg.field();
  const auto pos = corner_positions(alg);
  ModMap out;
  for (std::size_t s = 0; s < alg.num_vertices(); ++s) {
    const auto roff = summand_offsets(alg, em.V, s, false);
    const auto coff = summand_offsets(alg, em.U, s, false);
    Mat b(alg.field(), roff.back(), coff.back());
    for (std::size_t u = 0; u < em.U.size(); ++u) {
      for (std::size_t v = 0; v < em.V.size(); ++v) {
        const auto& as = alg.corner(em.U[u], em.V[v]);
        const auto& cs = alg.corner(em.V[v], s);
        for (std::size_t k = 0; k < as.size(); ++k) {
          const Elem alpha = em.a[v][u][k];
          if (alpha == 0) continue;
          for (std::size_t ci = 0; ci < cs.size(); ++ci) {
            for (const auto& term : alg.mult(as[k], cs[ci])) {
              Elem& e = b(roff[v] + ci, coff[u] + pos[term.k]);
              e = F.add(e, F.mul(alpha, term.c));
            }
          }
        }
      }
    }
    out.blocks.push_back(std::move(b));
  }
  return out;
}

struct RawSyzygy {
  Cover cover;
  Module kernel;
  ModMap inclusion;
};

RawSyzygy raw_syzygy(const Module& m) {
  RawSyzygy r;
  r.cover = projective_cover(m);
  const auto k = kernel(r.cover.module, r.cover.map);
  r.kernel = submodule(r.cover.module, k);
  r.inclusion = inclusion_map(r.cover.module, k);
  return r;
}

Module tau(const Module& m) {
  if (m.is_zero()) return m;
  const AlgebraPtr& a = m.algebra();
  const RawSyzygy first = raw_syzygy(m);
  const Cover second = projective_cover(first.kernel);
  const ModMap g = compose(first.inclusion, second.map);
  const auto em = extract_elements(*a, g, second.summand_vertices, first.cover.summand_vertices);
  const ModMap nu = nakayama_map(*a, em);
  const Module iu = sum_of(a, second.summand_vertices, false);
  return submodule(iu, kernel(iu, nu));
}

Module tau_inverse(const Module& m) {
  if (m.is_zero()) return m;
  const AlgebraPtr& a = m.algebra();
  const Algebra& alg = *a;
  const Cover e0 = injective_envelope(m);
  const auto img = image(e0.module, e0.map);
  const Module c = quotient(e0.module, img);
  if (c.is_zero()) return c;
  const Cover e1 = injective_envelope(c);
  const ModMap h = compose(e1.map, projection_map(e0.module, img));
  const auto& U = e0.summand_vertices;
  const auto& V = e1.summand_vertices;
  // recover the algebra elements with ν(ρ_a) = h by solving a linear system
  ElemMatrix unit{U, V, std::vector<std::vector<Vec>>(V.size(), std::vector<Vec>(U.size()))};
  for (std::size_t v = 0; v < V.size(); ++v) {
    for (std::size_t u = 0; u < U.size(); ++u) unit.a[v][u].assign(alg.corner(U[u], V[v]).size(), 0);
  }
  std::vector<Vec> columns;
  std::vector<std::array<std::size_t, 3>> where;
  for (std::size_t v = 0; v < V.size(); ++v) {
    for (std::size_t u = 0; u < U.size(); ++u) {
      for (std::size_t k = 0; k < unit.a[v][u].size(); ++k) {
        unit.a[v][u][k] = 1;
        columns.push_back(flatten(nakayama_map(alg, unit)));
        unit.a[v][u][k] = 0;
        where.push_back({v, u, k});
      }
    }
  }
  const Vec target = flatten(h);
  Mat sys(m.field(), target.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < target.size(); ++i) sys(i, j) = columns[j][i];
  }
  const auto x = solve(sys, target);
  if (!x) throw CheckFailed("map between injectives is not in the image of the Nakayama functor");
  ElemMatrix em = unit;
  for (std::size_t j = 0; j < where.size(); ++j) em.a[where[j][0]][where[j][1]][where[j][2]] = (*x)[j];
  const ModMap rho = projective_map(alg, em);
  const Module pv = sum_of(a, V, true);
  return quotient(pv, image(pv, rho));
}

}  // namespace

bool is_projective(const Module& m) { return projective_cover(m).module.dim() == m.dim(); }
bool is_injective(const Module& m) { return injective_envelope(m).module.dim() == m.dim(); }

bool is_indecomposable_projective(const Module& m) {
  const auto t = top_dims(m);
  std::size_t total = 0, x = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    total += t[i];
    if (t[i]) x = i;
  }
  return total == 1 && projective_module(m.algebra(), x).dims() == m.dims();
}

bool is_indecomposable_injective(const Module& m) {
  const auto s = socle_dims(m);
  std::size_t total = 0, x = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    total += s[i];
    if (s[i]) x = i;
  }
  return total == 1 && injective_module(m.algebra(), x).dims() == m.dims();
}

namespace {

Module strip(const Module& m, std::uint64_t seed, bool (*drop)(const Module&)) {
  if (m.is_zero()) return m;
  const auto d = decompose(m, seed);
  std::vector<Module> keep;
  for (const auto& p : d.pieces) {
    if (!drop(p)) keep.push_back(p);
  }
  if (keep.size() == d.pieces.size()) return m;
  return keep.empty() ? Module::zero(m.algebra()) : direct_sum(keep);
}

}  // namespace

Module strip_projective(const Module& m, std::uint64_t seed) { return strip(m, seed, is_indecomposable_projective); }
Module strip_injective(const Module& m, std::uint64_t seed) { return strip(m, seed, is_indecomposable_injective); }

Module syzygy(const Module& m, int i, std::uint64_t seed) {
  if (i < -4 || i > 4) throw InvalidArgument("syzygy degree must lie in [-4, 4]");
  Module cur = m;
  for (int k = 0; k < i; ++k) cur = strip_projective(raw_syzygy(cur).kernel, seed);
  for (int k = 0; k < -i; ++k) {
    const Cover e = injective_envelope(cur);
    cur = strip_injective(quotient(e.module, image(e.module, e.map)), seed);
  }
  return cur;
}

ExtSpace ext_space(int i, const Module& n, const Module& l) {
  if (i < 0 || i > 4) throw InvalidArgument("Ext degree must lie in [0, 4]");
  ExtSpace out;
  out.degree = i;
  if (i == 0) {
    out.dim = hom_dim(n, l);
    return out;
  }
  Module cur = n;
  for (int k = 1; k < i; ++k) cur = raw_syzygy(cur).kernel;
  RawSyzygy r = raw_syzygy(cur);
  out.cover = r.cover.module;
  out.projection = r.cover.map;
  out.syz = r.kernel;
  out.inclusion = r.inclusion;
  const auto h = hom_space(out.syz, l);
  if (h.empty()) return out;
  RowReducer rr(l.field(), flatten(h.front()).size());
  for (const auto& f : hom_space(out.cover, l)) rr.add(flatten(compose(f, out.inclusion)));
  for (const auto& f : h) {
    if (rr.add(flatten(f))) out.cocycles.push_back(f);
  }
  out.dim = out.cocycles.size();
  return out;
}

std::size_t ext_dim(int i, const Module& n, const Module& l) { return ext_space(i, n, l).dim; }

Module extension_module(const ExtSpace& e, const Module& l, const ModMap& phi) {
  const Module sum = direct_sum(l, e.cover);
  ModMap f;
  for (std::size_t x = 0; x < phi.blocks.size(); ++x) {
    const Field& F = *l.field();
    const Mat neg = e.inclusion.blocks[x].scaled(F.neg(F.one()));
    f.blocks.push_back(phi.blocks[x].vstack(neg));
  }
  return quotient(sum, image(sum, f));
}

Module ar_translate(const Module& m, TauDirection d) { return d == TauDirection::tau ? tau(m) : tau_inverse(m); }

ExceptionalReport exceptional_report(const Module& m) {
  ExceptionalReport r;
  for (int i = 1; i <= 4; ++i) r.ext[i - 1] = ext_dim(i, m, m);
  r.exceptional = r.ext[0] == 0 && r.ext[1] == 0 && r.ext[2] == 0 && r.ext[3] == 0;
  return r;
}

bool is_exceptional(const Module& m) {
  const auto r = exceptional_report(m);
  if (r.ext[0] == 0 && r.ext[1] == 0 && r.ext[2] == 0 && r.ext[3] != 0) {
    throw CheckFailed("Ext^4(M, M) is nonzero although Ext^1..3 vanish");
  }
  return r.exceptional;
}

std::string component_name(Component c) {
  switch (c) {
    case Component::P0: return "P0";
    case Component::R0: return "R0";
    case Component::X0: return "X0";
    case Component::R01: return "R01";
    case Component::X1: return "X1";
    case Component::R1: return "R1";
    case Component::I1: return "I1";
    case Component::unknown: return "unknown";
  }
  return "unknown";
}

Component classify_component(const Module& m, std::size_t cap) {
  if (cap == 0 || m.is_zero()) return Component::unknown;
  const Piece p = part_of(m);
  auto tube = [&] {
    return p == Piece::A0 ? Component::R0 : p == Piece::A1 ? Component::R1 : Component::R01;
  };
  Module cur = m;
  bool all_a0 = true;
  for (std::size_t k = 0; k < cap; ++k) {
    all_a0 = all_a0 && part_of(cur) == Piece::A0;
    if (is_projective(cur)) return all_a0 ? Component::P0 : (p == Piece::A1 ? Component::X1 : Component::X0);
    cur = tau(cur);
    if (indecomposables_isomorphic(cur, m)) return tube();
  }
  cur = m;
  bool all_a1 = true;
  for (std::size_t k = 0; k < cap; ++k) {
    all_a1 = all_a1 && part_of(cur) == Piece::A1;
    if (is_injective(cur)) return all_a1 ? Component::I1 : (p == Piece::A0 ? Component::X0 : Component::X1);
    cur = tau_inverse(cur);
  }
  return Component::unknown;
}

}  // namespace hallforge
