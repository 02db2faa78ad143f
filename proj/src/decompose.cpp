#include "hallforge/decompose.hpp"

#include <algorithm>
#include <random>

#include "hallforge/errors.hpp"

namespace hallforge {

namespace {

// ---- univariate polynomials over a finite field, ascending coefficients ----

using Poly = std::vector<Elem>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_sub(const Field& F, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  trim(c);
  return c;
}

// quotient and remainder of a by nonzero b
std::pair<Poly, Poly> poly_divmod(const Field& F, Poly a, const Poly& b) {
  trim(a);
  if (degree(a) < degree(b)) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  const Elem inv_lead = F.inv(b.back());
  while (degree(a) >= degree(b) && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Elem c = F.mul(a.back(), inv_lead);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly monic(const Field& F, Poly a) {
  trim(a);
  if (a.empty()) return a;
  const Elem inv = F.inv(a.back());
  for (auto& x : a) x = F.mul(x, inv);
  return a;
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Poly derivative(const Field& F, const Poly& a) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(F.from_int(static_cast<std::int64_t>(i % F.p())), a[i]));
  trim(d);
  return d;
}

// a(x) = b(x)^p when a' = 0; b_i = a_{pi}^{1/p} with y^{1/p} = y^{q/p}
Poly pth_root(const Field& F, const Poly& a) {
  Poly b;
  for (std::size_t i = 0; i < a.size(); i += F.p()) b.push_back(F.pow(a[i], F.q() / F.p()));
  trim(b);
  return b;
}

// product of the distinct monic irreducible factors
Poly squarefree_part(const Field& F, const Poly& m) {
  if (degree(m) <= 0) return {1};
  const Poly d = derivative(F, m);
  if (d.empty()) return squarefree_part(F, pth_root(F, m));
  const Poly g = poly_gcd(F, m, d);
  Poly r = monic(F, poly_divmod(F, m, g).first);
  if (degree(g) <= 0) return r;
  const Poly rg = squarefree_part(F, g);
  const Poly common = poly_gcd(F, r, rg);
  return monic(F, poly_divmod(F, poly_mul(F, r, rg), common).first);
}

Poly poly_powmod(const Field& F, Poly base, std::uint64_t e, const Poly& mod) {
  Poly result{1};
  base = poly_divmod(F, base, mod).second;
  while (e > 0) {
    if (e & 1) result = poly_divmod(F, poly_mul(F, result, base), mod).second;
    base = poly_divmod(F, poly_mul(F, base, base), mod).second;
    e >>= 1;
  }
  return result;
}

// A nontrivial monic factor of the squarefree polynomial r, or empty when r is irreducible.
Poly nontrivial_factor(const Field& F, const Poly& r) {
  const int n = degree(r);
  if (n <= 1) return {};
  Poly xq{0, 1};  // x^{q^i} mod r
  for (int i = 1; 2 * i <= n; ++i) {
    xq = poly_powmod(F, xq, F.q(), r);
    const Poly h = poly_gcd(F, r, poly_sub(F, xq, Poly{0, 1}));
    if (degree(h) > 0 && degree(h) < n) return h;
    if (degree(h) == n) {
      // every irreducible factor has degree dividing i; find one of degree i exactly
      if (i == 1) {
        for (Elem c = 0; c < F.q(); ++c) {
          Elem v = 0;
          for (std::size_t k = r.size(); k-- > 0;) v = F.add(F.mul(v, c), r[k]);
          if (v == 0) return {F.neg(c), 1};
        }
      }
      std::uint64_t count = 1;
      for (int k = 0; k < i; ++k) count *= F.q();
      for (std::uint64_t code = 0; code < count; ++code) {
        Poly g(i + 1, 0);
        std::uint64_t t = code;
        for (int k = 0; k < i; ++k) {
          g[k] = static_cast<Elem>(t % F.q());
          t /= F.q();
        }
        g[i] = 1;
        if (poly_divmod(F, r, g).second.empty()) return g;
      }
      throw Error("equal-degree factorization failed");
    }
  }
  return {};
}

// ---- module endomorphisms ----

ModMap add_scalar(const ModMap& f, Elem c) {
  ModMap out = f;
  for (auto& b : out.blocks) {
    const Field& F = *b.field();
    for (std::size_t i = 0; i < b.rows(); ++i) b(i, i) = F.add(b(i, i), c);
  }
  return out;
}

ModMap scaled(const ModMap& f, Elem c) {
  ModMap out = f;
  for (auto& b : out.blocks) b = b.scaled(c);
  return out;
}

ModMap map_sum(const ModMap& a, const ModMap& b) {
  ModMap out = a;
  for (std::size_t x = 0; x < out.blocks.size(); ++x) out.blocks[x] = out.blocks[x] + b.blocks[x];
  return out;
}

ModMap eval_poly(const Poly& p, const ModMap& f) {
  ModMap acc = scaled(f, 0);
  for (std::size_t i = p.size(); i-- > 0;) acc = add_scalar(compose(acc, f), p[i]);
  return acc;
}

FieldPtr map_field(const ModMap& f) {
  for (const auto& b : f.blocks) {
    if (b.field()) return b.field();
  }
  return nullptr;
}

Poly minimal_polynomial(const Field& F, const ModMap& f) {
  std::vector<Vec> powers;
  ModMap cur = add_scalar(scaled(f, 0), 1);
  const std::size_t len = flatten(cur).size();
  const FieldPtr fp = map_field(f);
  RowReducer rr(fp, len);
  while (true) {
    Vec v = flatten(cur);
    Vec probe = v;
    if (rr.reduce(probe)) {
      // v = sum c_i powers_i
      Mat sys(fp, len, powers.size());
      for (std::size_t j = 0; j < powers.size(); ++j) {
        for (std::size_t i = 0; i < len; ++i) sys(i, j) = powers[j][i];
      }
      auto c = solve(sys, v);
      Poly m(powers.size() + 1, 0);
      for (std::size_t i = 0; i < powers.size(); ++i) m[i] = F.neg((*c)[i]);
      m.back() = 1;
      return m;
    }
    rr.add(v);
    powers.push_back(std::move(v));
    cur = compose(cur, f);
  }
}

std::size_t max_dim(const ModMap& g) {
  std::size_t n = 0;
  for (const auto& b : g.blocks) n = std::max(n, b.rows());
  return n;
}

struct Analysis {
  bool split = false;
  ModMap projector;  // g^N with 0 < rank < dim when split
  LocalEnd end;
};

ModMap random_element(const std::vector<ModMap>& basis, const Field& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> d(0, F.q() - 1);
  ModMap acc = scaled(basis.front(), 0);
  for (const auto& b : basis) acc = map_sum(acc, scaled(b, d(rng)));
  return acc;
}

// Two-sided ideal of End generated by gens; returns its basis (flattened) or
// nullopt when it is not nilpotent.
std::optional<std::size_t> nilpotent_ideal_dim(const std::vector<ModMap>& end_basis, const std::vector<ModMap>& gens) {
  if (gens.empty()) return 0;
  const FieldPtr f = map_field(end_basis.front());
  const std::size_t len = flatten(end_basis.front()).size();
  RowReducer rr(f, len);
  std::vector<ModMap> ideal;
  std::vector<ModMap> queue = gens;
  while (!queue.empty()) {
    ModMap j = std::move(queue.back());
    queue.pop_back();
    if (!rr.add(flatten(j))) continue;
    for (const auto& b : end_basis) {
      queue.push_back(compose(b, j));
      queue.push_back(compose(j, b));
    }
    ideal.push_back(std::move(j));
  }
  // powers of the ideal must reach zero
  std::vector<ModMap> power = ideal;
  for (std::size_t step = 0; step <= len + 1; ++step) {
    RowReducer next(f, len);
    std::vector<ModMap> prod;
    for (const auto& a : power) {
      for (const auto& b : ideal) {
        ModMap c = compose(a, b);
        if (next.add(flatten(c))) prod.push_back(std::move(c));
      }
    }
    if (prod.empty()) return ideal.size();
    if (prod.size() == power.size()) return std::nullopt;
    power = std::move(prod);
  }
  return std::nullopt;
}

bool simple_top_or_socle(const Module& x) {
  auto count = [](const std::vector<std::size_t>& d) {
    std::size_t s = 0;
    for (auto v : d) s += v;
    return s;
  };
  return count(top_dims(x)) == 1 || count(socle_dims(x)) == 1;
}

Analysis analyse(const Module& x, std::mt19937_64& rng, std::uint64_t cap) {
  Analysis out;
  const auto basis = hom_space(x, x);
  const std::size_t e = basis.size();
  const Field& F = *x.field();
  out.end.end_dim = e;
  if (e == 1 || simple_top_or_socle(x)) {
    // End maps onto the scalars of the simple top (socle) with nilpotent kernel
    out.end.rad_dim = e - 1;
    out.end.residue_degree = 1;
    return out;
  }
  const std::size_t dim = x.dim();
  std::vector<ModMap> jgens;
  std::vector<int> theta_degrees;
  auto process = [&](const ModMap& f) -> bool {
    if (f.is_zero()) return false;
    const Poly r = squarefree_part(F, minimal_polynomial(F, f));
    const Poly h = nontrivial_factor(F, r);
    if (!h.empty()) {
      ModMap p = fitting_power(eval_poly(h, f));
      const std::size_t rk = p.rank();
      if (rk > 0 && rk < dim) {
        out.split = true;
        out.projector = std::move(p);
        return true;
      }
    }
    ModMap j = eval_poly(r, f);
    if (!j.is_zero()) jgens.push_back(std::move(j));
    if (degree(r) > 1) theta_degrees.push_back(degree(r));
    return false;
  };
  auto certify = [&]() -> bool {
    auto jd = nilpotent_ideal_dim(basis, jgens);
    if (!jd) return false;
    const std::size_t d = e - *jd;
    if (d == 1 || std::find(theta_degrees.begin(), theta_degrees.end(), static_cast<int>(d)) != theta_degrees.end()) {
      out.end.rad_dim = *jd;
      out.end.residue_degree = d;
      return true;
    }
    return false;
  };
  for (const auto& b : basis) {
    if (process(b)) return out;
  }
  if (certify()) return out;
  for (int t = 0; t < 24; ++t) {
    if (process(random_element(basis, F, rng))) return out;
    if (t % 4 == 3 && certify()) return out;
  }
  if (certify()) return out;

  // exhaustive fallback
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < e; ++i) {
    total *= F.q();
    if (total > cap) throw Undecided("locality of an endomorphism ring of dimension " + std::to_string(e) + " over " + F.name() + " is not certified within the cap");
  }
  std::uint64_t nilpotent = 0;
  std::vector<Elem> digits(e, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < e; ++i) {
      digits[i] = static_cast<Elem>(c % F.q());
      c /= F.q();
    }
    ModMap f = linear_combination(x, x, basis, digits);
    ModMap p = fitting_power(f);
    const std::size_t rk = p.rank();
    if (rk > 0 && rk < dim) {
      out.split = true;
      out.projector = std::move(p);
      return out;
    }
    if (rk == 0) ++nilpotent;
  }
  std::size_t rad = 0;
  while (nilpotent > 1) {
    nilpotent /= F.q();
    ++rad;
  }
  out.end.rad_dim = rad;
  out.end.residue_degree = e - rad;
  return out;
}

}  // namespace

ModMap fitting_power(const ModMap& g) {
  ModMap out;
  const std::size_t n = max_dim(g);
  for (const auto& b : g.blocks) {
    Mat result = Mat::identity(b.field(), b.rows());
    Mat base = b;
    std::size_t e = n;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    out.blocks.push_back(std::move(result));
  }
  return out;
}

bool indecomposables_isomorphic(const Module& x, const Module& y) {
  if (x.dims() != y.dims()) return false;
  if (x.is_zero()) return true;
  for (const auto& f : hom_space(x, y)) {
    if (f.is_bijective()) return true;
  }
  return false;
}

DecompResult decompose(const Module& m, std::uint64_t seed, std::uint64_t cap) {
  DecompResult out;
  std::mt19937_64 rng(seed);
  struct Work {
    Module module;
    ModMap incl;
  };
  std::vector<Work> stack;
  if (!m.is_zero()) stack.push_back({m, identity_map(m)});
  std::vector<ModMap> incls;
  std::vector<LocalEnd> ends;
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    Analysis a = analyse(w.module, rng, cap);
    if (!a.split) {
      out.pieces.push_back(w.module);
      incls.push_back(w.incl);
      ends.push_back(a.end);
      continue;
    }
    const GradedSubspace ker = kernel(w.module, a.projector);
    const GradedSubspace img = image(w.module, a.projector);
    // push the image first so the kernel part is processed first
    stack.push_back({submodule(w.module, img), compose(w.incl, inclusion_map(w.module, img))});
    stack.push_back({submodule(w.module, ker), compose(w.incl, inclusion_map(w.module, ker))});
  }
  for (std::size_t i = 0; i < out.pieces.size(); ++i) {
    std::size_t cls = out.summands.size();
    for (std::size_t s = 0; s < out.summands.size(); ++s) {
      if (indecomposables_isomorphic(out.summands[s].module, out.pieces[i])) {
        cls = s;
        break;
      }
    }
    if (cls == out.summands.size()) out.summands.push_back({out.pieces[i], 0, ends[i]});
    ++out.summands[cls].multiplicity;
    out.piece_class.push_back(cls);
  }
  // witness: direct sum of the pieces -> m
  for (std::size_t x = 0; x < m.dims().size(); ++x) {
    Mat b(m.field(), m.dim_at(x), 0);
    for (const auto& inc : incls) b = b.hstack(inc.blocks[x]);
    out.witness.blocks.push_back(std::move(b));
  }
  return out;
}

bool is_indecomposable(const Module& m, std::uint64_t seed, std::uint64_t cap) {
  if (m.is_zero()) return false;
  std::mt19937_64 rng(seed);
  return !analyse(m, rng, cap).split;
}

LocalEnd local_end(const Module& m, std::uint64_t seed, std::uint64_t cap) {
  if (m.is_zero()) throw InvalidArgument("the zero module is not indecomposable");
  std::mt19937_64 rng(seed);
  auto a = analyse(m, rng, cap);
  if (a.split) throw InvalidArgument("module is decomposable");
  return a.end;
}

bool is_isomorphic(const Module& m, const Module& n, std::uint64_t seed, std::uint64_t cap) {
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  const auto h = hom_space(m, n);
  for (const auto& f : h) {
    if (f.is_bijective()) return true;
  }
  if (h.empty()) return false;
  std::mt19937_64 rng(seed);
  const Field& F = *m.field();
  for (int t = 0; t < 8; ++t) {
    if (random_element(h, F, rng).is_bijective()) return true;
  }
  if (hom_dim(m, m) != h.size() || hom_dim(n, n) != h.size()) return false;
  const auto dm = decompose(m, seed, cap);
  if (dm.num_pieces() == 1) return false;
  const auto dn = decompose(n, seed, cap);
  if (dm.summands.size() != dn.summands.size()) return false;
  std::vector<bool> used(dn.summands.size(), false);
  for (const auto& s : dm.summands) {
    bool found = false;
    for (std::size_t j = 0; j < dn.summands.size() && !found; ++j) {
      if (used[j] || dn.summands[j].multiplicity != s.multiplicity) continue;
      if (indecomposables_isomorphic(s.module, dn.summands[j].module)) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

BigInt gl_order(std::size_t n, const BigInt& q) {
  BigInt qn = 1;
  for (std::size_t i = 0; i < n; ++i) qn *= q;
  BigInt out = 1, qk = 1;
  for (std::size_t k = 0; k < n; ++k) {
    out *= qn - qk;
    qk *= q;
  }
  return out;
}

BigInt aut_order(const DecompResult& d, std::size_t end_dim, std::uint64_t q) {
  std::size_t semisimple = 0;
  BigInt out = 1;
  for (const auto& s : d.summands) {
    semisimple += s.multiplicity * s.multiplicity * s.end.residue_degree;
    BigInt qd = 1;
    for (std::size_t i = 0; i < s.end.residue_degree; ++i) qd *= q;
    out *= gl_order(s.multiplicity, qd);
  }
  if (semisimple > end_dim) throw CheckFailed("inconsistent endomorphism data");
  for (std::size_t i = 0; i < end_dim - semisimple; ++i) out *= q;
  return out;
}

BigInt aut_order(const Module& m, std::uint64_t seed, std::uint64_t cap) {
  if (m.is_zero()) return 1;
  return aut_order(decompose(m, seed, cap), hom_dim(m, m), m.field()->q());
}

}  // namespace hallforge
