#include "hallforge/hall.hpp"

#include <limits>
#include <random>
#include <sstream>

#include "hallforge/errors.hpp"

namespace hallforge {

namespace {

std::vector<std::size_t> topological_vertices(const Algebra& a) {
  const std::size_t nv = a.num_vertices();
  std::vector<std::size_t> indeg(nv, 0), order;
  for (std::size_t g = 0; g < a.num_generators(); ++g) ++indeg[a.gen_tgt(g)];
  std::vector<bool> done(nv, false);
  while (order.size() < nv) {
    bool progress = false;
    for (std::size_t x = 0; x < nv; ++x) {
      if (done[x] || indeg[x] != 0) continue;
      done[x] = true;
      order.push_back(x);
      for (std::size_t g = 0; g < a.num_generators(); ++g) {
        if (a.gen_src(g) == x) --indeg[a.gen_tgt(g)];
      }
      progress = true;
    }
    if (!progress) throw InvalidArgument("submodule enumeration needs an acyclic Gabriel quiver");
  }
  return order;
}

BigInt power_of(std::uint64_t q, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

void for_each_submodule(const Module& m, const std::vector<std::size_t>* dimvec,
                        const std::function<void(const GradedSubspace&)>& emit, std::uint64_t cap) {
  const Algebra& a = *m.algebra();
  const std::size_t nv = a.num_vertices();
  if (dimvec) {
    if (dimvec->size() != nv) throw InvalidArgument("dimension vector has the wrong length");
    for (std::size_t x = 0; x < nv; ++x) {
      if ((*dimvec)[x] > m.dim_at(x)) return;
    }
  }
  const auto order = topological_vertices(a);
  std::vector<std::vector<std::size_t>> incoming(nv);
  for (std::size_t g = 0; g < a.num_generators(); ++g) incoming[a.gen_tgt(g)].push_back(g);
  GradedSubspace u = zero_subspace(m);
  std::uint64_t visited = 0;
  const FieldPtr& f = m.field();

  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == nv) {
      emit(u);
      return;
    }
    const std::size_t t = order[pos];
    const std::size_t n = m.dim_at(t);
    std::vector<Vec> forced;
    for (auto g : incoming[t]) {
      const std::size_t s = a.gen_src(g);
      for (std::size_t j = 0; j < u[s].dim(); ++j) forced.push_back(m.block(g).apply(u[s].basis().row(j)));
    }
    const Subspace w = Subspace::span(f, n, forced);
    const Mat qmap = w.quotient_map();
    std::vector<std::size_t> free;
    {
      std::vector<bool> piv(n, false);
      for (auto p : w.pivots()) piv[p] = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (!piv[j]) free.push_back(j);
      }
    }
    std::size_t lo = w.dim(), hi = n;
    if (dimvec) {
      if ((*dimvec)[t] < w.dim()) return;
      lo = hi = (*dimvec)[t];
    }
    for (std::size_t d = lo; d <= hi; ++d) {
      enumerate_subspaces(
          free.size(), d - w.dim(), f,
          [&](const Subspace& v) {
            if (++visited > cap) throw CapExceeded("submodule enumeration exceeds cap of " + std::to_string(cap));
            std::vector<Vec> rows;
            for (std::size_t i = 0; i < w.dim(); ++i) rows.push_back(w.basis().row_vec(i));
            for (std::size_t i = 0; i < v.dim(); ++i) {
              Vec r(n, 0);
              for (std::size_t k = 0; k < free.size(); ++k) r[free[k]] = v.basis()(i, k);
              rows.push_back(std::move(r));
            }
            const Subspace saved = u[t];
            u[t] = Subspace::span(f, n, rows);
            rec(pos + 1);
            u[t] = saved;
          },
          std::numeric_limits<std::uint64_t>::max());
    }
  };
  rec(0);
}

std::vector<GradedSubspace> submodules(const Module& m, std::uint64_t cap) {
  std::vector<GradedSubspace> out;
  for_each_submodule(m, nullptr, [&](const GradedSubspace& u) { out.push_back(u); }, cap);
  return out;
}

IsoMatcher::IsoMatcher(Module target, std::uint64_t seed) : t_(std::move(target)), seed_(seed) {
  end_dim_ = t_.is_zero() ? 0 : hom_dim(t_, t_);
}

bool IsoMatcher::matches(const Module& x) {
  if (x.dims() != t_.dims()) return false;
  if (t_.is_zero()) return true;
  const auto h = hom_space(x, t_);
  if (h.size() != end_dim_) return false;
  for (const auto& f : h) {
    if (f.is_bijective()) return true;
  }
  std::mt19937_64 rng(seed_);
  const Field& F = *t_.field();
  std::uniform_int_distribution<Elem> dist(0, F.q() - 1);
  std::vector<Elem> c(h.size());
  for (int trial = 0; trial < 8; ++trial) {
    for (auto& v : c) v = dist(rng);
    if (linear_combination(x, t_, h, c).is_bijective()) return true;
  }
  if (hom_dim(x, x) != end_dim_) return false;
  if (!dec_) dec_ = decompose(t_, seed_);
  if (dec_->num_pieces() == 1) return false;
  const auto dx = decompose(x, seed_);
  if (dx.summands.size() != dec_->summands.size()) return false;
  std::vector<bool> used(dx.summands.size(), false);
  for (const auto& s : dec_->summands) {
    bool found = false;
    for (std::size_t j = 0; j < dx.summands.size() && !found; ++j) {
      if (used[j] || dx.summands[j].multiplicity != s.multiplicity) continue;
      if (indecomposables_isomorphic(s.module, dx.summands[j].module)) found = used[j] = true;
    }
    if (!found) return false;
  }
  return true;
}

BigInt hall_number(const Module& m, const Module& n, const Module& l, std::uint64_t cap) {
  for (std::size_t x = 0; x < m.dims().size(); ++x) {
    if (m.dim_at(x) != n.dim_at(x) + l.dim_at(x)) return 0;
  }
  IsoMatcher ml(l), mn(n);
  BigInt count = 0;
  for_each_submodule(
      m, &l.dims(),
      [&](const GradedSubspace& u) {
        if (ml.matches(submodule(m, u)) && mn.matches(quotient(m, u))) ++count;
      },
      cap);
  return count;
}

// ---- registry ----

Registry::Registry(AlgebraPtr a, std::uint64_t seed) : alg_(std::move(a)), seed_(seed) {
  Class zero;
  zero.rep = Module::zero(alg_);
  zero.end_dim = 0;
  zero.aut = 1;
  classes_.push_back(zero);
  by_parts_[{}] = kZeroClass;
  exact_[zero.rep] = kZeroClass;
}

namespace {

std::string fingerprint(const Module& x, const LocalEnd& end) {
  std::ostringstream os;
  for (auto d : x.dims()) os << d << ',';
  os << '|' << end.end_dim << '|';
  for (auto d : top_dims(x)) os << d << ',';
  os << '|';
  for (auto d : socle_dims(x)) os << d << ',';
  return os.str();
}

}  // namespace

std::size_t Registry::indecomposable_index(const Module& x, const LocalEnd& end) {
  auto& bucket = buckets_[fingerprint(x, end)];
  for (auto i : bucket) {
    if (indecomposables_isomorphic(indec_[i].module, x)) return i;
  }
  indec_.push_back({x, end, ""});
  bucket.push_back(indec_.size() - 1);
  return indec_.size() - 1;
}

ClassId Registry::class_of_sum(std::vector<std::pair<std::size_t, std::size_t>> parts) {
  std::sort(parts.begin(), parts.end());
  std::vector<std::pair<std::size_t, std::size_t>> merged;
  for (const auto& p : parts) {
    if (p.second == 0) continue;
    if (!merged.empty() && merged.back().first == p.first) {
      merged.back().second += p.second;
    } else {
      merged.push_back(p);
    }
  }
  if (auto it = by_parts_.find(merged); it != by_parts_.end()) return it->second;
  std::vector<Module> ms;
  for (const auto& [i, k] : merged) {
    for (std::size_t j = 0; j < k; ++j) ms.push_back(indec_[i].module);
  }
  Class c;
  c.rep = direct_sum(ms);
  c.parts = merged;
  classes_.push_back(c);
  const ClassId id = classes_.size() - 1;
  by_parts_[merged] = id;
  exact_.emplace(classes_[id].rep, id);
  return id;
}

ClassId Registry::class_of_sum(ClassId a, ClassId b) {
  auto parts = summands(a);
  for (const auto& p : summands(b)) parts.push_back(p);
  return class_of_sum(parts);
}

ClassId Registry::class_of(const Module& m) {
  if (m.algebra() != alg_) throw InvalidArgument("module belongs to a different algebra");
  if (auto it = exact_.find(m); it != exact_.end()) return it->second;
  if (m.is_zero()) return kZeroClass;
  const auto d = decompose(m, seed_);
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  for (const auto& s : d.summands) parts.emplace_back(indecomposable_index(s.module, s.end), s.multiplicity);
  const ClassId id = class_of_sum(parts);
  exact_.emplace(m, id);
  return id;
}

bool Registry::is_indecomposable(ClassId c) const {
  const auto& p = summands(c);
  return p.size() == 1 && p[0].second == 1;
}

std::size_t Registry::end_dim(ClassId c) {
  auto& cl = classes_.at(c);
  if (!cl.end_dim) cl.end_dim = hom_dim(cl.rep, cl.rep);
  return *cl.end_dim;
}

BigInt Registry::aut_order(ClassId c) {
  const std::size_t e = end_dim(c);
  auto& cl = classes_.at(c);
  if (!cl.aut) {
    DecompResult d;
    for (const auto& [i, k] : cl.parts) d.summands.push_back({indec_[i].module, k, indec_[i].end});
    cl.aut = hallforge::aut_order(d, e, alg_->field()->q());
  }
  return *cl.aut;
}

void Registry::set_name(ClassId c, const std::string& name) {
  if (!is_indecomposable(c)) throw InvalidArgument("only indecomposable classes carry names");
  indec_[summands(c)[0].first].name = name;
}

std::string Registry::name(ClassId c) const {
  const auto& parts = summands(c);
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& [i, k] : parts) {
    if (!out.empty()) out += "+";
    out += indec_[i].name.empty() ? "X" + std::to_string(i) : indec_[i].name;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

// ---- Hall elements ----

void add_to(HallElement& x, const HallElement& y, const BigInt& scale) {
  for (const auto& [k, v] : y) {
    BigInt& c = x[k];
    c += v * scale;
    if (c == 0) x.erase(k);
  }
}

HallElement scaled(const HallElement& x, const BigInt& c) {
  HallElement out;
  if (c == 0) return out;
  for (const auto& [k, v] : x) out[k] = v * c;
  return out;
}

HallAlgebra::HallAlgebra(AlgebraPtr a, HallOptions opt) : reg_(std::move(a), opt.seed), opt_(opt) {}

const BigInt& HallAlgebra::hall_number(ClassId m, ClassId n, ClassId l) {
  const std::array<ClassId, 3> key{m, n, l};
  if (auto it = numbers_.find(key); it != numbers_.end()) return it->second;
  const Module mm = reg_.representative(m);
  const Module nn = reg_.representative(n);
  const Module ll = reg_.representative(l);
  return numbers_[key] = hallforge::hall_number(mm, nn, ll, opt_.cap_submodules);
}

const ExtCensus& HallAlgebra::census(ClassId n, ClassId l) {
  const auto key = std::make_pair(n, l);
  if (auto it = censuses_.find(key); it != censuses_.end()) return it->second;
  const Module nn = reg_.representative(n);
  const Module ll = reg_.representative(l);
  ExtCensus c;
  c.n = n;
  c.l = l;
  c.split = reg_.class_of_sum(n, l);
  const std::uint64_t qq = q();
  if (nn.is_zero() || ll.is_zero()) {
    c.total = 1;
    c.counts[c.split] = 1;
    return censuses_[key] = c;
  }
  const ExtSpace e = ext_space(1, nn, ll);
  c.ext_dim = e.dim;
  c.total = power_of(qq, e.dim);
  if (c.total > opt_.cap_cocycles) throw CapExceeded("Ext census needs " + c.total.str() + " cocycles, above the cap");
  c.counts[c.split] = 1;
  // E(λφ) ≅ E(φ) for λ ≠ 0, so one representative per line suffices
  std::vector<Elem> coeff(e.dim, 0);
  for (std::size_t lead = 0; lead < e.dim; ++lead) {
    const std::size_t rest = e.dim - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < rest; ++i) count *= qq;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::fill(coeff.begin(), coeff.end(), 0);
      coeff[lead] = 1;
      std::uint64_t t = code;
      for (std::size_t i = lead + 1; i < e.dim; ++i) {
        coeff[i] = static_cast<Elem>(t % qq);
        t /= qq;
      }
      const ModMap phi = linear_combination(e.syz, ll, e.cocycles, coeff);
      const ClassId mid = reg_.class_of(extension_module(e, ll, phi));
      c.counts[mid] += qq - 1;
    }
  }
  return censuses_[key] = c;
}

BigInt HallAlgebra::riedtmann_value(ClassId m, ClassId n, ClassId l) {
  const auto& c = census(n, l);
  auto it = c.counts.find(m);
  if (it == c.counts.end()) return 0;
  const BigInt num = it->second * reg_.aut_order(m);
  const BigInt den = reg_.aut_order(n) * reg_.aut_order(l) *
                     power_of(q(), hom_dim(reg_.representative(n), reg_.representative(l)));
  if (num % den != 0) throw CheckFailed("Riedtmann quotient is not an integer for " + reg_.name(m));
  return num / den;
}

const HallElement& HallAlgebra::basis_product(ClassId n, ClassId l) {
  const auto key = std::make_pair(n, l);
  if (auto it = products_.find(key); it != products_.end()) return it->second;
  HallElement out;
  if (n == kZeroClass || l == kZeroClass) {
    out[n == kZeroClass ? l : n] = 1;
    return products_[key] = out;
  }
  const auto cen = census(n, l);
  for (const auto& [m, cnt] : cen.counts) {
    const BigInt g = method_ == Method::enumerate ? hall_number(m, n, l) : riedtmann_value(m, n, l);
    if (g != 0) out[m] = g;
  }
  return products_[key] = out;
}

HallElement HallAlgebra::mul(const HallElement& x, const HallElement& y) {
  HallElement out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      const HallElement p = basis_product(a, b);
      add_to(out, p, ca * cb);
    }
  }
  return out;
}

std::string HallAlgebra::format(const HallElement& x) const {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : x) {
    if (!out.empty()) out += " + ";
    out += v.str() + "*u[" + reg_.name(k) + "]";
  }
  return out;
}

RiedtmannReport riedtmann_check(HallAlgebra& h, const Module& n, const Module& l) {
  RiedtmannReport r;
  auto& reg = h.registry();
  r.n = reg.class_of(n);
  r.l = reg.class_of(l);
  r.aut_n = reg.aut_order(r.n);
  r.aut_l = reg.aut_order(r.l);
  r.hom = power_of(h.q(), hom_dim(n, l));
  const auto cen = h.census(r.n, r.l);
  for (const auto& [m, cnt] : cen.counts) {
    RiedtmannRow row;
    row.m = m;
    row.ext_classes = cnt;
    row.aut_m = reg.aut_order(m);
    row.brute = h.hall_number(m, r.n, r.l);
    const BigInt num = cnt * row.aut_m, den = r.aut_n * r.aut_l * r.hom;
    row.formula = num % den == 0 ? BigInt(num / den) : BigInt(-1);
    row.agrees = num % den == 0 && row.formula == row.brute;
    r.ok = r.ok && row.agrees;
    r.rows.push_back(row);
  }
  return r;
}

TriangularReport triangular_factor(HallAlgebra& h, const Module& m) {
  TriangularReport r;
  const AlgebraPtr& a = m.algebra();
  std::vector<Module> p0, p01, p1;
  if (!m.is_zero()) {
    const auto d = decompose(m, h.options().seed);
    for (const auto& piece : d.pieces) {
      switch (part_of(piece)) {
        case Piece::A0: p0.push_back(piece); break;
        case Piece::A01: p01.push_back(piece); break;
        case Piece::A1: p1.push_back(piece); break;
      }
    }
  }
  auto sum = [&](const std::vector<Module>& v) { return v.empty() ? Module::zero(a) : direct_sum(v); };
  r.m0 = sum(p0);
  r.m01 = sum(p01);
  r.m1 = sum(p1);
  auto& reg = h.registry();
  const ClassId c0 = reg.class_of(r.m0), c01 = reg.class_of(r.m01), c1 = reg.class_of(r.m1);
  const ClassId cm = reg.class_of(m);
  const ClassId tail = reg.class_of_sum(c01, c1);
  r.g_inner = h.hall_number(tail, c01, c1);
  r.g_outer = h.hall_number(cm, c0, tail);
  r.product = h.mul(h.u(c0), h.mul(h.u(c01), h.u(c1)));
  r.product_is_m = r.product == h.u(cm);
  return r;
}

}  // namespace hallforge
