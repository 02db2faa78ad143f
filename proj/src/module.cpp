#include "hallforge/module.hpp"

#include "hallforge/errors.hpp"

namespace hallforge {

namespace {

std::vector<std::size_t> free_columns(const Subspace& s) {
  std::vector<bool> piv(s.ambient(), false);
  for (auto p : s.pivots()) piv[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < s.ambient(); ++j) {
    if (!piv[j]) out.push_back(j);
  }
  return out;
}

// Position of each basis element inside its corner list.
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

}  // namespace

Module::Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> blocks)
    : alg_(std::move(alg)), dims_(std::move(dims)), blocks_(std::move(blocks)) {
  if (dims_.size() != alg_->num_vertices()) throw InvalidArgument("dimension vector length does not match the vertex count");
  if (blocks_.size() != alg_->num_generators()) throw InvalidArgument("one block per generator is required");
  offsets_.resize(dims_.size());
  for (std::size_t x = 0; x < dims_.size(); ++x) {
    offsets_[x] = total_;
    total_ += dims_[x];
  }
  for (std::size_t g = 0; g < blocks_.size(); ++g) {
    const auto& b = blocks_[g];
    if (b.rows() != dims_[alg_->gen_tgt(g)] || b.cols() != dims_[alg_->gen_src(g)]) {
      throw InvalidArgument("generator block has the wrong shape");
    }
    if (b.rows() * b.cols() > 0 && !same_field(b.field(), alg_->field())) throw InvalidArgument("generator block over the wrong field");
  }
}

Module Module::zero(AlgebraPtr alg) {
  std::vector<Mat> blocks;
  for (std::size_t g = 0; g < alg->num_generators(); ++g) blocks.emplace_back(alg->field(), 0, 0);
  std::vector<std::size_t> dims(alg->num_vertices(), 0);
  return Module(std::move(alg), std::move(dims), std::move(blocks));
}

const Mat& Module::corner_action(std::size_t b) const {
  if (corner_cache_.empty()) {
    corner_cache_.resize(alg_->dim());
    corner_ready_.assign(alg_->dim(), false);
  }
  if (corner_ready_[b]) return corner_cache_[b];
  const std::size_t s = alg_->src(b), t = alg_->tgt(b);
  Mat out(field(), dims_[t], dims_[s]);
  if (alg_->is_idempotent_basis(b)) {
    out = Mat::identity(field(), dims_[t]);
  } else if (dims_[t] > 0 && dims_[s] > 0) {
    for (const auto& [c, word] : alg_->word(b).terms) {
      Mat w = blocks_[word.front()];
      for (std::size_t i = 1; i < word.size(); ++i) w = blocks_[word[i]] * w;
      out = out + w.scaled(c);
    }
  }
  corner_cache_[b] = std::move(out);
  corner_ready_[b] = true;
  return corner_cache_[b];
}

Mat Module::action(std::size_t b) const {
  Mat full(field(), total_, total_);
  const Mat& c = corner_action(b);
  const std::size_t r0 = offsets_[alg_->tgt(b)], c0 = offsets_[alg_->src(b)];
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) full(r0 + i, c0 + j) = c(i, j);
  }
  return full;
}

std::vector<Mat> Module::actions() const {
  std::vector<Mat> out;
  for (std::size_t b = 0; b < alg_->dim(); ++b) out.push_back(action(b));
  return out;
}

bool Module::satisfies_relations() const {
  const Algebra& a = *alg_;
  const Field& F = *field();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const std::size_t t = a.tgt(i), s = a.src(j);
      Mat rhs(field(), dims_[t], dims_[s]);
      for (const auto& term : a.mult(i, j)) rhs = rhs + corner_action(term.k).scaled(term.c);
      if (a.src(i) != a.tgt(j)) {
        if (!rhs.is_zero()) return false;
        continue;
      }
      if (!(corner_action(i) * corner_action(j) == rhs)) return false;
    }
  }
  (void)F;
  return true;
}

bool Module::operator==(const Module& o) const {
  return (alg_ == o.alg_ || (alg_ && o.alg_ && alg_->name() == o.alg_->name() && same_field(field(), o.field()))) &&
         dims_ == o.dims_ && blocks_ == o.blocks_;
}

std::size_t Module::hash() const {
  std::size_t h = 0;
  for (auto d : dims_) h = h * 31 + d;
  for (const auto& b : blocks_) {
    for (auto x : b.data()) h = h * 1000003u ^ x;
  }
  return h;
}

Mat ModMap::full() const {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  FieldPtr f;
  for (const auto& b : blocks) {
    if (b.field()) f = b.field();
  }
  Mat out(f, r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

std::size_t ModMap::rank() const {
  std::size_t r = 0;
  for (const auto& b : blocks) r += hallforge::rank(b);
  return r;
}

bool ModMap::is_bijective() const {
  for (const auto& b : blocks) {
    if (b.rows() != b.cols() || hallforge::rank(b) != b.rows()) return false;
  }
  return true;
}

bool ModMap::is_zero() const {
  for (const auto& b : blocks) {
    if (!b.is_zero()) return false;
  }
  return true;
}

ModMap compose(const ModMap& g, const ModMap& f) {
  ModMap out;
  for (std::size_t x = 0; x < f.blocks.size(); ++x) out.blocks.push_back(g.blocks[x] * f.blocks[x]);
  return out;
}

Vec flatten(const ModMap& f) {
  Vec v;
  for (const auto& b : f.blocks) v.insert(v.end(), b.data().begin(), b.data().end());
  return v;
}

ModMap identity_map(const Module& m) {
  ModMap out;
  for (std::size_t x = 0; x < m.dims().size(); ++x) out.blocks.push_back(Mat::identity(m.field(), m.dim_at(x)));
  return out;
}

ModMap zero_map(const Module& src, const Module& dst) {
  ModMap out;
  for (std::size_t x = 0; x < src.dims().size(); ++x) out.blocks.emplace_back(src.field(), dst.dim_at(x), src.dim_at(x));
  return out;
}

ModMap linear_combination(const Module& src, const Module& dst, const std::vector<ModMap>& basis, std::span<const Elem> coeffs) {
  ModMap out = zero_map(src, dst);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t x = 0; x < out.blocks.size(); ++x) out.blocks[x] = out.blocks[x] + basis[i].blocks[x].scaled(coeffs[i]);
  }
  return out;
}

bool is_homomorphism(const Module& src, const Module& dst, const ModMap& f) {
  const Algebra& a = *src.algebra();
  for (std::size_t g = 0; g < a.num_generators(); ++g) {
    const std::size_t s = a.gen_src(g), t = a.gen_tgt(g);
    if (!(f.blocks[t] * src.block(g) == dst.block(g) * f.blocks[s])) return false;
  }
  return true;
}

Module simple_module(const AlgebraPtr& a, std::size_t x) {
  if (x >= a->num_vertices()) throw InvalidArgument("unknown vertex");
  std::vector<std::size_t> dims(a->num_vertices(), 0);
  dims[x] = 1;
  std::vector<Mat> blocks;
  for (std::size_t g = 0; g < a->num_generators(); ++g) blocks.emplace_back(a->field(), dims[a->gen_tgt(g)], dims[a->gen_src(g)]);
  return Module(a, std::move(dims), std::move(blocks));
}

Module projective_module(const AlgebraPtr& a, std::size_t x) {
  if (x >= a->num_vertices()) throw InvalidArgument("unknown vertex");
  const std::size_t nv = a->num_vertices();
  const auto pos = corner_positions(*a);
  std::vector<std::size_t> dims(nv);
  for (std::size_t t = 0; t < nv; ++t) dims[t] = a->corner(t, x).size();
  std::vector<Mat> blocks;
  for (std::size_t g = 0; g < a->num_generators(); ++g) {
    const std::size_t s = a->gen_src(g), t = a->gen_tgt(g);
    Mat b(a->field(), dims[t], dims[s]);
    const auto& cols = a->corner(s, x);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (const auto& term : a->mult(a->generator(g), cols[j])) b(pos[term.k], j) = a->field()->add(b(pos[term.k], j), term.c);
    }
    blocks.push_back(std::move(b));
  }
  return Module(a, std::move(dims), std::move(blocks));
}

Module injective_module(const AlgebraPtr& a, std::size_t x) {
  if (x >= a->num_vertices()) throw InvalidArgument("unknown vertex");
  const std::size_t nv = a->num_vertices();
  const auto pos = corner_positions(*a);
  std::vector<std::size_t> dims(nv);
  for (std::size_t s = 0; s < nv; ++s) dims[s] = a->corner(x, s).size();
  std::vector<Mat> blocks;
  for (std::size_t g = 0; g < a->num_generators(); ++g) {
    const std::size_t s = a->gen_src(g), t = a->gen_tgt(g);
    Mat b(a->field(), dims[t], dims[s]);
    // (g.phi_b)(c) = phi_b(c g): entry (c, b) is the coefficient of b in c.g
    const auto& rows = a->corner(x, t);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (const auto& term : a->mult(rows[i], a->generator(g))) b(i, pos[term.k]) = a->field()->add(b(i, pos[term.k]), term.c);
    }
    blocks.push_back(std::move(b));
  }
  return Module(a, std::move(dims), std::move(blocks));
}

Module standard_module(const AlgebraPtr& a, StandardKind kind, std::size_t vertex) {
  switch (kind) {
    case StandardKind::simple: return simple_module(a, vertex);
    case StandardKind::projective: return projective_module(a, vertex);
    case StandardKind::injective: return injective_module(a, vertex);
  }
  throw InvalidArgument("unknown module kind");
}

std::vector<ModMap> hom_space(const Module& m, const Module& n) {
  if (m.algebra() != n.algebra() && !(m.algebra()->name() == n.algebra()->name() && same_field(m.field(), n.field()))) {
    throw InvalidArgument("hom_space: modules over different algebras");
  }
  const Algebra& a = *m.algebra();
  const std::size_t nv = a.num_vertices();
  std::vector<std::size_t> var_off(nv + 1, 0);
  for (std::size_t x = 0; x < nv; ++x) var_off[x + 1] = var_off[x] + n.dim_at(x) * m.dim_at(x);
  const std::size_t unknowns = var_off[nv];
  std::vector<ModMap> out;
  if (unknowns == 0) return out;
  std::size_t eqs = 0;
  for (std::size_t g = 0; g < a.num_generators(); ++g) eqs += n.dim_at(a.gen_tgt(g)) * m.dim_at(a.gen_src(g));
  const Field& F = *m.field();
  Mat sys(m.field(), eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t g = 0; g < a.num_generators(); ++g) {
    const std::size_t s = a.gen_src(g), t = a.gen_tgt(g);
    const Mat& Mg = m.block(g);
    const Mat& Ng = n.block(g);
    const std::size_t nt = n.dim_at(t), ms = m.dim_at(s), mt = m.dim_at(t), ns = n.dim_at(s);
    // (F_t M_g - N_g F_s)_{ij} = 0
    for (std::size_t i = 0; i < nt; ++i) {
      for (std::size_t j = 0; j < ms; ++j, ++row) {
        for (std::size_t k = 0; k < mt; ++k) {
          const Elem c = Mg(k, j);
          if (c != 0) sys(row, var_off[t] + i * mt + k) = F.add(sys(row, var_off[t] + i * mt + k), c);
        }
        for (std::size_t k = 0; k < ns; ++k) {
          const Elem c = Ng(i, k);
          if (c != 0) sys(row, var_off[s] + k * ms + j) = F.sub(sys(row, var_off[s] + k * ms + j), c);
        }
      }
    }
  }
  const Mat ker = kernel(sys);
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    ModMap f;
    for (std::size_t x = 0; x < nv; ++x) {
      Mat b(m.field(), n.dim_at(x), m.dim_at(x));
      for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = ker(r, var_off[x] + i * b.cols() + j);
      }
      f.blocks.push_back(std::move(b));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_space(m, n).size(); }

Module direct_sum(const std::vector<Module>& ms) {
  if (ms.empty()) throw InvalidArgument("direct_sum of an empty list needs an algebra");
  const AlgebraPtr& a = ms.front().algebra();
  const std::size_t nv = a->num_vertices();
  std::vector<std::size_t> dims(nv, 0);
  for (const auto& m : ms) {
    for (std::size_t x = 0; x < nv; ++x) dims[x] += m.dim_at(x);
  }
  std::vector<Mat> blocks;
  for (std::size_t g = 0; g < a->num_generators(); ++g) {
    const std::size_t s = a->gen_src(g), t = a->gen_tgt(g);
    Mat b(a->field(), dims[t], dims[s]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& m : ms) {
      const Mat& mb = m.block(g);
      for (std::size_t i = 0; i < mb.rows(); ++i) {
        for (std::size_t j = 0; j < mb.cols(); ++j) b(r0 + i, c0 + j) = mb(i, j);
      }
      r0 += m.dim_at(t);
      c0 += m.dim_at(s);
    }
    blocks.push_back(std::move(b));
  }
  return Module(a, std::move(dims), std::move(blocks));
}

Module direct_sum(const Module& a, const Module& b) { return direct_sum(std::vector<Module>{a, b}); }

Module power(const Module& m, std::size_t k) {
  if (k == 0) return Module::zero(m.algebra());
  return direct_sum(std::vector<Module>(k, m));
}

GradedSubspace zero_subspace(const Module& m) {
  GradedSubspace u;
  for (auto d : m.dims()) u.emplace_back(m.field(), d);
  return u;
}

GradedSubspace full_subspace(const Module& m) {
  GradedSubspace u;
  for (auto d : m.dims()) u.push_back(Subspace::full(m.field(), d));
  return u;
}

bool is_stable(const Module& m, const GradedSubspace& u) {
  const Algebra& a = *m.algebra();
  for (std::size_t g = 0; g < a.num_generators(); ++g) {
    const std::size_t s = a.gen_src(g), t = a.gen_tgt(g);
    for (std::size_t j = 0; j < u[s].dim(); ++j) {
      if (!u[t].contains(m.block(g).apply(u[s].basis().row(j)))) return false;
    }
  }
  return true;
}

Module submodule(const Module& m, const GradedSubspace& u) {
  const Algebra& a = *m.algebra();
  std::vector<std::size_t> dims;
  for (const auto& s : u) dims.push_back(s.dim());
  std::vector<Mat> blocks;
  for (std::size_t g = 0; g < a.num_generators(); ++g) {
    const std::size_t s = a.gen_src(g), t = a.gen_tgt(g);
    Mat b(m.field(), dims[t], dims[s]);
    for (std::size_t j = 0; j < dims[s]; ++j) {
      const Vec w = m.block(g).apply(u[s].basis().row(j));
      const Vec c = u[t].coordinates(w);
      for (std::size_t i = 0; i < dims[t]; ++i) b(i, j) = c[i];
    }
    blocks.push_back(std::move(b));
  }
  return Module(m.algebra(), std::move(dims), std::move(blocks));
}

Module quotient(const Module& m, const GradedSubspace& u) {
  const Algebra& a = *m.algebra();
  std::vector<Mat> q;
  std::vector<std::vector<std::size_t>> free;
  std::vector<std::size_t> dims;
  for (const auto& s : u) {
    q.push_back(s.quotient_map());
    free.push_back(free_columns(s));
    dims.push_back(s.ambient() - s.dim());
  }
  std::vector<Mat> blocks;
  for (std::size_t g = 0; g < a.num_generators(); ++g) {
    const std::size_t s = a.gen_src(g), t = a.gen_tgt(g);
    if (dims[t] == 0 || dims[s] == 0) {
      blocks.emplace_back(m.field(), dims[t], dims[s]);
      continue;
    }
    blocks.push_back(q[t] * m.block(g).select_cols(free[s]));
  }
  return Module(m.algebra(), std::move(dims), std::move(blocks));
}

ModMap inclusion_map(const Module& m, const GradedSubspace& u) {
  ModMap f;
  for (std::size_t x = 0; x < u.size(); ++x) {
    Mat b = u[x].basis().transpose();
    if (u[x].dim() == 0) b = Mat(m.field(), m.dim_at(x), 0);
    f.blocks.push_back(std::move(b));
  }
  return f;
}

ModMap projection_map(const Module& m, const GradedSubspace& u) {
  ModMap f;
  for (std::size_t x = 0; x < u.size(); ++x) {
    Mat q = u[x].quotient_map();
    if (q.rows() == 0) q = Mat(m.field(), 0, m.dim_at(x));
    f.blocks.push_back(std::move(q));
  }
  return f;
}

GradedSubspace kernel(const Module& src, const ModMap& f) {
  GradedSubspace u;
  for (std::size_t x = 0; x < f.blocks.size(); ++x) {
    Mat k = kernel(f.blocks[x]);
    if (k.rows() == 0) {
      u.emplace_back(src.field(), src.dim_at(x));
    } else {
      u.push_back(Subspace::span(k));
    }
  }
  return u;
}

GradedSubspace image(const Module& dst, const ModMap& f) {
  GradedSubspace u;
  for (std::size_t x = 0; x < f.blocks.size(); ++x) {
    if (f.blocks[x].cols() == 0) {
      u.emplace_back(dst.field(), dst.dim_at(x));
    } else {
      u.push_back(Subspace::span(f.blocks[x].transpose()));
    }
  }
  return u;
}

GradedSubspace radical_of(const Module& m, const GradedSubspace& u) {
  const Algebra& a = *m.algebra();
  std::vector<std::vector<Vec>> rows(a.num_vertices());
  for (std::size_t g = 0; g < a.num_generators(); ++g) {
    const std::size_t s = a.gen_src(g), t = a.gen_tgt(g);
    for (std::size_t j = 0; j < u[s].dim(); ++j) rows[t].push_back(m.block(g).apply(u[s].basis().row(j)));
  }
  GradedSubspace r;
  for (std::size_t x = 0; x < a.num_vertices(); ++x) r.push_back(Subspace::span(m.field(), m.dim_at(x), rows[x]));
  return r;
}

GradedSubspace radical(const Module& m) { return radical_of(m, full_subspace(m)); }

GradedSubspace socle(const Module& m) {
  const Algebra& a = *m.algebra();
  GradedSubspace soc;
  for (std::size_t x = 0; x < a.num_vertices(); ++x) {
    std::vector<Vec> rows;
    for (std::size_t g = 0; g < a.num_generators(); ++g) {
      if (a.gen_src(g) != x) continue;
      for (std::size_t i = 0; i < m.block(g).rows(); ++i) rows.push_back(m.block(g).row_vec(i));
    }
    if (m.dim_at(x) == 0) {
      soc.emplace_back(m.field(), 0);
    } else if (rows.empty()) {
      soc.push_back(Subspace::full(m.field(), m.dim_at(x)));
    } else {
      Mat k = kernel(Mat::from_rows(m.field(), m.dim_at(x), rows));
      soc.push_back(k.rows() == 0 ? Subspace(m.field(), m.dim_at(x)) : Subspace::span(k));
    }
  }
  return soc;
}

Module top(const Module& m) { return quotient(m, radical(m)); }

std::vector<std::size_t> top_dims(const Module& m) {
  auto r = radical(m);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < r.size(); ++x) out.push_back(m.dim_at(x) - r[x].dim());
  return out;
}

std::vector<std::size_t> socle_dims(const Module& m) {
  std::vector<std::size_t> out;
  for (const auto& s : socle(m)) out.push_back(s.dim());
  return out;
}

std::vector<std::vector<std::size_t>> loewy_layers(const Module& m) {
  std::vector<std::vector<std::size_t>> layers;
  GradedSubspace cur = full_subspace(m);
  auto total = [](const GradedSubspace& u) {
    std::size_t d = 0;
    for (const auto& s : u) d += s.dim();
    return d;
  };
  while (total(cur) > 0) {
    GradedSubspace next = radical_of(m, cur);
    std::vector<std::size_t> layer;
    for (std::size_t x = 0; x < cur.size(); ++x) layer.push_back(cur[x].dim() - next[x].dim());
    layers.push_back(std::move(layer));
    cur = std::move(next);
  }
  return layers;
}

std::string loewy_series(const Module& m) {
  if (m.is_zero()) return "0";
  std::string out;
  for (const auto& layer : loewy_layers(m)) {
    if (!out.empty()) out += "/";
    for (std::size_t x = 0; x < layer.size(); ++x) {
      for (std::size_t k = 0; k < layer[x]; ++k) out += m.algebra()->vertex_label(x);
    }
  }
  return out;
}

Cover projective_cover(const Module& m) {
  const AlgebraPtr& a = m.algebra();
  const std::size_t nv = a->num_vertices();
  const auto rad = radical(m);
  std::vector<Module> pieces;
  std::vector<std::size_t> verts;
  std::vector<std::vector<Mat>> cols(nv);  // per vertex t, one column block per summand
  for (std::size_t x = 0; x < nv; ++x) {
    for (auto j : free_columns(rad[x])) {
      Vec v(m.dim_at(x), 0);
      v[j] = 1;
      pieces.push_back(projective_module(a, x));
      verts.push_back(x);
      for (std::size_t t = 0; t < nv; ++t) {
        const auto& c = a->corner(t, x);
        Mat b(m.field(), m.dim_at(t), c.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
          const Vec w = m.corner_action(c[k]).apply(v);
          for (std::size_t i = 0; i < w.size(); ++i) b(i, k) = w[i];
        }
        cols[t].push_back(std::move(b));
      }
    }
  }
  Cover out;
  out.summand_vertices = verts;
  out.module = pieces.empty() ? Module::zero(a) : direct_sum(pieces);
  for (std::size_t t = 0; t < nv; ++t) {
    Mat b(m.field(), m.dim_at(t), 0);
    for (const auto& c : cols[t]) b = b.hstack(c);
    out.map.blocks.push_back(std::move(b));
  }
  return out;
}

Cover injective_envelope(const Module& m) {
  const AlgebraPtr& a = m.algebra();
  const std::size_t nv = a->num_vertices();
  const auto soc = socle(m);
  std::vector<Module> pieces;
  std::vector<std::size_t> verts;
  std::vector<std::vector<Mat>> rows(nv);
  for (std::size_t x = 0; x < nv; ++x) {
    for (auto p : soc[x].pivots()) {
      pieces.push_back(injective_module(a, x));
      verts.push_back(x);
      // m -> I_x, v |-> sum_b phi(b v) phi_b with phi the p-th coordinate on e_x m
      for (std::size_t s = 0; s < nv; ++s) {
        const auto& c = a->corner(x, s);
        Mat b(m.field(), c.size(), m.dim_at(s));
        for (std::size_t k = 0; k < c.size(); ++k) {
          const Mat& act = m.corner_action(c[k]);
          for (std::size_t j = 0; j < m.dim_at(s); ++j) b(k, j) = act(p, j);
        }
        rows[s].push_back(std::move(b));
      }
    }
  }
  Cover out;
  out.summand_vertices = verts;
  out.module = pieces.empty() ? Module::zero(a) : direct_sum(pieces);
  for (std::size_t s = 0; s < nv; ++s) {
    Mat b(m.field(), 0, m.dim_at(s));
    for (const auto& r : rows[s]) b = b.vstack(r);
    out.map.blocks.push_back(std::move(b));
  }
  return out;
}

Module base_change(const Module& m, const FieldEmbedding& e, const AlgebraPtr& target) {
  if (!same_field(e.src(), m.field())) throw InvalidArgument("base_change: embedding source is not the module field");
  if (!same_field(e.dst(), target->field())) throw InvalidArgument("base_change: target algebra is over a different field");
  if (target->num_generators() != m.algebra()->num_generators() || target->dim() != m.algebra()->dim()) {
    throw InvalidArgument("base_change: target algebra does not match");
  }
  std::vector<Mat> blocks;
  for (const auto& b : m.blocks()) blocks.push_back(b.rows() * b.cols() == 0 ? Mat(e.dst(), b.rows(), b.cols()) : b.map_entries(e));
  return Module(target, m.dims(), std::move(blocks));
}

Piece part_of(const Module& m) {
  bool a0 = false, a1 = false;
  for (std::size_t x = 0; x < m.dims().size(); ++x) {
    if (m.dim_at(x) == 0) continue;
    if (m.algebra()->part(x) == Part::A1) {
      a1 = true;
    } else {
      a0 = true;
    }
  }
  if (a0 && a1) return Piece::A01;
  return a1 ? Piece::A1 : Piece::A0;
}

std::string piece_name(Piece p) {
  switch (p) {
    case Piece::A0: return "A0";
    case Piece::A01: return "A01";
    case Piece::A1: return "A1";
  }
  return "?";
}

}  // namespace hallforge
