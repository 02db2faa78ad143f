#include "hallforge/algebra.hpp"

#include <functional>
#include <mutex>
#include <sstream>

#include "hallforge/errors.hpp"

namespace hallforge {

bool Quiver::acyclic() const {
  const std::size_t n = vertices.size();
  std::vector<int> state(n, 0);
  std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
    state[v] = 1;
    for (const auto& a : arrows) {
      if (a.source != v) continue;
      if (state[a.target] == 1) return false;
      if (state[a.target] == 0 && !dfs(a.target)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (state[v] == 0 && !dfs(v)) return false;
  }
  return true;
}

Algebra::Algebra(FieldPtr f, Spec spec) : f_(std::move(f)), s_(std::move(spec)) {}

AlgebraPtr Algebra::make(FieldPtr f, Spec spec) {
  const std::size_t n = spec.labels.size();
  if (spec.mult.size() != n * n) throw InvalidArgument("structure constant table has wrong size");
  if (spec.vertex_idem.size() != spec.vertex_labels.size()) throw InvalidArgument("every vertex needs an idempotent");
  for (const auto& row : spec.mult) {
    for (const auto& t : row) {
      if (t.k >= n || t.c >= f->q()) throw InvalidArgument("structure constant out of range");
    }
  }
  std::shared_ptr<Algebra> a(new Algebra(std::move(f), std::move(spec)));
  a->derive();
  return a;
}

std::size_t Algebra::vertex_index(const std::string& label) const {
  for (std::size_t x = 0; x < num_vertices(); ++x) {
    if (s_.vertex_labels[x] == label) return x;
  }
  throw InvalidArgument("unknown vertex '" + label + "' of algebra " + name());
}

Vec Algebra::multiply(std::span<const Elem> a, std::span<const Elem> b) const {
  const Field& F = *f_;
  Vec out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      const Elem ab = F.mul(a[i], b[j]);
      for (const auto& t : mult(i, j)) out[t.k] = F.add(out[t.k], F.mul(ab, t.c));
    }
  }
  return out;
}

Vec Algebra::unit() const {
  Vec u(dim(), 0);
  for (auto i : s_.vertex_idem) u[i] = 1;
  return u;
}

void Algebra::derive() {
  const std::size_t n = dim(), nv = num_vertices();
  auto basis_vec = [&](std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
  };
  src_.assign(n, nv);
  tgt_.assign(n, nv);
  is_idem_.assign(n, false);
  for (auto i : s_.vertex_idem) is_idem_[i] = true;
  for (std::size_t b = 0; b < n; ++b) {
    const Vec bv = basis_vec(b);
    for (std::size_t x = 0; x < nv; ++x) {
      const Vec ex = basis_vec(s_.vertex_idem[x]);
      const Vec l = multiply(ex, bv), r = multiply(bv, ex);
      if (l == bv) {
        if (tgt_[b] != nv) throw InvalidArgument("basis element " + s_.labels[b] + " is not vertex-homogeneous");
        tgt_[b] = x;
      } else if (std::any_of(l.begin(), l.end(), [](Elem e) { return e != 0; })) {
        throw InvalidArgument("basis element " + s_.labels[b] + " is not vertex-homogeneous");
      }
      if (r == bv) {
        if (src_[b] != nv) throw InvalidArgument("basis element " + s_.labels[b] + " is not vertex-homogeneous");
        src_[b] = x;
      } else if (std::any_of(r.begin(), r.end(), [](Elem e) { return e != 0; })) {
        throw InvalidArgument("basis element " + s_.labels[b] + " is not vertex-homogeneous");
      }
    }
    if (src_[b] == nv || tgt_[b] == nv) throw InvalidArgument("basis element " + s_.labels[b] + " is not vertex-homogeneous");
  }
  corner_.assign(nv * nv, {});
  for (std::size_t b = 0; b < n; ++b) corner_[tgt_[b] * nv + src_[b]].push_back(b);
  for (std::size_t x = 0; x < nv; ++x) {
    if (corner(x, x).size() != 1) throw InvalidArgument("vertex corner e_x A e_x is not one-dimensional at " + s_.vertex_labels[x]);
  }

  // rad is spanned by the non-idempotent basis elements; pick generators
  // greedily from them modulo rad^2.
  std::vector<std::size_t> radical;
  for (std::size_t b = 0; b < n; ++b) {
    if (!is_idem_[b]) radical.push_back(b);
  }
  RowReducer rad2(f_, n);
  for (auto i : radical) {
    for (auto j : radical) {
      Vec v(n, 0);
      for (const auto& t : mult(i, j)) v[t.k] = f_->add(v[t.k], t.c);
      rad2.add(std::move(v));
    }
  }
  for (auto b : radical) {
    if (rad2.add(basis_vec(b))) gens_.push_back(b);
  }

  // Nonzero monomials in the generators, by length.
  struct Monomial {
    std::vector<std::size_t> word;
    Vec value;
  };
  std::vector<Monomial> monomials;
  std::vector<Monomial> layer;
  for (std::size_t g = 0; g < gens_.size(); ++g) layer.push_back({{g}, basis_vec(gens_[g])});
  loewy_ = 1;
  while (!layer.empty()) {
    ++loewy_;
    if (loewy_ > n + 1) throw InvalidArgument("radical of " + name() + " is not nilpotent");
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      const std::size_t t = [&] {
        for (std::size_t i = 0; i < n; ++i) {
          if (m.value[i] != 0) return tgt_[i];
        }
        return nv;
      }();
      for (std::size_t g = 0; g < gens_.size(); ++g) {
        if (gen_src(g) != t) continue;
        Vec v = multiply(basis_vec(gens_[g]), m.value);
        if (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; })) continue;
        auto w = m.word;
        w.push_back(g);
        next.push_back({std::move(w), std::move(v)});
      }
    }
    for (auto& m : layer) monomials.push_back(std::move(m));
    layer = std::move(next);
  }

  words_.assign(n, {});
  for (std::size_t b : radical) {
    std::vector<const Monomial*> cand;
    for (const auto& m : monomials) {
      const std::size_t g0 = m.word.front(), g1 = m.word.back();
      if (gen_src(g0) == src_[b] && gen_tgt(g1) == tgt_[b]) cand.push_back(&m);
    }
    const auto& cb = corner(tgt_[b], src_[b]);
    Mat sys(f_, cb.size(), cand.size());
    for (std::size_t j = 0; j < cand.size(); ++j) {
      for (std::size_t i = 0; i < cb.size(); ++i) sys(i, j) = cand[j]->value[cb[i]];
    }
    Vec rhs(cb.size(), 0);
    for (std::size_t i = 0; i < cb.size(); ++i) rhs[i] = cb[i] == b ? 1 : 0;
    auto sol = solve(sys, rhs);
    if (!sol) throw InvalidArgument("basis element " + s_.labels[b] + " is not generated by the radical generators");
    for (std::size_t j = 0; j < cand.size(); ++j) {
      if ((*sol)[j] != 0) words_[b].terms.emplace_back((*sol)[j], cand[j]->word);
    }
  }
}

namespace {

struct Path {
  std::size_t source, target;
  std::vector<std::size_t> arrows;  // in order of traversal
};

std::vector<Path> all_paths(const Quiver& q) {
  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) paths.push_back({v, v, {}});
  // breadth-first by length keeps the basis order stable: trivial paths, arrows, ...
  std::vector<Path> layer;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) layer.push_back({q.arrows[a].source, q.arrows[a].target, {a}});
  while (!layer.empty()) {
    std::vector<Path> next;
    for (const auto& p : layer) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != p.target) continue;
        Path e = p;
        e.arrows.push_back(a);
        e.target = q.arrows[a].target;
        next.push_back(std::move(e));
      }
    }
    for (auto& p : layer) paths.push_back(std::move(p));
    layer = std::move(next);
  }
  return paths;
}

std::string path_label(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + q.vertices[p.source];
  std::string s;
  for (std::size_t i = p.arrows.size(); i-- > 0;) {
    if (!s.empty()) s += ".";
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

// Index of the path equal to "first then second", or npos.
std::size_t compose(const std::vector<Path>& paths, const Path& first, const Path& second) {
  if (first.target != second.source) return std::string::npos;
  std::vector<std::size_t> arrows = first.arrows;
  arrows.insert(arrows.end(), second.arrows.begin(), second.arrows.end());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].source == first.source && paths[i].target == second.target && paths[i].arrows == arrows) return i;
  }
  return std::string::npos;
}

}  // namespace

AlgebraPtr path_algebra(const Quiver& q, FieldPtr f, std::string name) {
  if (!q.acyclic()) throw InvalidArgument("quiver has an oriented cycle");
  for (const auto& a : q.arrows) {
    if (a.source >= q.vertices.size() || a.target >= q.vertices.size()) throw InvalidArgument("arrow endpoint out of range");
  }
  const auto paths = all_paths(q);
  const std::size_t n = paths.size();
  Algebra::Spec s;
  s.name = std::move(name);
  s.kind = "path";
  s.quiver = q;
  s.vertex_labels = q.vertices;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) s.vertex_idem.push_back(v);
  for (const auto& p : paths) s.labels.push_back(path_label(q, p));
  s.mult.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // b_i b_j = "b_j then b_i"
      const std::size_t k = compose(paths, paths[j], paths[i]);
      if (k != std::string::npos) s.mult[i * n + j].push_back({k, 1});
    }
  }
  return Algebra::make(std::move(f), std::move(s));
}

AlgebraPtr duplicated(const AlgebraPtr& a, std::string name) {
  auto report = validate(*a);
  if (!report.ok) throw InvalidArgument("duplicated: input algebra fails validation: " + report.failures.front());
  const std::size_t n = a->dim(), nv = a->num_vertices();
  const FieldPtr& f = a->field();
  const Field& F = *f;
  Algebra::Spec s;
  s.name = name.empty() ? a->name() + "-dup" : std::move(name);
  s.kind = "duplicated";
  for (std::size_t x = 0; x < nv; ++x) s.vertex_labels.push_back(a->vertex_label(x));
  for (std::size_t x = 0; x < nv; ++x) s.vertex_labels.push_back(a->vertex_label(x) + "'");
  for (std::size_t x = 0; x < nv; ++x) s.vertex_idem.push_back(a->idempotent(x));
  for (std::size_t x = 0; x < nv; ++x) s.vertex_idem.push_back(n + a->idempotent(x));
  s.vertex_part.assign(nv, Part::A0);
  s.vertex_part.resize(2 * nv, Part::A1);
  for (const auto& l : a->labels()) s.labels.push_back(l);
  for (const auto& l : a->labels()) {
    std::string p;
    // prime every vertex/arrow name: "e1" -> "e1'", "b.a" -> "b'.a'"
    std::string cur;
    for (char c : l + ".") {
      if (c == '.') {
        if (!p.empty()) p += ".";
        p += cur + "'";
        cur.clear();
      } else {
        cur += c;
      }
    }
    s.labels.push_back(p);
  }
  for (const auto& l : a->labels()) s.labels.push_back(l + "*");
  const std::size_t N = 3 * n;
  s.mult.assign(N * N, {});
  auto add = [&](std::size_t i, std::size_t j, std::size_t k, Elem c) {
    if (c == 0) return;
    auto& row = s.mult[i * N + j];
    for (auto& t : row) {
      if (t.k == k) {
        t.c = F.add(t.c, c);
        return;
      }
    }
    row.push_back({k, c});
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : a->mult(i, j)) {
        add(i, j, t.k, t.c);              // A_0 x A_0
        add(n + i, j + n, n + t.k, t.c);  // A_1 x A_1
      }
    }
  }
  // A_0 acting on DA: (a.f)(c) = f(c a), so a.p* = sum_c [coeff of p in c a] c*.
  // DA under A_1:     (f.b)(c) = f(b c), so p*.b = sum_c [coeff of p in b c] c*.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t c = 0; c < n; ++c) {
      for (const auto& t : a->mult(c, x)) add(x, 2 * n + t.k, 2 * n + c, t.c);
      for (const auto& t : a->mult(x, c)) add(2 * n + t.k, n + x, 2 * n + c, t.c);
    }
  }
  if (a->spec().tame) s.tame = a->spec().tame;
  s.quiver = a->quiver();
  return Algebra::make(f, std::move(s));
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  Algebra::Spec s = a->spec();
  const std::size_t n = a->dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s.mult[i * n + j] = a->mult(j, i);
  }
  s.name = a->name() + "-op";
  s.kind = "table";
  s.quiver.reset();
  if (a->spec().name.size() > 3 && a->spec().name.ends_with("-op")) s.name = a->spec().name.substr(0, a->spec().name.size() - 3);
  return Algebra::make(a->field(), std::move(s));
}

ValidationReport validate_spec(const FieldPtr& f, const Algebra::Spec& s) {
  ValidationReport r;
  const std::size_t n = s.labels.size();
  const Field& F = *f;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.failures.push_back(std::move(msg));
  };
  if (s.mult.size() != n * n) {
    fail("structure constant table has wrong size");
    return r;
  }
  auto mul = [&](const Vec& a, const Vec& b) {
    Vec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j] == 0) continue;
        const Elem ab = F.mul(a[i], b[j]);
        for (const auto& t : s.mult[i * n + j]) out[t.k] = F.add(out[t.k], F.mul(ab, t.c));
      }
    }
    return out;
  };
  auto basis_vec = [&](std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
  };
  // associativity on basis triples; exhaustive up to dim 64, a fixed stride beyond
  const std::size_t stride = n <= 64 ? 1 : 7;
  std::vector<Vec> prod(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = mul(basis_vec(i), basis_vec(j));
  }
  for (std::size_t i = 0; i < n && r.failures.size() < 20; i += stride) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (mul(prod[i * n + j], basis_vec(k)) != mul(basis_vec(i), prod[j * n + k])) {
          fail("associativity fails on (" + s.labels[i] + ", " + s.labels[j] + ", " + s.labels[k] + ")");
        }
      }
    }
  }
  Vec u(n, 0);
  for (auto i : s.vertex_idem) u[i] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec b = basis_vec(i);
    if (mul(u, b) != b || mul(b, u) != b) fail("unit law fails at " + s.labels[i]);
  }
  const std::size_t nv = s.vertex_idem.size();
  for (std::size_t x = 0; x < nv; ++x) {
    const Vec ex = basis_vec(s.vertex_idem[x]);
    for (std::size_t y = 0; y < nv; ++y) {
      const Vec p = mul(ex, basis_vec(s.vertex_idem[y]));
      const Vec expect = x == y ? ex : Vec(n, 0);
      if (p != expect) fail("idempotents " + s.vertex_labels[x] + ", " + s.vertex_labels[y] + " are not orthogonal idempotents");
    }
    // e_x A e_x = k e_x certifies that e_x is primitive
    std::size_t corner = 0;
    for (std::size_t b = 0; b < n; ++b) corner += mul(mul(ex, basis_vec(b)), ex) != Vec(n, 0);
    if (corner != 1) fail("idempotent " + s.vertex_labels[x] + " is not certified primitive");
  }
  return r;
}

ValidationReport validate(const Algebra& a) { return validate_spec(a.field(), a.spec()); }

namespace {

Quiver kronecker_quiver() {
  return Quiver{{"1", "2"}, {{"a", 1, 0}, {"b", 1, 0}}};
}

Quiver d4tilde_quiver() {
  Quiver q{{"1", "2", "3", "4", "5"}, {}};
  for (std::size_t i = 1; i < 5; ++i) q.arrows.push_back({"a" + std::to_string(i + 1), i, 0});
  return q;
}

AlgebraPtr build_builtin(const std::string& name, const FieldPtr& f) {
  auto with_tame = [](AlgebraPtr a, TameRootData t) {
    Algebra::Spec s = a->spec();
    s.tame = std::move(t);
    return Algebra::make(a->field(), std::move(s));
  };
  if (name == "kronecker") return with_tame(path_algebra(kronecker_quiver(), f, "kronecker"), {{1, 1}, 2});
  if (name == "d4tilde") return with_tame(path_algebra(d4tilde_quiver(), f, "d4tilde"), {{2, 1, 1, 1, 1}, 6});
  if (name == "kronecker-dup") return duplicated(builtin_algebra("kronecker", f), "kronecker-dup");
  if (name == "d4tilde-dup") return duplicated(builtin_algebra("d4tilde", f), "d4tilde-dup");
  throw InvalidArgument("unknown builtin algebra '" + name + "'");
}

}  // namespace

std::vector<std::string> builtin_names() { return {"kronecker", "kronecker-dup", "d4tilde", "d4tilde-dup"}; }

AlgebraPtr builtin_algebra(const std::string& name, const FieldPtr& f) {
  static std::recursive_mutex mu;
  static std::map<std::tuple<std::string, std::uint32_t, std::uint32_t>, AlgebraPtr> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto key = std::make_tuple(name, f->p(), f->r());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto a = build_builtin(name, f);
  cache.emplace(key, a);
  return a;
}

std::vector<GabrielArrow> gabriel_quiver(const Algebra& a) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> count;
  for (std::size_t g = 0; g < a.num_generators(); ++g) ++count[{a.gen_src(g), a.gen_tgt(g)}];
  std::vector<GabrielArrow> out;
  for (const auto& [k, m] : count) out.push_back({k.first, k.second, m});
  return out;
}

std::string gabriel_dot(const Algebra& a) {
  std::ostringstream os;
  os << "digraph \"" << a.name() << "\" {\n";
  for (const auto& v : a.vertex_labels()) os << "  \"" << v << "\";\n";
  for (const auto& arr : gabriel_quiver(a)) {
    for (std::size_t i = 0; i < arr.multiplicity; ++i) {
      os << "  \"" << a.vertex_label(arr.source) << "\" -> \"" << a.vertex_label(arr.target) << "\";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace hallforge
