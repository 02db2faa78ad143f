#include "hallforge/liecomp.hpp"

#include <sstream>
#include <unordered_set>

#include "hallforge/catalog.hpp"
#include "hallforge/errors.hpp"

namespace hallforge {

namespace {

std::string dims_string(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

HallElement lin(const BigInt& c, const HallElement& a, const BigInt& d, const HallElement& b) {
  HallElement out;
  if (c != 0) add_to(out, a, c);
  if (d != 0) add_to(out, b, -d);
  return out;
}

}  // namespace

std::string DegenElement::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    Rational a = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    if (a != 1) os << a << " ";
    os << "u[" << k << "]";
  }
  return os.str();
}

DegenContext::DegenContext(std::string algebra, DegenOptions opt) : algebra_(std::move(algebra)), opt_(std::move(opt)) {
  if (opt_.stable.empty()) opt_.stable = stable_catalog(algebra_);
  if (opt_.points.empty()) throw InvalidArgument("degenerate context needs interpolation points");
}

std::vector<std::uint64_t> DegenContext::fields() const {
  auto out = opt_.points;
  out.insert(out.end(), opt_.holdout.begin(), opt_.holdout.end());
  return out;
}

DegenContext::PerField& DegenContext::field(std::uint64_t q) {
  auto& pf = fields_[q];
  if (!pf.hall) pf.hall = std::make_unique<HallAlgebra>(builtin_algebra(algebra_, Field::of_order(q)), opt_.hall);
  return pf;
}

HallAlgebra& DegenContext::hall(std::uint64_t q) { return *field(q).hall; }

std::string DegenContext::indec_key(std::uint64_t q, std::size_t idx) {
  auto& pf = field(q);
  auto& reg = pf.hall->registry();
  if (!pf.stable_ready) {
    for (const auto& b : opt_.stable) {
      ClassId c = reg.class_of(instantiate(parse_blueprint(b, algebra_), pf.hall->algebra()));
      if (reg.is_indecomposable(c)) pf.stable_of.emplace(reg.summands(c)[0].first, b);
    }
    pf.stable_ready = true;
  }
  auto it = pf.stable_of.find(idx);
  if (it != pf.stable_of.end()) return it->second;
  return "B" + dims_string(reg.indecomposable(idx).dims());
}

std::string DegenContext::key_of(std::uint64_t q, ClassId c) {
  if (c == kZeroClass) return "0";
  auto& reg = hall(q).registry();
  std::vector<std::string> parts;
  for (const auto& [idx, mult] : reg.summands(c)) {
    std::string k = indec_key(q, idx);
    parts.push_back(mult > 1 ? k + "^" + std::to_string(mult) : k);
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "+") + p;
  return out;
}

DegenElement DegenContext::certify(std::map<std::uint64_t, HallElement> lift) {
  DegenElement out;
  std::map<std::string, std::map<std::uint64_t, BigInt>> sums;
  std::map<std::string, std::map<std::uint64_t, std::set<ClassId>>> members;
  for (auto q : fields()) {
    auto& reg = hall(q).registry();
    for (const auto& [c, v] : lift[q]) {
      std::string k = key_of(q, c);
      sums[k][q] += v;
      members[k][q].insert(c);
      auto& info = out.keys[k];
      info.dims = reg.dims(c);
      info.indecomposable = reg.is_indecomposable(c);
      if (!info.bundled)
        for (const auto& [idx, mult] : reg.summands(c))
          if (indec_key(q, idx)[0] == 'B' && indec_key(q, idx)[1] == '(') info.bundled = true;
    }
  }
  auto samples = [&](const std::vector<std::uint64_t>& qs, const auto& get) {
    std::vector<Sample> s;
    for (auto q : qs) s.emplace_back(q, get(q));
    return s;
  };
  for (auto& [k, by_q] : sums) {
    auto get = [&](std::uint64_t q) {
      auto it = by_q.find(q);
      return it == by_q.end() ? BigInt(0) : it->second;
    };
    auto fit = fit_rational_polynomial(samples(opt_.points, get), samples(opt_.holdout, get), 1);
    auto& info = out.keys[k];
    if (!fit.ok || (!info.bundled && !fit.poly.integral())) {
      std::string raw;
      for (auto q : fields()) raw += " " + std::to_string(q) + ":" + get(q).str();
      throw CheckFailed("coefficient of u[" + k + "] is not " + std::string(info.bundled ? "a " : "an integer ") +
                        "polynomial in q (" + (fit.ok ? "non-integer coefficients" : fit.message) + "); counts" + raw);
    }
    auto count = [&](std::uint64_t q) {
      auto it = members[k].find(q);
      return BigInt(it == members[k].end() ? 0 : it->second.size());
    };
    auto n = fit_rational_polynomial(samples(opt_.points, count), samples(opt_.holdout, count), 1);
    if (!n.ok) throw CheckFailed("number of classes behind u[" + k + "] is not polynomial in q");
    info.members = n.poly;
    out.provenance[k] = fit.poly;
    Rational v = fit.poly.eval(1);
    if (v != 0) out.terms[k] = v;
  }
  out.lift = std::move(lift);
  return out;
}

DegenElement DegenContext::u(const std::string& blueprint) {
  Blueprint b = parse_blueprint(blueprint, algebra_);
  std::map<std::uint64_t, HallElement> lift;
  for (auto q : fields()) lift[q] = hall(q).u(instantiate(b, hall(q).algebra()));
  return certify(std::move(lift));
}

DegenElement DegenContext::one() {
  std::map<std::uint64_t, HallElement> lift;
  for (auto q : fields()) lift[q] = hall(q).one();
  return certify(std::move(lift));
}

DegenElement DegenContext::mul(const DegenElement& a, const DegenElement& b) {
  std::map<std::uint64_t, HallElement> lift;
  for (auto q : fields()) lift[q] = hall(q).mul(a.lift.at(q), b.lift.at(q));
  return certify(std::move(lift));
}

DegenElement DegenContext::combine(const IntPoly& c, const DegenElement& a, const IntPoly& d, const DegenElement& b) {
  std::map<std::uint64_t, HallElement> lift;
  for (auto q : fields()) lift[q] = lin(c.eval(q), a.lift.at(q), d.eval(q), b.lift.at(q));
  return certify(std::move(lift));
}

DegenElement DegenContext::sub(const DegenElement& a, const DegenElement& b) {
  return combine(IntPoly{{1}}, a, IntPoly{{1}}, b);
}

DegenElement DegenContext::bracket(const DegenElement& a, const DegenElement& b) {
  std::map<std::uint64_t, HallElement> lift;
  for (auto q : fields()) {
    auto& h = hall(q);
    lift[q] = lin(1, h.mul(a.lift.at(q), b.lift.at(q)), 1, h.mul(b.lift.at(q), a.lift.at(q)));
  }
  return certify(std::move(lift));
}

DegenElement DegenContext::bracket(const std::string& x, const std::string& y) { return bracket(u(x), u(y)); }

// ---------------------------------------------------------------------------

std::size_t SkewExpr::depth() const { return is_leaf() ? 0 : 1 + std::max(left->depth(), right->depth()); }

std::string SkewExpr::to_json() const {
  if (is_leaf()) return "\"S_" + leaf.substr(1) + "\"";
  return "[\"" + c.to_string() + "\",\"" + d.to_string() + "\"," + left->to_json() + "," + right->to_json() + "]";
}

std::string SkewExpr::to_string() const {
  if (is_leaf()) return leaf;
  auto sc = [](const IntPoly& p) {
    std::string s = p.to_string();
    if (s == "1") return std::string();
    return (p.c.size() > 1 && s.find(' ') != std::string::npos ? "(" + s + ")" : s) + "*";
  };
  return "[" + left->to_string() + ", " + right->to_string() + "]_{" + sc(c) + "," + sc(d) + "}";
}

SkewPtr skew_leaf(const std::string& simple) {
  auto e = std::make_shared<SkewExpr>();
  e->leaf = simple;
  return e;
}

SkewPtr skew_node(SkewPtr l, SkewPtr r, IntPoly c, IntPoly d) {
  auto e = std::make_shared<SkewExpr>();
  e->left = std::move(l);
  e->right = std::move(r);
  e->c = std::move(c);
  e->d = std::move(d);
  return e;
}

HallElement evaluate(const SkewExpr& e, HallAlgebra& h) {
  if (e.is_leaf()) return h.u(instantiate(parse_blueprint(e.leaf, h.algebra()->name()), h.algebra()));
  HallElement l = evaluate(*e.left, h), r = evaluate(*e.right, h);
  return lin(e.c.eval(h.q()), h.mul(l, r), e.d.eval(h.q()), h.mul(r, l));
}

std::vector<IntPoly> default_skew_scalars() {
  return {IntPoly{{1}}, IntPoly{{0, 1}}, IntPoly{{-1, 1}}, IntPoly{{1, 1}}, IntPoly{{0, 0, 1}}, IntPoly{{0, 0, 0, 1}}};
}

SkewSearchResult iterated_skew_search(const std::string& algebra, const std::string& m, const SkewSearchOptions& opt) {
  SkewSearchResult out;
  if (opt.certify_fields.empty()) throw InvalidArgument("skew search needs a certification field");
  std::vector<std::unique_ptr<HallAlgebra>> hs;
  for (auto q : opt.certify_fields)
    hs.push_back(std::make_unique<HallAlgebra>(builtin_algebra(algebra, Field::of_order(q)), opt.hall));
  Blueprint mb = parse_blueprint(m, algebra);
  Module m0 = instantiate(mb, hs[0]->algebra());
  if (m0.is_zero() || !is_indecomposable(m0)) throw InvalidArgument(m + " is not indecomposable");
  if (!exceptional_report(m0).exceptional) throw InvalidArgument(m + " is not exceptional");
  const auto target = m0.dims();

  std::vector<HallElement> goal;
  for (auto& h : hs) goal.push_back(h->u(instantiate(mb, h->algebra())));

  struct Cand {
    SkewPtr e;
    std::vector<HallElement> vals;
    std::vector<std::size_t> dims;
  };
  auto signature = [](const std::vector<HallElement>& vs) {
    std::string s;
    for (const auto& v : vs) {
      for (const auto& [c, x] : v) s += std::to_string(c) + ":" + x.str() + ",";
      s += "|";
    }
    return s;
  };
  auto verify = [&](const SkewPtr& e) {
    for (auto q : opt.verify_fields) {
      HallAlgebra h(builtin_algebra(algebra, Field::of_order(q)), opt.hall);
      if (evaluate(*e, h) != h.u(instantiate(mb, h.algebra()))) return false;
    }
    return true;
  };

  // Every skew expression is an integer combination of words in the simples,
  // so its coefficient at u_[m] is a multiple of the gcd of the word
  // coefficients over each field.
  auto a0 = hs[0]->algebra();
  std::vector<std::string> letters;
  for (std::size_t x = 0; x < a0->num_vertices(); ++x)
    for (std::size_t k = 0; k < target[x]; ++k) letters.push_back("S" + a0->vertex_label(x));
  std::sort(letters.begin(), letters.end());
  std::size_t words = 0;
  std::vector<BigInt> g(hs.size(), 0);
  do {
    if (++words > opt.max_words) break;
    for (std::size_t f = 0; f < hs.size(); ++f) {
      HallElement w = hs[f]->one();
      for (const auto& l : letters) w = hs[f]->mul(w, hs[f]->u(instantiate(parse_blueprint(l, algebra), hs[f]->algebra())));
      auto it = w.find(goal[f].begin()->first);
      if (it != w.end()) g[f] = gcd(g[f], abs(it->second));
    }
  } while (std::next_permutation(letters.begin(), letters.end()));
  if (words <= opt.max_words) {
    for (std::size_t f = 0; f < hs.size(); ++f) {
      if (g[f] == 1) continue;
      out.message = "no word in the simples reaches u[" + m + "] with a coefficient prime to " + g[f].str() +
                    " over GF(" + std::to_string(hs[f]->q()) + "), so no integer skew expression can equal it";
      return out;
    }
  }

  std::vector<Cand> all;
  std::unordered_set<std::string> seen;
  for (std::size_t x = 0; x < a0->num_vertices(); ++x) {
    if (target[x] == 0) continue;
    std::string s = "S" + a0->vertex_label(x);
    Cand c{skew_leaf(s), {}, std::vector<std::size_t>(target.size(), 0)};
    c.dims[x] = 1;
    for (auto& h : hs) c.vals.push_back(evaluate(*c.e, *h));
    if (c.dims == target && c.vals == goal && verify(c.e)) {
      out.found = true;
      out.expr = c.e;
      out.candidates = 1;
      return out;
    }
    seen.insert(signature(c.vals));
    all.push_back(std::move(c));
  }

  std::size_t level_begin = 0;
  for (std::size_t level = 1; level <= opt.depth; ++level) {
    std::size_t level_end = all.size();
    std::vector<Cand> fresh;
    for (std::size_t i = 0; i < level_end; ++i) {
      for (std::size_t j = 0; j < level_end; ++j) {
        if (i < level_begin && j < level_begin) continue;
        std::vector<std::size_t> d(target.size());
        bool fits = true;
        for (std::size_t x = 0; x < d.size(); ++x) {
          d[x] = all[i].dims[x] + all[j].dims[x];
          fits = fits && d[x] <= target[x];
        }
        if (!fits) continue;
        std::vector<HallElement> lr, rl;
        for (std::size_t f = 0; f < hs.size(); ++f) {
          lr.push_back(hs[f]->mul(all[i].vals[f], all[j].vals[f]));
          rl.push_back(hs[f]->mul(all[j].vals[f], all[i].vals[f]));
        }
        out.products += 2 * hs.size();
        if (out.products > opt.max_products)
          throw CapExceeded("skew search exceeded " + std::to_string(opt.max_products) + " Hall products");
        for (const auto& c : opt.scalars) {
          for (const auto& dd : opt.scalars) {
            std::vector<HallElement> v;
            bool zero = true;
            for (std::size_t f = 0; f < hs.size(); ++f) {
              BigInt q = hs[f]->q();
              v.push_back(lin(c.eval(q), lr[f], dd.eval(q), rl[f]));
              zero = zero && v.back().empty();
            }
            if (zero || !seen.insert(signature(v)).second) continue;
            Cand cand{skew_node(all[i].e, all[j].e, c, dd), std::move(v), d};
            if (d == target && cand.vals == goal && verify(cand.e)) {
              out.found = true;
              out.expr = cand.e;
              out.candidates = seen.size();
              return out;
            }
            fresh.push_back(std::move(cand));
          }
        }
      }
    }
    level_begin = level_end;
    for (auto& c : fresh) all.push_back(std::move(c));
  }
  out.candidates = seen.size();
  out.message = "no iterated skew commutator of depth <= " + std::to_string(opt.depth) + " over the scalar set";
  return out;
}

// ---------------------------------------------------------------------------

bool SkewIdentityReport::ok() const {
  if (rows.empty()) return false;
  for (const auto& r : rows)
    if (!r.holds) return false;
  return true;
}

SkewIdentityReport verify_skew_identity(const std::string& algebra, const std::string& m,
                                        const std::vector<std::uint64_t>& fields, const HallOptions& opt) {
  SkewIdentityReport out;
  Blueprint mb = parse_blueprint(m, algebra);
  out.module = mb.to_string();
  for (auto q : fields) {
    HallAlgebra h(builtin_algebra(algebra, Field::of_order(q)), opt);
    auto a = h.algebra();
    Module mm = instantiate(mb, a);
    if (mm.is_zero() || !is_indecomposable_projective(mm) || !is_injective(mm))
      throw InvalidArgument(m + " is not an indecomposable projective-injective module");
    auto in_part = [&](const Module& x, Part p) {
      for (std::size_t v = 0; v < a->num_vertices(); ++v)
        if (x.dim_at(v) && a->part(v) != p) return false;
      return true;
    };
    Module rad = submodule(mm, radical(mm));
    Module rest, simple;
    if (in_part(rad, Part::A0)) {
      out.branch = 'A';
      rest = rad;
      simple = top(mm);
    } else {
      auto soc = socle(mm);
      Module s = submodule(mm, soc);
      Module quo = quotient(mm, soc);
      if (s.dim() != 1 || !in_part(quo, Part::A1))
        throw InvalidArgument(m + ": neither rad M in A_0-mod nor M/soc M in A_1-mod");
      out.branch = 'B';
      rest = quo;
      simple = s;
    }
    out.factor = loewy_series(rest);
    for (std::size_t v = 0; v < a->num_vertices(); ++v)
      if (simple.dim_at(v)) out.simple = "S" + a->vertex_label(v);
    HallElement us = h.u(simple), ur = h.u(rest), rhs;
    if (out.branch == 'A') rhs = lin(1, h.mul(us, ur), 1, h.mul(ur, us));
    else rhs = lin(1, h.mul(ur, us), 1, h.mul(us, ur));
    HallElement lhs = h.u(mm);
    out.rows.push_back({q, h.format(lhs), h.format(rhs), lhs == rhs});
  }
  return out;
}

// ---------------------------------------------------------------------------

bool LieReport::ok() const {
  for (const auto& p : pairs)
    if (!p.error.empty() || !p.antisymmetric || !p.closed) return false;
  bool any = false;
  for (const auto& t : triples) {
    if (t.computed && !t.jacobi) return false;
    any = any || t.computed;
  }
  return any || triples.empty();
}

LieReport lie_axiom_suite(DegenContext& ctx, const std::vector<std::string>& classes, std::size_t max_triple_dim,
                          const PairFilter& filter) {
  LieReport out;
  const std::size_t n = classes.size();
  std::vector<DegenElement> us;
  std::vector<std::size_t> dim;
  for (const auto& c : classes) {
    us.push_back(ctx.u(c));
    dim.push_back(instantiate(c, ctx.algebra(), Field::of_order(2)).dim());
  }
  std::map<std::pair<std::size_t, std::size_t>, DegenElement> br;
  auto negated = [](const DegenElement& e) {
    auto t = e.terms;
    for (auto& [k, v] : t) v = -v;
    return t;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (filter && !filter(classes[i], classes[j])) {
        out.skipped_pairs.emplace_back(classes[i], classes[j]);
        continue;
      }
      LieReport::Pair p;
      p.x = classes[i];
      p.y = classes[j];
      try {
        auto xy = ctx.bracket(us[i], us[j]);
        auto yx = ctx.bracket(us[j], us[i]);
        p.antisymmetric = xy.terms == negated(yx);
        p.closed = true;
        for (const auto& [k, v] : xy.terms) p.closed = p.closed && xy.keys.at(k).indecomposable;
        p.bracket = xy.to_string();
        br.emplace(std::make_pair(i, j), xy);
        br.emplace(std::make_pair(j, i), yx);
      } catch (const Error& e) {
        p.error = e.what();
      }
      out.pairs.push_back(std::move(p));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        if (dim[i] + dim[j] + dim[k] > max_triple_dim) continue;
        LieReport::Triple t;
        t.x = classes[i];
        t.y = classes[j];
        t.z = classes[k];
        try {
          auto a = ctx.bracket(br.at({i, j}), us[k]);
          auto b = ctx.bracket(br.at({j, k}), us[i]);
          auto c = ctx.bracket(br.at({k, i}), us[j]);
          std::map<std::string, Rational> sum;
          for (const auto* e : {&a, &b, &c})
            for (const auto& [key, v] : e->terms) sum[key] += v;
          t.computed = true;
          t.jacobi = std::all_of(sum.begin(), sum.end(), [](const auto& kv) { return kv.second == 0; });
        } catch (const std::out_of_range&) {
          t.error = "inner bracket not computable";
        } catch (const Error& e) {
          t.error = e.what();
        }
        out.triples.push_back(std::move(t));
      }
  return out;
}

}  // namespace hallforge
