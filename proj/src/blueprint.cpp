#include "hallforge/blueprint.hpp"

#include <cctype>
#include <map>

#include "hallforge/errors.hpp"

namespace hallforge {

namespace {

struct NamedEntry {
  std::string name;
  std::vector<std::string> algebras;
  RawModule raw;       // used when expr is empty
  std::string expr;
};

RawModule kron_raw(std::size_t d, std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
  return RawModule{{{"1", d}, {"2", d}}, {{"2", "1", 0, std::move(a)}, {"2", "1", 1, std::move(b)}}};
}

RawModule thin_d4(std::vector<int> arms) {
  RawModule r;
  r.dims.push_back({"1", 1});
  for (int v : arms) {
    r.dims.push_back({std::to_string(v), 1});
    r.blocks.push_back({std::to_string(v), "1", 0, {1}});
  }
  return r;
}

RawModule primed(const RawModule& r) {
  RawModule out = r;
  for (auto& d : out.dims) d.first += "'";
  for (auto& b : out.blocks) {
    b.src += "'";
    b.tgt += "'";
  }
  return out;
}

const std::vector<NamedEntry>& named_table() {
  static const std::vector<NamedEntry> table = [] {
    std::vector<NamedEntry> t;
    const std::vector<std::string> kr = {"kronecker", "kronecker-dup"};
    const std::vector<std::string> d4 = {"d4tilde", "d4tilde-dup"};
    // Kronecker regular modules: the points 0, infinity and 1 of the projective line,
    // a length-two module at 0, and the degree-two point x^2 + x + 1 over GF(2)
    t.push_back({"R0", kr, kron_raw(1, {1}, {0}), ""});
    t.push_back({"Rinf", kr, kron_raw(1, {0}, {1}), ""});
    t.push_back({"R1", kr, kron_raw(1, {1}, {1}), ""});
    t.push_back({"J2", kr, kron_raw(2, {1, 0, 0, 1}, {0, 1, 0, 0}), ""});
    t.push_back({"H2", kr, kron_raw(2, {1, 0, 0, 1}, {0, 1, 1, 1}), ""});
    // D4-tilde thin modules: the regular simples of the three tubes of rank two
    for (const auto& arms : std::vector<std::vector<int>>{{2, 3}, {4, 5}, {2, 4}, {3, 5}, {2, 5}, {3, 4}}) {
      t.push_back({"T" + std::to_string(arms[0]) + std::to_string(arms[1]), d4, thin_d4(arms), ""});
    }
    // dimension vector δ, regular length two in a tube of rank two
    t.push_back({"T6", d4, {}, "ext(T45,T23)"});
    const std::size_t base = t.size();
    for (std::size_t i = 0; i < base; ++i) {
      const auto& e = t[i];
      const std::string dup = e.algebras.front() + "-dup";
      if (e.expr.empty()) {
        t.push_back({e.name + "'", {dup}, primed(e.raw), ""});
      }
    }
    t.push_back({"T6'", {"d4tilde-dup"}, {}, "ext(T45',T23')"});
    return t;
  }();
  return table;
}

const NamedEntry* find_named(const std::string& name, const std::string& algebra) {
  for (const auto& e : named_table()) {
    if (e.name != name) continue;
    for (const auto& a : e.algebras) {
      if (a == algebra) return &e;
    }
  }
  return nullptr;
}

std::vector<std::string> vertex_labels(const std::string& algebra) {
  return builtin_algebra(algebra, Field::of_order(2))->vertex_labels();
}

class Parser {
 public:
  Parser(const std::string& text, const std::string& algebra)
      : s_(text), alg_(algebra), labels_(vertex_labels(algebra)) {}

  Blueprint parse() {
    Blueprint b = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return b;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("blueprint \"" + s_ + "\" at position " + std::to_string(i_) + ": " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip();
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) neg = s_[i_++] == '-';
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected an integer");
    int v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) v = v * 10 + (s_[i_++] - '0');
    return neg ? -v : v;
  }
  std::string ident() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '\'')) ++i_;
    if (start == i_) fail("expected a module");
    return s_.substr(start, i_ - start);
  }

  Blueprint expr() {
    std::vector<Blueprint> parts{term()};
    while (eat('+')) parts.push_back(term());
    if (parts.size() == 1) return parts[0];
    Blueprint b;
    b.tag = Blueprint::Tag::sum;
    b.children = std::move(parts);
    return b;
  }

  Blueprint term() {
    Blueprint a = atom();
    if (eat('^')) {
      Blueprint p;
      p.tag = Blueprint::Tag::power;
      p.degree = integer();
      if (p.degree < 0) fail("negative power");
      p.children.push_back(std::move(a));
      return p;
    }
    return a;
  }

  Blueprint unary(Blueprint::Tag tag) {
    Blueprint b;
    b.tag = tag;
    b.children.push_back(expr());
    expect(')');
    return b;
  }

  Blueprint atom() {
    if (eat('(')) {
      Blueprint b = expr();
      expect(')');
      return b;
    }
    const std::string id = ident();
    if (id == "0") return Blueprint{};
    if (eat('(')) {
      if (id == "rad") return unary(Blueprint::Tag::rad);
      if (id == "top") return unary(Blueprint::Tag::top);
      if (id == "soc") return unary(Blueprint::Tag::soc);
      if (id == "socq") return unary(Blueprint::Tag::socq);
      if (id == "syz" || id == "tau") {
        Blueprint b;
        b.tag = id == "syz" ? Blueprint::Tag::syzygy : Blueprint::Tag::tau;
        b.degree = 1;
        const std::size_t save = i_;
        skip();
        const bool numeric = i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-' || s_[i_] == '+');
        bool has_degree = false;
        if (numeric) {
          // a bare integer is the degree only when a comma follows
          const int d = integer();
          if (eat(',')) {
            b.degree = d;
            has_degree = true;
          }
        }
        if (!has_degree) i_ = save;
        if (b.tag == Blueprint::Tag::syzygy && !has_degree) fail("syz needs a degree: syz(i,X)");
        if (b.tag == Blueprint::Tag::syzygy && (b.degree < -4 || b.degree > 4)) fail("syzygy degree outside [-4, 4]");
        b.children.push_back(expr());
        expect(')');
        return b;
      }
      if (id == "ext") {
        Blueprint b;
        b.tag = Blueprint::Tag::ext;
        b.children.push_back(expr());
        expect(',');
        b.children.push_back(expr());
        expect(')');
        return b;
      }
      fail("unknown function " + id);
    }
    if (id.size() > 1 && (id[0] == 'S' || id[0] == 'P' || id[0] == 'I')) {
      const std::string v = id.substr(1);
      for (const auto& l : labels_) {
        if (l == v) {
          Blueprint b;
          b.tag = id[0] == 'S' ? Blueprint::Tag::simple : id[0] == 'P' ? Blueprint::Tag::projective : Blueprint::Tag::injective;
          b.vertex = v;
          return b;
        }
      }
    }
    if (const NamedEntry* e = find_named(id, alg_)) {
      if (!e->expr.empty()) {
        Blueprint b = Parser(e->expr, alg_).parse();
        b.name = id;
        return b;
      }
      Blueprint b;
      b.tag = Blueprint::Tag::raw;
      b.raw = e->raw;
      b.name = id;
      return b;
    }
    fail("unknown module " + id + " for algebra " + alg_);
  }

  std::string s_, alg_;
  std::vector<std::string> labels_;
  std::size_t i_ = 0;
};

Module instantiate_raw(const RawModule& r, const AlgebraPtr& a) {
  const std::size_t nv = a->num_vertices();
  std::vector<std::size_t> dims(nv, 0);
  for (const auto& [label, d] : r.dims) dims[a->vertex_index(label)] = d;
  std::vector<Mat> blocks;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  std::size_t used = 0;
  for (std::size_t g = 0; g < a->num_generators(); ++g) {
    const std::size_t s = a->gen_src(g), t = a->gen_tgt(g);
    const std::size_t ord = seen[{s, t}]++;
    Mat b(a->field(), dims[t], dims[s]);
    for (const auto& rb : r.blocks) {
      if (a->vertex_index(rb.src) != s || a->vertex_index(rb.tgt) != t || rb.ordinal != ord) continue;
      if (rb.entries.size() != dims[t] * dims[s]) throw InvalidArgument("raw block has the wrong size");
      b = Mat::from_ints(a->field(), dims[t], dims[s], rb.entries);
      ++used;
    }
    blocks.push_back(std::move(b));
  }
  if (used != r.blocks.size()) throw InvalidArgument("raw block refers to a missing arrow");
  Module m(a, std::move(dims), std::move(blocks));
  if (!m.satisfies_relations()) throw InvalidArgument("raw matrices violate the algebra relations");
  return m;
}

}  // namespace

std::string Blueprint::to_string() const {
  if (!name.empty()) return name;
  auto one = [](const Blueprint& b) { return b.to_string(); };
  switch (tag) {
    case Tag::zero: return "0";
    case Tag::simple: return "S" + vertex;
    case Tag::projective: return "P" + vertex;
    case Tag::injective: return "I" + vertex;
    case Tag::rad: return "rad(" + one(children[0]) + ")";
    case Tag::top: return "top(" + one(children[0]) + ")";
    case Tag::soc: return "soc(" + one(children[0]) + ")";
    case Tag::socq: return "socq(" + one(children[0]) + ")";
    case Tag::syzygy: return "syz(" + std::to_string(degree) + "," + one(children[0]) + ")";
    case Tag::tau: return degree == 1 ? "tau(" + one(children[0]) + ")" : "tau(" + std::to_string(degree) + "," + one(children[0]) + ")";
    case Tag::ext: return "ext(" + one(children[0]) + "," + one(children[1]) + ")";
    case Tag::power: {
      const std::string c = one(children[0]);
      const bool wrap = children[0].tag == Tag::sum && children[0].name.empty();
      return (wrap ? "(" + c + ")" : c) + "^" + std::to_string(degree);
    }
    case Tag::sum: {
      std::string out;
      for (const auto& c : children) out += (out.empty() ? "" : "+") + one(c);
      return out;
    }
    case Tag::raw: return "raw";
  }
  return "?";
}

Blueprint parse_blueprint(const std::string& text, const std::string& algebra) { return Parser(text, algebra).parse(); }

Module instantiate(const Blueprint& b, const AlgebraPtr& a) {
  using Tag = Blueprint::Tag;
  auto child = [&](std::size_t i) { return instantiate(b.children.at(i), a); };
  switch (b.tag) {
    case Tag::zero: return Module::zero(a);
    case Tag::simple: return simple_module(a, a->vertex_index(b.vertex));
    case Tag::projective: return projective_module(a, a->vertex_index(b.vertex));
    case Tag::injective: return injective_module(a, a->vertex_index(b.vertex));
    case Tag::rad: {
      const Module m = child(0);
      return submodule(m, radical(m));
    }
    case Tag::top: return top(child(0));
    case Tag::soc: {
      const Module m = child(0);
      return submodule(m, socle(m));
    }
    case Tag::socq: {
      const Module m = child(0);
      return quotient(m, socle(m));
    }
    case Tag::syzygy: return syzygy(child(0), b.degree);
    case Tag::tau: {
      Module m = child(0);
      const auto dir = b.degree >= 0 ? TauDirection::tau : TauDirection::tau_inverse;
      for (int k = 0; k < std::abs(b.degree); ++k) m = ar_translate(m, dir);
      return m;
    }
    case Tag::ext: {
      const Module y = child(0), x = child(1);
      const ExtSpace e = ext_space(1, y, x);
      if (e.dim == 0) throw InvalidArgument("ext(" + b.children[0].to_string() + "," + b.children[1].to_string() + "): Ext^1 vanishes");
      return extension_module(e, x, e.cocycles[0]);
    }
    case Tag::sum: {
      std::vector<Module> ms;
      for (std::size_t i = 0; i < b.children.size(); ++i) ms.push_back(child(i));
      return direct_sum(ms);
    }
    case Tag::power: return power(child(0), static_cast<std::size_t>(b.degree));
    case Tag::raw: return instantiate_raw(b.raw, a);
  }
  throw InvalidArgument("invalid blueprint");
}

Module instantiate(const std::string& text, const std::string& algebra, const FieldPtr& f) {
  return instantiate(parse_blueprint(text, algebra), builtin_algebra(algebra, f));
}

std::vector<std::string> named_modules(const std::string& algebra) {
  std::vector<std::string> out;
  for (const auto& e : named_table()) {
    for (const auto& a : e.algebras) {
      if (a == algebra) out.push_back(e.name);
    }
  }
  return out;
}

bool tower_coherent(const Blueprint& b, const std::string& algebra, const FieldPtr& small, const FieldPtr& big) {
  const Module lo = instantiate(b, builtin_algebra(algebra, small));
  const AlgebraPtr ab = builtin_algebra(algebra, big);
  const Module hi = instantiate(b, ab);
  return is_isomorphic(base_change(lo, embed(small, big), ab), hi);
}

}  // namespace hallforge
