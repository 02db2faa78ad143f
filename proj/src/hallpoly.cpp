#include "hallforge/hallpoly.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "hallforge/decompose.hpp"
#include "hallforge/errors.hpp"

namespace hallforge {

namespace {

std::vector<Rational> newton_fit(const std::vector<Sample>& pts, std::size_t n) {
  // divided differences, then expand the Newton form into monomials
  std::vector<Rational> xs(n), dd(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = Rational(pts[i].first);
    dd[i] = Rational(pts[i].second);
  }
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t k = n; k-- > 0;) {
    // c <- c * (x - xs[k]) + dd[k]
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] == 0) continue;
      if (i + 1 < n) next[i + 1] += c[i];
      next[i] -= c[i] * xs[k];
    }
    next[0] += dd[k];
    c = std::move(next);
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

std::uint64_t prime_of(std::uint64_t q, std::size_t& r) {
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (q % p) continue;
    r = 0;
    while (q % p == 0) q /= p, ++r;
    if (q != 1) throw InvalidArgument("not a prime power");
    return p;
  }
  throw InvalidArgument("not a prime power");
}

}  // namespace

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

std::vector<BigInt> IntPoly::shifted_at_one() const {
  // Taylor shift x -> y + 1
  std::vector<BigInt> a = c;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = a.size() - 1; j > i; --j) a[j - 1] += a[j];
  return a;
}

std::string IntPoly::to_string() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    BigInt a = abs(c[i]);
    if (!first) os << (c[i] < 0 ? " - " : " + ");
    else if (c[i] < 0) os << "-";
    first = false;
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Rational RatPoly::eval(const Rational& x) const {
  Rational v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

bool RatPoly::integral() const {
  for (const auto& v : c)
    if (denominator(v) != 1) return false;
  return true;
}

IntPoly RatPoly::to_int() const {
  IntPoly p;
  for (const auto& v : c) p.c.push_back(numerator(v));
  return p;
}

std::string RatPoly::to_string() const {
  if (integral()) return to_int().to_string();
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Rational a = abs(c[i]);
    if (!first) os << (c[i] < 0 ? " - " : " + ");
    else if (c[i] < 0) os << "-";
    first = false;
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

RatFit fit_rational_polynomial(const std::vector<Sample>& points, const std::vector<Sample>& holdout,
                               std::size_t start) {
  RatFit out;
  if (points.empty()) {
    out.message = "no interpolation points";
    return out;
  }
  start = std::clamp<std::size_t>(start, 1, points.size() > 1 ? points.size() - 1 : 1);
  std::vector<Rational> prev = newton_fit(points, start);
  // a stretch of zeros agrees with the zero polynomial, so agreement also has to survive every later point
  auto fits_all = [&](const RatPoly& p) {
    for (const auto& [q, g] : points)
      if (p.eval(Rational(q)) != Rational(g)) return false;
    return true;
  };
  bool stable = false;
  std::size_t used = start;
  for (std::size_t n = start + 1; n <= points.size(); ++n) {
    auto cur = newton_fit(points, n);
    used = n;
    if (cur == prev && fits_all(RatPoly{cur})) {
      stable = true;
      break;
    }
    prev = std::move(cur);
  }
  out.points_used = used;
  out.poly.c = std::move(prev);
  if (!stable && holdout.empty()) {
    out.message = "no polynomial found at this degree bound";
    return out;
  }
  bool held = true;
  for (const auto& [q, g] : holdout) {
    Rational pred = out.poly.eval(Rational(q));
    out.holdout.emplace_back(q, g, pred);
    held = held && pred == Rational(g);
  }
  out.ok = held;
  if (!held) out.message = "hold-out residual is nonzero";
  return out;
}

FitResult fit_integer_polynomial(const std::vector<Sample>& points, const std::vector<Sample>& holdout,
                                 std::size_t start) {
  FitResult out;
  auto r = fit_rational_polynomial(points, holdout, start);
  out.points_used = r.points_used;
  out.message = r.message;
  if (!r.ok) return out;
  if (!r.poly.integral()) {
    out.message = "interpolant has non-integer coefficients";
    return out;
  }
  out.poly = r.poly.to_int();
  bool held = true;
  for (const auto& [q, g] : holdout) {
    BigInt pred = out.poly.eval(BigInt(q));
    out.holdout.emplace_back(q, g, pred);
    held = held && pred == g;
  }
  out.ok = held;
  if (!held) out.message = "hold-out residual is nonzero";
  return out;
}

bool ConservativitySet::allows(std::size_t r) const {
  for (auto d : residue_degrees)
    if (std::gcd(d, r) != 1) return false;
  return true;
}

ConservativitySet conservative_degrees(const std::vector<Blueprint>& bs, const std::string& algebra,
                                       const FieldPtr& base, std::size_t max_r) {
  ConservativitySet out;
  out.base_q = base->q();
  auto a = builtin_algebra(algebra, base);
  for (const auto& b : bs) {
    Module m = instantiate(b, a);
    if (m.is_zero()) continue;
    auto d = decompose(m);
    for (const auto& s : d.summands)
      if (std::find(out.residue_degrees.begin(), out.residue_degrees.end(), s.end.residue_degree) ==
          out.residue_degrees.end())
        out.residue_degrees.push_back(s.end.residue_degree);
  }
  std::sort(out.residue_degrees.begin(), out.residue_degrees.end());
  for (std::size_t r = 1; r <= max_r; ++r)
    if (out.allows(r)) out.allowed.push_back(r);
  return out;
}

std::size_t hom_exponent(const Blueprint& m, const Blueprint& n, const std::string& algebra,
                         const std::vector<FieldPtr>& fields) {
  std::optional<std::size_t> h;
  for (const auto& f : fields) {
    auto a = builtin_algebra(algebra, f);
    std::size_t d = hom_space(instantiate(m, a), instantiate(n, a)).size();
    if (h && *h != d)
      throw CheckFailed("dim Hom(" + m.to_string() + ", " + n.to_string() + ") depends on the field: " +
                        std::to_string(*h) + " vs " + std::to_string(d) + " over " + f->name());
    h = d;
  }
  if (!h) throw InvalidArgument("hom_exponent needs at least one field");
  return *h;
}

CountCache& CountCache::global() {
  static CountCache c = [] {
    CountCache c;
    if (const char* dir = std::getenv("HALLFORGE_CACHE"); dir && *dir) {
      c.path_ = std::string(dir) + "/hall_numbers.json";
      std::ifstream in(c.path_);
      if (in) {
        try {
          auto j = nlohmann::json::parse(in);
          for (auto& [k, v] : j.items()) c.values_[k] = v.get<std::string>();
        } catch (const nlohmann::json::exception&) {
          c.values_.clear();  // unreadable cache: start over
        }
      }
    }
    return c;
  }();
  return c;
}

std::optional<BigInt> CountCache::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return BigInt(it->second);
}

void CountCache::put(const std::string& key, const BigInt& value) {
  values_[key] = value.str();
  save();
}

void CountCache::save() const {
  if (path_.empty()) return;
  nlohmann::json j(values_);
  std::ofstream out(path_);
  if (out) out << j.dump(1) << "\n";
}

BigInt hall_count(const Blueprint& x, const Blueprint& y, const Blueprint& m, const std::string& algebra,
                  std::uint64_t q, const HallOptions& opt) {
  std::string key = algebra + "|" + x.to_string() + "|" + y.to_string() + "|" + m.to_string() + "|" + std::to_string(q);
  auto& cache = CountCache::global();
  if (auto v = cache.get(key)) return *v;
  auto a = builtin_algebra(algebra, Field::of_order(q));
  BigInt g = hall_number(instantiate(m, a), instantiate(x, a), instantiate(y, a), opt.cap_submodules);
  cache.put(key, g);
  return g;
}

HallPolynomial interpolate(const std::string& algebra, const std::string& xs, const std::string& ys,
                           const std::string& ms, const std::vector<std::uint64_t>& points,
                           const std::vector<std::uint64_t>& holdout, const HallOptions& opt) {
  HallPolynomial out;
  out.algebra = algebra;
  Blueprint x = parse_blueprint(xs, algebra), y = parse_blueprint(ys, algebra), m = parse_blueprint(ms, algebra);
  out.x = x.to_string();
  out.y = y.to_string();
  out.m = m.to_string();

  std::map<std::uint64_t, ConservativitySet> by_prime;
  auto conservative = [&](std::uint64_t q) {
    std::size_t r = 0;
    std::uint64_t p = prime_of(q, r);
    auto it = by_prime.find(p);
    if (it == by_prime.end())
      it = by_prime.emplace(p, conservative_degrees({x, y, m}, algebra, Field::of_order(p), 1)).first;
    return it->second.allows(r);
  };

  std::vector<Sample> pts, hold;
  for (auto q : points) {
    if (!conservative(q)) {
      out.skipped.push_back(q);
      continue;
    }
    pts.emplace_back(q, hall_count(x, y, m, algebra, q, opt));
  }
  for (auto q : holdout) {
    if (!conservative(q)) {
      out.skipped.push_back(q);
      continue;
    }
    hold.emplace_back(q, hall_count(x, y, m, algebra, q, opt));
  }
  out.points = pts;
  if (pts.empty()) {
    out.message = "no conservative interpolation points";
    return out;
  }
  auto a = builtin_algebra(algebra, Field::of_order(pts.front().first));
  std::size_t e = ext_dim(1, instantiate(x, a), instantiate(y, a));
  auto fit = fit_integer_polynomial(pts, hold, e + 1);
  out.ok = fit.ok;
  out.poly = fit.poly;
  out.message = fit.message;
  for (const auto& [q, g, pred] : fit.holdout) out.holdout.emplace_back(q, g, g == pred);
  if (out.ok) out.lemma_case = lemma51_check(out, Field::of_order(pts.front().first)).case_name;
  return out;
}

Lemma51Verdict lemma51_check(const HallPolynomial& g, const FieldPtr& f) {
  Lemma51Verdict v;
  auto a = builtin_algebra(g.algebra, f);
  Module x = instantiate(parse_blueprint(g.x, g.algebra), a);
  Module y = instantiate(parse_blueprint(g.y, g.algebra), a);
  Module m = instantiate(parse_blueprint(g.m, g.algebra), a);
  v.value = g.poly.eval(1);
  v.m_indecomposable = !m.is_zero() && is_indecomposable(m);
  if (!is_isomorphic(m, direct_sum({x, y}))) {
    v.case_name = "L5.1-1";
    v.expected = 0;
  } else if (is_isomorphic(x, y)) {
    v.case_name = "L5.1-2a";
    v.expected = 2;
  } else {
    v.case_name = "L5.1-2b";
    v.expected = 1;
  }
  v.holds = v.value == v.expected;
  v.flagged = v.case_name == "L5.1-1" && !v.holds;
  return v;
}

}  // namespace hallforge
