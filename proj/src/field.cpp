#include "hallforge/field.hpp"

#include <map>
#include <mutex>

#include "hallforge/errors.hpp"

namespace hallforge {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg <= 1) return true;
  // trial division by every monic polynomial of degree 1..deg/2
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      Poly g(d + 1);
      std::uint64_t t = k;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly lowest_irreducible(std::uint32_t p, std::uint32_t r) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < r; ++i) count *= p;
  for (std::uint64_t k = 0; k < count; ++k) {
    Poly f(r + 1);
    std::uint64_t t = k;
    for (std::uint32_t i = 0; i < r; ++i) {
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    f[r] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& r) {
  if (q < 2) return false;
  std::uint64_t d = 2;
  while (q % d != 0) ++d;
  if (!is_prime(d)) return false;
  std::uint32_t e = 0;
  while (q % d == 0) {
    q /= d;
    ++e;
  }
  if (q != 1) return false;
  p = static_cast<std::uint32_t>(d);
  r = e;
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < r_; ++i) q_ *= p_;
  neg_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    auto c = coords(a);
    for (auto& x : c) x = (p_ - x) % p_;
    neg_[a] = from_coords(c);
  }
  // discrete log tables from the first primitive element
  exp_.assign(q_ - 1 ? q_ - 1 : 1, 1);
  log_.assign(q_, 0);
  for (Elem g = 1; g < q_; ++g) {
    Elem x = 1;
    std::uint32_t order = 0;
    do {
      x = mul_poly(x, g);
      ++order;
    } while (x != 1);
    if (order == q_ - 1) {
      Elem y = 1;
      for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = y;
        log_[y] = i;
        y = mul_poly(y, g);
      }
      break;
    }
  }
  if (q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Elem a = 0; a < q_; ++a) {
      for (Elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_slow(a, b);
    }
  }
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t r, std::uint64_t cap) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (r < 1) throw InvalidArgument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > cap) throw CapExceeded("field size " + std::to_string(p) + "^" + std::to_string(r) + " exceeds cap");
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, r});
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const Field>(p, r, lowest_irreducible(p, r));
  cache.emplace(std::make_pair(p, r), f);
  return f;
}

FieldPtr Field::of_order(std::uint64_t q, std::uint64_t cap) {
  std::uint32_t p = 0, r = 0;
  if (!prime_power(q, p, r)) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return make(p, r, cap);
}

std::string Field::name() const {
  if (r_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(r_) + ")";
}

Elem Field::generator() const {
  if (r_ == 1) return (p_ - modulus_[0]) % p_;
  return p_;  // coordinate vector (0, 1, 0, ...)
}

Elem Field::add_slow(Elem a, Elem b) const {
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::mul_poly(Elem a, Elem b) const {
  auto ca = coords(a), cb = coords(b);
  Poly prod(2 * r_, 0);
  for (std::uint32_t i = 0; i < r_; ++i) {
    for (std::uint32_t j = 0; j < r_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p_);
    }
  }
  Poly red = poly_mod(prod, modulus_, p_);
  red.resize(r_, 0);
  return from_coords(red);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("inversion of zero in " + name());
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

Elem Field::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Elem>(m);
}

std::vector<std::uint32_t> Field::coords(Elem a) const {
  std::vector<std::uint32_t> c(r_);
  for (std::uint32_t i = 0; i < r_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elem Field::from_coords(std::span<const std::uint32_t> c) const {
  if (c.size() != r_) throw InvalidArgument("coordinate vector has wrong length");
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    if (c[i] >= p_) throw InvalidArgument("coordinate out of range");
    out += c[i] * scale;
    scale *= p_;
  }
  return out;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

FieldElem::FieldElem(FieldPtr owner, Elem value) : owner_(std::move(owner)), value_(value) {
  if (value_ >= owner_->q()) throw InvalidArgument("element out of range");
}

FieldElem FieldElem::from_coords(FieldPtr owner, std::span<const std::uint32_t> c) {
  Elem v = owner->from_coords(c);
  return FieldElem(std::move(owner), v);
}

void FieldElem::check_owner(const FieldElem& o) const {
  if (!same_field(owner_, o.owner_)) throw InvalidArgument("field element owner mismatch");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_owner(o);
  return {owner_, owner_->add(value_, o.value_)};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_owner(o);
  return {owner_, owner_->sub(value_, o.value_)};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_owner(o);
  return {owner_, owner_->mul(value_, o.value_)};
}
FieldElem FieldElem::operator-() const { return {owner_, owner_->neg(value_)}; }
FieldElem FieldElem::inverse() const { return {owner_, owner_->inv(value_)}; }
bool FieldElem::operator==(const FieldElem& o) const {
  return same_field(owner_, o.owner_) && value_ == o.value_;
}

FieldElem arith(const FieldElem& a, const FieldElem& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::mul: return a * b;
    case ArithOp::inv: return a.inverse();
    case ArithOp::neg: return -a;
  }
  throw InvalidArgument("unknown operation");
}

FieldEmbedding::FieldEmbedding(FieldPtr src, FieldPtr dst, std::vector<Elem> image)
    : src_(std::move(src)), dst_(std::move(dst)), image_(std::move(image)) {}

FieldEmbedding FieldEmbedding::then(const FieldEmbedding& next) const {
  if (!same_field(dst_, next.src_)) throw InvalidArgument("embeddings do not compose");
  std::vector<Elem> img(image_.size());
  for (std::size_t a = 0; a < image_.size(); ++a) img[a] = next(image_[a]);
  return FieldEmbedding(src_, next.dst_, std::move(img));
}

FieldEmbedding embed(const FieldPtr& src, const FieldPtr& dst) {
  if (src->p() != dst->p()) throw InvalidArgument("embedding between fields of different characteristic");
  if (dst->r() % src->r() != 0) {
    throw InvalidArgument("cannot embed " + src->name() + " into " + dst->name() + ": degree does not divide");
  }
  const auto& f = src->modulus();
  auto eval = [&](Elem x) {
    // Horner evaluation of the source modulus at x in dst
    Elem acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = dst->add(dst->mul(acc, x), dst->from_int(f[i]));
    return acc;
  };
  Elem root = 0;
  bool found = false;
  for (Elem x = 0; x < dst->q(); ++x) {
    if (eval(x) == 0) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found) throw Error("source modulus has no root in target field");
  std::vector<Elem> image(src->q());
  for (Elem a = 0; a < src->q(); ++a) {
    auto c = src->coords(a);
    Elem acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = dst->add(dst->mul(acc, root), dst->from_int(c[i]));
    image[a] = acc;
  }
  return FieldEmbedding(src, dst, std::move(image));
}

}  // namespace hallforge
