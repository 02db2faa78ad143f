#pragma once

// Finite fields GF(p^r) and embeddings between them.
//
// An element is stored as the integer sum_i c_i p^i of its coordinate vector
// (c_0, ..., c_{r-1}) with respect to the power basis 1, x, ..., x^{r-1} of
// GF(p)[x]/(modulus).  Prime-subfield elements are therefore 0..p-1.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hallforge {

using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Default cap on the field size q = p^r.
inline constexpr std::uint64_t kDefaultFieldCap = 1u << 16;

class Field {
 public:
  /// GF(p^r) with the lowest monic irreducible modulus.  Results are cached,
  /// so equal (p, r) yield the same object.
  static FieldPtr make(std::uint32_t p, std::uint32_t r,
                       std::uint64_t cap = kDefaultFieldCap);
  /// GF(q) for a prime power q.
  static FieldPtr of_order(std::uint64_t q, std::uint64_t cap = kDefaultFieldCap);

  std::uint32_t p() const { return p_; }
  std::uint32_t r() const { return r_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus, ascending-degree coefficients, length r + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string name() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// Class of x in GF(p)[x]/(modulus); for r = 1 this is 0 when the modulus is x.
  Elem generator() const;

  Elem add(Elem a, Elem b) const {
    return add_table_.empty() ? add_slow(a, b) : add_table_[a * q_ + b];
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  /// Throws InvalidArgument on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;

  std::vector<std::uint32_t> coords(Elem a) const;
  Elem from_coords(std::span<const std::uint32_t> c) const;

  /// Structural equality (same p, r and modulus).
  bool same_as(const Field& o) const {
    return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_;
  }

  Field(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus);

 private:
  Elem add_slow(Elem a, Elem b) const;
  Elem mul_poly(Elem a, Elem b) const;

  std::uint32_t p_, r_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_table_;
  std::vector<Elem> neg_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// A field element bound to its owning field.
class FieldElem {
 public:
  FieldElem(FieldPtr owner, Elem value);
  static FieldElem from_coords(FieldPtr owner, std::span<const std::uint32_t> c);

  const FieldPtr& owner() const { return owner_; }
  Elem value() const { return value_; }
  std::vector<std::uint32_t> coords() const { return owner_->coords(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;
  bool operator==(const FieldElem& o) const;

 private:
  void check_owner(const FieldElem& o) const;
  FieldPtr owner_;
  Elem value_;
};

enum class ArithOp { add, mul, inv, neg };

/// Single entry point for the four field operations; b is ignored for unary ops.
FieldElem arith(const FieldElem& a, const FieldElem& b, ArithOp op);

/// Ring embedding GF(p^r) -> GF(p^s), r | s, sending the source generator to
/// the lowest-indexed root of the source modulus in the target.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr src, FieldPtr dst, std::vector<Elem> image);
  const FieldPtr& src() const { return src_; }
  const FieldPtr& dst() const { return dst_; }
  Elem operator()(Elem a) const { return image_[a]; }
  /// Composition: first *this, then next.
  FieldEmbedding then(const FieldEmbedding& next) const;

 private:
  FieldPtr src_, dst_;
  std::vector<Elem> image_;
};

FieldEmbedding embed(const FieldPtr& src, const FieldPtr& dst);

bool is_prime(std::uint64_t n);
/// Decomposes q = p^r; returns false when q is not a prime power.
bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& r);

}  // namespace hallforge
