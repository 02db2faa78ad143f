#pragma once

// Dense exact linear algebra over a finite field.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hallforge/field.hpp"

namespace hallforge {

using Vec = std::vector<Elem>;

class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr f, std::size_t rows, std::size_t cols);
  static Mat identity(FieldPtr f, std::size_t n);
  /// Row-major integers reduced into the prime subfield.
  static Mat from_ints(FieldPtr f, std::size_t rows, std::size_t cols, std::span<const std::int64_t> v);
  /// Matrix whose rows are the given vectors (all of length cols).
  static Mat from_rows(FieldPtr f, std::size_t cols, const std::vector<Vec>& rows);

  const FieldPtr& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const { return Vec(row(i).begin(), row(i).end()); }
  Vec col_vec(std::size_t j) const;
  const std::vector<Elem>& data() const { return data_; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(Elem s) const;
  Vec apply(std::span<const Elem> v) const;  // this * v
  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Mat select_rows(std::span<const std::size_t> idx) const;
  Mat select_cols(std::span<const std::size_t> idx) const;
  Mat hstack(const Mat& o) const;
  Mat vstack(const Mat& o) const;
  Mat map_entries(const FieldEmbedding& e) const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Mat& o) const;

 private:
  FieldPtr f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

class Subspace;

struct GaussResult {
  std::size_t rank = 0;
  Mat rref;                          // same shape as the input
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  Mat kernel;                        // rows form a basis of {x : m x = 0}
  Mat image_basis;                   // rows form a basis of the column space, RREF
};

/// Row reduction in place; returns pivot columns.
std::vector<std::size_t> rref_inplace(Mat& m);
GaussResult gauss(const Mat& m);
std::size_t rank(const Mat& m);
/// Rows of the returned matrix span the null space of m.
Mat kernel(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
/// Some x with m x = b, when b lies in the column space.
std::optional<Vec> solve(const Mat& m, std::span<const Elem> b);

/// Incremental row echelon form.  Rows are reduced on insertion; rank only grows.
class RowReducer {
 public:
  RowReducer(FieldPtr f, std::size_t cols);
  /// Returns true when v was independent of the rows already present.
  bool add(Vec v);
  /// Reduces v against the stored rows in place; returns true when it becomes 0.
  bool reduce(Vec& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  /// Fully reduced rows sorted by pivot.
  Mat rref() const;
  std::vector<std::size_t> pivots() const;

 private:
  FieldPtr f_;
  std::size_t cols_;
  std::vector<Vec> rows_;           // sorted by pivot, leading coefficient 1
  std::vector<std::size_t> pivot_;
};

/// A subspace of F^n stored by its unique RREF basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldPtr f, std::size_t ambient);  // zero subspace
  static Subspace span(const Mat& rows);
  static Subspace span(FieldPtr f, std::size_t ambient, const std::vector<Vec>& rows);
  static Subspace full(FieldPtr f, std::size_t ambient);

  const FieldPtr& field() const { return basis_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& o) const;
  /// v minus its projection along the pivot coordinates.
  Vec reduce(std::span<const Elem> v) const;
  /// (ambient - dim) x ambient surjection with kernel exactly this subspace.
  Mat quotient_map() const;
  /// Coordinates of v (which must lie in the subspace) in the RREF basis.
  Vec coordinates(std::span<const Elem> v) const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  std::size_t hash() const;

 private:
  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Zassenhaus intersection.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Default cap on q^ambient for subspace enumeration.
inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

/// Calls emit for each d-dimensional subspace of F^ambient exactly once, in
/// RREF-lexicographic order (pivot sets lexicographically, then free entries
/// as an odometer).  Throws CapExceeded when q^ambient exceeds cap.
void enumerate_subspaces(std::size_t ambient, std::size_t d, const FieldPtr& f,
                         const std::function<void(const Subspace&)>& emit,
                         std::uint64_t cap = kDefaultEnumerationCap);

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

}  // namespace hallforge
