#include "hallforge/linalg.hpp"

#include "hallforge/errors.hpp"

namespace hallforge {

Mat::Mat(FieldPtr f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat Mat::identity(FieldPtr f, std::size_t n) {
  Mat m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_ints(FieldPtr f, std::size_t rows, std::size_t cols, std::span<const std::int64_t> v) {
  if (v.size() != rows * cols) throw InvalidArgument("matrix entry count does not match its shape");
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < v.size(); ++i) m.data_[i] = f->from_int(v[i]);
  return m;
}

Mat Mat::from_rows(FieldPtr f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(std::move(f), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidArgument("row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
  }
  return m;
}

Vec Mat::col_vec(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("matrix product shape mismatch");
  Mat out(f_ ? f_ : o.f_, rows_, o.cols_);
  const Field& F = *out.f_;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = (*this)(i, k);
      if (a == 0) continue;
      const Elem* orow = o.data_.data() + k * o.cols_;
      Elem* dst = out.data_.data() + i * o.cols_;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (orow[j] != 0) dst[j] = F.add(dst[j], F.mul(a, orow[j]));
      }
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix sum shape mismatch");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = f_->add(data_[i], o.data_[i]);
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix difference shape mismatch");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = f_->sub(data_[i], o.data_[i]);
  return out;
}

Mat Mat::scaled(Elem s) const {
  Mat out = *this;
  for (auto& x : out.data_) x = f_->mul(x, s);
  return out;
}

Vec Mat::apply(std::span<const Elem> v) const {
  if (v.size() != cols_) throw InvalidArgument("matrix-vector shape mismatch");
  Vec out(rows_, 0);
  const Field& F = *f_;
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem acc = 0;
    const Elem* r = data_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (r[j] != 0 && v[j] != 0) acc = F.add(acc, F.mul(r[j], v[j]));
    }
    out[i] = acc;
  }
  return out;
}

Mat Mat::transpose() const {
  Mat out(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Mat out(f_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  }
  return out;
}

Mat Mat::select_rows(std::span<const std::size_t> idx) const {
  Mat out(f_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    std::copy_n(data_.begin() + idx[i] * cols_, cols_, out.data_.begin() + i * cols_);
  }
  return out;
}

Mat Mat::select_cols(std::span<const std::size_t> idx) const {
  Mat out(f_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
  }
  return out;
}

Mat Mat::hstack(const Mat& o) const {
  if (rows_ != o.rows_) throw InvalidArgument("hstack row mismatch");
  Mat out(f_ ? f_ : o.f_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) out(i, cols_ + j) = o(i, j);
  }
  return out;
}

Mat Mat::vstack(const Mat& o) const {
  if (cols_ != o.cols_) throw InvalidArgument("vstack column mismatch");
  Mat out(f_ ? f_ : o.f_, rows_ + o.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), out.data_.begin() + data_.size());
  return out;
}

Mat Mat::map_entries(const FieldEmbedding& e) const {
  Mat out(e.dst(), rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = e(data_[i]);
  return out;
}

bool Mat::is_zero() const {
  for (auto x : data_) {
    if (x != 0) return false;
  }
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<std::size_t> rref_inplace(Mat& m) {
  std::vector<std::size_t> pivots;
  if (m.rows() == 0 || m.cols() == 0) return pivots;
  const Field& F = *m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    const Elem s = F.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.mul(m(r, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Elem t = m(i, c);
      if (t == 0) continue;
      const Elem nt = F.neg(t);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m(r, j) != 0) m(i, j) = F.add(m(i, j), F.mul(nt, m(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

namespace {

Mat kernel_from_rref(const Mat& rref, const std::vector<std::size_t>& pivots) {
  const FieldPtr& f = rref.field();
  const std::size_t n = rref.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f->neg(rref(i, free));
    basis.push_back(std::move(v));
  }
  return Mat::from_rows(f, n, basis);
}

}  // namespace

GaussResult gauss(const Mat& m) {
  GaussResult g;
  g.rref = m;
  g.pivots = rref_inplace(g.rref);
  g.rank = g.pivots.size();
  g.kernel = kernel_from_rref(g.rref, g.pivots);
  Mat t = m.transpose();
  auto tp = rref_inplace(t);
  g.image_basis = t.block(0, 0, tp.size(), t.cols());
  return g;
}

std::size_t rank(const Mat& m) {
  Mat c = m;
  return rref_inplace(c).size();
}

Mat kernel(const Mat& m) {
  Mat c = m;
  auto p = rref_inplace(c);
  return kernel_from_rref(c, p);
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Mat aug = m.hstack(Mat::identity(m.field(), n));
  auto p = rref_inplace(aug);
  if (p.size() < n || p[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

std::optional<Vec> solve(const Mat& m, std::span<const Elem> b) {
  if (b.size() != m.rows()) throw InvalidArgument("right-hand side length mismatch");
  Mat aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto p = rref_inplace(aug);
  if (!p.empty() && p.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) x[p[i]] = aug(i, m.cols());
  return x;
}

RowReducer::RowReducer(FieldPtr f, std::size_t cols) : f_(std::move(f)), cols_(cols) {}

bool RowReducer::reduce(Vec& v) const {
  const Field& F = *f_;
  bool nonzero = false;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    while (k < pivot_.size() && pivot_[k] < c) ++k;
    if (k < pivot_.size() && pivot_[k] == c) {
      const Elem t = F.neg(v[c]);
      const Vec& r = rows_[k];
      for (std::size_t j = c; j < cols_; ++j) {
        if (r[j] != 0) v[j] = F.add(v[j], F.mul(t, r[j]));
      }
    } else {
      nonzero = true;
    }
  }
  return !nonzero;
}

bool RowReducer::add(Vec v) {
  if (v.size() != cols_) throw InvalidArgument("row length mismatch");
  if (reduce(v)) return false;
  std::size_t c = 0;
  while (v[c] == 0) ++c;
  const Elem s = f_->inv(v[c]);
  for (std::size_t j = c; j < cols_; ++j) v[j] = f_->mul(v[j], s);
  auto it = std::lower_bound(pivot_.begin(), pivot_.end(), c);
  const auto pos = static_cast<std::size_t>(it - pivot_.begin());
  pivot_.insert(it, c);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  return true;
}

Mat RowReducer::rref() const {
  Mat m = Mat::from_rows(f_, cols_, rows_);
  rref_inplace(m);
  return m;
}

std::vector<std::size_t> RowReducer::pivots() const { return pivot_; }

Subspace::Subspace(FieldPtr f, std::size_t ambient) : ambient_(ambient), basis_(std::move(f), 0, ambient) {}

Subspace Subspace::span(const Mat& rows) {
  Subspace s;
  s.ambient_ = rows.cols();
  Mat m = rows;
  s.pivots_ = rref_inplace(m);
  s.basis_ = m.block(0, 0, s.pivots_.size(), m.cols());
  return s;
}

Subspace Subspace::span(FieldPtr f, std::size_t ambient, const std::vector<Vec>& rows) {
  return span(Mat::from_rows(std::move(f), ambient, rows));
}

Subspace Subspace::full(FieldPtr f, std::size_t ambient) { return span(Mat::identity(std::move(f), ambient)); }

Vec Subspace::reduce(std::span<const Elem> v) const {
  if (v.size() != ambient_) throw InvalidArgument("vector length does not match ambient dimension");
  Vec out(v.begin(), v.end());
  const Field& F = *field();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem t = out[pivots_[i]];
    if (t == 0) continue;
    const Elem nt = F.neg(t);
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
      const Elem b = basis_(i, j);
      if (b != 0) out[j] = F.add(out[j], F.mul(nt, b));
    }
  }
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const {
  for (auto x : reduce(v)) {
    if (x != 0) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw InvalidArgument("ambient mismatch");
  for (std::size_t i = 0; i < o.dim(); ++i) {
    if (!contains(o.basis_.row(i))) return false;
  }
  return true;
}

Mat Subspace::quotient_map() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (!is_pivot[j]) free.push_back(j);
  }
  Mat q(field(), free.size(), ambient_);
  const Field& F = *field();
  for (std::size_t k = 0; k < free.size(); ++k) {
    const std::size_t j = free[k];
    q(k, j) = 1;
    for (std::size_t i = 0; i < pivots_.size(); ++i) q(k, pivots_[i]) = F.neg(basis_(i, j));
  }
  return q;
}

Vec Subspace::coordinates(std::span<const Elem> v) const {
  Vec c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::size_t Subspace::hash() const {
  std::size_t h = ambient_ * 1315423911u + basis_.rows();
  for (auto x : basis_.data()) h = h * 1000003u ^ x;
  return h;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw InvalidArgument("ambient mismatch");
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  return Subspace::span(a.basis().vstack(b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw InvalidArgument("ambient mismatch");
  const std::size_t n = a.ambient();
  const FieldPtr& f = a.field() ? a.field() : b.field();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(f, n);
  // Zassenhaus: rows (a | a) and (b | 0); rows of the echelon form whose
  // left half vanishes carry a basis of the intersection in the right half.
  Mat z(f, a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      z(i, j) = a.basis()(i, j);
      z(i, n + j) = a.basis()(i, j);
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) z(a.dim() + i, j) = b.basis()(i, j);
  }
  auto piv = rref_inplace(z);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= n) {
      Vec v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = z(i, n + j);
      rows.push_back(std::move(v));
    }
  }
  return Subspace::span(f, n, rows);
}

void enumerate_subspaces(std::size_t ambient, std::size_t d, const FieldPtr& f,
                         const std::function<void(const Subspace&)>& emit, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < ambient; ++i) {
    total *= f->q();
    if (total > cap) throw CapExceeded("subspace enumeration of F_" + std::to_string(f->q()) + "^" + std::to_string(ambient) + " exceeds cap");
  }
  if (d > ambient) return;
  std::vector<std::size_t> piv(d);
  for (std::size_t i = 0; i < d; ++i) piv[i] = i;
  while (true) {
    // free slots: (row, col) with col > pivot(row) and col not a pivot
    std::vector<bool> is_pivot(ambient, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t c = piv[i] + 1; c < ambient; ++c) {
        if (!is_pivot[c]) slots.emplace_back(i, c);
      }
    }
    Mat basis(f, d, ambient);
    for (std::size_t i = 0; i < d; ++i) basis(i, piv[i]) = 1;
    std::vector<Elem> digits(slots.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < slots.size(); ++k) basis(slots[k].first, slots[k].second) = digits[k];
      emit(Subspace::span(basis));
      std::size_t k = slots.size();
      while (k > 0) {
        --k;
        if (++digits[k] < f->q()) break;
        digits[k] = 0;
        if (k == 0) {
          k = slots.size() + 1;
          break;
        }
      }
      if (slots.empty() || k == slots.size() + 1) break;
    }
    // next pivot combination in lexicographic order
    std::size_t i = d;
    while (i > 0 && piv[i - 1] == ambient - d + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
}

}  // namespace hallforge
