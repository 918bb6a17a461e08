#include "wildcert/matrix.hpp"

#include <algorithm>

namespace wildcert {

namespace {

void require_same_field(const Mat& x, const Mat& y) {
  if (!x.F || !y.F || !x.F->same(*y.F))
    throw error("matrix field mismatch");
}

}  // namespace

Mat Mat::identity(FqPtr f, uint32_t n) {
  Mat m(f, n, n);
  for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(FqPtr f, const std::vector<std::vector<long long>>& rows) {
  uint32_t r = static_cast<uint32_t>(rows.size());
  uint32_t c = r ? static_cast<uint32_t>(rows[0].size()) : 0;
  Mat m(f, r, c);
  for (uint32_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw error("ragged row list");
    for (uint32_t j = 0; j < c; ++j) m.at(i, j) = f->from_int(rows[i][j]);
  }
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](uint32_t x) { return x == 0; });
}

std::vector<uint32_t> Mat::col(uint32_t j) const {
  std::vector<uint32_t> v(rows);
  for (uint32_t i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

std::vector<uint32_t> Mat::row(uint32_t i) const {
  return std::vector<uint32_t>(a.begin() + static_cast<size_t>(i) * cols,
                               a.begin() + static_cast<size_t>(i + 1) * cols);
}

void Mat::set_col(uint32_t j, const std::vector<uint32_t>& v) {
  for (uint32_t i = 0; i < rows; ++i) at(i, j) = v[i];
}

Mat Mat::mul(const Mat& other) const {
  require_same_field(*this, other);
  if (cols != other.rows) throw error("matrix product dimension mismatch");
  Mat r(F, rows, other.cols);
  for (uint32_t i = 0; i < rows; ++i) {
    for (uint32_t k = 0; k < cols; ++k) {
      uint32_t x = at(i, k);
      if (x == 0) continue;
      for (uint32_t j = 0; j < other.cols; ++j) {
        uint32_t y = other.at(k, j);
        if (y == 0) continue;
        r.at(i, j) = F->add(r.at(i, j), F->mul(x, y));
      }
    }
  }
  return r;
}

std::vector<uint32_t> Mat::mul_vec(const std::vector<uint32_t>& v) const {
  if (v.size() != cols) throw error("matrix-vector dimension mismatch");
  std::vector<uint32_t> r(rows, 0);
  for (uint32_t i = 0; i < rows; ++i) {
    uint32_t acc = 0;
    for (uint32_t j = 0; j < cols; ++j) {
      uint32_t x = at(i, j);
      if (x && v[j]) acc = F->add(acc, F->mul(x, v[j]));
    }
    r[i] = acc;
  }
  return r;
}

Mat Mat::add(const Mat& other) const {
  require_same_field(*this, other);
  if (rows != other.rows || cols != other.cols)
    throw error("matrix sum dimension mismatch");
  Mat r(F, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = F->add(a[i], other.a[i]);
  return r;
}

Mat Mat::sub(const Mat& other) const {
  require_same_field(*this, other);
  if (rows != other.rows || cols != other.cols)
    throw error("matrix difference dimension mismatch");
  Mat r(F, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = F->sub(a[i], other.a[i]);
  return r;
}

Mat Mat::scale(uint32_t c) const {
  Mat r(F, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = F->mul(a[i], c);
  return r;
}

Mat Mat::transpose() const {
  Mat r(F, cols, rows);
  for (uint32_t i = 0; i < rows; ++i)
    for (uint32_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::pow(uint32_t n) const {
  if (rows != cols) throw error("matrix power needs a square matrix");
  Mat r = identity(F, rows);
  Mat base = *this;
  while (n) {
    if (n & 1) r = r.mul(base);
    base = base.mul(base);
    n >>= 1;
  }
  return r;
}

RrefResult rref(const Mat& m) {
  RrefResult res{m, {}};
  Mat& r = res.r;
  const Fq& F = *m.F;
  uint32_t lead = 0;
  for (uint32_t col = 0; col < r.cols && lead < r.rows; ++col) {
    uint32_t piv = lead;
    while (piv < r.rows && r.at(piv, col) == 0) ++piv;
    if (piv == r.rows) continue;
    if (piv != lead)
      for (uint32_t j = 0; j < r.cols; ++j)
        std::swap(r.at(piv, j), r.at(lead, j));
    uint32_t s = F.inv(r.at(lead, col));
    if (s != 1)
      for (uint32_t j = 0; j < r.cols; ++j)
        r.at(lead, j) = F.mul(r.at(lead, j), s);
    for (uint32_t i = 0; i < r.rows; ++i) {
      if (i == lead) continue;
      uint32_t c = r.at(i, col);
      if (c == 0) continue;
      for (uint32_t j = 0; j < r.cols; ++j)
        r.at(i, j) = F.sub(r.at(i, j), F.mul(c, r.at(lead, j)));
    }
    res.pivots.push_back(col);
    ++lead;
  }
  return res;
}

uint32_t rank(const Mat& m) {
  return static_cast<uint32_t>(rref(m).pivots.size());
}

Mat kernel_basis(const Mat& m) {
  auto rr = rref(m);
  const Fq& F = *m.F;
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<uint32_t> free_cols;
  for (uint32_t j = 0; j < m.cols; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat k(m.F, m.cols, static_cast<uint32_t>(free_cols.size()));
  for (uint32_t t = 0; t < free_cols.size(); ++t) {
    uint32_t f = free_cols[t];
    k.at(f, t) = 1;
    for (uint32_t i = 0; i < rr.pivots.size(); ++i)
      k.at(rr.pivots[i], t) = F.neg(rr.r.at(i, f));
  }
  return k;
}

std::optional<std::vector<uint32_t>> solve(const Mat& m,
                                           const std::vector<uint32_t>& b) {
  if (b.size() != m.rows) throw error("solve dimension mismatch");
  Mat aug(m.F, m.rows, m.cols + 1);
  for (uint32_t i = 0; i < m.rows; ++i) {
    for (uint32_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto rr = rref(aug);
  std::vector<uint32_t> x(m.cols, 0);
  for (uint32_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == m.cols) return std::nullopt;  // inconsistent
    x[rr.pivots[i]] = rr.r.at(i, m.cols);
  }
  return x;
}

std::optional<Mat> solve_matrix(const Mat& a, const Mat& b) {
  if (a.rows != b.rows) throw error("solve dimension mismatch");
  auto rr = rref(hstack(a, b));
  for (auto p : rr.pivots)
    if (p >= a.cols) return std::nullopt;
  Mat x(a.F, a.cols, b.cols);
  for (uint32_t i = 0; i < rr.pivots.size(); ++i)
    for (uint32_t j = 0; j < b.cols; ++j)
      x.at(rr.pivots[i], j) = rr.r.at(i, a.cols + j);
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  auto rr = rref(hstack(m, Mat::identity(m.F, m.rows)));
  if (rr.pivots.size() != m.rows || (m.rows && rr.pivots.back() >= m.cols))
    return std::nullopt;
  Mat inv(m.F, m.rows, m.cols);
  for (uint32_t i = 0; i < m.rows; ++i)
    for (uint32_t j = 0; j < m.cols; ++j) inv.at(i, j) = rr.r.at(i, m.cols + j);
  return inv;
}

Mat col_space(const Mat& m) {
  auto rr = rref(m.transpose());
  uint32_t r = static_cast<uint32_t>(rr.pivots.size());
  Mat basis(m.F, m.rows, r);
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = 0; j < m.rows; ++j) basis.at(j, i) = rr.r.at(i, j);
  return basis;
}

Mat kronecker(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  Mat r(a.F, a.rows * b.rows, a.cols * b.cols);
  const Fq& F = *a.F;
  for (uint32_t i = 0; i < a.rows; ++i)
    for (uint32_t j = 0; j < a.cols; ++j) {
      uint32_t c = a.at(i, j);
      if (c == 0) continue;
      for (uint32_t k = 0; k < b.rows; ++k)
        for (uint32_t l = 0; l < b.cols; ++l) {
          uint32_t v = b.at(k, l);
          if (v)
            r.at(i * b.rows + k, j * b.cols + l) = F.mul(c, v);
        }
    }
  return r;
}

Mat hstack(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows != b.rows) throw error("hstack row mismatch");
  Mat r(a.F, a.rows, a.cols + b.cols);
  for (uint32_t i = 0; i < a.rows; ++i) {
    for (uint32_t j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (uint32_t j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
  }
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols != b.cols) throw error("vstack column mismatch");
  Mat r(a.F, a.rows + b.rows, a.cols);
  for (uint32_t i = 0; i < a.rows; ++i)
    for (uint32_t j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
  for (uint32_t i = 0; i < b.rows; ++i)
    for (uint32_t j = 0; j < a.cols; ++j) r.at(a.rows + i, j) = b.at(i, j);
  return r;
}

Mat block_diag(const std::vector<Mat>& blocks) {
  if (blocks.empty()) throw error("block_diag needs at least one block");
  uint32_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows;
    cols += b.cols;
  }
  Mat r(blocks[0].F, rows, cols);
  uint32_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (uint32_t i = 0; i < b.rows; ++i)
      for (uint32_t j = 0; j < b.cols; ++j) r.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows;
    co += b.cols;
  }
  return r;
}

Mat random_mat(const FqPtr& f, uint32_t r, uint32_t c, std::mt19937_64& rng) {
  Mat m(f, r, c);
  for (auto& x : m.a) x = static_cast<uint32_t>(rng() % f->q());
  return m;
}

QuotientSpace::QuotientSpace(FqPtr f, uint32_t ambient, const Mat& sub)
    : F(std::move(f)), ambient_(ambient) {
  if (sub.rows != ambient && sub.cols != 0)
    throw error("subspace basis does not live in the ambient space");
  Mat subT = sub.cols ? sub.transpose() : Mat(F, 0, ambient);
  auto rr = rref(subT);
  pivots_ = rr.pivots;
  rows_ = Mat(F, static_cast<uint32_t>(pivots_.size()), ambient);
  for (uint32_t i = 0; i < pivots_.size(); ++i)
    for (uint32_t j = 0; j < ambient; ++j) rows_.at(i, j) = rr.r.at(i, j);
  std::vector<bool> is_pivot(ambient, false);
  for (auto p : pivots_) is_pivot[p] = true;
  for (uint32_t j = 0; j < ambient; ++j)
    if (!is_pivot[j]) complement_.push_back(j);
}

std::vector<uint32_t> QuotientSpace::project(
    const std::vector<uint32_t>& v) const {
  if (v.size() != ambient_) throw error("project dimension mismatch");
  std::vector<uint32_t> w = v;
  for (uint32_t i = 0; i < pivots_.size(); ++i) {
    uint32_t c = w[pivots_[i]];
    if (c == 0) continue;
    for (uint32_t j = 0; j < ambient_; ++j)
      w[j] = F->sub(w[j], F->mul(c, rows_.at(i, j)));
  }
  std::vector<uint32_t> u(complement_.size());
  for (size_t t = 0; t < complement_.size(); ++t) u[t] = w[complement_[t]];
  return u;
}

Mat QuotientSpace::project_mat(const Mat& cols) const {
  Mat r(F, dim(), cols.cols);
  for (uint32_t j = 0; j < cols.cols; ++j) r.set_col(j, project(cols.col(j)));
  return r;
}

std::vector<uint32_t> QuotientSpace::lift(
    const std::vector<uint32_t>& u) const {
  if (u.size() != complement_.size()) throw error("lift dimension mismatch");
  std::vector<uint32_t> v(ambient_, 0);
  for (size_t t = 0; t < complement_.size(); ++t) v[complement_[t]] = u[t];
  return v;
}

Mat QuotientSpace::lift_mat(const Mat& cols) const {
  Mat r(F, ambient_, cols.cols);
  for (uint32_t j = 0; j < cols.cols; ++j) r.set_col(j, lift(cols.col(j)));
  return r;
}

}  // namespace wildcert
