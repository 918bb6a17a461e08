#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "wildcert/fq.hpp"

namespace wildcert {

/// Dense row-major matrix over a shared finite field. All arithmetic is
/// exact; pivoting is deterministic (first nonzero entry), so every result
/// is reproducible bit for bit.
struct Mat {
  FqPtr F;
  uint32_t rows = 0, cols = 0;
  std::vector<uint32_t> a;

  Mat() = default;
  Mat(FqPtr f, uint32_t r, uint32_t c)
      : F(std::move(f)), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  static Mat zero(FqPtr f, uint32_t r, uint32_t c) { return Mat(f, r, c); }
  static Mat identity(FqPtr f, uint32_t n);
  /// Row-major entries, reduced into the field via from_int.
  static Mat from_rows(FqPtr f,
                       const std::vector<std::vector<long long>>& rows);

  uint32_t& at(uint32_t i, uint32_t j) {
    return a[static_cast<size_t>(i) * cols + j];
  }
  uint32_t at(uint32_t i, uint32_t j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  bool is_zero() const;
  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  std::vector<uint32_t> col(uint32_t j) const;
  std::vector<uint32_t> row(uint32_t i) const;
  void set_col(uint32_t j, const std::vector<uint32_t>& v);

  Mat mul(const Mat& other) const;
  std::vector<uint32_t> mul_vec(const std::vector<uint32_t>& v) const;
  Mat add(const Mat& other) const;
  Mat sub(const Mat& other) const;
  Mat scale(uint32_t c) const;
  Mat transpose() const;
  Mat pow(uint32_t n) const;  // square matrices
};

struct RrefResult {
  Mat r;
  std::vector<uint32_t> pivots;  // pivot column indices, ascending
};

/// Reduced row echelon form; rank = pivots.size(). Idempotent.
RrefResult rref(const Mat& m);

uint32_t rank(const Mat& m);

/// Columns form a basis of the right null space; cols - rank(m) of them.
Mat kernel_basis(const Mat& m);

/// Some x with m*x = b, or nullopt if inconsistent.
std::optional<std::vector<uint32_t>> solve(const Mat& m,
                                           const std::vector<uint32_t>& b);

/// X with a*X = b (columnwise solve), or nullopt if any column fails.
std::optional<Mat> solve_matrix(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& m);

/// Canonical basis of the column space (RREF of the transpose, transposed
/// back), as columns. Unique for a given column span.
Mat col_space(const Mat& m);

/// Standard Kronecker product; dimensions multiply.
Mat kronecker(const Mat& a, const Mat& b);

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat block_diag(const std::vector<Mat>& blocks);

Mat random_mat(const FqPtr& f, uint32_t r, uint32_t c, std::mt19937_64& rng);

/// The quotient of F^n by the column span of a subspace basis. project()
/// maps a vector to its coordinates in a canonical complement; lift() is a
/// right inverse placing coordinates at the complement positions.
class QuotientSpace {
 public:
  QuotientSpace(FqPtr f, uint32_t ambient, const Mat& subspace_cols);

  uint32_t ambient_dim() const { return ambient_; }
  uint32_t dim() const { return static_cast<uint32_t>(complement_.size()); }
  const std::vector<uint32_t>& complement_coords() const { return complement_; }

  std::vector<uint32_t> project(const std::vector<uint32_t>& v) const;
  Mat project_mat(const Mat& cols) const;
  std::vector<uint32_t> lift(const std::vector<uint32_t>& u) const;
  Mat lift_mat(const Mat& cols) const;

 private:
  FqPtr F;
  uint32_t ambient_;
  Mat rows_;                        // RREF of subspace transpose, rank rows
  std::vector<uint32_t> pivots_;    // pivot coordinates
  std::vector<uint32_t> complement_;
};

}  // namespace wildcert
