#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wildcert/matrix.hpp"

using namespace wildcert;

TEST_CASE("rref of the identity and the zero matrix") {
  auto F = Fq::make(2);
  auto rr = rref(Mat::identity(F, 2));
  CHECK(rr.r == Mat::identity(F, 2));
  CHECK(rr.pivots == std::vector<uint32_t>{0, 1});
  auto zz = rref(Mat::zero(F, 3, 3));
  CHECK(zz.r.is_zero());
  CHECK(zz.pivots.empty());
}

TEST_CASE("rref of a rank-one matrix over F_2") {
  auto F = Fq::make(2);
  Mat m = Mat::from_rows(F, {{1, 1}, {1, 1}});
  auto rr = rref(m);
  CHECK(rr.r == Mat::from_rows(F, {{1, 1}, {0, 0}}));
  CHECK(rr.pivots == std::vector<uint32_t>{0});
}

TEST_CASE("kernel bases") {
  auto F = Fq::make(2);
  CHECK(kernel_basis(Mat::identity(F, 3)).cols == 0);
  CHECK(kernel_basis(Mat::zero(F, 2, 3)).cols == 3);
  Mat m = Mat::from_rows(F, {{1, 1}});
  Mat k = kernel_basis(m);
  REQUIRE(k.cols == 1);
  CHECK(k.col(0) == std::vector<uint32_t>{1, 1});
}

TEST_CASE("solve") {
  auto F3 = Fq::make(3);
  Mat id = Mat::identity(F3, 2);
  auto x = solve(id, {2, 1});
  REQUIRE(x);
  CHECK(*x == std::vector<uint32_t>{2, 1});
  CHECK_FALSE(solve(Mat::zero(F3, 2, 2), {1, 0}));
  Mat a = Mat::from_rows(F3, {{1, 1}, {0, 1}});
  auto y = solve(a, {2, 1});
  REQUIRE(y);
  CHECK(*y == std::vector<uint32_t>{1, 1});
  CHECK(a.mul_vec(*y) == std::vector<uint32_t>{2, 1});
}

TEST_CASE("kronecker products") {
  auto F = Fq::make(2);
  CHECK(kronecker(Mat::identity(F, 2), Mat::identity(F, 3)) ==
        Mat::identity(F, 6));
  Mat a = Mat::from_rows(F, {{1, 0}, {0, 1}});
  CHECK(kronecker(a, Mat::zero(F, 2, 2)).is_zero());
  Mat e11 = Mat::from_rows(F, {{1, 0}, {0, 0}});
  Mat e12 = Mat::from_rows(F, {{0, 1}, {0, 0}});
  Mat k = kronecker(e11, e12);
  CHECK(k.rows == 4);
  CHECK(k.cols == 4);
  for (uint32_t i = 0; i < 4; ++i)
    for (uint32_t j = 0; j < 4; ++j)
      CHECK(k.at(i, j) == ((i == 0 && j == 1) ? 1u : 0u));
}

TEST_CASE("rank-nullity and rref idempotence on random matrices") {
  for (auto [p, e] : {std::pair<uint32_t, uint32_t>{2, 1},
                      {3, 1},
                      {2, 2},
                      {3, 2},
                      {5, 1}}) {
    auto F = Fq::make(p, e);
    std::mt19937_64 rng(7 * p + e);
    for (int it = 0; it < 200; ++it) {
      uint32_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      Mat m = random_mat(F, r, c, rng);
      CHECK(rank(m) + kernel_basis(m).cols == c);
      auto rr = rref(m);
      CHECK(rref(rr.r).r == rr.r);
      Mat k = kernel_basis(m);
      if (k.cols) CHECK(m.mul(k).is_zero());
    }
  }
}

TEST_CASE("inverse and column space") {
  auto F = Fq::make(3);
  Mat a = Mat::from_rows(F, {{1, 1}, {0, 1}});
  auto ai = inverse(a);
  REQUIRE(ai);
  CHECK(a.mul(*ai) == Mat::identity(F, 2));
  CHECK_FALSE(inverse(Mat::from_rows(F, {{1, 1}, {2, 2}})));
  Mat m = Mat::from_rows(F, {{1, 1, 0}, {0, 1, 0}, {0, 0, 0}});
  CHECK(col_space(m).cols == 2);
}

TEST_CASE("quotient space projects exactly") {
  auto F = Fq::make(3);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    Mat sub = random_mat(F, 5, 2, rng);
    QuotientSpace Q(F, 5, sub);
    CHECK(Q.dim() == 5 - rank(sub));
    // the subspace maps to zero
    for (uint32_t j = 0; j < sub.cols; ++j) {
      auto pr = Q.project(sub.col(j));
      for (auto x : pr) CHECK(x == 0);
    }
    // project . lift = id
    std::vector<uint32_t> u(Q.dim());
    for (auto& x : u) x = rng() % 3;
    CHECK(Q.project(Q.lift(u)) == u);
  }
}

TEST_CASE("block structure helpers") {
  auto F = Fq::make(2);
  Mat a = Mat::identity(F, 2);
  Mat b = Mat::from_rows(F, {{1}});
  Mat d = block_diag({a, b});
  CHECK(d.rows == 3);
  CHECK(d.at(2, 2) == 1);
  CHECK(d.at(0, 2) == 0);
  Mat h = hstack(a, a);
  CHECK(h.cols == 4);
  Mat v = vstack(a, a);
  CHECK(v.rows == 4);
  Mat t = Mat::from_rows(F, {{0, 1}, {0, 0}});
  CHECK(t.transpose() == Mat::from_rows(F, {{0, 0}, {1, 0}}));
}
