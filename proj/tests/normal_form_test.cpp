#include "wadefect/abelian_group.hpp"
#include "wadefect/normal_form.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"

using namespace wadefect;

namespace {

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntegerMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = dist(rng);
  return a;
}

bool is_diagonal(const IntegerMatrix& s) {
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (i != j && s(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST(Hnf, AlreadyReduced) {
  IntegerMatrix a{{2, 0}, {0, 3}};
  EXPECT_EQ(hnf(a), a);
}

TEST(Hnf, RankOne) {
  EXPECT_EQ(hnf(IntegerMatrix{{1, 1}, {1, 1}}), (IntegerMatrix{{1, 0}, {1, 0}}));
}

TEST(Hnf, Empty) {
  IntegerMatrix e(0, 0);
  EXPECT_EQ(hnf(e), e);
  EXPECT_EQ(hnf(IntegerMatrix(3, 0)).cols(), 0u);
}

TEST(Hnf, SpanAndCanonical) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 4, k = rng() % 5;
    IntegerMatrix a = random_matrix(rng, m, k, 3);
    EchelonForm e = column_echelon(a);
    // every column of a lies in the span of the echelon basis and vice versa
    for (std::size_t j = 0; j < a.cols(); ++j) ASSERT_TRUE(solve_in_lattice(e, a.column(j)));
    EchelonForm back = column_echelon(hconcat(a, e.basis));
    EXPECT_EQ(back.basis, e.basis);
    // column permutation does not change the form
    IntegerMatrix p(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) p.set_column(j, a.column(a.cols() - 1 - j));
    EXPECT_EQ(column_echelon(p).basis, e.basis);
  }
}

TEST(Snf, DiagTwoThree) {
  auto d = snf(IntegerMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(d.invariant_factors, (IntegerVector{6}));
  EXPECT_EQ(d.diagonal, (IntegerVector{1, 6}));
  EXPECT_EQ(d.free_rank, 0u);
}

TEST(Snf, ZeroOneByOne) {
  auto d = snf(IntegerMatrix{{0}});
  EXPECT_TRUE(d.invariant_factors.empty());
  EXPECT_EQ(d.free_rank, 1u);
}

TEST(Snf, RankDeficient) {
  // hand reduction: subtract 2x row 1 from row 2, then 2x column 1 from column 2
  auto d = snf(IntegerMatrix{{2, 4}, {4, 8}});
  EXPECT_EQ(d.invariant_factors, (IntegerVector{2}));
  EXPECT_EQ(d.free_rank, 1u);
}

TEST(Snf, TransformsAndDivisibility) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = rng() % 5, k = rng() % 5;
    IntegerMatrix a = random_matrix(rng, m, k, 3);
    auto d = snf(a);
    ASSERT_EQ(d.U * a * d.V, d.S);
    ASSERT_TRUE(is_diagonal(d.S));
    ASSERT_EQ(d.U * d.U_inverse, IntegerMatrix::identity(m));
    Integer du = determinant(d.U), dv = determinant(d.V);
    ASSERT_TRUE(du == 1 || du == -1);
    ASSERT_TRUE(dv == 1 || dv == -1);
    for (std::size_t i = 0; i < d.diagonal.size(); ++i) {
      ASSERT_GT(d.diagonal[i], 0);
      if (i > 0) ASSERT_EQ(d.diagonal[i] % d.diagonal[i - 1], 0);
    }
    // independent route: determinantal divisors
    EXPECT_EQ(d.diagonal, oracle::smith_diagonal_from_minors(a));
  }
}

TEST(Snf, PermutationInvariance) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng() % 4, k = 1 + rng() % 4;
    IntegerMatrix a = random_matrix(rng, m, k, 3);
    std::vector<std::size_t> rp(m), cp(k);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    IntegerMatrix b(m, k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < k; ++j) b(i, j) = a(rp[i], cp[j]);
    EXPECT_EQ(snf(a).invariant_factors, snf(b).invariant_factors);
  }
}

TEST(Snf, BigIntegerFallback) {
  // entries beyond int64 force the arbitrary precision path
  Integer big = Integer(1) << 70;
  IntegerMatrix a(2, 2);
  a(0, 0) = big;
  a(1, 1) = big * 3;
  auto d = snf(a);
  EXPECT_EQ(d.invariant_factors, (IntegerVector{big, big * 3}));
  EXPECT_EQ(d.U * a * d.V, d.S);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(IntegerMatrix{{1, 1}}), (IntegerMatrix{{1}, {-1}}));
  EXPECT_EQ(kernel_basis(IntegerMatrix::identity(2)).cols(), 0u);
  EXPECT_EQ(kernel_basis(IntegerMatrix{{2, 2}, {2, 2}}), (IntegerMatrix{{1}, {-1}}));
}

TEST(Kernel, IsSaturatedBasis) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = rng() % 4, k = 1 + rng() % 5;
    IntegerMatrix a = random_matrix(rng, m, k, 3);
    IntegerMatrix ker = kernel_basis(a);
    EXPECT_TRUE((a * ker).is_zero());
    EXPECT_EQ(ker.cols() + rank(a), k);
    // a basis of a kernel is saturated: no invariant factor above 1
    EXPECT_TRUE(snf(ker).invariant_factors.empty());
  }
}

TEST(Saturation, MatchesKernelOfLeftKernel) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 5, k = rng() % 4;
    IntegerMatrix a = random_matrix(rng, m, k, 4);
    EchelonForm sat = saturation(a);
    // sat(A) = ker(ker(A^T)^T)
    IntegerMatrix left = kernel_basis(a.transpose());
    IntegerMatrix expect = kernel_basis(left.transpose());
    EXPECT_EQ(sat.basis, column_echelon(expect).basis);
  }
}

TEST(Saturation, CoordinatesReproduceSublattice) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 6, k = rng() % 4;
    IntegerMatrix a = random_matrix(rng, m, k, 5);
    Saturation s = saturate(a);
    EXPECT_EQ(column_echelon(s.lattice.basis * s.sub_coordinates).basis, column_echelon(a).basis);
    for (std::size_t j = 0; j < s.lattice.rank(); ++j) EXPECT_NE(s.lattice.basis(s.lattice.pivot_rows[j], j), 0);
    for (std::size_t j = 0; j < a.cols(); ++j) EXPECT_TRUE(solve_in_lattice(s.lattice, a.column(j)).has_value());
  }
}

TEST(Cokernel, Examples) {
  auto q = cokernel(IntegerMatrix{{2, 0}, {0, 3}}, 2);
  EXPECT_EQ(q.group().invariant_factors(), (IntegerVector{6}));
  EXPECT_EQ(q.free_rank(), 0u);

  auto f = cokernel(IntegerMatrix(1, 0), 1);
  EXPECT_TRUE(f.group().is_trivial());
  EXPECT_EQ(f.free_rank(), 1u);

  auto k = cokernel(IntegerMatrix{{2, 0}, {0, 2}}, 2);
  EXPECT_EQ(k.group().invariant_factors(), (IntegerVector{2, 2}));
}

TEST(Cokernel, OrderMatchesBoxEnumeration) {
  std::mt19937 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 120; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    IntegerMatrix a = random_matrix(rng, n, n + rng() % 2, 3);
    auto q = cokernel(a, n);
    if (q.free_rank() != 0) continue;
    ++checked;
    EXPECT_EQ(q.group().order(), oracle::cokernel_order_by_enumeration(a));
    // projection is a homomorphism that kills the columns of a
    for (std::size_t j = 0; j < a.cols(); ++j) EXPECT_TRUE(q.group().is_zero(q.project(a.column(j))));
    for (std::size_t i = 0; i < q.group().rank(); ++i) {
      auto l = q.lift(i);
      EXPECT_EQ(q.project(l), q.group().generator(i));
    }
  }
  EXPECT_GE(checked, 50);
}
