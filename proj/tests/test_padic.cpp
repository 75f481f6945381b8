#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qcat/padic.hpp"

using namespace qcat;

namespace {

PModMatrix mat(const Ring& r, std::size_t rows, std::size_t cols, std::vector<std::int64_t> a) {
  return PModMatrix::from_integers(r, rows, cols, a);
}

PModVector vec(const Ring& r, std::vector<std::int64_t> a) { return PModVector::from_integers(r, a); }

std::vector<int> divisors(const DiagonalForm& f) {
  return {f.exponents.begin(), f.exponents.begin() + static_cast<std::ptrdiff_t>(f.rank)};
}

}  // namespace

TEST(Ring, ReduceAndValuation) {
  Ring r(2, 3);
  EXPECT_EQ(r.modulus(), 8u);
  EXPECT_EQ(r.reduce(-1), 7u);
  EXPECT_EQ(r.valuation(4), 2);
  EXPECT_EQ(r.valuation(0), 3);
  EXPECT_EQ(r.mul(r.unit_inverse(3), 3), 1u);
  EXPECT_EQ(r.signed_value(7), -1);
  EXPECT_THROW(Ring(1, 2), InvalidData);
  EXPECT_THROW(Ring(2, 80), PrecisionTooLow);
}

TEST(PAdicScalar, ComparesAtCommonPrecision) {
  PAdicScalar a(Ring(3, 2), 10), b(Ring(3, 4), 1);
  EXPECT_EQ(a, b);
  EXPECT_EQ((a * b).ring.precision(), 2);
}

TEST(SmithNormalForm, Identity) {
  Ring r(2, 3);
  auto f = smith_normal_form(PModMatrix::identity(r, 3));
  EXPECT_EQ(divisors(f), (std::vector<int>{0, 0, 0}));
}

TEST(SmithNormalForm, Diagonal) {
  Ring r(2, 3);
  auto f = smith_normal_form(mat(r, 2, 2, {2, 0, 0, 4}));
  EXPECT_EQ(divisors(f), (std::vector<int>{1, 2}));
}

TEST(SmithNormalForm, SixModEightHasDivisorTwo) {
  Ring r(2, 3);
  auto f = smith_normal_form(mat(r, 1, 1, {6}));
  EXPECT_EQ(divisors(f), (std::vector<int>{1}));
}

TEST(SmithNormalForm, TransformsReproduceDiagonal) {
  std::mt19937 rng(7);
  for (std::uint64_t p : {2u, 3u, 5u})
    for (int trial = 0; trial < 40; ++trial) {
      Ring r(p, 4);
      std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
      PModMatrix m(r, rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = r.reduce(static_cast<std::int64_t>(rng() % 50) - 25);
      auto f = smith_normal_form(m);
      EXPECT_EQ(f.left * m * f.right, f.diagonal(rows, cols));
      EXPECT_EQ(f.left * f.left_inv, PModMatrix::identity(r, rows));
      EXPECT_EQ(f.right * f.right_inv, PModMatrix::identity(r, cols));
    }
}

TEST(SolveMod, ZeroSystem) {
  Ring r(2, 3);
  auto x = solve_mod(PModMatrix(r, 2, 2), PModVector(r, 2));
  ASSERT_TRUE(x);
  EXPECT_TRUE(x->is_zero());
}

TEST(SolveMod, TwoXEqualsFour) {
  Ring r(2, 3);
  auto x = solve_mod(mat(r, 1, 1, {2}), vec(r, {4}));
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 2u);
  EXPECT_EQ(oracle::scalar_solutions(2, 4, 8), (std::vector<std::uint64_t>{2, 6}));
}

TEST(SolveMod, TwoXEqualsOneHasNoSolution) {
  Ring r(2, 3);
  EXPECT_FALSE(solve_mod(mat(r, 1, 1, {2}), vec(r, {1})));
  EXPECT_TRUE(oracle::scalar_solutions(2, 1, 8).empty());
}

TEST(SolveMod, AgreesWithExhaustiveSearch) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t p = trial % 2 ? 3 : 2;
    const int n = 2;
    Ring r(p, n);
    std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    std::vector<std::int64_t> a(rows * cols), b(rows);
    for (auto& v : a) v = static_cast<std::int64_t>(rng() % r.modulus());
    for (auto& v : b) v = static_cast<std::int64_t>(rng() % r.modulus());
    PModMatrix m = mat(r, rows, cols, a);
    auto x = solve_mod(m, vec(r, b));
    EXPECT_EQ(x.has_value(), oracle::solvable(a, rows, cols, b, r.modulus()));
    if (x) {
      EXPECT_EQ(m * *x, vec(r, b));
    }
  }
}

TEST(KernelBasis, ZeroMatrix) {
  Ring r(2, 2);
  auto k = kernel_basis(PModMatrix(r, 1, 2));
  EXPECT_EQ(k.order_exponents, (std::vector<int>{2, 2}));
}

TEST(KernelBasis, TwoModFour) {
  Ring r(2, 2);
  auto k = kernel_basis(mat(r, 1, 1, {2}));
  ASSERT_EQ(k.generators.size(), 1u);
  EXPECT_EQ(k.generators[0][0], 2u);
  EXPECT_EQ(k.order_exponents, (std::vector<int>{1}));
  EXPECT_EQ(oracle::kernel_size({2}, 1, 1, 4), 2u);
}

TEST(KernelBasis, Invertible) {
  Ring r(3, 3);
  EXPECT_EQ(kernel_basis(mat(r, 2, 2, {1, 1, 0, 1})).log_order(), 0);
}

TEST(KernelBasis, OrderMatchesExhaustiveCount) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const std::uint64_t p = trial % 3 == 0 ? 3 : 2;
    Ring r(p, 2);
    std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    std::vector<std::int64_t> a(rows * cols);
    for (auto& v : a) v = static_cast<std::int64_t>(rng() % r.modulus());
    PModMatrix m = mat(r, rows, cols, a);
    auto k = kernel_basis(m);
    std::uint64_t size = 1;
    for (int e : k.order_exponents)
      for (int i = 0; i < e; ++i) size *= p;
    EXPECT_EQ(size, oracle::kernel_size(a, rows, cols, r.modulus()));
    for (const auto& g : k.generators) EXPECT_TRUE((m * g).is_zero());
  }
}

TEST(SubModule, IntersectionAndSum) {
  Ring r(2, 3);
  SubModule a(r, 2, {vec(r, {2, 0})}), b(r, 2, {vec(r, {4, 0}), vec(r, {0, 1})});
  EXPECT_EQ(a.log_order(), 2);
  EXPECT_EQ(a.intersect(b).log_order(), 1);
  EXPECT_EQ((a + b).log_order(), 5);
  EXPECT_TRUE((a + b).contains(vec(r, {6, 3})));
  EXPECT_FALSE(a.contains(vec(r, {1, 0})));
  EXPECT_EQ(a.elements().size(), 4u);
}
