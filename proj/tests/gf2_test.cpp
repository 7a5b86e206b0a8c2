#include <random>
#include <string>

#include <gtest/gtest.h>

#include "k3nodal/gf2/bit_vector.hpp"
#include "k3nodal/gf2/matrix.hpp"
#include "oracles.hpp"

namespace {

using k3nodal::gf2::BitVector;
using k3nodal::gf2::Matrix;

Matrix matrix_of(const std::vector<std::string>& rows) {
  std::vector<BitVector> v;
  for (const auto& r : rows) {
    v.push_back(BitVector::from_string(r));
  }
  return Matrix(rows.empty() ? 0 : rows.front().size(), std::move(v));
}

TEST(BitVector, WeightAndTailInvariant) {
  auto v = BitVector::ones(70);
  EXPECT_EQ(v.size(), 70U);
  EXPECT_EQ(v.weight(), 70U);
  EXPECT_EQ(v.num_words(), 2U);
  EXPECT_EQ(v.word(1), (std::uint64_t{1} << 6) - 1);
  v.flip(69);
  EXPECT_EQ(v.weight(), 69U);
  EXPECT_EQ(BitVector::from_word(5, ~std::uint64_t{0}).weight(), 5U);
}

TEST(BitVector, StringRoundTrip) {
  const std::string s = "0110100111010000000000000000000000000000000000000000000000000000011";
  EXPECT_EQ(BitVector::from_string(s).to_string(), s);
  EXPECT_THROW(BitVector::from_string("01a"), k3nodal::argument_error);
}

TEST(BitVector, LengthMismatchIsDimensionError) {
  EXPECT_THROW(BitVector(3) ^= BitVector(4), k3nodal::dimension_error);
  EXPECT_THROW(k3nodal::gf2::dot(BitVector(3), BitVector(4)), k3nodal::dimension_error);
}

TEST(Dot, Examples) {
  EXPECT_FALSE(dot(BitVector::from_string("11"), BitVector::from_string("11")));
  EXPECT_TRUE(dot(BitVector::from_string("10"), BitVector::from_string("11")));
  EXPECT_FALSE(dot(BitVector::from_string("0000"), BitVector::from_string("1011")));
  EXPECT_FALSE(dot(BitVector::from_string("0000"), BitVector::from_string("1111")));
}

TEST(Dot, SymmetricAndBilinear) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 130;
    const auto m = oracle::random_matrix(rng, 3, n);
    const auto &a = m.row(0), &b = m.row(1), &c = m.row(2);
    EXPECT_EQ(dot(a, b), dot(b, a));
    EXPECT_EQ(dot(a ^ b, c), dot(a, c) != dot(b, c));
  }
}

TEST(Rref, Identity) {
  const auto r = k3nodal::gf2::rref(Matrix::identity(3));
  EXPECT_EQ(r.reduced, Matrix::identity(3));
  EXPECT_EQ(r.rank, 3U);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, EqualRowsCollapse) {
  const auto r = k3nodal::gf2::rref(matrix_of({"0110", "0110"}));
  EXPECT_EQ(r.rank, 1U);
  EXPECT_EQ(r.reduced.row(0).to_string(), "0110");
  EXPECT_TRUE(r.reduced.row(1).is_zero());
}

TEST(Rref, CoordinateFunctionMatrixHasRankFour) {
  const std::vector<std::string> rows = {"0101010101010101", "0011001100110011", "0000111100001111",
                                         "0000000011111111"};
  ASSERT_EQ(oracle::rank_mod2(oracle::parse_rows(rows)), 4U);
  const auto r = k3nodal::gf2::rref(matrix_of(rows));
  EXPECT_EQ(r.rank, 4U);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{1, 2, 4, 8}));
}

TEST(Rref, RandomMatricesAgreeWithOracleAndAreIdempotent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = rng() % 33;
    const std::size_t cols = 1 + rng() % 32;
    const auto m = oracle::random_matrix(rng, rows, cols);
    const auto r = k3nodal::gf2::rref(m);
    EXPECT_TRUE(k3nodal::gf2::is_rref(r.reduced));
    EXPECT_EQ(r.rank, oracle::rank_mod2(oracle::to_rows(m)));
    EXPECT_EQ(k3nodal::gf2::rref(r.reduced).reduced, r.reduced);
    // Row space preserved: stacking adds no rank.
    Matrix stacked = m;
    for (const auto& row : r.reduced.row_vectors()) {
      stacked.append_row(row);
    }
    EXPECT_EQ(k3nodal::gf2::rank(stacked), r.rank);
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(k3nodal::gf2::kernel(Matrix::identity(5)).rows(), 0U);
  const auto k = k3nodal::gf2::kernel(matrix_of({"11"}));
  ASSERT_EQ(k.rows(), 1U);
  EXPECT_EQ(k.row(0).to_string(), "11");
  EXPECT_EQ(k3nodal::gf2::kernel(Matrix(2, 3)).rows(), 3U);
}

TEST(Kernel, RankNullityAndAnnihilation) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = rng() % 33;
    const std::size_t cols = 1 + rng() % 32;
    const auto m = oracle::random_matrix(rng, rows, cols);
    const auto ker = k3nodal::gf2::kernel(m);
    EXPECT_EQ(k3nodal::gf2::rank(m) + ker.rows(), cols);
    EXPECT_EQ(k3nodal::gf2::rank(ker), ker.rows());
    for (const auto& v : ker.row_vectors()) {
      EXPECT_TRUE(m.multiply(v).is_zero());
    }
  }
}

TEST(TextFormat, ParsesAndSkipsBlankLines) {
  const auto m = k3nodal::gf2::parse_matrix("\n0101\n  \n1100\r\n\n");
  EXPECT_EQ(m.rows(), 2U);
  EXPECT_EQ(m.cols(), 4U);
  EXPECT_EQ(k3nodal::gf2::format_matrix(m), "0101\n1100\n");
}

TEST(TextFormat, Errors) {
  EXPECT_THROW(k3nodal::gf2::parse_matrix("0101\n110\n"), k3nodal::dimension_error);
  EXPECT_THROW(k3nodal::gf2::parse_matrix("01 01\n"), k3nodal::argument_error);
  EXPECT_THROW(k3nodal::gf2::parse_matrix("\n\n"), k3nodal::argument_error);
  EXPECT_THROW(Matrix(3, std::vector<BitVector>{BitVector(3), BitVector(2)}), k3nodal::dimension_error);
}

}  // namespace
