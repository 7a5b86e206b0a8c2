#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "k3nodal/codes/reed_muller.hpp"
#include "k3nodal/lattice/code_lattice.hpp"
#include "oracles.hpp"

namespace {

using k3nodal::codes::LinearCode;
using k3nodal::lattice::Integer;
using k3nodal::lattice::IntMatrix;
using k3nodal::lattice::Rational;
namespace codes = k3nodal::codes;
namespace lattice = k3nodal::lattice;

std::vector<std::vector<Rational>> gram_rows(const lattice::CodeLattice& L) {
  const auto g = L.gram();
  std::vector<std::vector<Rational>> out(L.rank(), std::vector<Rational>(L.rank()));
  for (std::size_t i = 0; i < L.rank(); ++i) {
    for (std::size_t j = 0; j < L.rank(); ++j) {
      out[i][j] = g(i, j);
    }
  }
  return out;
}

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

/// For an integral Gram matrix G with |det G| = 2^r: the discriminant group
/// is (Z/2)^r exactly when 2 G^{-1} is integral (its exponent divides 2).
bool discriminant_is_elementary_two(const lattice::CodeLattice& L, int r) {
  const auto g = gram_rows(L);
  if (boost::multiprecision::abs(oracle::rational_determinant(g)) != Rational(Integer(1) << r)) {
    return false;
  }
  for (const auto& row : oracle::rational_inverse(g)) {
    for (const auto& x : row) {
      if (boost::multiprecision::denominator(Rational(x * 2)) != 1) {
        return false;
      }
    }
  }
  return true;
}

bool doubly_even(const LinearCode& c) {
  const auto wd = codes::weight_distribution(c);
  for (std::size_t w = 0; w < wd.counts.size(); ++w) {
    if (wd.counts[w] != 0 && w % 4 != 0) {
      return false;
    }
  }
  return true;
}

TEST(IntegerMatrix, BareissAgreesWithRationalElimination) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    IntMatrix m(n, n);
    std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const long v = static_cast<long>(rng() % 7) - 3;
        m(i, j) = v;
        q[i][j] = v;
      }
    }
    EXPECT_EQ(Rational(lattice::bareiss_determinant(m)), oracle::rational_determinant(q));
  }
}

TEST(IntegerMatrix, SmithDiagonalExamples) {
  EXPECT_EQ(lattice::smith_diagonal(int_matrix({{2, 0}, {0, 3}})), (std::vector<Integer>{1, 6}));
  EXPECT_EQ(lattice::smith_diagonal(int_matrix({{2, 4}, {6, 8}})), (std::vector<Integer>{2, 4}));
  EXPECT_EQ(lattice::smith_diagonal(int_matrix({{0, 0}, {0, 5}})), (std::vector<Integer>{5, 0}));
  EXPECT_EQ(lattice::smith_diagonal(int_matrix({{-2, 1}, {1, -2}})), (std::vector<Integer>{1, 3}));
}

TEST(IntegerMatrix, SmithDiagonalProductIsDeterminant) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = static_cast<long>(rng() % 9) - 4;
      }
    }
    const auto d = lattice::smith_diagonal(m);
    Integer prod = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
      prod *= d[i];
      if (i + 1 < d.size() && d[i] != 0) {
        EXPECT_EQ(d[i + 1] % d[i], 0);
      }
    }
    EXPECT_EQ(prod, boost::multiprecision::abs(lattice::bareiss_determinant(m)));
  }
}

TEST(Gamma, ZeroCodeIsScaledStandardLattice) {
  const auto L = lattice::gamma_from_code(LinearCode::zero(3), 1);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(L.gram2()(i, j), i == j ? 4 : 0);
    }
  }
  EXPECT_TRUE(lattice::is_integral(L));
  EXPECT_TRUE(lattice::is_even(L));
  EXPECT_EQ(lattice::determinant(L), 8);
  EXPECT_EQ(lattice::discriminant_group(L).to_string(), "(Z/2)^3");
  EXPECT_TRUE(lattice::is_positive_definite(L));
}

TEST(Gamma, FullCodeIsNotIntegral) {
  const auto L = lattice::gamma_from_code(LinearCode::full(4), -1);
  EXPECT_FALSE(lattice::is_integral(L));
  EXPECT_EQ(lattice::determinant(L), Rational(1, 16));
  EXPECT_THROW(lattice::is_even(L), k3nodal::precondition_error);
  EXPECT_THROW(lattice::discriminant_group(L), k3nodal::precondition_error);
  EXPECT_TRUE(lattice::is_negative_definite(L));
  EXPECT_FALSE(lattice::is_positive_definite(L));
}

TEST(Gamma, SignMustBeUnit) {
  EXPECT_THROW(lattice::gamma_from_code(LinearCode::zero(2), 2), k3nodal::argument_error);
  EXPECT_THROW(lattice::gamma_from_code(LinearCode::zero(2), 0), k3nodal::argument_error);
}

TEST(Gamma, MembershipAndNorms) {
  const auto L = lattice::gamma_from_code(LinearCode::repetition(4), -1);
  EXPECT_TRUE(L.contains({1, 1, 1, 1}));
  EXPECT_TRUE(L.contains({3, -1, 1, 5}));
  EXPECT_FALSE(L.contains({1, 1, 0, 0}));
  EXPECT_EQ(L.norm({1, 1, 1, 1}), -2);
  EXPECT_EQ(L.inner({2, 0, 0, 0}, {1, 1, 1, 1}), -1);
  EXPECT_THROW(L.norm({1, 1}), k3nodal::dimension_error);
}

TEST(Gamma, BasisRowsLieInLatticeAndSpanIt) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = oracle::random_code(rng, 10);
    const auto L = lattice::gamma_from_code(c, 1);
    for (std::size_t i = 0; i < L.rank(); ++i) {
      std::vector<Integer> row(L.rank());
      for (std::size_t j = 0; j < L.rank(); ++j) {
        row[j] = L.basis()(i, j);
      }
      EXPECT_TRUE(L.contains(row));
    }
    // [Z^n : Gamma] = 2^n / |C|.
    EXPECT_EQ(lattice::index_in_ambient(L), Integer(1) << (c.length() - c.dimension()));
  }
}

TEST(Gamma, DeterminantMatchesRationalOracle) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 150; ++trial) {
    const auto c = oracle::random_code(rng, 9);
    const int sign = (trial % 2 == 0) ? 1 : -1;
    const auto L = lattice::gamma_from_code(c, sign);
    EXPECT_EQ(lattice::determinant(L), oracle::rational_determinant(gram_rows(L)));
  }
}

TEST(Gamma, IntegralIffIsotropic) {
  std::mt19937_64 rng(35);
  int integral = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto c = oracle::random_code(rng, 12);
    const auto L = lattice::gamma_from_code(c, -1);
    EXPECT_EQ(lattice::is_integral(L), codes::is_isotropic(c));
    integral += lattice::is_integral(L) ? 1 : 0;
  }
  EXPECT_GT(integral, 50);
}

TEST(Gamma, EvenIffDoublyEven) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 600; ++trial) {
    const auto c = oracle::random_code(rng, 12);
    const auto L = lattice::gamma_from_code(c, -1);
    if (lattice::is_integral(L)) {
      EXPECT_EQ(lattice::is_even(L), doubly_even(c));
    }
  }
}

TEST(Gamma, DefinitenessFollowsSign) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = oracle::random_code(rng, 10);
    EXPECT_TRUE(lattice::is_positive_definite(lattice::gamma_from_code(c, 1)));
    EXPECT_TRUE(lattice::is_negative_definite(lattice::gamma_from_code(c, -1)));
  }
}

TEST(Kummer, Invariants) {
  const auto L = lattice::kummer_lattice();
  ASSERT_EQ(L.rank(), 16U);
  EXPECT_TRUE(lattice::is_integral(L));
  EXPECT_TRUE(lattice::is_even(L));
  EXPECT_TRUE(lattice::is_negative_definite(L));
  const auto minors = lattice::leading_principal_minors(L.gram2());
  ASSERT_EQ(minors.size(), 16U);
  for (std::size_t i = 0; i < minors.size(); ++i) {
    EXPECT_EQ(minors[i].sign(), i % 2 == 0 ? -1 : 1) << "minor " << i + 1;
  }
  EXPECT_EQ(lattice::determinant(L), 64);
  ASSERT_TRUE(discriminant_is_elementary_two(L, 6));
  const auto g = lattice::discriminant_group(L);
  EXPECT_EQ(g.elementary_divisors, std::vector<Integer>(6, 2));
  EXPECT_EQ(g.to_string(), "(Z/2)^6");
  EXPECT_EQ(g.order(), 64);
}

TEST(Kummer, SixteenNodalClasses) {
  const auto L = lattice::kummer_lattice();
  for (std::size_t i = 0; i < 16; ++i) {
    std::vector<Integer> e(16, 0);
    e[i] = 2;
    EXPECT_TRUE(L.contains(e));
    EXPECT_EQ(L.norm(e), -2);
    for (std::size_t j = i + 1; j < 16; ++j) {
      std::vector<Integer> f(16, 0);
      f[j] = 2;
      EXPECT_EQ(L.inner(e, f), 0);
    }
  }
}

TEST(Kummer, HalvesOfEvenSetsRecoverTheCode) {
  // (1/2) sum_{i in S} E_i with E_i = 2e_i is the indicator of S.
  std::vector<std::vector<Rational>> gens;
  const auto d5 = codes::code_D(5);
  for (const auto& row : d5.generator().row_vectors()) {
    std::vector<Rational> half(16);
    for (std::size_t i = 0; i < 16; ++i) {
      half[i] = row.test(i) ? Rational(1, 2) : Rational(0);
    }
    gens.push_back(half);
  }
  EXPECT_EQ(lattice::code_from_overlattice(16, gens), d5);
  EXPECT_THROW(lattice::code_from_overlattice(2, {{Rational(1, 3), 0}}), k3nodal::argument_error);
  EXPECT_THROW(lattice::code_from_overlattice(2, {{Rational(1, 2)}}), k3nodal::dimension_error);
}

TEST(EvenSetEightLattice, Invariants) {
  const auto L = lattice::nikulin_case_lattice();
  EXPECT_EQ(L.rank(), 8U);
  EXPECT_TRUE(lattice::is_integral(L));
  EXPECT_TRUE(lattice::is_even(L));
  EXPECT_TRUE(lattice::is_negative_definite(L));
  EXPECT_EQ(lattice::determinant(L), 64);
  ASSERT_TRUE(discriminant_is_elementary_two(L, 6));
  EXPECT_EQ(lattice::discriminant_group(L).to_string(), "(Z/2)^6");
}

TEST(DiscriminantGroup, Formatting) {
  EXPECT_EQ(lattice::DiscriminantGroup{}.to_string(), "0");
  EXPECT_EQ((lattice::DiscriminantGroup{{2, 4}}).to_string(), "Z/2 x Z/4");
  EXPECT_EQ((lattice::DiscriminantGroup{{2, 2, 0}}).to_string(), "(Z/2)^2 x Z");
}

TEST(Json, KummerSummary) {
  const nlohmann::json j = lattice::kummer_lattice();
  EXPECT_EQ(j.at("n"), 16);
  EXPECT_EQ(j.at("sign"), -1);
  EXPECT_EQ(j.at("det").at("num"), 64);
  EXPECT_EQ(j.at("det").at("den"), 1);
  EXPECT_EQ(j.at("gram2").size(), 16U);
  EXPECT_EQ(j.at("gram2")[15][15], -4);
  EXPECT_EQ(j.at("elementary_divisors"), nlohmann::json({2, 2, 2, 2, 2, 2}));
}

TEST(Formatting, HalfIntegers) {
  EXPECT_EQ(lattice::format_half(-4), "-2");
  EXPECT_EQ(lattice::format_half(3), "3/2");
  EXPECT_EQ(lattice::format_rational(Rational(1, 16)), "1/16");
}

}  // namespace
