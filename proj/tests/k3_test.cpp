#include <random>
#include <string>

#include <gtest/gtest.h>

#include "k3nodal/codes/reed_muller.hpp"
#include "k3nodal/k3/duval.hpp"
#include "k3nodal/k3/even_sets.hpp"
#include "k3nodal/k3/theorem.hpp"
#include "oracles.hpp"

namespace {

namespace k3 = k3nodal::k3;
using k3::DynkinFamily;
using k3::EvenSetVerdict;
using k3::SingularityType;

TEST(EvenSets, Examples) {
  EXPECT_EQ(k3::classify_even_set(0).verdict, EvenSetVerdict::Empty);
  const auto eight = k3::classify_even_set(8);
  EXPECT_EQ(eight.verdict, EvenSetVerdict::K3Cover);
  EXPECT_EQ(eight.euler_of_cover, 24);
  EXPECT_EQ(eight.irregularity, 0);
  const auto sixteen = k3::classify_even_set(16);
  EXPECT_EQ(sixteen.verdict, EvenSetVerdict::TorusCover);
  EXPECT_EQ(sixteen.euler_of_cover, 0);
  EXPECT_EQ(sixteen.irregularity, 2);
  EXPECT_EQ(k3::classify_even_set(4).verdict, EvenSetVerdict::Impossible);
  EXPECT_EQ(k3::classify_even_set(12).verdict, EvenSetVerdict::Impossible);
  EXPECT_EQ(k3::classify_even_set(7).verdict, EvenSetVerdict::Impossible);
  EXPECT_THROW(k3::classify_even_set(-1), k3nodal::argument_error);
}

TEST(EvenSets, NoetherCheckOverRange) {
  for (long k = 1; k <= 100; ++k) {
    const auto c = k3::classify_even_set(k);
    const long e = 48 - 3 * k;
    EXPECT_EQ(c.euler_of_cover, e);
    EXPECT_EQ(c.irregularity.has_value(), e % 12 == 0) << k;
    const bool k3_cover = e == 24;
    const bool torus_cover = e == 0;
    EXPECT_EQ(c.verdict == EvenSetVerdict::K3Cover, k3_cover) << k;
    EXPECT_EQ(c.verdict == EvenSetVerdict::TorusCover, torus_cover) << k;
    EXPECT_EQ(c.verdict == EvenSetVerdict::Impossible, !k3_cover && !torus_cover) << k;
  }
}

TEST(DimensionBound, Examples) {
  EXPECT_EQ(k3::code_dim_lower_bound(16), 5);
  EXPECT_EQ(k3::code_dim_lower_bound(17), 6);
  EXPECT_EQ(k3::code_dim_lower_bound(8), 0);
  EXPECT_EQ(k3::code_dim_lower_bound(11), 0);
  EXPECT_EQ(k3::code_dim_lower_bound(12, 10), 7);
  EXPECT_THROW(k3::code_dim_lower_bound(16, 21), k3nodal::argument_error);
  EXPECT_THROW(k3::code_dim_lower_bound(-1), k3nodal::argument_error);
}

TEST(NodalCodeConstraints, SixteenForcesD5) {
  const auto c = k3::nodal_code_constraints(16);
  EXPECT_EQ(c.allowed_weights, (std::vector<long>{8, 16}));
  EXPECT_EQ(c.dim_lower_bound, 5);
  EXPECT_TRUE(c.large_weights);
  EXPECT_EQ(c.dim_upper_bound, 5);
  ASSERT_TRUE(c.forced_code.has_value());
  EXPECT_EQ(*c.forced_code, k3nodal::codes::code_D(5));
}

TEST(NodalCodeConstraints, SmallCases) {
  const auto eight = k3::nodal_code_constraints(8);
  EXPECT_EQ(eight.allowed_weights, (std::vector<long>{8}));
  ASSERT_TRUE(eight.forced_code.has_value());
  EXPECT_EQ(*eight.forced_code, k3nodal::codes::LinearCode::repetition(8));

  const auto seven = k3::nodal_code_constraints(7);
  EXPECT_TRUE(seven.allowed_weights.empty());
  ASSERT_TRUE(seven.forced_code.has_value());
  EXPECT_EQ(seven.forced_code->dimension(), 0U);

  // 17 curves admit weight 8 < 17/2, so the characterization does not apply directly.
  const auto seventeen = k3::nodal_code_constraints(17);
  EXPECT_FALSE(seventeen.large_weights);
  EXPECT_EQ(seventeen.dim_lower_bound, 6);
  EXPECT_FALSE(seventeen.dim_upper_bound.has_value());
  EXPECT_FALSE(seventeen.forced_code.has_value());

  EXPECT_THROW(k3::nodal_code_constraints(0), k3nodal::argument_error);
}

TEST(Delta, PublishedConfigurations) {
  const auto a16 = k3::admissible(k3::parse_config("A1x16"));
  EXPECT_EQ(a16.delta, 16);
  EXPECT_TRUE(a16.admissible);
  const auto a17 = k3::admissible(k3::parse_config("A1x17"));
  EXPECT_EQ(a17.delta, 17);
  EXPECT_FALSE(a17.admissible);
  EXPECT_FALSE(a17.reasons.empty());
  for (const char* cfg : {"E8x4", "E7x4", "D6x4", "D7x4"}) {
    const auto r = k3::admissible(k3::parse_config(cfg));
    EXPECT_EQ(r.delta, 16) << cfg;
    EXPECT_TRUE(r.admissible) << cfg;
  }
  const auto a2 = k3::admissible(k3::parse_config("A2x16"));
  EXPECT_EQ(a2.delta, 16);
  EXPECT_EQ(a2.mu, 32);
  EXPECT_TRUE(a2.admissible);
  // A_16 contributes [(16+1)/2] = 8 disjoint curves, so four of them exceed the bound.
  EXPECT_EQ(k3::delta(k3::parse_config("A16")), 8);
  EXPECT_FALSE(k3::admissible(k3::parse_config("A16x4")).admissible);
}

TEST(Delta, SingleTypesMatchTreeIndependenceNumber) {
  for (int n = 1; n <= 20; ++n) {
    const SingularityType a{DynkinFamily::A, n};
    EXPECT_EQ(static_cast<std::size_t>(a.disjoint_curves()), oracle::tree_max_independent_set(oracle::dynkin_tree('A', n)))
        << a.label();
    if (n >= 4) {
      const SingularityType d{DynkinFamily::D, n};
      EXPECT_EQ(static_cast<std::size_t>(d.disjoint_curves()),
                oracle::tree_max_independent_set(oracle::dynkin_tree('D', n)))
          << d.label();
    }
    if (n >= 6 && n <= 8) {
      const SingularityType e{DynkinFamily::E, n};
      EXPECT_EQ(static_cast<std::size_t>(e.disjoint_curves()),
                oracle::tree_max_independent_set(oracle::dynkin_tree('E', n)))
          << e.label();
    }
  }
}

TEST(Delta, DeltaAndMuAreAdditive) {
  std::mt19937_64 rng(41);
  auto random_config = [&] {
    k3::DuValConfig c;
    const int terms = static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
      const int family = static_cast<int>(rng() % 3);
      SingularityType s;
      if (family == 0) {
        s = {DynkinFamily::A, 1 + static_cast<int>(rng() % 20)};
      } else if (family == 1) {
        s = {DynkinFamily::D, 4 + static_cast<int>(rng() % 17)};
      } else {
        s = {DynkinFamily::E, 6 + static_cast<int>(rng() % 3)};
      }
      c.add(s, static_cast<std::int64_t>(1 + rng() % 5));
    }
    return c;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_config();
    const auto y = random_config();
    EXPECT_EQ(k3::delta(x + y), k3::delta(x) + k3::delta(y));
    EXPECT_EQ(k3::milnor(x + y), k3::milnor(x) + k3::milnor(y));
    EXPECT_LE(k3::delta(x), k3::milnor(x));
    EXPECT_EQ(k3::parse_config((x + y).to_string()), x + y);
  }
}

TEST(Delta, EmptyConfiguration) {
  const auto r = k3::admissible(k3::parse_config(""));
  EXPECT_EQ(r.delta, 0);
  EXPECT_EQ(r.mu, 0);
  EXPECT_EQ(r.ratio_num, 0);
  EXPECT_EQ(r.ratio_den, 1);
  EXPECT_TRUE(r.admissible);
}

TEST(ParseConfig, AcceptedForms) {
  const auto c = k3::parse_config(" a2 , d4X2,E7, A2 ");
  EXPECT_EQ(c.to_string(), "A2x2,D4x2,E7");
  EXPECT_EQ(c.count({DynkinFamily::D, 4}), 2);
  EXPECT_EQ(k3::milnor(c), 4 + 8 + 7);
  EXPECT_EQ(k3::delta(c), 2 + 6 + 4);
  EXPECT_TRUE(k3::parse_config("A1x0").empty());
}

TEST(ParseConfig, Errors) {
  for (const char* bad : {"B2", "A0", "D3", "E9", "E5", "A", "A1x", "A1,,A2", "A1y2", "A-1", "A1x-2", "A1,"}) {
    EXPECT_THROW(k3::parse_config(bad), k3nodal::argument_error) << bad;
  }
  std::string huge = "A1000000x999999999999";
  for (int i = 1; i < 10; ++i) {
    huge += ",A" + std::to_string(1000000 - i) + "x999999999999";
  }
  EXPECT_THROW(k3::milnor(k3::parse_config(huge)), k3nodal::argument_error);
}

TEST(Report, RatioAndJson) {
  const auto r = k3::admissible(k3::parse_config("E8x4"));
  EXPECT_EQ(r.mu, 32);
  EXPECT_EQ(r.ratio_num, 1);
  EXPECT_EQ(r.ratio_den, 2);
  const nlohmann::json j = r;
  EXPECT_EQ(j.at("config"), "E8x4");
  EXPECT_EQ(j.at("delta"), 16);
  EXPECT_EQ(j.at("admissible"), true);
  EXPECT_EQ(j.at("types")[0].at("delta_each"), 4);
}

TEST(Theorem, CertificateVerifies) {
  const auto cert = k3::verify_max_sixteen();
  EXPECT_TRUE(cert.verified());
  EXPECT_EQ(cert.no_extension.pairs.size(), 240U);
  EXPECT_EQ(cert.modified_codes_not_D, 240U);
  EXPECT_EQ(cert.d5_weights.counts[8], 30U);
  for (const auto& s : cert.steps) {
    EXPECT_TRUE(s.passed) << s.name;
  }
  EXPECT_NE(cert.statement.find("16 disjoint nodal curves"), std::string::npos);
}

TEST(Theorem, ModifiedCodesFailByWeight) {
  // Each modified code contains a word of weight 7 or 9, outside {0, 8, 16}.
  const auto M = k3nodal::codes::coordinate_function_matrix(5);
  for (const auto& p : k3nodal::codes::verify_no_extension(5).pairs) {
    const auto c = k3::detail::modified_code(M, p.k, p.l);
    const auto wd = k3nodal::codes::weight_distribution(c);
    EXPECT_GT(wd[p.weight], 0U);
    EXPECT_FALSE(k3nodal::codes::is_isomorphic_to_D(c));
  }
}

TEST(Theorem, JsonIsDeterministic) {
  const nlohmann::json a = k3::verify_max_sixteen();
  const nlohmann::json b = k3::verify_max_sixteen();
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a.at("verified"), true);
  EXPECT_EQ(a.at("d5_weights"), nlohmann::json({{"0", 1}, {"8", 30}, {"16", 1}}));
}

}  // namespace
