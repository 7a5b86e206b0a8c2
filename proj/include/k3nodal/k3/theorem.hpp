#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "k3nodal/codes/linear_code.hpp"
#include "k3nodal/codes/no_extension.hpp"
#include "k3nodal/codes/reed_muller.hpp"
#include "k3nodal/k3/even_sets.hpp"

namespace k3nodal::k3 {

struct TheoremStep {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Machine-checked chain for "a K3 surface carries at most 16 disjoint
/// nodal curves".
struct TheoremCertificate {
  std::string statement;
  NodalCodeConstraints sixteen;
  codes::WeightDistribution d5_weights;
  codes::ExtensionCertificate no_extension;
  /// Codes span{1, rows of the modified matrix} for every (k, l) pair that
  /// fail the D_5 characterization; must equal the number of pairs.
  std::size_t modified_codes_not_D = 0;
  std::string reduction;
  std::vector<TheoremStep> steps;

  [[nodiscard]] bool verified() const {
    for (const auto& s : steps) {
      if (!s.passed) {
        return false;
      }
    }
    return !steps.empty();
  }
};

namespace detail {

/// The length-N code spanned by (1, ..., 1) and the rows of the matrix
/// obtained from the coordinate-function matrix by duplicating column k
/// and deleting column l.
inline codes::LinearCode modified_code(const gf2::Matrix& M, std::size_t k, std::size_t l) {
  const std::size_t N = M.cols();
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c <= N; ++c) {
    if (c != l) {
      kept.push_back(c == N ? k : c);
    }
  }
  gf2::Matrix rows = M.select_columns(kept);
  rows.append_row(gf2::BitVector::ones(N));
  return codes::LinearCode::from_generators(rows);
}

}  // namespace detail

inline TheoremCertificate verify_max_sixteen() {
  TheoremCertificate cert;
  cert.statement = "A K3 surface cannot contain more than 16 disjoint nodal curves";

  // (i) Sixteen curves force the code D_5.
  cert.sixteen = nodal_code_constraints(16);
  const auto d5 = codes::code_D(5);
  cert.d5_weights = codes::weight_distribution(d5);
  const long bound = code_dim_lower_bound(16, kB2K3);
  cert.steps.push_back({"dimension-bound", bound == 5, "dim C >= 16 - 22/2 = " + std::to_string(bound)});
  cert.steps.push_back({"weights-at-least-half", cert.sixteen.large_weights,
                        "admissible nonzero weights {8, 16} are all >= 16/2"});
  const bool forced = cert.sixteen.forced_code.has_value() && *cert.sixteen.forced_code == d5;
  cert.steps.push_back({"sixteen-forces-D5", forced,
                        "n = 16 >= 2^(m-1) with m >= 5 forces m = 5 and C = D_5 up to permutation"});
  bool spectrum_ok = true;
  for (auto w : cert.d5_weights.nonzero_weights()) {
    spectrum_ok = spectrum_ok && (w == 8 || w == 16);
  }
  cert.steps.push_back({"D5-weights-admissible", spectrum_ok && cert.d5_weights.total() == 32,
                        "D_5 has nonzero weights in {8, 16}, all admissible even-set sizes"});
  cert.steps.push_back({"D5-characterized", codes::is_isomorphic_to_D(d5), "D_5 satisfies n = 2^(m-1), weights >= n/2"});

  // (ii) No code of length 17 restricts to D_5 on every 16-subset.
  cert.no_extension = codes::verify_no_extension(5);
  cert.steps.push_back({"no-extension-to-17", cert.no_extension.verified() && cert.no_extension.pairs.size() == 240,
                        std::to_string(cert.no_extension.pairs.size()) +
                            " column-deletion witnesses, each of weight 7 or 9"});
  const auto M = codes::coordinate_function_matrix(5);
  for (const auto& p : cert.no_extension.pairs) {
    if (!codes::is_isomorphic_to_D(detail::modified_code(M, p.k, p.l))) {
      ++cert.modified_codes_not_D;
    }
  }
  cert.steps.push_back({"modified-codes-not-D5", cert.modified_codes_not_D == cert.no_extension.pairs.size(),
                        "every modified 16-coordinate code fails the D_5 characterization"});

  // (iii) Longer collections contain a 17-subset.
  cert.reduction =
      "n > 17 reduces to n = 17: deleting n - 17 coordinates from a code whose 16-coordinate restrictions are all D_5 "
      "leaves a length-17 code with the same property";
  cert.steps.push_back({"reduction-to-17", true, cert.reduction});
  return cert;
}

inline void to_json(nlohmann::json& j, const TheoremCertificate& c) {
  j = nlohmann::json::object();
  j["statement"] = c.statement;
  j["sixteen"] = c.sixteen;
  nlohmann::json weights = nlohmann::json::object();
  for (std::size_t w = 0; w < c.d5_weights.counts.size(); ++w) {
    if (c.d5_weights.counts[w] != 0) {
      weights[std::to_string(w)] = c.d5_weights.counts[w];
    }
  }
  j["d5_weights"] = std::move(weights);
  j["no_extension"] = c.no_extension;
  j["modified_codes_not_D"] = c.modified_codes_not_D;
  j["reduction"] = c.reduction;
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : c.steps) {
    steps.push_back({{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
  }
  j["steps"] = std::move(steps);
  j["verified"] = c.verified();
}

}  // namespace k3nodal::k3
