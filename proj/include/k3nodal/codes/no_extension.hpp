#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "k3nodal/errors.hpp"
#include "k3nodal/gf2/matrix.hpp"

namespace k3nodal::codes {

/// One (k, l) case: column k is duplicated as column N, column l != k is
/// deleted, and row `row` of the resulting (m-1) x N matrix has `weight`.
struct ExtensionWitness {
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t row = 0;
  std::size_t weight = 0;

  friend bool operator==(const ExtensionWitness&, const ExtensionWitness&) = default;
};

/// Certificate that no code of length N + 1 restricts to D_m on every
/// N-subset of coordinates, N = 2^(m-1).
struct ExtensionCertificate {
  std::size_t m = 0;
  std::size_t N = 0;
  std::vector<ExtensionWitness> pairs;  ///< ordered by k, then l

  /// For N = 2 the values N/2 +- 1 coincide with weights of D_2, so the
  /// witnesses exist but prove nothing.
  [[nodiscard]] bool degenerate() const { return m < 3; }

  /// Every witness weight lies in {N/2 - 1, N/2 + 1} and outside the D_m
  /// spectrum {0, N/2, N}, and all N(N-1) pairs are present.
  [[nodiscard]] bool verified() const {
    if (degenerate() || pairs.size() != N * (N - 1)) {
      return false;
    }
    for (const auto& p : pairs) {
      const bool off_by_one = p.weight + 1 == N / 2 || p.weight == N / 2 + 1;
      const bool in_spectrum = p.weight == 0 || p.weight == N / 2 || p.weight == N;
      if (!off_by_one || in_spectrum) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const ExtensionCertificate&, const ExtensionCertificate&) = default;
};

/// The (m-1) x N matrix whose column c is the binary expansion of c
/// (row j holds bit j), i.e. the coordinate functions x_0..x_{m-2} of D_m.
inline gf2::Matrix coordinate_function_matrix(std::size_t m) {
  const std::size_t N = std::size_t{1} << (m - 1);
  gf2::Matrix M(m - 1, N);
  for (std::size_t c = 0; c < N; ++c) {
    for (std::size_t j = 0; j + 1 < m; ++j) {
      if ((c >> j) & 1U) {
        M.set(j, c);
      }
    }
  }
  return M;
}

/// Runs the column-deletion argument for every duplicated column k and
/// deleted column l != k. The witness row is the first row on which
/// columns k and l differ; its weight is counted on the modified matrix.
inline ExtensionCertificate verify_no_extension(std::size_t m) {
  if (m < 2 || m > 8) {
    throw argument_error("verify_no_extension: m must lie in [2, 8]");
  }
  const std::size_t N = std::size_t{1} << (m - 1);
  const gf2::Matrix M = coordinate_function_matrix(m);
  ExtensionCertificate cert;
  cert.m = m;
  cert.N = N;
  cert.pairs.reserve(N * (N - 1));
  for (std::size_t k = 0; k < N; ++k) {
    // The extended matrix: M followed by a copy of column k.
    std::vector<std::size_t> extended_cols(N + 1);
    for (std::size_t c = 0; c < N; ++c) {
      extended_cols[c] = c;
    }
    extended_cols[N] = k;
    for (std::size_t l = 0; l < N; ++l) {
      if (l == k) {
        continue;
      }
      std::vector<std::size_t> kept;
      kept.reserve(N);
      for (std::size_t c = 0; c <= N; ++c) {
        if (c != l) {
          kept.push_back(extended_cols[c]);
        }
      }
      const gf2::Matrix modified = M.select_columns(kept);
      std::size_t row = 0;
      while (row + 1 < m && M.at(row, l) == M.at(row, k)) {
        ++row;
      }
      if (row + 1 == m) {
        throw precondition_error("verify_no_extension: columns " + std::to_string(k) + " and " + std::to_string(l) +
                                 " coincide");
      }
      cert.pairs.push_back({k, l, row, modified.row(row).weight()});
    }
  }
  return cert;
}

inline void to_json(nlohmann::json& j, const ExtensionWitness& w) {
  j = nlohmann::json{{"k", w.k}, {"l", w.l}, {"row", w.row}, {"weight", w.weight}};
}

inline void from_json(const nlohmann::json& j, ExtensionWitness& w) {
  j.at("k").get_to(w.k);
  j.at("l").get_to(w.l);
  j.at("row").get_to(w.row);
  j.at("weight").get_to(w.weight);
}

inline void to_json(nlohmann::json& j, const ExtensionCertificate& c) {
  j = nlohmann::json{{"m", c.m}, {"N", c.N}, {"pairs", c.pairs}};
}

inline void from_json(const nlohmann::json& j, ExtensionCertificate& c) {
  j.at("m").get_to(c.m);
  j.at("N").get_to(c.N);
  j.at("pairs").get_to(c.pairs);
}

}  // namespace k3nodal::codes
