#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "k3nodal/codes/linear_code.hpp"
#include "k3nodal/codes/reed_muller.hpp"
#include "k3nodal/errors.hpp"

namespace k3nodal::k3 {

/// Euler number of a complex K3 surface.
inline constexpr long kEulerK3 = 24;
/// Second Betti number of a complex K3 surface.
inline constexpr long kB2K3 = 22;

enum class EvenSetVerdict { Empty, K3Cover, TorusCover, Impossible };

inline const char* to_string(EvenSetVerdict v) {
  switch (v) {
    case EvenSetVerdict::Empty:
      return "empty";
    case EvenSetVerdict::K3Cover:
      return "k3-cover";
    case EvenSetVerdict::TorusCover:
      return "torus-cover";
    case EvenSetVerdict::Impossible:
      return "impossible";
  }
  return "?";
}

struct EvenSetClass {
  long k = 0;
  EvenSetVerdict verdict = EvenSetVerdict::Impossible;
  /// e(Y_k) of the minimal model of the double cover branched along the set.
  long euler_of_cover = 0;
  /// Irregularity from Noether's formula e/12 = 2 - q, when e/12 is an integer.
  std::optional<long> irregularity;
};

/// Classifies an even set of k disjoint nodal curves on a K3 surface.
///
/// The double cover branched along the curves has Euler number 2 * 24 - 2k;
/// blowing down the k preimage curves gives e = 48 - 3k. The result has trivial
/// canonical bundle, so it is a K3 surface (q = 0) or a complex torus
/// (q = 2). Noether's formula e/12 = 2 - q decides which, if either.
inline EvenSetClass classify_even_set(long k) {
  if (k < 0) {
    throw argument_error("classify_even_set: k must be nonnegative");
  }
  EvenSetClass out;
  out.k = k;
  out.euler_of_cover = 2 * kEulerK3 - 3 * k;
  if (k == 0) {
    out.verdict = EvenSetVerdict::Empty;
    return out;
  }
  if (out.euler_of_cover % 12 != 0) {
    out.verdict = EvenSetVerdict::Impossible;
    return out;
  }
  const long q = 2 - out.euler_of_cover / 12;
  out.irregularity = q;
  // Surfaces with trivial canonical bundle: K3 (q = 0) or a torus (q = 2).
  if (q == 0) {
    out.verdict = EvenSetVerdict::K3Cover;
  } else if (q == 2) {
    out.verdict = EvenSetVerdict::TorusCover;
  } else {
    out.verdict = EvenSetVerdict::Impossible;
  }
  return out;
}

/// dim C >= n - b2/2 for the code of n disjoint nodal curves, clamped at 0.
inline long code_dim_lower_bound(long n, long b2 = kB2K3) {
  if (b2 < 0 || b2 % 2 != 0) {
    throw argument_error("code_dim_lower_bound: b2 must be even and nonnegative");
  }
  if (n < 0) {
    throw argument_error("code_dim_lower_bound: n must be nonnegative");
  }
  return std::max(0L, n - b2 / 2);
}

/// What the K3 arithmetic forces on the code of n disjoint nodal curves.
struct NodalCodeConstraints {
  long n = 0;
  std::vector<long> allowed_weights;  ///< nonzero weights an even set may have, <= n
  long dim_lower_bound = 0;           ///< for b2 = 22
  /// True when every allowed weight is >= n/2, so the D_m characterization applies.
  bool large_weights = false;
  /// Largest dimension compatible with the characterization (n >= 2^(m-1)).
  std::optional<long> dim_upper_bound;
  /// A code determined up to coordinate permutation (or as the largest
  /// possible code), with the reason.
  std::optional<codes::LinearCode> forced_code;
  std::string forced_reason;
};

inline NodalCodeConstraints nodal_code_constraints(long n) {
  if (n < 1) {
    throw argument_error("nodal_code_constraints: n must be at least 1");
  }
  NodalCodeConstraints c;
  c.n = n;
  for (long k = 1; k <= n; ++k) {
    const auto cls = classify_even_set(k);
    if (cls.verdict == EvenSetVerdict::K3Cover || cls.verdict == EvenSetVerdict::TorusCover) {
      c.allowed_weights.push_back(k);
    }
  }
  c.dim_lower_bound = code_dim_lower_bound(n);
  c.large_weights = true;
  for (auto w : c.allowed_weights) {
    c.large_weights = c.large_weights && 2 * w >= n;
  }
  const auto un = static_cast<std::size_t>(n);
  if (c.large_weights) {
    // n >= 2^(m-1)  <=>  m <= floor(log2 n) + 1.
    c.dim_upper_bound = static_cast<long>(std::bit_width(un));
  }

  if (c.allowed_weights.empty()) {
    c.forced_code = codes::LinearCode::zero(un);
    c.forced_reason = "no admissible even-set size fits in " + std::to_string(n) + " coordinates";
  } else if (c.large_weights && c.dim_upper_bound && c.dim_lower_bound == *c.dim_upper_bound &&
             std::has_single_bit(un) && c.dim_lower_bound >= 2 &&
             (std::size_t{1} << (c.dim_lower_bound - 1)) == un) {
    c.forced_code = codes::code_D(static_cast<std::size_t>(c.dim_lower_bound));
    c.forced_reason = "dim >= " + std::to_string(c.dim_lower_bound) + " and weights >= n/2 force n = 2^(m-1), so C = D_" +
                      std::to_string(c.dim_lower_bound);
  } else if (c.allowed_weights.size() == 1 && c.allowed_weights.front() == n) {
    c.forced_code = codes::LinearCode::repetition(un);
    c.forced_reason = "the only admissible nonzero word is (1, ..., 1); a nonzero code is the line it spans";
  }
  return c;
}

inline void to_json(nlohmann::json& j, const EvenSetClass& c) {
  j = nlohmann::json{{"k", c.k}, {"verdict", to_string(c.verdict)}, {"euler_of_cover", c.euler_of_cover}};
  if (c.irregularity) {
    j["irregularity"] = *c.irregularity;
  } else {
    j["irregularity"] = nullptr;
  }
}

inline void to_json(nlohmann::json& j, const NodalCodeConstraints& c) {
  j = nlohmann::json{{"n", c.n},
                     {"allowed_weights", c.allowed_weights},
                     {"dim_lower_bound", c.dim_lower_bound},
                     {"large_weights", c.large_weights}};
  j["dim_upper_bound"] = c.dim_upper_bound ? nlohmann::json(*c.dim_upper_bound) : nlohmann::json(nullptr);
  if (c.forced_code) {
    std::vector<std::string> rows;
    for (const auto& r : c.forced_code->generator().row_vectors()) {
      rows.push_back(r.to_string());
    }
    j["forced_code"] = {{"dimension", c.forced_code->dimension()}, {"generator", rows}, {"reason", c.forced_reason}};
  } else {
    j["forced_code"] = nullptr;
  }
}

}  // namespace k3nodal::k3
