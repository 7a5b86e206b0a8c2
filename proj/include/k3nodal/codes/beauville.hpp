#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "k3nodal/codes/equivalence.hpp"
#include "k3nodal/codes/linear_code.hpp"
#include "k3nodal/codes/reed_muller.hpp"
#include "k3nodal/errors.hpp"

namespace k3nodal::codes {

/// Number of m-dimensional subspaces of F_2^n, prod_{i<m} (2^(n-i) - 1) / (2^(i+1) - 1).
inline boost::multiprecision::cpp_int gaussian_binomial2(std::size_t n, std::size_t m) {
  using boost::multiprecision::cpp_int;
  if (m > n) {
    return 0;
  }
  cpp_int num = 1;
  cpp_int den = 1;
  for (std::size_t i = 0; i < m; ++i) {
    num *= (cpp_int(1) << (n - i)) - 1;
    den *= (cpp_int(1) << (i + 1)) - 1;
  }
  return num / den;
}

enum class BeauvilleMode { Exhaustive, Sampled };

struct BeauvilleOptions {
  std::size_t m = 2;
  std::size_t n_max = 4;
  /// Exhaustive for m <= 4 unless overridden.
  BeauvilleMode mode = BeauvilleMode::Exhaustive;
  bool mode_from_m = true;
  std::uint64_t samples_per_length = 20000;
  std::uint64_t seed = 0x5eed;
  /// Upper bound on the total number of subspaces examined.
  std::uint64_t budget = 20'000'000;
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

struct BeauvilleLengthStats {
  std::size_t n = 0;
  std::uint64_t examined = 0;
  std::uint64_t expected = 0;    ///< Gaussian binomial (exhaustive mode)
  std::uint64_t satisfying = 0;  ///< codes with every nonzero weight >= n/2
  std::uint64_t extremal = 0;    ///< satisfying codes at n = 2^(m-1)
  std::uint64_t extremal_equivalent_to_D = 0;
  std::uint64_t extremal_with_D_spectrum = 0;

  friend bool operator==(const BeauvilleLengthStats&, const BeauvilleLengthStats&) = default;
};

struct BeauvilleCounterexample {
  std::size_t n = 0;
  std::string reason;
  std::vector<std::string> generator;

  friend bool operator==(const BeauvilleCounterexample&, const BeauvilleCounterexample&) = default;
};

struct BeauvilleReport {
  std::size_t m = 0;
  std::size_t n_max = 0;
  BeauvilleMode mode = BeauvilleMode::Exhaustive;
  std::vector<BeauvilleLengthStats> lengths;
  std::vector<BeauvilleCounterexample> counterexamples;

  [[nodiscard]] std::uint64_t total_examined() const {
    std::uint64_t t = 0;
    for (const auto& s : lengths) {
      t += s.examined;
    }
    return t;
  }

  [[nodiscard]] std::uint64_t total_extremal() const {
    std::uint64_t t = 0;
    for (const auto& s : lengths) {
      t += s.extremal;
    }
    return t;
  }

  /// No counterexample; every extremal code is D_m; exhaustive counts match.
  [[nodiscard]] bool verified() const {
    if (!counterexamples.empty()) {
      return false;
    }
    for (const auto& s : lengths) {
      if (s.extremal_equivalent_to_D != s.extremal || s.extremal_with_D_spectrum != s.extremal) {
        return false;
      }
      if (mode == BeauvilleMode::Exhaustive && s.examined != s.expected) {
        return false;
      }
    }
    return true;
  }
};

/// Thrown when the budget would be exceeded; carries the lengths completed so far.
class beauville_budget_error : public resource_error {
 public:
  beauville_budget_error(const std::string& what, BeauvilleReport partial)
      : resource_error(what), partial_(std::move(partial)) {}
  [[nodiscard]] const BeauvilleReport& partial_report() const noexcept { return partial_; }

 private:
  BeauvilleReport partial_;
};

namespace detail {

inline constexpr std::size_t kMaxCounterexamples = 8;

/// Checks one code given by m row masks of length n.
class BeauvilleChecker {
 public:
  BeauvilleChecker(std::size_t m, std::size_t n) : m_(m), n_(n), extremal_n_(std::size_t{1} << (m - 1)) {
    if (n_ == extremal_n_) {
      reference_ = code_D(m);
    }
  }

  void check(const std::vector<std::uint64_t>& rows, BeauvilleLengthStats& stats,
             std::vector<BeauvilleCounterexample>& found) const {
    ++stats.examined;
    std::uint64_t word = 0;
    std::size_t min_weight = n_ + 1;
    std::uint64_t weight_mask = 0;  // bit w set iff some nonzero codeword has weight w
    const std::uint64_t total = std::uint64_t{1} << m_;
    for (std::uint64_t step = 1; step < total; ++step) {
      word ^= rows[static_cast<std::size_t>(std::countr_zero(step))];
      const auto w = static_cast<std::size_t>(std::popcount(word));
      min_weight = std::min(min_weight, w);
      weight_mask |= std::uint64_t{1} << w;
    }
    if (2 * min_weight < n_) {
      return;
    }
    ++stats.satisfying;
    if (n_ < extremal_n_) {
      record(rows, "all nonzero weights >= n/2 but n < 2^(m-1)", found);
      return;
    }
    if (n_ != extremal_n_) {
      return;
    }
    ++stats.extremal;
    const std::uint64_t d_spectrum = (std::uint64_t{1} << (n_ / 2)) | (std::uint64_t{1} << n_);
    bool ok = true;
    if (weight_mask == d_spectrum) {
      ++stats.extremal_with_D_spectrum;
    } else {
      ok = false;
    }
    if (permutation_equivalent(to_code(rows), reference_)) {
      ++stats.extremal_equivalent_to_D;
    } else {
      ok = false;
    }
    if (!ok) {
      record(rows, "extremal code not equivalent to D_m", found);
    }
  }

 private:
  [[nodiscard]] LinearCode to_code(const std::vector<std::uint64_t>& rows) const {
    std::vector<BitVector> gens;
    for (auto r : rows) {
      gens.push_back(BitVector::from_word(n_, r));
    }
    return LinearCode::from_generators(n_, std::move(gens));
  }

  void record(const std::vector<std::uint64_t>& rows, const char* reason,
              std::vector<BeauvilleCounterexample>& found) const {
    if (found.size() >= kMaxCounterexamples) {
      return;
    }
    BeauvilleCounterexample ce{n_, reason, {}};
    for (const auto& g : to_code(rows).generator().row_vectors()) {
      ce.generator.push_back(g.to_string());
    }
    found.push_back(std::move(ce));
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t extremal_n_;
  LinearCode reference_;
};

/// All m-subsets of [0, n) in lexicographic order, as bitmasks.
inline std::vector<std::uint64_t> pivot_sets(std::size_t n, std::size_t m) {
  std::vector<std::uint64_t> out;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) {
    idx[i] = i;
  }
  while (true) {
    std::uint64_t mask = 0;
    for (auto i : idx) {
      mask |= std::uint64_t{1} << i;
    }
    out.push_back(mask);
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + (i - 1)) {
      --i;
    }
    if (i == 0) {
      break;
    }
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) {
      idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

/// Visits every subspace whose RREF has the given pivot columns exactly once.
inline void enumerate_profile(std::size_t n, std::size_t m, std::uint64_t pivots, const BeauvilleChecker& checker,
                              BeauvilleLengthStats& stats, std::vector<BeauvilleCounterexample>& found) {
  std::vector<std::size_t> pivot_cols;
  for (std::uint64_t p = pivots; p != 0; p &= p - 1) {
    pivot_cols.push_back(static_cast<std::size_t>(std::countr_zero(p)));
  }
  // Free entries: row i, column c > pivot_i, c not a pivot column.
  std::vector<std::pair<std::size_t, std::size_t>> free_entries;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = pivot_cols[i] + 1; c < n; ++c) {
      if (((pivots >> c) & 1U) == 0) {
        free_entries.emplace_back(i, c);
      }
    }
  }
  std::vector<std::uint64_t> rows(m);
  const std::uint64_t combos = std::uint64_t{1} << free_entries.size();
  for (std::uint64_t assignment = 0; assignment < combos; ++assignment) {
    for (std::size_t i = 0; i < m; ++i) {
      rows[i] = std::uint64_t{1} << pivot_cols[i];
    }
    for (std::uint64_t a = assignment; a != 0; a &= a - 1) {
      const auto& [r, c] = free_entries[static_cast<std::size_t>(std::countr_zero(a))];
      rows[r] |= std::uint64_t{1} << c;
    }
    checker.check(rows, stats, found);
  }
}

inline void merge_into(BeauvilleLengthStats& total, const BeauvilleLengthStats& part) {
  total.examined += part.examined;
  total.satisfying += part.satisfying;
  total.extremal += part.extremal;
  total.extremal_equivalent_to_D += part.extremal_equivalent_to_D;
  total.extremal_with_D_spectrum += part.extremal_with_D_spectrum;
}

inline BeauvilleLengthStats exhaustive_length(std::size_t n, std::size_t m, unsigned threads,
                                              std::vector<BeauvilleCounterexample>& found) {
  const auto sets = pivot_sets(n, m);
  const BeauvilleChecker checker(m, n);
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(sets.size())));
  std::vector<BeauvilleLengthStats> parts(workers);
  std::vector<std::vector<BeauvilleCounterexample>> part_found(workers);
  auto work = [&](unsigned w) {
    for (std::size_t s = w; s < sets.size(); s += workers) {
      enumerate_profile(n, m, sets[s], checker, parts[w], part_found[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(work, w);
    }
  }
  BeauvilleLengthStats stats;
  stats.n = n;
  std::vector<BeauvilleCounterexample> merged;
  for (unsigned w = 0; w < workers; ++w) {
    merge_into(stats, parts[w]);
    merged.insert(merged.end(), part_found[w].begin(), part_found[w].end());
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.generator < b.generator; });
  for (auto& ce : merged) {
    if (found.size() < kMaxCounterexamples) {
      found.push_back(std::move(ce));
    }
  }
  return stats;
}

inline BeauvilleLengthStats sampled_length(std::size_t n, std::size_t m, std::uint64_t samples, std::uint64_t seed,
                                           std::vector<BeauvilleCounterexample>& found) {
  const BeauvilleChecker checker(m, n);
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ULL));
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  BeauvilleLengthStats stats;
  stats.n = n;
  std::vector<std::uint64_t> rows(m);
  for (std::uint64_t s = 0; s < samples; ++s) {
    // Uniform over subspaces: every subspace has the same number of ordered bases.
    while (true) {
      for (auto& r : rows) {
        r = rng() & mask;
      }
      std::vector<std::uint64_t> echelon = rows;
      std::size_t rank = 0;
      for (std::size_t bit = 0; bit < n && rank < m; ++bit) {
        const std::uint64_t b = std::uint64_t{1} << bit;
        std::size_t p = rank;
        while (p < m && (echelon[p] & b) == 0) {
          ++p;
        }
        if (p == m) {
          continue;
        }
        std::swap(echelon[p], echelon[rank]);
        for (std::size_t r = 0; r < m; ++r) {
          if (r != rank && (echelon[r] & b) != 0) {
            echelon[r] ^= echelon[rank];
          }
        }
        ++rank;
      }
      if (rank == m) {
        break;
      }
    }
    checker.check(rows, stats, found);
  }
  return stats;
}

}  // namespace detail

/// Checks the characterization of D_m over all (or sampled) m-dimensional
/// codes of length m..n_max: a code with every nonzero weight >= n/2 has
/// n >= 2^(m-1), and at n = 2^(m-1) it is permutation-equivalent to D_m
/// with nonzero weights exactly {n/2, n}.
inline BeauvilleReport verify_beauville(const BeauvilleOptions& opts) {
  if (opts.m < 2) {
    throw argument_error("verify_beauville: m must be at least 2");
  }
  if (opts.n_max > kMaxEquivalenceLength) {
    throw resource_error("verify_beauville: n_max exceeds " + std::to_string(kMaxEquivalenceLength));
  }
  if (opts.m > 6) {
    throw resource_error("verify_beauville: m exceeds 6");
  }
  BeauvilleReport report;
  report.m = opts.m;
  report.n_max = opts.n_max;
  report.mode = opts.mode_from_m ? (opts.m <= 4 ? BeauvilleMode::Exhaustive : BeauvilleMode::Sampled) : opts.mode;
  const unsigned threads = opts.threads != 0 ? opts.threads : std::max(1U, std::thread::hardware_concurrency());

  std::uint64_t used = 0;
  for (std::size_t n = opts.m; n <= opts.n_max; ++n) {
    const auto expected = gaussian_binomial2(n, opts.m);
    const std::uint64_t planned =
        report.mode == BeauvilleMode::Exhaustive
            ? (expected > opts.budget ? opts.budget + 1 : expected.convert_to<std::uint64_t>())
            : opts.samples_per_length;
    if (used + planned > opts.budget) {
      throw beauville_budget_error("verify_beauville: budget of " + std::to_string(opts.budget) +
                                       " subspaces exceeded at n = " + std::to_string(n),
                                   report);
    }
    BeauvilleLengthStats stats =
        report.mode == BeauvilleMode::Exhaustive
            ? detail::exhaustive_length(n, opts.m, threads, report.counterexamples)
            : detail::sampled_length(n, opts.m, opts.samples_per_length, opts.seed, report.counterexamples);
    stats.expected = expected > std::numeric_limits<std::uint64_t>::max()
                         ? std::numeric_limits<std::uint64_t>::max()
                         : expected.convert_to<std::uint64_t>();
    used += stats.examined;
    report.lengths.push_back(stats);
  }
  return report;
}

inline BeauvilleReport verify_beauville(std::size_t m, std::size_t n_max) {
  BeauvilleOptions opts;
  opts.m = m;
  opts.n_max = n_max;
  return verify_beauville(opts);
}

inline void to_json(nlohmann::json& j, const BeauvilleReport& r) {
  j = nlohmann::json::object();
  j["m"] = r.m;
  j["n_max"] = r.n_max;
  j["mode"] = r.mode == BeauvilleMode::Exhaustive ? "exhaustive" : "sampled";
  j["lengths"] = nlohmann::json::array();
  for (const auto& s : r.lengths) {
    j["lengths"].push_back({{"n", s.n},
                            {"examined", s.examined},
                            {"expected", s.expected},
                            {"satisfying", s.satisfying},
                            {"extremal", s.extremal},
                            {"extremal_equivalent_to_D", s.extremal_equivalent_to_D},
                            {"extremal_with_D_spectrum", s.extremal_with_D_spectrum}});
  }
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& ce : r.counterexamples) {
    j["counterexamples"].push_back({{"n", ce.n}, {"reason", ce.reason}, {"generator", ce.generator}});
  }
  j["total_examined"] = r.total_examined();
  j["verified"] = r.verified();
}

}  // namespace k3nodal::codes
