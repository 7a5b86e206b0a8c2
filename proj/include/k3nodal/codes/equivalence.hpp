#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "k3nodal/codes/linear_code.hpp"
#include "k3nodal/errors.hpp"

namespace k3nodal::codes {

/// Length limit for the backtracking equivalence search.
inline constexpr std::size_t kMaxEquivalenceLength = 16;

namespace detail {

/// Columns of a k x n generator matrix as k-bit masks.
inline std::vector<std::uint32_t> column_masks(const LinearCode& c) {
  std::vector<std::uint32_t> cols(c.length(), 0);
  const auto& g = c.generator();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < c.length(); ++j) {
      if (g.at(i, j)) {
        cols[j] |= std::uint32_t{1} << i;
      }
    }
  }
  return cols;
}

/// For each coordinate j, the weight distribution of the codewords that are
/// 1 at j. Any equivalence maps a coordinate to one with the same profile.
inline std::vector<std::vector<std::uint32_t>> coordinate_profiles(const LinearCode& c) {
  const std::size_t n = c.length();
  std::vector<std::vector<std::uint32_t>> profile(n, std::vector<std::uint32_t>(n + 1, 0));
  std::vector<std::uint32_t> gens;
  for (const auto& g : c.generator().row_vectors()) {
    gens.push_back(static_cast<std::uint32_t>(g.word(0)));
  }
  std::uint32_t word = 0;
  const std::uint64_t total = std::uint64_t{1} << c.dimension();
  for (std::uint64_t step = 1; step < total; ++step) {
    word ^= gens[static_cast<std::size_t>(std::countr_zero(step))];
    const auto w = static_cast<std::size_t>(std::popcount(word));
    for (std::uint32_t bits = word; bits != 0; bits &= bits - 1) {
      ++profile[static_cast<std::size_t>(std::countr_zero(bits))][w];
    }
  }
  return profile;
}

/// Canonical row space of the k x t matrix whose columns are `cols`:
/// the nonzero rows of its RREF, each row packed as a t-bit mask.
class PrefixEchelon {
 public:
  explicit PrefixEchelon(std::size_t k) : k_(k) {}

  [[nodiscard]] std::vector<std::uint32_t> canonical(const std::vector<std::uint32_t>& cols) const {
    std::vector<std::uint32_t> rows(k_, 0);
    for (std::size_t t = 0; t < cols.size(); ++t) {
      for (std::size_t i = 0; i < k_; ++i) {
        if ((cols[t] >> i) & 1U) {
          rows[i] |= std::uint32_t{1} << t;
        }
      }
    }
    std::size_t lead = 0;
    for (std::size_t t = 0; t < cols.size() && lead < k_; ++t) {
      const std::uint32_t bit = std::uint32_t{1} << t;
      std::size_t p = lead;
      while (p < k_ && (rows[p] & bit) == 0) {
        ++p;
      }
      if (p == k_) {
        continue;
      }
      std::swap(rows[p], rows[lead]);
      for (std::size_t r = 0; r < k_; ++r) {
        if (r != lead && (rows[r] & bit) != 0) {
          rows[r] ^= rows[lead];
        }
      }
      ++lead;
    }
    rows.resize(lead);
    return rows;
  }

 private:
  std::size_t k_;
};

class EquivalenceSearch {
 public:
  EquivalenceSearch(const LinearCode& a, const LinearCode& b)
      : n_(a.length()),
        cols_a_(column_masks(a)),
        cols_b_(column_masks(b)),
        echelon_(a.dimension()),
        used_(n_, false) {
    const auto pa = coordinate_profiles(a);
    const auto pb = coordinate_profiles(b);
    compatible_.assign(n_, {});
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (pa[i] == pb[j]) {
          compatible_[i].push_back(j);
        }
      }
    }
  }

  bool run() {
    prefix_a_.clear();
    prefix_b_.clear();
    return extend(0);
  }

  [[nodiscard]] const std::vector<std::size_t>& permutation() const { return assignment_; }

 private:
  // Coordinates 0..t-1 of A are assigned; the projections of A and B onto
  // the assigned coordinates must already coincide.
  bool extend(std::size_t t) {
    if (t == n_) {
      return true;
    }
    for (auto j : compatible_[t]) {
      if (used_[j]) {
        continue;
      }
      prefix_a_.push_back(cols_a_[t]);
      prefix_b_.push_back(cols_b_[j]);
      if (echelon_.canonical(prefix_a_) == echelon_.canonical(prefix_b_)) {
        used_[j] = true;
        assignment_.push_back(j);
        if (extend(t + 1)) {
          return true;
        }
        assignment_.pop_back();
        used_[j] = false;
      }
      prefix_a_.pop_back();
      prefix_b_.pop_back();
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::uint32_t> cols_a_;
  std::vector<std::uint32_t> cols_b_;
  PrefixEchelon echelon_;
  std::vector<std::vector<std::size_t>> compatible_;
  std::vector<bool> used_;
  std::vector<std::uint32_t> prefix_a_;
  std::vector<std::uint32_t> prefix_b_;
  std::vector<std::size_t> assignment_;
};

}  // namespace detail

/// Searches for a coordinate permutation sigma with B = {x o sigma^-1 : x in A},
/// i.e. coordinate i of A becomes coordinate sigma[i] of B. Returns the
/// permutation, or an empty vector when the codes are inequivalent (and
/// whenever their lengths or dimensions differ).
inline std::vector<std::size_t> find_equivalence(const LinearCode& a, const LinearCode& b) {
  if (a.length() > kMaxEquivalenceLength || b.length() > kMaxEquivalenceLength) {
    throw resource_error("permutation_equivalent: length exceeds " + std::to_string(kMaxEquivalenceLength));
  }
  if (a.length() != b.length() || a.dimension() != b.dimension()) {
    return {};
  }
  if (weight_distribution(a) != weight_distribution(b)) {
    return {};
  }
  detail::EquivalenceSearch search(a, b);
  if (!search.run()) {
    return {};
  }
  return search.permutation();
}

inline bool permutation_equivalent(const LinearCode& a, const LinearCode& b) {
  if (a.length() > kMaxEquivalenceLength || b.length() > kMaxEquivalenceLength) {
    throw resource_error("permutation_equivalent: length exceeds " + std::to_string(kMaxEquivalenceLength));
  }
  if (a.length() != b.length() || a.dimension() != b.dimension()) {
    return false;
  }
  return !find_equivalence(a, b).empty();
}

/// Applies a coordinate permutation: coordinate i of `c` moves to sigma[i].
inline LinearCode permute(const LinearCode& c, std::span<const std::size_t> sigma) {
  if (sigma.size() != c.length()) {
    throw dimension_error("permute: permutation length mismatch");
  }
  std::vector<std::size_t> inverse(sigma.size(), sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] >= sigma.size() || inverse[sigma[i]] != sigma.size()) {
      throw argument_error("permute: not a permutation");
    }
    inverse[sigma[i]] = i;
  }
  return project(c, inverse);
}

}  // namespace k3nodal::codes
