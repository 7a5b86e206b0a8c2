#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "k3nodal/errors.hpp"
#include "k3nodal/gf2/bit_vector.hpp"
#include "k3nodal/gf2/matrix.hpp"

namespace k3nodal::codes {

using gf2::BitVector;

/// Largest dimension for which codewords are enumerated exhaustively.
inline constexpr std::size_t kEnumerationBudget = 28;

/// A binary linear code C in F_2^n, held as the nonzero rows of the RREF of
/// any generating set. Two codes are equal iff their canonical generators
/// are bitwise equal.
class LinearCode {
 public:
  /// The code spanned by the rows of `rows`; the length is `rows.cols()`.
  static LinearCode from_generators(const gf2::Matrix& rows) {
    if (rows.cols() == 0) {
      throw argument_error("LinearCode: length must be positive");
    }
    auto reduced = gf2::rref(rows);
    LinearCode c;
    c.n_ = rows.cols();
    c.pivots_ = std::move(reduced.pivots);
    std::vector<BitVector> basis(reduced.reduced.row_vectors().begin(),
                                 reduced.reduced.row_vectors().begin() + static_cast<std::ptrdiff_t>(reduced.rank));
    c.gen_ = gf2::Matrix(c.n_, std::move(basis));
    return c;
  }

  static LinearCode from_generators(std::size_t n, std::vector<BitVector> rows) {
    return from_generators(gf2::Matrix(n, std::move(rows)));
  }

  static LinearCode zero(std::size_t n) { return from_generators(gf2::Matrix(n, std::vector<BitVector>{})); }
  static LinearCode full(std::size_t n) { return from_generators(gf2::Matrix::identity(n)); }

  /// The line spanned by (1, ..., 1).
  static LinearCode repetition(std::size_t n) { return from_generators(n, {BitVector::ones(n)}); }

  [[nodiscard]] std::size_t length() const noexcept { return n_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return gen_.rows(); }
  [[nodiscard]] const gf2::Matrix& generator() const noexcept { return gen_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// The codeword sum_i message_i * g_i, message bits indexed like generator rows.
  [[nodiscard]] BitVector encode(std::uint64_t message) const {
    BitVector word(n_);
    for (std::size_t i = 0; i < dimension(); ++i) {
      if ((message >> i) & 1U) {
        word ^= gen_.row(i);
      }
    }
    return word;
  }

  [[nodiscard]] bool contains(const BitVector& v) const {
    if (v.size() != n_) {
      throw dimension_error("LinearCode::contains: length mismatch");
    }
    BitVector r = v;
    for (std::size_t i = 0; i < dimension(); ++i) {
      if (r.test(pivots_[i])) {
        r ^= gen_.row(i);
      }
    }
    return r.is_zero();
  }

  [[nodiscard]] bool contains(const LinearCode& sub) const {
    return std::all_of(sub.gen_.row_vectors().begin(), sub.gen_.row_vectors().end(),
                       [this](const BitVector& g) { return contains(g); });
  }

  /// Visits all 2^k codewords in Gray-code order of the message (one
  /// generator added per step), starting with the zero word.
  template <class Visitor>
  void for_each_codeword(Visitor&& visit) const {
    check_budget("for_each_codeword");
    BitVector word(n_);
    visit(static_cast<const BitVector&>(word));
    const std::uint64_t total = std::uint64_t{1} << dimension();
    for (std::uint64_t step = 1; step < total; ++step) {
      word ^= gen_.row(static_cast<std::size_t>(std::countr_zero(step)));
      visit(static_cast<const BitVector&>(word));
    }
  }

  /// All codewords in message-index order.
  [[nodiscard]] std::vector<BitVector> codewords() const {
    check_budget("codewords");
    std::vector<BitVector> out;
    const std::uint64_t total = std::uint64_t{1} << dimension();
    out.reserve(static_cast<std::size_t>(total));
    for (std::uint64_t m = 0; m < total; ++m) {
      out.push_back(encode(m));
    }
    return out;
  }

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.n_ == b.n_ && a.gen_ == b.gen_; }

 private:
  void check_budget(const char* what) const {
    if (dimension() > kEnumerationBudget) {
      throw resource_error(std::string(what) + ": dimension " + std::to_string(dimension()) +
                           " exceeds enumeration budget of " + std::to_string(kEnumerationBudget));
    }
  }

  std::size_t n_ = 0;
  gf2::Matrix gen_;
  std::vector<std::size_t> pivots_;
};

/// Number of codewords of each weight 0..n.
struct WeightDistribution {
  std::size_t n = 0;
  std::vector<std::uint64_t> counts;

  [[nodiscard]] std::uint64_t operator[](std::size_t w) const { return w < counts.size() ? counts[w] : 0; }

  [[nodiscard]] std::uint64_t total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

  /// Weights w > 0 with counts[w] > 0, ascending.
  [[nodiscard]] std::vector<std::size_t> nonzero_weights() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 1; w < counts.size(); ++w) {
      if (counts[w] != 0) {
        out.push_back(w);
      }
    }
    return out;
  }

  /// Smallest nonzero weight, or 0 for the zero code.
  [[nodiscard]] std::size_t min_nonzero_weight() const {
    const auto ws = nonzero_weights();
    return ws.empty() ? 0 : ws.front();
  }

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Exact weight distribution by enumerating all 2^k codewords.
inline WeightDistribution weight_distribution(const LinearCode& c) {
  if (c.dimension() > kEnumerationBudget) {
    throw resource_error("weight_distribution: dimension " + std::to_string(c.dimension()) +
                         " exceeds enumeration budget of " + std::to_string(kEnumerationBudget));
  }
  WeightDistribution wd{c.length(), std::vector<std::uint64_t>(c.length() + 1, 0)};
  if (c.length() <= BitVector::word_bits) {
    std::vector<std::uint64_t> gens;
    for (const auto& g : c.generator().row_vectors()) {
      gens.push_back(g.word(0));
    }
    std::uint64_t word = 0;
    wd.counts[0] = 1;
    const std::uint64_t total = std::uint64_t{1} << c.dimension();
    for (std::uint64_t step = 1; step < total; ++step) {
      word ^= gens[static_cast<std::size_t>(std::countr_zero(step))];
      ++wd.counts[static_cast<std::size_t>(std::popcount(word))];
    }
    return wd;
  }
  c.for_each_codeword([&](const BitVector& w) { ++wd.counts[w.weight()]; });
  return wd;
}

/// C^perp = {y : x.y = 0 for all x in C}.
inline LinearCode dual(const LinearCode& c) {
  return LinearCode::from_generators(gf2::kernel(c.generator()));
}

/// C subset of C^perp, checked on all generator pairs including i = j.
inline bool is_isotropic(const LinearCode& c) {
  const auto& g = c.generator();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = i; j < g.rows(); ++j) {
      if (gf2::dot(g.row(i), g.row(j))) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_self_dual(const LinearCode& c) { return 2 * c.dimension() == c.length() && is_isotropic(c); }

namespace detail {

inline void check_coordinate_subset(std::size_t n, std::span<const std::size_t> coords, const char* op) {
  if (coords.empty()) {
    throw argument_error(std::string(op) + ": coordinate subset must be nonempty");
  }
  std::vector<bool> seen(n, false);
  for (auto j : coords) {
    if (j >= n) {
      throw argument_error(std::string(op) + ": coordinate " + std::to_string(j) + " out of range [0, " +
                           std::to_string(n) + ")");
    }
    if (seen[j]) {
      throw argument_error(std::string(op) + ": duplicate coordinate " + std::to_string(j));
    }
    seen[j] = true;
  }
}

}  // namespace detail

/// Coordinate projection (puncturing onto `coords`): every codeword
/// restricted to `coords`, in the given order.
inline LinearCode project(const LinearCode& c, std::span<const std::size_t> coords) {
  detail::check_coordinate_subset(c.length(), coords, "project");
  return LinearCode::from_generators(c.generator().select_columns(coords));
}

/// Shortening onto `coords`: the codewords whose support lies inside
/// `coords`, restricted to `coords`.
inline LinearCode shorten(const LinearCode& c, std::span<const std::size_t> coords) {
  detail::check_coordinate_subset(c.length(), coords, "shorten");
  std::vector<bool> inside(c.length(), false);
  for (auto j : coords) {
    inside[j] = true;
  }
  std::vector<std::size_t> outside;
  for (std::size_t j = 0; j < c.length(); ++j) {
    if (!inside[j]) {
      outside.push_back(j);
    }
  }
  const auto& g = c.generator();
  if (g.rows() == 0) {
    return LinearCode::zero(coords.size());
  }
  // Messages u with (u G) restricted to the complement equal to zero.
  const gf2::Matrix messages = gf2::kernel(g.select_columns(outside).transpose());
  std::vector<BitVector> words;
  for (const auto& u : messages.row_vectors()) {
    BitVector w(c.length());
    for (std::size_t i = 0; i < g.rows(); ++i) {
      if (u.test(i)) {
        w ^= g.row(i);
      }
    }
    words.push_back(w.select(coords));
  }
  return LinearCode::from_generators(coords.size(), std::move(words));
}

/// The characterization of D_m among codes with large weights: with
/// m = dim C, C is isomorphic to D_m iff n = 2^(m-1) and every nonzero
/// weight is at least n/2.
inline bool is_isomorphic_to_D(const LinearCode& c) {
  const std::size_t m = c.dimension();
  if (m == 0 || m - 1 >= 63) {
    return false;
  }
  if (c.length() != (std::size_t{1} << (m - 1))) {
    return false;
  }
  const auto wd = weight_distribution(c);
  return 2 * wd.min_nonzero_weight() >= c.length();
}

}  // namespace k3nodal::codes
