#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "k3nodal/codes/linear_code.hpp"
#include "k3nodal/errors.hpp"

namespace k3nodal::codes {

/// Largest m accepted by the Reed-Muller constructors (length 2^m).
inline constexpr std::size_t kMaxReedMullerM = 16;

/// A monomial x_{i1} x_{i2} ... on W = F_2^m, encoded by its variable mask.
struct Monomial {
  std::uint32_t variables = 0;

  [[nodiscard]] std::size_t degree() const { return static_cast<std::size_t>(std::popcount(variables)); }

  /// "1" for the constant, otherwise e.g. "x0x2".
  [[nodiscard]] std::string label() const {
    if (variables == 0) {
      return "1";
    }
    std::string s;
    for (std::uint32_t v = variables; v != 0; v &= v - 1) {
      s += "x" + std::to_string(std::countr_zero(v));
    }
    return s;
  }

  /// Value on the point whose coordinates are the binary digits of `point`.
  [[nodiscard]] bool evaluate(std::uint64_t point) const { return (point & variables) == variables; }
};

/// Evaluation vector of `f` on W = F_2^m: position j holds f(x) where
/// j = sum_i x_i 2^i is the binary expansion of the point x.
inline BitVector evaluation_vector(const Monomial& f, std::size_t m) {
  const std::size_t length = std::size_t{1} << m;
  BitVector v(length);
  for (std::size_t j = 0; j < length; ++j) {
    if (f.evaluate(j)) {
      v.set(j);
    }
  }
  return v;
}

/// Monomials of degree <= max_degree in m variables, by degree and then by
/// the variable mask read as a binary number (constant first, then x0, x1, ...).
inline std::vector<Monomial> monomials_up_to(std::size_t max_degree, std::size_t m) {
  std::vector<Monomial> out;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) == d) {
        out.push_back(Monomial{mask});
      }
    }
  }
  return out;
}

/// The evaluation matrix of the monomial basis, before canonicalization.
struct ReedMullerGenerator {
  std::vector<Monomial> monomials;
  gf2::Matrix matrix;  ///< row i is the evaluation vector of monomials[i]
};

namespace detail {

inline void check_reed_muller_args(std::size_t max_degree, std::size_t m) {
  if (m < 1) {
    throw argument_error("reed_muller: m must be at least 1");
  }
  if (m > kMaxReedMullerM) {
    throw resource_error("reed_muller: m = " + std::to_string(m) + " exceeds supported maximum " +
                         std::to_string(kMaxReedMullerM));
  }
  if (max_degree > m) {
    throw argument_error("reed_muller: degree " + std::to_string(max_degree) + " exceeds m = " + std::to_string(m));
  }
}

}  // namespace detail

inline ReedMullerGenerator reed_muller_generator(std::size_t max_degree, std::size_t m) {
  detail::check_reed_muller_args(max_degree, m);
  ReedMullerGenerator g;
  g.monomials = monomials_up_to(max_degree, m);
  std::vector<BitVector> rows;
  rows.reserve(g.monomials.size());
  for (const auto& f : g.monomials) {
    rows.push_back(evaluation_vector(f, m));
  }
  g.matrix = gf2::Matrix(std::size_t{1} << m, std::move(rows));
  return g;
}

/// The Reed-Muller code of order `max_degree` on F_2^m, length 2^m.
inline LinearCode reed_muller(std::size_t max_degree, std::size_t m) {
  return LinearCode::from_generators(reed_muller_generator(max_degree, m).matrix);
}

/// D_m: the affine-linear functions on F_2^(m-1); length 2^(m-1), dimension m.
inline LinearCode code_D(std::size_t m) {
  if (m < 2) {
    throw argument_error("code_D: m must be at least 2");
  }
  return reed_muller(1, m - 1);
}

}  // namespace k3nodal::codes
