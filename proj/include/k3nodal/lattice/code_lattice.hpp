#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "k3nodal/codes/linear_code.hpp"
#include "k3nodal/codes/reed_muller.hpp"
#include "k3nodal/errors.hpp"
#include "k3nodal/lattice/integer_matrix.hpp"

namespace k3nodal::lattice {

/// Gamma_C(sign): the preimage of a binary code C under reduction mod 2,
/// inside Z^n with the standard form scaled by sign/2.
///
/// The basis consists of the {0,1}-lifts of the RREF generators of C and
/// 2e_j for each non-pivot column j, ordered by leading column, so the basis
/// matrix is upper triangular with diagonal entries 1 (pivots) and 2.
/// The doubled Gram matrix `gram2` = sign * (b_i . b_j) is kept as integers;
/// the Gram matrix proper is gram2 / 2.
class CodeLattice {
 public:
  [[nodiscard]] std::size_t rank() const noexcept { return n_; }
  [[nodiscard]] int sign() const noexcept { return sign_; }
  [[nodiscard]] const IntMatrix& basis() const noexcept { return basis_; }
  [[nodiscard]] const IntMatrix& gram2() const noexcept { return gram2_; }
  [[nodiscard]] const codes::LinearCode& code() const noexcept { return code_; }

  [[nodiscard]] DenseMatrix<Rational> gram() const {
    DenseMatrix<Rational> g(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        g(i, j) = Rational(gram2_(i, j), 2);
      }
    }
    return g;
  }

  /// True Gram matrix as integers; requires integrality.
  [[nodiscard]] IntMatrix integral_gram() const;

  /// Inner product of two ambient vectors of Z^n under the twisted form.
  [[nodiscard]] Rational inner(const std::vector<Integer>& u, const std::vector<Integer>& v) const {
    if (u.size() != n_ || v.size() != n_) {
      throw dimension_error("CodeLattice::inner: vector length mismatch");
    }
    Integer s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      s += u[i] * v[i];
    }
    return Rational(s * sign_, 2);
  }

  [[nodiscard]] Rational norm(const std::vector<Integer>& v) const { return inner(v, v); }

  /// v lies in the lattice iff v mod 2 is a codeword.
  [[nodiscard]] bool contains(const std::vector<Integer>& v) const {
    if (v.size() != n_) {
      throw dimension_error("CodeLattice::contains: vector length mismatch");
    }
    gf2::BitVector reduced(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (boost::multiprecision::bit_test(boost::multiprecision::abs(v[i]), 0)) {
        reduced.set(i);
      }
    }
    return code_.contains(reduced);
  }

  friend CodeLattice gamma_from_code(const codes::LinearCode& c, int sign);

 private:
  std::size_t n_ = 0;
  int sign_ = 1;
  codes::LinearCode code_;
  IntMatrix basis_;
  IntMatrix gram2_;
};

inline CodeLattice gamma_from_code(const codes::LinearCode& c, int sign) {
  if (sign != 1 && sign != -1) {
    throw argument_error("gamma_from_code: sign must be +1 or -1");
  }
  const std::size_t n = c.length();
  CodeLattice L;
  L.n_ = n;
  L.sign_ = sign;
  L.code_ = c;
  L.basis_ = IntMatrix(n, n);
  std::vector<std::size_t> row_of_pivot(n, n);
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    row_of_pivot[c.pivots()[i]] = i;
  }
  for (std::size_t col = 0; col < n; ++col) {
    if (row_of_pivot[col] != n) {
      const auto& g = c.generator().row(row_of_pivot[col]);
      for (std::size_t j = 0; j < n; ++j) {
        L.basis_(col, j) = g.test(j) ? 1 : 0;
      }
    } else {
      L.basis_(col, col) = 2;
    }
  }
  L.gram2_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer s = 0;
      for (std::size_t t = 0; t < n; ++t) {
        s += L.basis_(i, t) * L.basis_(j, t);
      }
      L.gram2_(i, j) = s * sign;
    }
  }
  return L;
}

/// All entries of the Gram matrix are integers, i.e. gram2 is even.
inline bool is_integral(const CodeLattice& L) {
  for (std::size_t i = 0; i < L.rank(); ++i) {
    for (std::size_t j = 0; j < L.rank(); ++j) {
      if (boost::multiprecision::bit_test(boost::multiprecision::abs(L.gram2()(i, j)), 0)) {
        return false;
      }
    }
  }
  return true;
}

inline IntMatrix CodeLattice::integral_gram() const {
  if (!is_integral(*this)) {
    throw precondition_error("lattice is not integral");
  }
  IntMatrix g(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      g(i, j) = gram2_(i, j) / 2;
    }
  }
  return g;
}

/// Integral lattice whose basis vectors all have even norm.
inline bool is_even(const CodeLattice& L) {
  if (!is_integral(L)) {
    throw precondition_error("is_even: lattice is not integral");
  }
  for (std::size_t i = 0; i < L.rank(); ++i) {
    if (L.gram2()(i, i) % 4 != 0) {
      return false;
    }
  }
  return true;
}

/// Determinant of the Gram matrix: det(gram2) / 2^n, exactly.
inline Rational determinant(const CodeLattice& L) {
  return Rational(bareiss_determinant(L.gram2()), Integer(1) << L.rank());
}

/// Index of the lattice in Z^n, the determinant of the basis matrix.
inline Integer index_in_ambient(const CodeLattice& L) {
  return boost::multiprecision::abs(bareiss_determinant(L.basis()));
}

struct DiscriminantGroup {
  std::vector<Integer> elementary_divisors;  ///< nondecreasing, each > 1, each dividing the next

  [[nodiscard]] Integer order() const {
    Integer o = 1;
    for (const auto& d : elementary_divisors) {
      o *= d;
    }
    return o;
  }

  /// e.g. "(Z/2)^6" or "Z/2 x Z/4"; "0" for the trivial group.
  [[nodiscard]] std::string to_string() const {
    if (elementary_divisors.empty()) {
      return "0";
    }
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < elementary_divisors.size()) {
      std::size_t j = i;
      while (j < elementary_divisors.size() && elementary_divisors[j] == elementary_divisors[i]) {
        ++j;
      }
      if (!first) {
        out << " x ";
      }
      first = false;
      const auto& d = elementary_divisors[i];
      const std::string factor = d == 0 ? std::string("Z") : "Z/" + d.str();
      if (j - i == 1) {
        out << factor;
      } else {
        out << "(" << factor << ")^" << (j - i);
      }
      i = j;
    }
    return out.str();
  }

  friend bool operator==(const DiscriminantGroup&, const DiscriminantGroup&) = default;
};

/// Cokernel of the integral Gram matrix via its Smith normal form.
inline DiscriminantGroup discriminant_group(const CodeLattice& L) {
  if (!is_integral(L)) {
    throw precondition_error("discriminant_group: lattice is not integral");
  }
  DiscriminantGroup g;
  auto diag = smith_diagonal(L.integral_gram());
  // Zero divisors (degenerate form) sort last and denote infinite cyclic factors.
  for (auto& d : diag) {
    if (d != 1) {
      g.elementary_divisors.push_back(d);
    }
  }
  return g;
}

/// Sylvester's criterion: the i-th leading principal minor has sign (-1)^i.
inline bool is_negative_definite(const CodeLattice& L) {
  const auto minors = leading_principal_minors(L.gram2());
  for (std::size_t i = 0; i < minors.size(); ++i) {
    const int want = (i % 2 == 0) ? -1 : 1;  // minor of size i + 1
    if (minors[i].sign() != want) {
      return false;
    }
  }
  return !minors.empty();
}

inline bool is_positive_definite(const CodeLattice& L) {
  const auto minors = leading_principal_minors(L.gram2());
  for (const auto& m : minors) {
    if (m.sign() <= 0) {
      return false;
    }
  }
  return !minors.empty();
}

/// The code N/L in L*/L = F_2^n for an overlattice N of L = Z^n(-2)
/// spanned by L and `gens`: reduce 2 * gen mod 2 coordinatewise.
inline codes::LinearCode code_from_overlattice(std::size_t n, const std::vector<std::vector<Rational>>& gens) {
  std::vector<gf2::BitVector> rows;
  for (const auto& g : gens) {
    if (g.size() != n) {
      throw dimension_error("code_from_overlattice: generator length mismatch");
    }
    gf2::BitVector bits(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational doubled = g[i] * 2;
      if (boost::multiprecision::denominator(doubled) != 1) {
        throw argument_error("code_from_overlattice: coordinate " + std::to_string(i) + " is not half-integral");
      }
      if (boost::multiprecision::bit_test(boost::multiprecision::abs(boost::multiprecision::numerator(doubled)), 0)) {
        bits.set(i);
      }
    }
    rows.push_back(std::move(bits));
  }
  return codes::LinearCode::from_generators(n, std::move(rows));
}

/// The lattice spanned by sixteen disjoint nodal curves on a Kummer surface.
inline CodeLattice kummer_lattice() { return gamma_from_code(codes::code_D(5), -1); }

/// The lattice attached to an even set of eight disjoint nodal curves,
/// Gamma_C(-1) for C the line spanned by (1, ..., 1) in F_2^8.
inline CodeLattice nikulin_case_lattice() { return gamma_from_code(codes::LinearCode::repetition(8), -1); }

inline nlohmann::json json_integer(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

inline nlohmann::json json_rational(const Rational& q) {
  return nlohmann::json{{"num", json_integer(boost::multiprecision::numerator(q))},
                        {"den", json_integer(boost::multiprecision::denominator(q))}};
}

/// "p/2" for half-integers, plain integers otherwise.
inline std::string format_half(const Integer& doubled) {
  if (!boost::multiprecision::bit_test(boost::multiprecision::abs(doubled), 0)) {
    return Integer(doubled / 2).str();
  }
  return doubled.str() + "/2";
}

inline std::string format_rational(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) {
    return boost::multiprecision::numerator(q).str();
  }
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

/// The Gram matrix, right-aligned columns, one row per line.
inline std::string format_gram(const CodeLattice& L) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (std::size_t i = 0; i < L.rank(); ++i) {
    for (std::size_t j = 0; j < L.rank(); ++j) {
      cells.push_back(format_half(L.gram2()(i, j)));
      width = std::max(width, cells.back().size());
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < L.rank(); ++i) {
    for (std::size_t j = 0; j < L.rank(); ++j) {
      const auto& s = cells[i * L.rank() + j];
      out << (j == 0 ? "" : " ") << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

inline void to_json(nlohmann::json& j, const CodeLattice& L) {
  j = nlohmann::json::object();
  j["n"] = L.rank();
  j["sign"] = L.sign();
  nlohmann::json gram = nlohmann::json::array();
  for (std::size_t r = 0; r < L.rank(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < L.rank(); ++c) {
      row.push_back(json_integer(L.gram2()(r, c)));
    }
    gram.push_back(std::move(row));
  }
  j["gram2"] = std::move(gram);
  j["det"] = json_rational(determinant(L));
  if (is_integral(L)) {
    nlohmann::json divisors = nlohmann::json::array();
    for (const auto& d : discriminant_group(L).elementary_divisors) {
      divisors.push_back(json_integer(d));
    }
    j["elementary_divisors"] = std::move(divisors);
  } else {
    j["elementary_divisors"] = nullptr;
  }
}

}  // namespace k3nodal::lattice
