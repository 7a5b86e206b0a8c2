#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "k3nodal/errors.hpp"

namespace k3nodal::lattice {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Row-major dense matrix over an exact ring.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Top-left `size` x `size` block.
  [[nodiscard]] DenseMatrix leading_block(std::size_t size) const {
    DenseMatrix out(size, size);
    for (std::size_t r = 0; r < size; ++r) {
      for (std::size_t c = 0; c < size; ++c) {
        out(r, c) = (*this)(r, c);
      }
    }
    return out;
  }

  [[nodiscard]] bool symmetric() const {
    if (!square()) {
      return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = r + 1; c < cols_; ++c) {
        if ((*this)(r, c) != (*this)(c, r)) {
          return false;
        }
      }
    }
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) {
      std::swap((*this)(a, c), (*this)(b, c));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows_; ++r) {
      std::swap((*this)(r, a), (*this)(r, b));
    }
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = DenseMatrix<Integer>;

/// Determinant by Bareiss fraction-free elimination. Every intermediate
/// entry is a minor of the input, and each division is exact.
template <class T>
T bareiss_determinant(DenseMatrix<T> a) {
  if (!a.square()) {
    throw dimension_error("bareiss_determinant: matrix is not square");
  }
  const std::size_t n = a.rows();
  if (n == 0) {
    return T(1);
  }
  T sign(1);
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) {
        ++p;
      }
      if (p == n) {
        return T(0);
      }
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Diagonal of the Smith normal form: d_1 | d_2 | ... , nonnegative, with
/// zeros (rank deficiency) last. Elimination pivots on the entry of least
/// absolute value in the remaining block.
inline std::vector<Integer> smith_diagonal(IntMatrix a) {
  using boost::multiprecision::abs;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t steps = std::min(rows, cols);
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero |entry| in the block [t.., t..].
      std::size_t pr = rows;
      std::size_t pc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (a(r, c) != 0 && (pr == rows || abs(a(r, c)) < abs(a(pr, pc)))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) {
        // Remaining block is zero.
        for (std::size_t z = t; z < steps; ++z) {
          diag.push_back(0);
        }
        t = steps;
        break;
      }
      a.swap_rows(t, pr);
      a.swap_cols(t, pc);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) != 0) {
          const Integer q = a(r, t) / a(t, t);
          for (std::size_t c = t; c < cols; ++c) {
            a(r, c) -= q * a(t, c);
          }
          clean = clean && a(r, t) == 0;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) != 0) {
          const Integer q = a(t, c) / a(t, t);
          for (std::size_t r = t; r < rows; ++r) {
            a(r, c) -= q * a(r, t);
          }
          clean = clean && a(t, c) == 0;
        }
      }
      if (!clean) {
        continue;
      }
      // Divisibility: fold any entry not divisible by the pivot into row t.
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a(r, c) % a(t, t) != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row != rows) {
        for (std::size_t c = t; c < cols; ++c) {
          a(t, c) += a(bad_row, c);
        }
        continue;
      }
      diag.push_back(abs(a(t, t)));
      break;
    }
  }
  return diag;
}

/// Leading principal minors det(A[0..i, 0..i]) for i = 1..n.
template <class T>
std::vector<T> leading_principal_minors(const DenseMatrix<T>& a) {
  if (!a.square()) {
    throw dimension_error("leading_principal_minors: matrix is not square");
  }
  std::vector<T> out;
  out.reserve(a.rows());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    out.push_back(bareiss_determinant(a.leading_block(i)));
  }
  return out;
}

}  // namespace k3nodal::lattice
