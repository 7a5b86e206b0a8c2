#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "k3nodal/errors.hpp"
#include "k3nodal/gf2/bit_vector.hpp"

namespace k3nodal::gf2 {

/// A dense matrix over GF(2) stored as packed rows.
///
/// The column count is stored explicitly so that a matrix with zero rows
/// still knows its width (the generator set of a zero code).
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  /// Wraps `rows`; every row must have length `cols`.
  Matrix(std::size_t cols, std::vector<BitVector> rows) : cols_(cols), rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].size() != cols_) {
        throw dimension_error("gf2::Matrix: row " + std::to_string(i) + " has length " +
                              std::to_string(rows_[i].size()) + ", expected " + std::to_string(cols_));
      }
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.rows_[i].set(i);
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] const BitVector& row(std::size_t i) const { return rows_[i]; }
  [[nodiscard]] BitVector& row(std::size_t i) { return rows_[i]; }
  [[nodiscard]] const std::vector<BitVector>& row_vectors() const noexcept { return rows_; }

  [[nodiscard]] bool at(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

  void append_row(BitVector v) {
    if (v.size() != cols_) {
      throw dimension_error("gf2::Matrix::append_row: length mismatch");
    }
    rows_.push_back(std::move(v));
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (rows_[r].test(c)) {
          t.rows_[c].set(r);
        }
      }
    }
    return t;
  }

  /// Columns `coords` of every row, in the given order.
  [[nodiscard]] Matrix select_columns(std::span<const std::size_t> coords) const {
    std::vector<BitVector> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
      out.push_back(r.select(coords));
    }
    return Matrix(coords.size(), std::move(out));
  }

  /// M * v^T as a column vector of length rows().
  [[nodiscard]] BitVector multiply(const BitVector& v) const {
    BitVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (dot(rows_[r], v)) {
        out.set(r);
      }
    }
    return out;
  }

  /// Drops zero rows.
  [[nodiscard]] Matrix nonzero_rows() const {
    std::vector<BitVector> out;
    for (const auto& r : rows_) {
      if (!r.is_zero()) {
        out.push_back(r);
      }
    }
    return Matrix(cols_, std::move(out));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  Matrix reduced;                   ///< same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row, strictly increasing
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline RrefResult rref(Matrix m) {
  RrefResult out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && !m.at(pivot, col)) {
      ++pivot;
    }
    if (pivot == m.rows()) {
      continue;
    }
    std::swap(m.row(pivot), m.row(lead));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != lead && m.at(r, col)) {
        m.row(r) ^= m.row(lead);
      }
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = lead;
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// True if `m` is in reduced row echelon form (zero rows allowed only at the bottom).
inline bool is_rref(const Matrix& m) {
  std::size_t last_pivot = 0;
  bool seen_zero = false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const std::size_t p = m.row(r).find_first();
    if (p == m.cols()) {
      seen_zero = true;
      continue;
    }
    if (seen_zero || (r > 0 && p <= last_pivot)) {
      return false;
    }
    for (std::size_t other = 0; other < m.rows(); ++other) {
      if (other != r && m.at(other, p)) {
        return false;
      }
    }
    last_pivot = p;
  }
  return true;
}

/// Basis of the right null space {v : M v^T = 0}, returned in RREF.
inline Matrix kernel(const Matrix& m) {
  const auto reduced = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : reduced.pivots) {
    is_pivot[p] = true;
  }
  Matrix basis(m.cols(), std::vector<BitVector>{});
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t i = 0; i < reduced.rank; ++i) {
      if (reduced.reduced.at(i, free)) {
        v.set(reduced.pivots[i]);
      }
    }
    basis.append_row(std::move(v));
  }
  return rref(std::move(basis)).reduced;
}

/// Reads the text matrix format: one row per line of '0'/'1' characters,
/// blank lines ignored. Surrounding whitespace on a line is trimmed.
inline Matrix parse_matrix(std::istream& in) {
  std::vector<BitVector> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    const auto last = line.find_last_not_of(" \t\r");
    const std::string_view body(line.data() + first, last - first + 1);
    try {
      rows.push_back(BitVector::from_string(body));
    } catch (const argument_error& e) {
      throw argument_error("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (rows.back().size() != rows.front().size()) {
      throw dimension_error("line " + std::to_string(line_no) + ": row has length " +
                            std::to_string(rows.back().size()) + ", expected " +
                            std::to_string(rows.front().size()));
    }
  }
  if (rows.empty()) {
    throw argument_error("matrix text contains no rows");
  }
  const std::size_t cols = rows.front().size();
  return Matrix(cols, std::move(rows));
}

inline Matrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

inline void write_matrix(std::ostream& out, const Matrix& m) {
  for (const auto& r : m.row_vectors()) {
    out << r.to_string() << '\n';
  }
}

inline std::string format_matrix(const Matrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace k3nodal::gf2
