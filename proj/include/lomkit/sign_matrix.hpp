#pragma once

// Lawrence oriented matroids encoded as r x n matrices over {+1,-1}.
//
// Rows and columns are 1-based throughout the public surface: entry (i, j)
// is a_{i,j} with 1 <= i <= r and 1 <= j <= n, and ground-set elements are
// identified with column indices.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lomkit/errors.hpp"

namespace lomkit {

enum class Sign : std::int8_t { negative = -1, positive = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::positive : Sign::negative;
}
constexpr Sign operator-(Sign a) noexcept {
  return a == Sign::positive ? Sign::negative : Sign::positive;
}
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr char to_char(Sign s) noexcept { return s == Sign::positive ? '+' : '-'; }

/// Sorted list of distinct 1-based column indices.
using ColumnSet = std::vector<std::size_t>;

class SignMatrix {
public:
  /// Row-major entries, r*n of them.
  SignMatrix(std::size_t rows, std::size_t cols, std::vector<Sign> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ < 1) throw InvalidArgument("SignMatrix: rank must be at least 1");
    if (cols_ < rows_) throw InvalidArgument("SignMatrix: need n >= r");
    if (entries_.size() != rows_ * cols_)
      throw InvalidArgument("SignMatrix: entry count does not match r*n");
    for (Sign s : entries_)
      if (s != Sign::positive && s != Sign::negative)
        throw InvalidArgument("SignMatrix: entries must be +1 or -1");
  }

  static SignMatrix constant(std::size_t rows, std::size_t cols, Sign s = Sign::positive) {
    return SignMatrix(rows, cols, std::vector<Sign>(rows * cols, s));
  }

  /// Builds from strings of '+'/'-', one per row.
  static SignMatrix from_rows(const std::vector<std::string> &rows) {
    if (rows.empty()) throw InvalidArgument("SignMatrix: no rows");
    const std::size_t n = rows.front().size();
    std::vector<Sign> e;
    e.reserve(rows.size() * n);
    for (const auto &row : rows) {
      if (row.size() != n) throw ParseError("SignMatrix: ragged rows");
      for (char c : row) {
        if (c == '+')
          e.push_back(Sign::positive);
        else if (c == '-')
          e.push_back(Sign::negative);
        else
          throw ParseError(std::string("SignMatrix: unexpected character '") + c + "'");
      }
    }
    return SignMatrix(rows.size(), n, std::move(e));
  }

  /// Bit (i-1)*n + (j-1) set means a_{i,j} = -1.
  static SignMatrix from_bits(std::size_t rows, std::size_t cols, std::uint64_t bits) {
    std::vector<Sign> e(rows * cols, Sign::positive);
    for (std::size_t k = 0; k < e.size() && k < 64; ++k)
      if ((bits >> k) & 1u) e[k] = Sign::negative;
    return SignMatrix(rows, cols, std::move(e));
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  /// a_{i,j}, 1-based. Unchecked.
  [[nodiscard]] Sign operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[(i - 1) * cols_ + (j - 1)];
  }

  /// a_{i,j}, 1-based, range checked.
  [[nodiscard]] Sign at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
      throw InvalidArgument("SignMatrix: index out of range");
    return (*this)(i, j);
  }

  [[nodiscard]] const std::vector<Sign> &entries() const noexcept { return entries_; }

  /// The matrix turned upside down: a'_{i,j} = a_{r+1-i, n+1-j}.
  [[nodiscard]] SignMatrix rotated() const {
    std::vector<Sign> e(entries_.rbegin(), entries_.rend());
    return SignMatrix(rows_, cols_, std::move(e));
  }

  /// The matrix with entry (i, j) replaced.
  [[nodiscard]] SignMatrix with_entry(std::size_t i, std::size_t j, Sign s) const {
    (void)at(i, j);
    auto e = entries_;
    e[(i - 1) * cols_ + (j - 1)] = s;
    return SignMatrix(rows_, cols_, std::move(e));
  }

  friend bool operator==(const SignMatrix &, const SignMatrix &) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Sign> entries_;
};

/// Weakly increasing r-tuple of column indices (j_1 <= ... <= j_r).
class Basis {
public:
  explicit Basis(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    if (!std::is_sorted(indices_.begin(), indices_.end()))
      throw InvalidArgument("Basis: indices must be sorted");
  }
  [[nodiscard]] const std::vector<std::size_t> &indices() const noexcept { return indices_; }
  [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }

private:
  std::vector<std::size_t> indices_;
};

/// chi(B) = prod_i a_{i, j_i}.
inline Sign chirotope(const SignMatrix &a, const Basis &b) {
  if (b.size() != a.rows()) throw InvalidArgument("chirotope: basis length must equal rank");
  Sign s = Sign::positive;
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    const std::size_t j = b.indices()[i - 1];
    if (j < 1 || j > a.cols()) throw InvalidArgument("chirotope: column index out of range");
    s = s * a(i, j);
  }
  return s;
}

/// Negates every entry of each listed column. Duplicates are ignored.
inline SignMatrix reorient(const SignMatrix &a, const ColumnSet &cols) {
  std::vector<bool> flip(a.cols() + 1, false);
  for (std::size_t c : cols) {
    if (c < 1 || c > a.cols()) throw InvalidArgument("reorient: column index out of range");
    flip[c] = true;
  }
  std::vector<Sign> e = a.entries();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (flip[j + 1]) e[i * a.cols() + j] = -e[i * a.cols() + j];
  return SignMatrix(a.rows(), a.cols(), std::move(e));
}

// Text format: "r n" on the first line, then r rows of n characters '+'/'-'.

inline SignMatrix read_matrix(std::istream &in) {
  std::size_t r = 0, n = 0;
  if (!(in >> r >> n)) throw ParseError("matrix: expected header 'r n'");
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < r; ++i) {
    std::string row;
    if (!(in >> row)) throw ParseError("matrix: missing row " + std::to_string(i + 1));
    if (row.size() != n)
      throw ParseError("matrix: row " + std::to_string(i + 1) + " has wrong length");
    rows.push_back(std::move(row));
  }
  return SignMatrix::from_rows(rows);
}

inline SignMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matrix(in);
}

inline void write_matrix(std::ostream &out, const SignMatrix &a) {
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) out << to_char(a(i, j));
    out << '\n';
  }
}

inline std::string to_text(const SignMatrix &a) {
  std::ostringstream out;
  write_matrix(out, a);
  return out.str();
}

} // namespace lomkit
