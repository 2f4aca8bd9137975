#pragma once

// Chessboards B[A]: the (r-1) x (n-1) board whose square s(i,j) is black
// when a_{i,j} a_{i,j+1} a_{i+1,j} a_{i+1,j+1} = -1. The board is invariant
// under reorientation, and two matrices share a board exactly when they
// differ by row and column sign scalings, so every board names one Lawrence
// oriented matroid up to reorientation.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lomkit/errors.hpp"
#include "lomkit/sign_matrix.hpp"
#include "lomkit/travels.hpp"

namespace lomkit {

/// Black squares run through row i over columns x_1+...+x_{i-1}+1 ..
/// x_1+...+x_i.
using Sequence = std::vector<std::size_t>;

/// Corner columns h(1..r), stored 1-based (index 0 unused).
using CornerMap = std::vector<std::size_t>;

class Chessboard {
public:
  /// Board for an r x n matrix from a row-major bitmap of (r-1)*(n-1)
  /// squares (true = black).
  Chessboard(std::size_t rows, std::size_t cols, std::vector<bool> black)
      : rows_(rows), cols_(cols), black_(std::move(black)) {
    if (rows_ < 2 || cols_ < 2) throw InvalidArgument("Chessboard: need r >= 2 and n >= 2");
    if (black_.size() != (rows_ - 1) * (cols_ - 1))
      throw InvalidArgument("Chessboard: bitmap size must be (r-1)*(n-1)");
  }

  static Chessboard white(std::size_t rows, std::size_t cols) {
    if (rows < 2 || cols < 2) throw InvalidArgument("Chessboard: need r >= 2 and n >= 2");
    return Chessboard(rows, cols, std::vector<bool>((rows - 1) * (cols - 1), false));
  }

  /// Square k = (i-1)*(n-1) + (j-1) is black when bit k of `bits` is set.
  static Chessboard from_bits(std::size_t rows, std::size_t cols, std::uint64_t bits) {
    if (rows < 2 || cols < 2) throw InvalidArgument("Chessboard: need r >= 2 and n >= 2");
    std::vector<bool> b((rows - 1) * (cols - 1));
    for (std::size_t k = 0; k < b.size() && k < 64; ++k) b[k] = (bits >> k) & 1u;
    return Chessboard(rows, cols, std::move(b));
  }

  static Chessboard from_sequence(std::size_t rows, std::size_t cols, const Sequence &seq) {
    if (rows < 2) throw InvalidArgument("realize_sequence: need r >= 2");
    if (seq.size() != rows - 1)
      throw InvalidArgument("realize_sequence: sequence length must be r-1");
    std::size_t total = 0;
    for (std::size_t x : seq) {
      if (x < 1) throw InvalidArgument("realize_sequence: entries must be positive");
      total += x;
    }
    if (total > cols - 1)
      throw InvalidArgument("realize_sequence: sequence does not fit in n-1 columns");
    Chessboard b = white(rows, cols);
    std::size_t start = 1;
    for (std::size_t i = 1; i < rows; ++i) {
      for (std::size_t j = start; j < start + seq[i - 1]; ++j) b.black_[b.index(i, j)] = true;
      start += seq[i - 1];
    }
    b.sequence_ = seq;
    return b;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  /// Square s(i,j), 1 <= i <= r-1, 1 <= j <= n-1.
  [[nodiscard]] bool black(std::size_t i, std::size_t j) const { return black_[index(i, j)]; }

  [[nodiscard]] std::size_t black_count() const {
    return static_cast<std::size_t>(std::count(black_.begin(), black_.end(), true));
  }

  [[nodiscard]] const std::optional<Sequence> &sequence() const noexcept { return sequence_; }
  [[nodiscard]] const std::optional<CornerMap> &corners() const noexcept { return corners_; }

  /// Attaches a corner function; checks h(1) = 1, h strictly increasing,
  /// the per-row window x_1+..+x_{m-1}+1 <= h(m) <= x_1+..+x_m+1 for
  /// 2 <= m <= r-1, and h(r) = n.
  [[nodiscard]] Chessboard with_corners(CornerMap h) const {
    if (!sequence_) throw InvalidArgument("Chessboard: corners need a sequence");
    if (h.size() != rows_ + 1) throw InvalidArgument("Chessboard: corner map must cover 1..r");
    if (h[1] != 1) throw InvalidArgument("Chessboard: h(1) must be 1");
    std::size_t before = 0;
    for (std::size_t m = 2; m <= rows_; ++m) {
      if (h[m] <= h[m - 1]) throw InvalidArgument("Chessboard: h must be strictly increasing");
      before += (*sequence_)[m - 2];
      if (m < rows_) {
        const std::size_t upto = before + (*sequence_)[m - 1];
        if (h[m] < before + 1 || h[m] > upto + 1)
          throw InvalidArgument("Chessboard: corner h(" + std::to_string(m) + ") outside its row");
      }
    }
    if (h[rows_] != cols_) throw InvalidArgument("Chessboard: h(r) must equal n");
    Chessboard out = *this;
    out.corners_ = std::move(h);
    return out;
  }

  /// Same squares reflected left-right.
  [[nodiscard]] Chessboard mirrored() const {
    std::vector<bool> b(black_.size());
    for (std::size_t i = 1; i < rows_; ++i)
      for (std::size_t j = 1; j < cols_; ++j) b[index(i, cols_ - j)] = black(i, j);
    return Chessboard(rows_, cols_, std::move(b));
  }

  /// Same squares reflected top-bottom.
  [[nodiscard]] Chessboard flipped() const {
    std::vector<bool> b(black_.size());
    for (std::size_t i = 1; i < rows_; ++i)
      for (std::size_t j = 1; j < cols_; ++j) b[index(rows_ - i, j)] = black(i, j);
    return Chessboard(rows_, cols_, std::move(b));
  }

  /// Equality of the squares only.
  friend bool operator==(const Chessboard &a, const Chessboard &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.black_ == b.black_;
  }

private:
  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const {
    if (i < 1 || i >= rows_ || j < 1 || j >= cols_)
      throw InvalidArgument("Chessboard: square out of range");
    return (i - 1) * (cols_ - 1) + (j - 1);
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<bool> black_;
  std::optional<Sequence> sequence_;
  std::optional<CornerMap> corners_;
};

inline Chessboard board_of(const SignMatrix &a) {
  const std::size_t r = a.rows(), n = a.cols();
  if (r < 2 || n < 2) throw InvalidArgument("board_of: need r >= 2 and n >= 2");
  std::vector<bool> b((r - 1) * (n - 1));
  for (std::size_t i = 1; i < r; ++i)
    for (std::size_t j = 1; j < n; ++j)
      b[(i - 1) * (n - 1) + (j - 1)] =
          (a(i, j) * a(i, j + 1) * a(i + 1, j) * a(i + 1, j + 1)) == Sign::negative;
  return Chessboard(r, n, std::move(b));
}

/// Canonical matrix of a board: first row and first column +1, the rest
/// filled so each 2x2 product has the board's parity.
inline SignMatrix realize_board(const Chessboard &board) {
  const std::size_t r = board.rows(), n = board.cols();
  std::vector<Sign> e(r * n, Sign::positive);
  auto at = [&](std::size_t i, std::size_t j) -> Sign & { return e[(i - 1) * n + (j - 1)]; };
  for (std::size_t i = 1; i < r; ++i)
    for (std::size_t j = 1; j < n; ++j)
      at(i + 1, j + 1) = at(i, j) * at(i, j + 1) * at(i + 1, j) *
                         (board.black(i, j) ? Sign::negative : Sign::positive);
  return SignMatrix(r, n, std::move(e));
}

inline SignMatrix realize_sequence(std::size_t r, std::size_t n, const Sequence &seq) {
  return realize_board(Chessboard::from_sequence(r, n, seq));
}

// --- theorem constructions --------------------------------------------------

enum class Construction { dim2, dim3, general, t1, even_d };

inline std::string_view to_string(Construction c) {
  switch (c) {
  case Construction::dim2: return "dim2";
  case Construction::dim3: return "dim3";
  case Construction::general: return "general";
  case Construction::t1: return "t1";
  case Construction::even_d: return "even-d";
  }
  return "?";
}

inline std::optional<Construction> construction_from_string(std::string_view s) {
  for (auto c : {Construction::dim2, Construction::dim3, Construction::general, Construction::t1,
                 Construction::even_d})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

namespace detail {
inline std::size_t ceil_half(std::size_t m) { return (m + 1) / 2; }
} // namespace detail

/// Board, sequence and corner map for one of the theorem constructions.
///   dim2    r = 3, sequence (2, t+3), n = t+6 (one black square per column)
///   dim3    r = 4, sequence (2, t+3, 2), n = t+8
///   general r >= 5, t >= 2, sequence (2, t+3, 2, t+1, ..., t+1),
///           h(2) = t+3, h(3) = t+6, h(m) = (t+1)(m-3)+7
///   t1      r >= 5, sequence (2, 4, 2, 3, 2, 3, ...), h(m) = 2(m-1)+ceil(m/2)+1
///   even-d  odd r >= 5, t >= 2, sequence (2, t+3, 2, t+1, 2, t+1, ...),
///           h(2) = t+3, h(m) = 2 ceil((m-1)/2) + (t+1) floor((m-1)/2) + 3
/// For dim2 and dim3 the rank argument must be 3 and 4 respectively; for t1
/// the t argument is ignored.
inline Chessboard corners_for(Construction which, std::size_t r, std::size_t t) {
  Sequence seq;
  CornerMap h(r + 1, 0);
  if (r >= 1) h[1] = 1;
  switch (which) {
  case Construction::dim2:
    if (r != 3) throw InvalidArgument("corners_for(dim2): rank must be 3");
    seq = {2, t + 3};
    h[2] = t + 3;
    h[3] = t + 6;
    break;
  case Construction::dim3:
    if (r != 4) throw InvalidArgument("corners_for(dim3): rank must be 4");
    seq = {2, t + 3, 2};
    h[2] = t + 3;
    h[3] = t + 6;
    h[4] = t + 8;
    break;
  case Construction::general:
    if (t < 2) throw InvalidArgument("corners_for(general): needs t >= 2");
    if (r < 5) throw InvalidArgument("corners_for(general): needs r >= 5");
    seq = {2, t + 3, 2};
    while (seq.size() < r - 1) seq.push_back(t + 1);
    h[2] = t + 3;
    h[3] = t + 6;
    for (std::size_t m = 4; m <= r; ++m) h[m] = (t + 1) * (m - 3) + 7;
    break;
  case Construction::t1:
    if (r < 5) throw InvalidArgument("corners_for(t1): needs r >= 5");
    seq = {2, 4};
    for (std::size_t k = 3; k <= r - 1; ++k) seq.push_back(k % 2 == 1 ? 2 : 3);
    for (std::size_t m = 2; m <= r; ++m) h[m] = 2 * (m - 1) + detail::ceil_half(m) + 1;
    break;
  case Construction::even_d:
    if (t < 2) throw InvalidArgument("corners_for(even-d): needs t >= 2");
    if (r < 5 || r % 2 == 0) throw InvalidArgument("corners_for(even-d): needs odd r >= 5");
    seq = {2, t + 3};
    for (std::size_t k = 3; k <= r - 1; ++k) seq.push_back(k % 2 == 1 ? 2 : t + 1);
    h[2] = t + 3;
    for (std::size_t m = 3; m <= r; ++m)
      h[m] = 2 * detail::ceil_half(m - 1) + (t + 1) * ((m - 1) / 2) + 3;
    break;
  }
  return Chessboard::from_sequence(r, h[r], seq).with_corners(std::move(h));
}

/// Number of interior elements each reorientation is claimed to have.
inline std::size_t required_interior(Construction which, std::size_t t) {
  return which == Construction::t1 ? 2 : t + 1;
}

/// Checks the opposite-paths rule between the Top and Bottom travels of A.
/// For every column pair (j, j+1) that TT crosses in row p and BT crosses
/// in row q > p with an odd number of black squares s(p..q-1, j) between
/// them, TT keeps its row at j+1 exactly when BT turns at j; with an even
/// number both keep or both turn. Returns false on the first violation.
inline bool parallel_rule_check(const SignMatrix &a) {
  const std::size_t r = a.rows(), n = a.cols();
  if (r < 2 || n < 2) return true;
  const Travel tt = top_travel(a), bt = bottom_travel(a);
  const Chessboard board = board_of(a);
  const auto tt_turns = tt.turns(), bt_turns = bt.turns();
  auto has = [](const std::vector<std::size_t> &v, std::size_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  for (std::size_t j = 1; j < n; ++j) {
    std::size_t p = 0, q = 0;
    for (std::size_t i = 1; i <= r; ++i) {
      if (tt.covers(i, j, j + 1)) p = i;
      if (bt.covers(i, j, j + 1)) q = i;
    }
    if (p == 0 || q == 0 || q <= p) continue;
    std::size_t blacks = 0;
    for (std::size_t i = p; i < q; ++i) blacks += board.black(i, j) ? 1 : 0;
    // a stuck travel turns where it stops
    const bool tt_turns_here =
        has(tt_turns, j + 1) || (!tt.complete() && tt.end_column() == j + 1);
    const bool bt_turns_here =
        has(bt_turns, j) || (!bt.complete() && bt.end_column() == j);
    const bool tt_keeps = !tt_turns_here;
    if (blacks % 2 == 1) {
      if (tt_keeps != bt_turns_here) return false;
    } else {
      if (tt_keeps == bt_turns_here) return false;
    }
  }
  return true;
}

// Board text format: "r n", then r-1 lines of n-1 characters '#' (black) or
// '.' (white).

inline Chessboard read_board(std::istream &in) {
  std::size_t r = 0, n = 0;
  if (!(in >> r >> n)) throw ParseError("board: expected header 'r n'");
  if (r < 2 || n < 2) throw ParseError("board: need r >= 2 and n >= 2");
  std::vector<bool> b;
  for (std::size_t i = 1; i < r; ++i) {
    std::string row;
    if (!(in >> row)) throw ParseError("board: missing row " + std::to_string(i));
    if (row.size() != n - 1) throw ParseError("board: row " + std::to_string(i) + " has wrong length");
    for (char c : row) {
      if (c != '#' && c != '.') throw ParseError(std::string("board: unexpected character '") + c + "'");
      b.push_back(c == '#');
    }
  }
  return Chessboard(r, n, std::move(b));
}

inline Chessboard parse_board(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_board(in);
}

inline void write_board(std::ostream &out, const Chessboard &b) {
  out << b.rows() << ' ' << b.cols() << '\n';
  for (std::size_t i = 1; i < b.rows(); ++i) {
    for (std::size_t j = 1; j < b.cols(); ++j) out << (b.black(i, j) ? '#' : '.');
    out << '\n';
  }
}

inline std::string to_text(const Chessboard &b) {
  std::ostringstream out;
  write_board(out, b);
  return out.str();
}

/// Parses "2,6,2,4,4".
inline Sequence parse_sequence(std::string_view text) {
  Sequence seq;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("sequence: expected comma separated positive integers");
    seq.push_back(std::stoul(item));
  }
  if (seq.empty()) throw ParseError("sequence: empty");
  return seq;
}

} // namespace lomkit
