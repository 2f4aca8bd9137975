#pragma once

// Top, Bottom and Plain travels of a Lawrence matrix.
//
// A Top travel starts at a_{1,1} and walks right while the entries of the
// current row keep the sign of the row's first visited entry. At the first
// sign reversal (column j) it steps onto a_{i,j} and drops to a_{i+1,j}.
// It ends at column n, or is stuck when a reversal occurs in row r (the
// matroid is then cyclic). The Bottom travel is the mirror image, starting
// at a_{r,n}, walking left and rising at reversals.
//
// Plain travels are staircase shapes independent of the entries: drops at
// columns 2 <= j_1 < ... < j_{s-1} <= n, ending at column n in row s, with
// 1 < s <= r. The acyclic reorientations of M_A correspond (up to global
// reversal) to the Plain travels plus the single travel that never leaves
// row 1; each is realized as the Top travel of exactly one reorientation.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lomkit/errors.hpp"
#include "lomkit/parallel.hpp"
#include "lomkit/sign_matrix.hpp"

namespace lomkit {

enum class TravelKind { top, bottom, plain };

/// Entries (row, first..last) of one row of a travel; first <= last always,
/// whatever the walking direction.
struct Segment {
  std::size_t row;
  std::size_t first;
  std::size_t last;
  friend bool operator==(const Segment &, const Segment &) = default;
};

class Travel {
public:
  Travel(TravelKind kind, std::size_t rows, std::vector<Segment> segments, bool complete)
      : kind_(kind), rows_(rows), segments_(std::move(segments)), complete_(complete),
        spans_(rows + 1, Segment{0, 0, 0}) {
    if (segments_.empty()) throw InvalidArgument("Travel: no segments");
    for (const auto &s : segments_) {
      if (s.row < 1 || s.row > rows_ || s.first > s.last || s.first < 1)
        throw InvalidArgument("Travel: malformed segment");
      if (spans_[s.row].row != 0) throw InvalidArgument("Travel: row visited twice");
      spans_[s.row] = s;
    }
  }

  [[nodiscard]] TravelKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] const std::vector<Segment> &segments() const noexcept { return segments_; }

  /// False when the walk hit a sign reversal in its last admissible row.
  [[nodiscard]] bool complete() const noexcept { return complete_; }

  [[nodiscard]] std::size_t start_row() const noexcept { return segments_.front().row; }
  [[nodiscard]] std::size_t end_row() const noexcept { return segments_.back().row; }
  [[nodiscard]] std::size_t end_column() const noexcept {
    return kind_ == TravelKind::bottom ? segments_.back().first : segments_.back().last;
  }

  /// Column at which each segment ends, in path order (j_1, ..., j_s).
  [[nodiscard]] std::vector<std::size_t> breakpoints() const {
    std::vector<std::size_t> b;
    for (const auto &s : segments_) b.push_back(kind_ == TravelKind::bottom ? s.first : s.last);
    return b;
  }

  /// Columns where the travel changes row (all breakpoints but the last).
  [[nodiscard]] std::vector<std::size_t> turns() const {
    auto b = breakpoints();
    b.pop_back();
    return b;
  }

  [[nodiscard]] bool contains(std::size_t i, std::size_t j) const noexcept {
    if (i < 1 || i > rows_) return false;
    const auto &s = spans_[i];
    return s.row != 0 && s.first <= j && j <= s.last;
  }

  /// True when row i holds columns lo..hi of the travel.
  [[nodiscard]] bool covers(std::size_t i, std::size_t lo, std::size_t hi) const noexcept {
    return contains(i, lo) && contains(i, hi);
  }

  /// The segment lying in row i, if any.
  [[nodiscard]] std::optional<Segment> in_row(std::size_t i) const {
    if (i < 1 || i > rows_ || spans_[i].row == 0) return std::nullopt;
    return spans_[i];
  }

  /// Same path and completeness; the kind tag is not compared.
  friend bool operator==(const Travel &a, const Travel &b) {
    return a.rows_ == b.rows_ && a.complete_ == b.complete_ && a.segments_ == b.segments_;
  }

private:
  TravelKind kind_;
  std::size_t rows_;
  std::vector<Segment> segments_;
  bool complete_;
  std::vector<Segment> spans_;
};

/// "row:first-last" segments in path order joined by ';'. Bottom travels
/// print their ranges right-to-left ("3:5-2").
inline std::string to_text(const Travel &t) {
  std::ostringstream out;
  bool sep = false;
  for (const auto &s : t.segments()) {
    if (sep) out << ';';
    sep = true;
    if (t.kind() == TravelKind::bottom)
      out << s.row << ':' << s.last << '-' << s.first;
    else
      out << s.row << ':' << s.first << '-' << s.last;
  }
  if (!t.complete()) out << '!';
  return out.str();
}

inline Travel top_travel(const SignMatrix &a) {
  const std::size_t r = a.rows(), n = a.cols();
  std::vector<Segment> segs;
  std::size_t row = 1, col = 1;
  for (;;) {
    const Sign ref = a(row, col);
    std::size_t j = col + 1;
    while (j <= n && a(row, j) == ref) ++j;
    if (j > n) {
      segs.push_back({row, col, n});
      return Travel(TravelKind::top, r, std::move(segs), true);
    }
    if (row == r) {
      segs.push_back({row, col, j - 1});
      return Travel(TravelKind::top, r, std::move(segs), false);
    }
    segs.push_back({row, col, j});
    ++row;
    col = j;
  }
}

inline Travel bottom_travel(const SignMatrix &a) {
  const std::size_t r = a.rows(), n = a.cols();
  std::vector<Segment> segs;
  std::size_t row = r, col = n;
  for (;;) {
    const Sign ref = a(row, col);
    std::size_t j = col;
    while (j > 1 && a(row, j - 1) == ref) --j;
    if (j == 1) {
      segs.push_back({row, 1, col});
      return Travel(TravelKind::bottom, r, std::move(segs), true);
    }
    // reversal at column j-1
    if (row == 1) {
      segs.push_back({row, j, col});
      return Travel(TravelKind::bottom, r, std::move(segs), false);
    }
    segs.push_back({row, j - 1, col});
    --row;
    col = j - 1;
  }
}

/// Acyclicity via the Top travel. The Bottom travel criterion is equivalent
/// and is exposed separately for cross-checking.
inline bool is_acyclic(const SignMatrix &a) { return top_travel(a).complete(); }
inline bool is_acyclic_by_bottom(const SignMatrix &a) { return bottom_travel(a).complete(); }

struct InteriorSet {
  ColumnSet elements;
  [[nodiscard]] std::size_t size() const noexcept { return elements.size(); }
  [[nodiscard]] bool contains(std::size_t k) const {
    return std::binary_search(elements.begin(), elements.end(), k);
  }
  friend bool operator==(const InteriorSet &, const InteriorSet &) = default;
};

/// Interior elements from a pair of complete Top/Bottom travels on an r x n
/// matrix: column 1 when BT finishes with a_{1,2}, a_{1,1}; column n when TT
/// finishes with a_{r,n-1}, a_{r,n}; 2 <= k <= n-1 when TT and BT are
/// parallel at k.
inline InteriorSet interior_from_travels(const Travel &tt, const Travel &bt, std::size_t n) {
  const std::size_t r = tt.rows();
  InteriorSet out;
  if (n < 2) return out;
  if (bt.covers(1, 1, 2)) out.elements.push_back(1);
  for (std::size_t k = 2; k + 1 <= n; ++k) {
    for (std::size_t i = 1; i <= r; ++i) {
      if (!tt.covers(i, k - 1, k + 1)) continue;
      if (bt.covers(i, k - 1, k + 1) || bt.covers(i + 1, k - 1, k + 1)) {
        out.elements.push_back(k);
      }
      break; // at most one row of TT holds three consecutive columns
    }
  }
  if (tt.covers(r, n - 1, n)) out.elements.push_back(n);
  return out;
}

inline InteriorSet interior_elements(const SignMatrix &a) {
  const Travel tt = top_travel(a);
  if (!tt.complete()) throw InvalidArgument("interior_elements: matroid is cyclic");
  return interior_from_travels(tt, bottom_travel(a), a.cols());
}

/// Builds the staircase starting at a_{1,1} that drops at the given columns
/// and ends at column n. `drops` must be strictly increasing in [2, n] with
/// fewer than r entries. An empty list is the travel that stays in row 1.
inline Travel staircase(std::size_t r, std::size_t n, const std::vector<std::size_t> &drops,
                        TravelKind kind = TravelKind::plain) {
  if (drops.size() >= r) throw InvalidArgument("staircase: too many drops for the rank");
  std::vector<Segment> segs;
  std::size_t col = 1, prev = 1;
  for (std::size_t k = 0; k < drops.size(); ++k) {
    const std::size_t j = drops[k];
    if (j < 2 || j > n || (k > 0 && j <= prev))
      throw InvalidArgument("staircase: drops must be strictly increasing in [2, n]");
    segs.push_back({k + 1, col, j});
    col = j;
    prev = j;
  }
  segs.push_back({drops.size() + 1, col, n});
  return Travel(kind, r, std::move(segs), true);
}

/// True when t has the Plain travel shape for an r x n matrix.
inline bool is_plain_travel(const Travel &t, std::size_t r, std::size_t n) {
  if (t.rows() != r || !t.complete()) return false;
  const auto &segs = t.segments();
  if (segs.size() < 2 || segs.size() > r) return false;
  if (segs.front().first != 1 || segs.back().last != n) return false;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    if (segs[k].row != k + 1) return false;
    if (k > 0) {
      if (segs[k].first != segs[k - 1].last) return false;
      if (segs[k - 1].last < 2) return false;
      if (k > 1 && segs[k - 1].last <= segs[k - 2].last) return false;
    }
  }
  return true;
}

namespace detail {

/// Depth-first walk over drop lists in lexicographic order of the full
/// breakpoint sequence (drops followed by n). At the root, `first` (when
/// non-zero) keeps only sequences whose first breakpoint is that column.
template <typename F>
bool walk_travels(std::size_t r, std::size_t n, bool with_row_one, std::size_t first,
                  std::vector<std::size_t> &drops, F &f) {
  const bool root = drops.empty();
  const bool can_drop = drops.size() + 1 < r;
  const std::size_t lo = root ? 2 : drops.back() + 1;
  if (can_drop) {
    for (std::size_t v = lo; v < n; ++v) {
      if (root && first != 0 && v != first) continue;
      drops.push_back(v);
      const bool go_on = walk_travels(r, n, with_row_one, first, drops, f);
      drops.pop_back();
      if (!go_on) return false;
    }
  }
  if (root && first != 0 && first != n) return true;
  // next breakpoint is n: either the travel ends here, or it drops at n
  if ((!root || with_row_one) && !f(std::as_const(drops))) return false;
  if (can_drop && lo <= n) {
    drops.push_back(n);
    const bool go_on = f(std::as_const(drops));
    drops.pop_back();
    if (!go_on) return false;
  }
  return true;
}

} // namespace detail

/// Calls f(drops) for every Plain travel shape of an r x n matrix in
/// lexicographic order of breakpoint sequences. f returns false to stop.
/// When `with_row_one` is set the travel that never drops is included at
/// its lexicographic position, giving one call per acyclic reorientation.
/// `first_breakpoint` (0 = all) restricts to travels whose first breakpoint
/// is that column, which partitions the stream for parallel scans.
template <typename F>
void for_each_travel_shape(std::size_t r, std::size_t n, F &&f, bool with_row_one = false,
                           std::size_t first_breakpoint = 0) {
  std::vector<std::size_t> drops;
  auto wrapped = [&](const std::vector<std::size_t> &d) -> bool {
    if constexpr (std::is_same_v<std::invoke_result_t<F &, const std::vector<std::size_t> &>, void>) {
      f(d);
      return true;
    } else {
      return static_cast<bool>(f(d));
    }
  };
  detail::walk_travels(r, n, with_row_one, first_breakpoint, drops, wrapped);
}

template <typename F>
void for_each_plain_travel(std::size_t r, std::size_t n, F &&f) {
  for_each_travel_shape(
      r, n, [&](const std::vector<std::size_t> &d) { return f(staircase(r, n, d)); }, false);
}

/// All Plain travels of A, materialized (depends only on r and n).
inline std::vector<Travel> enumerate_plain_travels(const SignMatrix &a) {
  std::vector<Travel> out;
  for_each_travel_shape(a.rows(), a.cols(), [&](const std::vector<std::size_t> &d) {
    out.push_back(staircase(a.rows(), a.cols(), d));
  });
  return out;
}

/// Number of Plain travels: sum over 1 <= k <= r-1 of C(n-1, k).
inline std::size_t plain_travel_count(std::size_t r, std::size_t n) {
  std::size_t total = 0, c = 1;
  for (std::size_t k = 1; k < r && k <= n - 1; ++k) {
    c = c * (n - k) / k;
    total += c;
  }
  return total;
}

/// Flip set turning the Top travel of A into the staircase with the given
/// drops. Sweeps columns left to right; column 1 is never flipped.
inline ColumnSet reorientation_for_drops(const SignMatrix &a, const std::vector<std::size_t> &drops) {
  const std::size_t n = a.cols();
  ColumnSet flips;
  bool prev_flipped = false;
  std::size_t row = 1, next = 0;
  for (std::size_t j = 2; j <= n; ++j) {
    const bool is_drop = next < drops.size() && drops[next] == j;
    const bool equal_now = a(row, j) == a(row, j - 1);
    // after flipping, equality must hold iff the path keeps going in row
    const bool flip = prev_flipped ^ (equal_now == is_drop);
    if (flip) flips.push_back(j);
    prev_flipped = flip;
    if (is_drop) {
      ++row;
      ++next;
    }
  }
  return flips;
}

inline ColumnSet reorientation_for_pt(const SignMatrix &a, const Travel &pt) {
  if (pt.rows() != a.rows() || !pt.complete() || pt.segments().back().last != a.cols() ||
      pt.kind() == TravelKind::bottom)
    throw InvalidArgument("reorientation_for_pt: travel does not fit the matrix");
  const auto drops = pt.turns();
  // validates the shape
  (void)staircase(a.rows(), a.cols(), drops);
  if (!(staircase(a.rows(), a.cols(), drops) == pt))
    throw InvalidArgument("reorientation_for_pt: not a staircase from a_{1,1}");
  return reorientation_for_drops(a, drops);
}

struct MinInteriorResult {
  std::size_t count = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> witness_drops;
  std::size_t travels_checked = 0;

  [[nodiscard]] Travel witness(std::size_t r, std::size_t n) const {
    return staircase(r, n, witness_drops, witness_drops.empty() ? TravelKind::top : TravelKind::plain);
  }
};

/// Interior set of the reorientation of A whose Top travel is the staircase
/// with these drops.
inline InteriorSet interior_for_drops(const SignMatrix &a, const std::vector<std::size_t> &drops) {
  const SignMatrix b = reorient(a, reorientation_for_drops(a, drops));
  return interior_from_travels(staircase(a.rows(), a.cols(), drops, TravelKind::top),
                               bottom_travel(b), a.cols());
}

namespace detail {

inline bool lex_less(const std::vector<std::size_t> &a, const std::vector<std::size_t> &b,
                     std::size_t n) {
  auto full = [n](std::vector<std::size_t> v) {
    v.push_back(n);
    return v;
  };
  const auto fa = full(a), fb = full(b);
  return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
}

inline MinInteriorResult min_interior_chunk(const SignMatrix &a, bool with_row_one,
                                            std::size_t first) {
  MinInteriorResult best;
  for_each_travel_shape(
      a.rows(), a.cols(),
      [&](const std::vector<std::size_t> &d) {
        ++best.travels_checked;
        const std::size_t c = interior_for_drops(a, d).size();
        if (c < best.count) {
          best.count = c;
          best.witness_drops = d;
        }
      },
      with_row_one, first);
  return best;
}

} // namespace detail

/// Minimum number of interior elements over the acyclic reorientations of
/// M_A reached through travel shapes, with the lexicographically smallest
/// minimizing shape as witness. By default the scan covers the Plain
/// travels plus the row-1 travel, i.e. every acyclic reorientation; pass
/// `plain_only` to restrict to Plain travels proper.
inline MinInteriorResult min_interior(const SignMatrix &a, std::size_t workers = 1,
                                      bool plain_only = false) {
  const std::size_t n = a.cols();
  const bool with_row_one = !plain_only;
  if (workers <= 1 || n < 3) return detail::min_interior_chunk(a, with_row_one, 0);

  std::vector<std::size_t> firsts;
  for (std::size_t v = 2; v <= n; ++v) firsts.push_back(v);
  std::vector<MinInteriorResult> parts(firsts.size());
  parallel_for(firsts.size(), workers, [&](std::size_t k) {
    parts[k] = detail::min_interior_chunk(a, with_row_one, firsts[k]);
  });
  MinInteriorResult best;
  for (const auto &p : parts) {
    best.travels_checked += p.travels_checked;
    if (p.count < best.count ||
        (p.count == best.count && p.count != std::numeric_limits<std::size_t>::max() &&
         detail::lex_less(p.witness_drops, best.witness_drops, n))) {
      best.count = p.count;
      best.witness_drops = p.witness_drops;
    }
  }
  return best;
}

} // namespace lomkit
