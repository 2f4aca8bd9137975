#pragma once

// Finite point sets in R^d with exact rational coordinates, red/blue
// colorings, and the text formats for both.
//
// Points are stored 0-based; subsets reported to users (errors, witnesses)
// are 1-based.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lomkit/geometry/linalg.hpp"

namespace lomkit {

namespace detail {

/// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename F> void for_each_subset(std::size_t n, std::size_t k, F &&f) {
  if (k > n) return;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    f(static_cast<const std::vector<std::size_t> &>(s));
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

inline std::vector<std::size_t> one_based(std::vector<std::size_t> s) {
  for (auto &x : s) ++x;
  return s;
}

} // namespace detail

class PointConfig {
public:
  /// Validates general position: every (d+1)-subset (or the whole set, if
  /// smaller) is affinely independent.
  PointConfig(std::size_t dim, std::vector<Vector> points) : dim_(dim), points_(std::move(points)) {
    if (dim_ == 0) throw InvalidArgument("PointConfig: dimension must be at least 1");
    if (points_.empty()) throw InvalidArgument("PointConfig: no points");
    for (const auto &p : points_)
      if (p.size() != dim_) throw InvalidArgument("PointConfig: point of wrong dimension");
    for (const auto &p : points_) {
      Integer l = 1;
      for (const auto &x : p) l = boost::multiprecision::lcm(l, denominator(x));
      std::vector<Integer> h;
      h.reserve(dim_ + 1);
      for (const auto &x : p) h.push_back(numerator(x) * (l / denominator(x)));
      h.push_back(l);
      homogeneous_.push_back(std::move(h));
    }
    check_general_position();
  }

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] const std::vector<Vector> &points() const noexcept { return points_; }
  [[nodiscard]] const Vector &operator[](std::size_t k) const { return points_.at(k); }

  /// (x_k; 1) scaled by a positive integer so every entry is integral.
  [[nodiscard]] const std::vector<Integer> &homogeneous(std::size_t k) const { return homogeneous_.at(k); }

  friend bool operator==(const PointConfig &a, const PointConfig &b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_;
  }

private:
  void check_general_position() const {
    const std::size_t n = size(), k = std::min(n, dim_ + 1);
    if (k < dim_ + 1) {
      Matrix m;
      for (const auto &h : homogeneous_) m.emplace_back(h.begin(), h.end());
      if (rank(m) < n) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
        throw DegenerateConfiguration("points are affinely dependent", all);
      }
      return;
    }
    detail::for_each_subset(n, k, [&](const std::vector<std::size_t> &s) {
      IntegerMatrix m;
      for (auto i : s) m.push_back(homogeneous_[i]);
      if (determinant(m) == 0) {
        auto bad = detail::one_based(s);
        std::string list;
        for (auto i : bad) list += (list.empty() ? "" : ",") + std::to_string(i);
        throw DegenerateConfiguration("not in general position: points {" + list + "} are affinely dependent",
                                      bad);
      }
    });
  }

  std::size_t dim_;
  std::vector<Vector> points_;
  std::vector<std::vector<Integer>> homogeneous_;
};

/// Red/blue labels, red playing the role of A.
class Coloring {
public:
  Coloring() = default;
  explicit Coloring(std::vector<bool> red) : red_(std::move(red)) {}

  static Coloring all_red(std::size_t n) { return Coloring(std::vector<bool>(n, true)); }

  /// Bit k of `mask` set means point k+1 is red.
  static Coloring from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<bool> red(n);
    for (std::size_t k = 0; k < n; ++k) red[k] = (mask >> k) & 1u;
    return Coloring(std::move(red));
  }

  [[nodiscard]] std::size_t size() const noexcept { return red_.size(); }
  [[nodiscard]] bool red(std::size_t k) const { return red_.at(k); }
  [[nodiscard]] int sign(std::size_t k) const { return red(k) ? 1 : -1; }
  [[nodiscard]] std::size_t red_count() const { return static_cast<std::size_t>(std::count(red_.begin(), red_.end(), true)); }

  [[nodiscard]] std::uint64_t mask() const {
    if (size() > 64) throw InvalidArgument("Coloring::mask: more than 64 points");
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < size(); ++k)
      if (red_[k]) m |= std::uint64_t{1} << k;
    return m;
  }

  [[nodiscard]] Coloring swapped() const {
    auto r = red_;
    r.flip();
    return Coloring(std::move(r));
  }

  friend bool operator==(const Coloring &, const Coloring &) = default;

private:
  std::vector<bool> red_;
};

inline Coloring parse_coloring(std::string_view text) {
  std::vector<bool> red;
  for (char c : text) {
    if (c == 'R' || c == 'r')
      red.push_back(true);
    else if (c == 'B' || c == 'b')
      red.push_back(false);
    else
      throw ParseError("coloring must consist of R and B, got '" + std::string(text) + "'");
  }
  if (red.empty()) throw ParseError("empty coloring");
  return Coloring(std::move(red));
}

inline std::string to_string(const Coloring &c) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) s += c.red(k) ? 'R' : 'B';
  return s;
}

/// Reads "n d" followed by n lines of d rationals. '#' starts a comment.
inline PointConfig read_points(std::istream &in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
  }
  if (tokens.size() < 2) throw ParseError("point file: missing 'n d' header");
  auto count = [](const std::string &s) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &pos);
    } catch (const std::exception &) {
      pos = 0;
    }
    if (pos != s.size() || s.empty() || s[0] == '-') throw ParseError("point file: bad header value '" + s + "'");
    return static_cast<std::size_t>(v);
  };
  const std::size_t n = count(tokens[0]), d = count(tokens[1]);
  if (n == 0 || d == 0) throw ParseError("point file: n and d must be positive");
  if (tokens.size() != 2 + n * d)
    throw ParseError("point file: expected " + std::to_string(n * d) + " coordinates, found " +
                     std::to_string(tokens.size() - 2));
  std::vector<Vector> pts(n, Vector(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < d; ++k) pts[i][k] = parse_rational(tokens[2 + i * d + k]);
  return PointConfig(d, std::move(pts));
}

inline PointConfig parse_points(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_points(in);
}

inline void write_points(std::ostream &out, const PointConfig &x) {
  out << x.size() << ' ' << x.dim() << '\n';
  for (const auto &p : x.points()) {
    for (std::size_t k = 0; k < p.size(); ++k) out << (k ? " " : "") << to_string(p[k]);
    out << '\n';
  }
}

inline std::string to_text(const PointConfig &x) {
  std::ostringstream out;
  write_points(out, x);
  return out.str();
}

/// Seeded random configuration with integer coordinates. Coordinates are
/// `engine() % (2*bound+1) - bound` from std::mt19937_64(seed), drawn point
/// by point; a degenerate draw is discarded and the whole configuration is
/// redrawn from the continuing stream, up to 100000 times.
inline PointConfig random_config(std::size_t n, std::size_t d, std::uint64_t seed, std::int64_t bound = 20) {
  if (bound < 1) throw InvalidArgument("random_config: bound must be positive");
  std::mt19937_64 engine(seed);
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Vector> pts(n, Vector(d));
    for (auto &p : pts)
      for (auto &x : p) x = static_cast<std::int64_t>(engine() % span) - bound;
    try {
      return PointConfig(d, std::move(pts));
    } catch (const DegenerateConfiguration &) {
    }
  }
  throw InvalidArgument("random_config: no configuration in general position found; increase bound");
}

} // namespace lomkit
