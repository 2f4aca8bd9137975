#pragma once

// Minimal Radon partitions induced by red/blue colorings: the per-subset
// test, counting, exhaustive maximization of r(X), projective images and
// the unbalanced lift.

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lomkit/geometry/gale.hpp"
#include "lomkit/geometry/lp.hpp"
#include "lomkit/parallel.hpp"

namespace lomkit {

/// Signs (+1/-1) of the unique affine dependence of the d+2 points `s`,
/// scaled so the first entry is positive.
inline std::vector<int> radon_signs(const PointConfig &x, const std::vector<std::size_t> &s) {
  const std::size_t d = x.dim();
  if (s.size() != d + 2) throw InvalidArgument("radon_signs: subset must have d+2 points");
  for (auto i : s)
    if (i >= x.size()) throw InvalidArgument("radon_signs: index out of range");
  // alpha_i = (-1)^i det of the homogeneous vectors without s[i]
  std::vector<int> out(d + 2);
  for (std::size_t i = 0; i < d + 2; ++i) {
    IntegerMatrix m;
    for (std::size_t k = 0; k < d + 2; ++k)
      if (k != i) m.push_back(x.homogeneous(s[k]));
    const int sg = sign(determinant(std::move(m))) * (i % 2 == 0 ? 1 : -1);
    if (sg == 0) throw DegenerateConfiguration("radon_signs: subset not in general position", detail::one_based(s));
    out[i] = sg;
  }
  if (out[0] < 0)
    for (auto &v : out) v = -v;
  return out;
}

/// Whether the coloring restricted to `s` is the Radon partition of s, i.e.
/// conv(red in s) meets conv(blue in s).
inline bool is_radon_pair(const PointConfig &x, const std::vector<std::size_t> &s, const Coloring &c) {
  if (c.size() != x.size()) throw InvalidArgument("is_radon_pair: coloring length differs from n");
  const auto signs = radon_signs(x, s);
  const bool same = c.red(s[0]);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (c.red(s[i]) != (same == (signs[i] > 0))) return false;
  return true;
}

/// Every (d+2)-subset of X as a bitmask together with the positive class of
/// its Radon partition. Requires n <= 64.
class RadonTable {
public:
  explicit RadonTable(const PointConfig &x) : n_(x.size()) {
    if (x.size() > 64) throw InvalidArgument("RadonTable: at most 64 points");
    if (x.size() < x.dim() + 2) throw InvalidArgument("RadonTable: needs n >= d+2");
    detail::for_each_subset(x.size(), x.dim() + 2, [&](const std::vector<std::size_t> &s) {
      const auto signs = radon_signs(x, s);
      std::uint64_t all = 0, pos = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        all |= std::uint64_t{1} << s[i];
        if (signs[i] > 0) pos |= std::uint64_t{1} << s[i];
      }
      subsets_.push_back(all);
      positive_.push_back(pos);
    });
  }

  [[nodiscard]] std::size_t size() const noexcept { return subsets_.size(); }
  [[nodiscard]] std::size_t points() const noexcept { return n_; }

  /// Number of subsets whose Radon partition the red mask induces.
  [[nodiscard]] std::size_t count(std::uint64_t red) const {
    std::size_t total = 0;
    for (std::size_t k = 0; k < subsets_.size(); ++k) {
      const std::uint64_t r = red & subsets_[k];
      total += (r == positive_[k]) || (r == (subsets_[k] ^ positive_[k]));
    }
    return total;
  }

private:
  std::size_t n_;
  std::vector<std::uint64_t> subsets_;
  std::vector<std::uint64_t> positive_;
};

/// r_X(A, B): the number of (d+2)-subsets whose Radon partition the
/// coloring induces.
inline std::size_t count_induced(const PointConfig &x, const Coloring &c) {
  if (c.size() != x.size()) throw InvalidArgument("count_induced: coloring length differs from n");
  return RadonTable(x).count(c.mask());
}

struct MaxRadon {
  std::size_t value = 0;
  Coloring witness;
  /// False for the sampled mode, whose value is only a lower bound.
  bool exhaustive = true;
  std::uint64_t colorings_examined = 0;
};

inline constexpr std::size_t max_r_exhaustive_limit = 22;

namespace detail {

/// Orders masks like their R/B strings with 'B' < 'R'.
inline bool coloring_less(std::uint64_t a, std::uint64_t b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const bool ra = (a >> k) & 1u, rb = (b >> k) & 1u;
    if (ra != rb) return !ra;
  }
  return false;
}

} // namespace detail

/// r(X) by exhaustive search over the 2^(n-1) colorings with point 1 red.
/// The witness is the lexicographically least maximizer (R/B string,
/// 'B' < 'R').
inline MaxRadon max_r(const PointConfig &x, std::size_t workers = 1) {
  const std::size_t n = x.size();
  if (n > max_r_exhaustive_limit)
    throw InvalidArgument("max_r: exhaustive search needs n <= " + std::to_string(max_r_exhaustive_limit) +
                          "; use max_r_sampled");
  const RadonTable table(x);
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  const std::uint64_t chunk = 1024;
  const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  std::vector<std::pair<std::size_t, std::uint64_t>> best(chunks, {0, 1});
  parallel_for(chunks, workers, [&](std::size_t q) {
    auto &b = best[q];
    bool have = false;
    for (std::uint64_t k = q * chunk; k < std::min(total, (q + 1) * chunk); ++k) {
      const std::uint64_t mask = 1u | (k << 1);
      const std::size_t v = table.count(mask);
      if (!have || v > b.first || (v == b.first && detail::coloring_less(mask, b.second, n))) {
        b = {v, mask};
        have = true;
      }
    }
  });
  auto top = best[0];
  for (const auto &b : best)
    if (b.first > top.first || (b.first == top.first && detail::coloring_less(b.second, top.second, n))) top = b;
  return {top.first, Coloring::from_mask(n, top.second), true, total};
}

/// Lower bound on r(X) from `samples` random colorings (point 1 red),
/// drawn from std::mt19937_64(seed).
inline MaxRadon max_r_sampled(const PointConfig &x, std::uint64_t samples, std::uint64_t seed) {
  const std::size_t n = x.size();
  if (n > 64) throw InvalidArgument("max_r_sampled: at most 64 points");
  const RadonTable table(x);
  std::mt19937_64 engine(seed);
  const std::uint64_t keep = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::pair<std::size_t, std::uint64_t> top{table.count(1), 1};
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::uint64_t mask = (engine() & keep) | 1u;
    const std::size_t v = table.count(mask);
    if (v > top.first || (v == top.first && detail::coloring_less(mask, top.second, n))) top = {v, mask};
  }
  return {top.first, Coloring::from_mask(n, top.second), false, samples + 1};
}

struct ProjectiveImage {
  PointConfig points;
  Coloring coloring;
};

/// Image of X under the projective map that sends the linear hyperplane
/// w.z = 0 of R^{d+1} to infinity, applied to the signed rays c_i (x_i; 1).
/// Point i goes to the intersection of its ray's line with w.z = 1 and is
/// red exactly when w.(c_i (x_i; 1)) > 0. Induced Radon partitions are
/// preserved subset by subset.
inline ProjectiveImage projective_image(const PointConfig &x, const Coloring &c, const Vector &w) {
  const std::size_t d = x.dim();
  if (w.size() != d + 1) throw InvalidArgument("projective_image: normal must have length d+1");
  if (c.size() != x.size()) throw InvalidArgument("projective_image: coloring length differs from n");
  std::size_t pivot = 0;
  while (pivot <= d && w[pivot] == 0) ++pivot;
  if (pivot > d) throw InvalidArgument("projective_image: zero normal");
  std::vector<Vector> pts;
  std::vector<bool> red;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Vector v = x[i];
    v.push_back(1);
    if (!c.red(i))
      for (auto &e : v) e = -e;
    const Rational h = dot(w, v);
    if (h == 0) throw InvalidArgument("projective_image: hyperplane passes through point " + std::to_string(i + 1));
    Vector y;
    for (std::size_t k = 0; k <= d; ++k)
      if (k != pivot) y.push_back(v[k] / h);
    pts.push_back(std::move(y));
    red.push_back(h > 0);
  }
  return {PointConfig(d, std::move(pts)), Coloring(std::move(red))};
}

struct Lift {
  PointConfig points;
  /// Exactly one red point.
  Coloring coloring;
  /// 0-based index of the red point.
  std::size_t separated = 0;
  /// Normal of the separating hyperplane in R^{d+1}.
  Vector normal;
  std::size_t count_before = 0;
  std::size_t count_after = 0;
};

/// Normal w with w.v_j >= 1 and w.v_i <= -1 otherwise, if one exists.
inline std::optional<Vector> separating_normal(const std::vector<Ray> &rays, std::size_t j) {
  const std::size_t dim = rays.at(0).exact.size();
  std::vector<LinearConstraint> cons;
  for (std::size_t i = 0; i < rays.size(); ++i)
    cons.push_back({rays[i].exact, i == j ? Relation::ge : Relation::le, i == j ? Rational(1) : Rational(-1)});
  return find_feasible_point(cons, dim);
}

/// Re-embeds X so that the coloring has a single red point while every
/// induced Radon partition survives. Uses the first point (by index) of the
/// signed projection that some hyperplane through the origin separates from
/// the others; throws NoSeparablePoint when there is none.
inline Lift lift_unbalanced(const PointConfig &x, const Coloring &c) {
  const auto rays = affine_projection(x, c);
  for (std::size_t j = 0; j < x.size(); ++j) {
    auto w = separating_normal(rays, j);
    if (!w) continue;
    auto img = projective_image(x, c, *w);
    Lift out{std::move(img.points), std::move(img.coloring), j, std::move(*w), 0, 0};
    out.count_before = count_induced(x, c);
    out.count_after = count_induced(out.points, out.coloring);
    return out;
  }
  throw NoSeparablePoint("lift_unbalanced: no point of the signed projection is separable from the rest");
}

} // namespace lomkit
