#pragma once

// Closed-form bounds: the piecewise tables for H_0(n,d) and H_{d-1}(n,d),
// facet counts of cyclic and stacked polytopes, the McMullen-type bounds
// nu(d), nu(d,k), and the table for r(d,n), the minimum over n-point sets
// in R^d of the largest number of minimal Radon partitions induced by a
// red/blue coloring.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lomkit/errors.hpp"

namespace lomkit {

enum class BoundKind { exact, upper, lower, range, open };

inline std::string_view to_string(BoundKind k) {
  switch (k) {
  case BoundKind::exact: return "exact";
  case BoundKind::upper: return "upperBound";
  case BoundKind::lower: return "lowerBound";
  case BoundKind::range: return "range";
  case BoundKind::open: return "open";
  }
  return "?";
}

struct BoundValue {
  BoundKind kind = BoundKind::open;
  std::optional<std::uint64_t> lower;
  std::optional<std::uint64_t> upper;
  std::string clause;
  /// Set by r_bound when direct substitution disagrees with the table.
  std::optional<std::string> note;

  static BoundValue exact(std::uint64_t v, std::string clause) {
    return {BoundKind::exact, v, v, std::move(clause), std::nullopt};
  }
  static BoundValue at_most(std::uint64_t v, std::string clause) {
    return {BoundKind::upper, std::nullopt, v, std::move(clause), std::nullopt};
  }
  static BoundValue at_least(std::uint64_t v, std::string clause) {
    return {BoundKind::lower, v, std::nullopt, std::move(clause), std::nullopt};
  }
  static BoundValue between(std::uint64_t lo, std::uint64_t hi, std::string clause) {
    if (lo > hi) throw InvalidArgument("BoundValue: range with lower > upper");
    return {BoundKind::range, lo, hi, std::move(clause), std::nullopt};
  }
  static BoundValue none(std::string clause = "no clause") {
    return {BoundKind::open, std::nullopt, std::nullopt, std::move(clause), std::nullopt};
  }

  friend bool operator==(const BoundValue &, const BoundValue &) = default;
};

inline std::string to_text(const BoundValue &b) {
  std::string v;
  switch (b.kind) {
  case BoundKind::exact: v = "= " + std::to_string(*b.lower); break;
  case BoundKind::upper: v = "<= " + std::to_string(*b.upper); break;
  case BoundKind::lower: v = ">= " + std::to_string(*b.lower); break;
  case BoundKind::range: v = std::to_string(*b.lower) + ".." + std::to_string(*b.upper); break;
  case BoundKind::open: v = "open"; break;
  }
  return v + " [" + b.clause + "]";
}

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ typedef unsigned __int128 wide;
  wide c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return static_cast<std::uint64_t>(c);
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

} // namespace detail

/// Number of facets of the cyclic d-polytope with n vertices:
/// n/(n-m) C(n-m, m) for d = 2m, and 2 C(n-m-1, m) for d = 2m+1.
inline std::uint64_t cyclic_facets(std::uint64_t n, std::uint64_t d) {
  if (d < 1 || n < d + 1) throw InvalidArgument("cyclic_facets: needs n >= d+1 >= 2");
  const std::uint64_t m = d / 2;
  if (d % 2 == 0) return n * detail::binomial(n - m, m) / (n - m);
  return 2 * detail::binomial(n - m - 1, m);
}

/// Number of facets of a stacked d-polytope with n vertices.
inline std::uint64_t stacked_facets(std::uint64_t n, std::uint64_t d) {
  if (d < 2 || n < d + 1) throw InvalidArgument("stacked_facets: needs d >= 2 and n >= d+1");
  return n * (d - 1) - (d + 1) * (d - 2);
}

/// Larman's lower bound and the upper bound for nu(d):
/// 2d+1 <= nu(d) < 2d + ceil((d+1)/2).
inline BoundValue mcmullen_bound(std::uint64_t d) {
  if (d < 1) throw InvalidArgument("mcmullen_bound: needs d >= 1");
  return BoundValue::between(2 * d + 1, 2 * d + detail::ceil_div(d + 1, 2) - 1,
                             "2d+1 <= nu(d) < 2d+ceil((d+1)/2)");
}

/// d + ceil(d/k) + 1 <= nu(d,k) < 2d-k+1 for 2 <= k <= floor(d/2).
inline BoundValue neighbourly_bound(std::uint64_t d, std::uint64_t k) {
  if (k < 2 || k > d / 2) throw InvalidArgument("neighbourly_bound: needs 2 <= k <= floor(d/2)");
  return BoundValue::between(d + detail::ceil_div(d, k) + 1, 2 * d - k,
                             "d+ceil(d/k)+1 <= nu(d,k) < 2d-k+1");
}

namespace detail {

/// Shift s such that some d >= 4 clause bounds the vertex count by n - s,
/// choosing the largest applicable shift. 0 when no clause applies.
struct Shift {
  std::uint64_t amount = 0;
  std::string clause;
};

inline Shift high_dimension_shift(std::uint64_t n, std::uint64_t d) {
  Shift best;
  if (d < 4) return best;
  const std::uint64_t nu_upper = 2 * d + ceil_div(d + 1, 2);
  if (n >= nu_upper) best = {1, "d>=4, n>=2d+ceil((d+1)/2)"};
  if (n >= nu_upper + 1) best = {2, "d>=4, n>=2d+ceil((d+1)/2)+1"};
  if (n >= 2 * d + 3 + (d - 2)) {
    const std::uint64_t l = (n - 2 * d - 3) / (d - 2);
    if (l + 2 > best.amount)
      best = {l + 2, "d>=4, 2d+3+l(d-2) <= n < 2d+3+(l+1)(d-2), l=" + std::to_string(l)};
  }
  return best;
}

} // namespace detail

/// Largest number of vertices every n-point set in general position in R^d
/// reaches under permissible projective transformations. Clauses for
/// d = 1, 2, 3 and n <= 2d+1 are taken in order; among the d >= 4 clauses
/// the tightest applies.
inline BoundValue h0_bound(std::uint64_t n, std::uint64_t d) {
  if (n < 1 || d < 1) throw InvalidArgument("h0_bound: needs n >= 1 and d >= 1");
  if (d == 1 && n >= 2) return BoundValue::exact(2, "d=1, n>=2");
  if (d == 2 && n >= 5) return BoundValue::exact(5, "d=2, n>=5");
  if (d == 3 && n >= 7) return BoundValue::at_most(7, "d=3, n>=7");
  if (d >= 2 && n <= 2 * d + 1) return BoundValue::exact(n, "d>=2, n<=2d+1");
  const auto shift = detail::high_dimension_shift(n, d);
  if (shift.amount > 0) return BoundValue::at_most(n - shift.amount, shift.clause);
  return BoundValue::none();
}

/// Largest facet count every n-point set in general position in R^d
/// reaches under permissible projective transformations. Upper clauses
/// mirror h0_bound with cyclic facet counts; the stacked lower bound is
/// added where n <= 2d+1.
inline BoundValue hd1_bound(std::uint64_t n, std::uint64_t d) {
  if (n < 1 || d < 1) throw InvalidArgument("hd1_bound: needs n >= 1 and d >= 1");
  if (d == 1 && n >= 2) return BoundValue::exact(2, "d=1, n>=2");
  if (d == 2 && n >= 5) return BoundValue::exact(5, "d=2, n>=5");
  const bool small = d >= 2 && n <= 2 * d + 1 && n >= d + 1;
  if (d == 3 && n >= 7) {
    if (small)
      return BoundValue::between(stacked_facets(n, d), 10, "d=3, n>=7; lower: d>=2, n<=2d+1");
    return BoundValue::at_most(10, "d=3, n>=7");
  }
  if (small)
    return BoundValue::between(stacked_facets(n, d), cyclic_facets(n, d), "d>=2, n<=2d+1");
  const auto shift = detail::high_dimension_shift(n, d);
  if (shift.amount > 0 && n - shift.amount >= d + 1)
    return BoundValue::at_most(cyclic_facets(n - shift.amount, d), shift.clause);
  return BoundValue::none();
}

/// Bounds on H_{d-1}(n,d) implied by the H_0 bounds through stacked and
/// cyclic facet counts: f(P_d(H_0)) <= H_{d-1} <= f(C_d(H_0)).
inline BoundValue hd1_sandwich(std::uint64_t n, std::uint64_t d) {
  const BoundValue h0 = h0_bound(n, d);
  std::optional<std::uint64_t> lo, hi;
  if (h0.lower && d >= 2 && *h0.lower >= d + 1) lo = stacked_facets(*h0.lower, d);
  if (h0.upper && *h0.upper >= d + 1) hi = cyclic_facets(*h0.upper, d);
  const std::string clause = "through H_0: " + h0.clause;
  if (lo && hi) return *lo == *hi ? BoundValue::exact(*lo, clause) : BoundValue::between(*lo, *hi, clause);
  if (hi) return BoundValue::at_most(*hi, clause);
  if (lo) return BoundValue::at_least(*lo, clause);
  return BoundValue::none(clause);
}

/// The r(d,n) table as printed, with d' = n-d-2 the dimension of the dual
/// configuration. Shift rows are guarded exactly as printed and the
/// tightest applicable one is used. When hd1_bound(n, d') gives a
/// different upper bound, `note` describes it.
inline BoundValue r_bound(std::uint64_t d, std::uint64_t n) {
  if (d < 1) throw InvalidArgument("r_bound: needs d >= 1");
  if (n < d + 2) throw InvalidArgument("r_bound: needs n >= d+2");
  const std::uint64_t dd = n - d - 2;
  BoundValue out = BoundValue::none();
  if (n == d + 2)
    out = BoundValue::exact(1, "n=d+2");
  else if (n == d + 3)
    out = BoundValue::exact(2, "n=d+3");
  else if (n == d + 4)
    out = BoundValue::exact(5, "n=d+4");
  else if (n == d + 5)
    out = BoundValue::between(8, 10, "n=d+5");
  else if (n >= 2 * d + 3)
    out = BoundValue::at_most(cyclic_facets(n, dd), "n>=2d+3");
  else {
    std::uint64_t shift = 0;
    std::string clause;
    if (3 * n <= 5 * d + 8) {
      shift = 1;
      clause = "n<=(5d+8)/3";
    }
    if (3 * n <= 5 * d + 6) {
      shift = 2;
      clause = "n<=(5d+6)/3";
    }
    // d+4+(d-3)/(l+2) < n <= d+4+(d-1)/(l+1) with x = n-d-4 >= 2 here
    const auto x = static_cast<long long>(n - d - 4), sd = static_cast<long long>(d);
    for (long long l = 1; x * (l + 1) <= sd - 1; ++l) {
      if (x * (l + 2) > sd - 3 && static_cast<std::uint64_t>(l) + 2 > shift) {
        shift = static_cast<std::uint64_t>(l) + 2;
        clause = "d+4+(d-3)/(l+2) < n <= d+4+(d-1)/(l+1), l=" + std::to_string(l);
      }
    }
    if (shift > 0 && n - shift >= dd + 1)
      out = BoundValue::at_most(cyclic_facets(n - shift, dd), clause);
  }

  if (dd >= 1) {
    const BoundValue direct = hd1_bound(n, dd);
    if (direct.upper != out.upper) out.note = "substituting d'=n-d-2 gives " + to_text(direct);
  }
  return out;
}

} // namespace lomkit
