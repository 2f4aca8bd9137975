#pragma once

// Exact linear feasibility by the two-phase simplex method's first phase,
// with Bland's rule so it always terminates.

#include <cstddef>
#include <optional>
#include <vector>

#include "lomkit/geometry/linalg.hpp"

namespace lomkit {

enum class Relation { le, eq, ge };

struct LinearConstraint {
  Vector coeffs;
  Relation rel = Relation::le;
  Rational rhs = 0;
};

/// A point satisfying every constraint, or nullopt if none exists. With
/// `nonnegative` all variables are restricted to x >= 0, otherwise free.
inline std::optional<Vector> find_feasible_point(const std::vector<LinearConstraint> &cons, std::size_t vars,
                                                 bool nonnegative = false) {
  const std::size_t m = cons.size();
  const std::size_t split = nonnegative ? vars : 2 * vars;
  std::size_t slacks = 0;
  for (const auto &c : cons) {
    if (c.coeffs.size() != vars) throw InvalidArgument("find_feasible_point: coefficient length mismatch");
    if (c.rel != Relation::eq) ++slacks;
  }
  const std::size_t width = split + slacks + m; // then rhs
  Matrix t(m, Vector(width + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  std::size_t slack = split;
  for (std::size_t i = 0; i < m; ++i) {
    const auto &c = cons[i];
    for (std::size_t k = 0; k < vars; ++k) {
      t[i][k] = c.coeffs[k];
      if (!nonnegative) t[i][vars + k] = -c.coeffs[k];
    }
    if (c.rel == Relation::le) t[i][slack++] = 1;
    if (c.rel == Relation::ge) t[i][slack++] = -1;
    t[i][width] = c.rhs;
    if (t[i][width] < 0)
      for (auto &x : t[i]) x = -x;
    t[i][split + slacks + i] = 1;
    basis[i] = split + slacks + i;
  }

  const std::size_t real = split + slacks;
  Vector cost(width + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= width; ++j)
      if (j < real || j == width) cost[j] -= t[i][j];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][width] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break; // unbounded direction; cannot happen for phase one
    const Rational inv = 1 / t[leave][enter];
    for (auto &x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j <= width; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[width] != 0) return std::nullopt;

  Vector z(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i) z[basis[i]] = t[i][width];
  Vector x(vars);
  for (std::size_t k = 0; k < vars; ++k) x[k] = nonnegative ? z[k] : z[k] - z[vars + k];
  return x;
}

} // namespace lomkit
