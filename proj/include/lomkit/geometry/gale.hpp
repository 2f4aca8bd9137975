#pragma once

// Gale transforms and the signed affine projection onto the unit sphere.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lomkit/geometry/point_config.hpp"

namespace lomkit {

struct GaleTransform {
  /// n vectors of length n-d-1; row k of the dependence basis transposed.
  std::vector<Vector> vectors;
  /// The chosen basis of affine dependences, each of length n.
  std::vector<Vector> basis;
};

/// Whether alpha is an affine dependence of X: sum alpha_i x_i = 0 and
/// sum alpha_i = 0.
inline bool is_affine_dependence(const PointConfig &x, const Vector &alpha) {
  if (alpha.size() != x.size()) return false;
  Vector acc(x.dim() + 1, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t k = 0; k < x.dim(); ++k) acc[k] += alpha[i] * x[i][k];
    acc[x.dim()] += alpha[i];
  }
  return std::all_of(acc.begin(), acc.end(), [](const Rational &v) { return v == 0; });
}

/// Basis of the affine dependences by exact elimination, transposed into
/// n vectors. The basis is checked against the defining relations.
inline GaleTransform gale_transform(const PointConfig &x) {
  const std::size_t n = x.size(), d = x.dim();
  if (n < d + 2) throw InvalidArgument("gale_transform: needs n >= d+2");
  Matrix rows(d + 1, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) rows[k][i] = x[i][k];
    rows[d][i] = 1;
  }
  if (rank(rows) != d + 1) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
    throw DegenerateConfiguration("gale_transform: points do not affinely span R^d", all);
  }
  GaleTransform g;
  g.basis = kernel_basis(rows, n);
  for (const auto &a : g.basis)
    if (!is_affine_dependence(x, a)) throw std::logic_error("gale_transform: basis fails the relations");
  g.vectors.assign(n, Vector(g.basis.size()));
  for (std::size_t k = 0; k < g.basis.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) g.vectors[i][k] = g.basis[k][i];
  return g;
}

inline std::vector<double> normalized(const Vector &v) {
  std::vector<double> out(v.size());
  double norm = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out[k] = v[k].convert_to<double>();
    norm += out[k] * out[k];
  }
  if (norm == 0) return out;
  norm = std::sqrt(norm);
  for (auto &c : out) c /= norm;
  return out;
}

/// The Gale diagram: transform vectors scaled to unit length, zero vectors
/// kept as zero. For display only.
inline std::vector<std::vector<double>> gale_diagram(const GaleTransform &g) {
  std::vector<std::vector<double>> out;
  for (const auto &v : g.vectors) out.push_back(normalized(v));
  return out;
}

struct Ray {
  /// I(x) (x; 1), the exact representative of the ray.
  Vector exact;
  std::vector<double> unit;
};

/// Appends coordinate 1 to each point and negates the blue ones.
inline std::vector<Ray> affine_projection(const PointConfig &x, const Coloring &c) {
  if (c.size() != x.size()) throw InvalidArgument("affine_projection: coloring length differs from n");
  std::vector<Ray> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Vector v = x[i];
    v.push_back(1);
    if (!c.red(i))
      for (auto &e : v) e = -e;
    auto unit = normalized(v);
    out.push_back({std::move(v), std::move(unit)});
  }
  return out;
}

} // namespace lomkit
