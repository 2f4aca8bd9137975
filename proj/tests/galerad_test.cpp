#include <gtest/gtest.h>

#include <random>

#include "geometry_oracles.hpp"
#include "lomkit/bounds.hpp"
#include "lomkit/galerad.hpp"

using namespace lomkit;

namespace {

PointConfig unit_square() { return parse_points("4 2\n0 0\n1 0\n0 1\n1 1\n"); }

Coloring random_coloring(std::size_t n, std::mt19937_64 &rng) {
  return Coloring::from_mask(n, rng() & ((std::uint64_t{1} << n) - 1));
}

std::vector<std::size_t> random_subset(std::size_t n, std::size_t k, std::mt19937_64 &rng) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

} // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(parse_rational("+7/2"), Rational(7, 2));
  EXPECT_EQ(to_string(Rational(-3, 9)), "-1/3");
  EXPECT_EQ(to_string(Rational(5)), "5");
  for (const char *bad : {"", "1/0", "a", "1/-2", "1.5", "--1", "2/"}) EXPECT_THROW((void)parse_rational(bad), ParseError) << bad;
}

TEST(LinearAlgebra, KernelAndDeterminants) {
  const Matrix m{{1, 2, 3}, {2, 4, 6}};
  const auto k = kernel_basis(m, 3);
  ASSERT_EQ(k.size(), 2u);
  for (const auto &v : k) EXPECT_EQ(dot(m[0], v), 0);
  EXPECT_EQ(determinant(Matrix{{2, 1}, {1, 3}}), 5);
  EXPECT_EQ(determinant(IntegerMatrix{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}), -2);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    IntegerMatrix a(4, std::vector<Integer>(4));
    Matrix b(4, Vector(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        a[i][j] = static_cast<int>(rng() % 7) - 3;
        b[i][j] = Rational(a[i][j]);
      }
    EXPECT_EQ(Rational(determinant(a)), determinant(b));
  }
}

TEST(LinearProgram, Feasibility) {
  // x + y <= 1, x >= 2 is empty; x + y = 3, x - y >= 1 is not
  EXPECT_FALSE(find_feasible_point({{{1, 1}, Relation::le, 1}, {{1, 0}, Relation::ge, 2}}, 2, true));
  const auto p = find_feasible_point({{{1, 1}, Relation::eq, 3}, {{1, -1}, Relation::ge, 1}}, 2);
  ASSERT_TRUE(p);
  EXPECT_EQ((*p)[0] + (*p)[1], 3);
  EXPECT_GE((*p)[0] - (*p)[1], 1);
  // free variables may go negative
  const auto q = find_feasible_point({{{1}, Relation::le, -5}}, 1);
  ASSERT_TRUE(q);
  EXPECT_LE((*q)[0], -5);
  EXPECT_FALSE(find_feasible_point({{{1}, Relation::le, -5}}, 1, true));
}

TEST(PointConfig, ReadWriteRoundTrip) {
  const auto x = parse_points("3 2\n# a triangle\n0 0\n1/2 0\n0 -3/4\n");
  EXPECT_EQ(x.size(), 3u);
  EXPECT_EQ(x[1][0], Rational(1, 2));
  EXPECT_EQ(parse_points(to_text(x)), x);
  EXPECT_EQ(x.homogeneous(2), (std::vector<Integer>{0, -3, 4}));
}

TEST(PointConfig, RejectsMalformedFiles) {
  EXPECT_THROW((void)parse_points(""), ParseError);
  EXPECT_THROW((void)parse_points("2 1\n0\n"), ParseError);
  EXPECT_THROW((void)parse_points("-2 1\n0\n1\n"), ParseError);
  EXPECT_THROW((void)parse_points("2 1\n0\nx\n"), ParseError);
  EXPECT_THROW((void)parse_points("1 0\n"), ParseError);
}

TEST(PointConfig, GeneralPositionNamesTheSubset) {
  try {
    (void)parse_points("4 2\n5 0\n0 0\n1 1\n2 2\n");
    FAIL() << "collinear triple accepted";
  } catch (const DegenerateConfiguration &e) {
    EXPECT_EQ(e.subset(), (std::vector<std::size_t>{2, 3, 4}));
  }
  EXPECT_THROW((void)parse_points("2 1\n3\n3\n"), DegenerateConfiguration);
  EXPECT_THROW((void)parse_points("5 3\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n0 0 1\n"), DegenerateConfiguration);
}

TEST(PointConfig, RandomConfigIsSeeded) {
  EXPECT_EQ(random_config(7, 3, 11), random_config(7, 3, 11));
  EXPECT_FALSE(random_config(7, 3, 11) == random_config(7, 3, 12));
  EXPECT_THROW((void)random_config(6, 1, 1, 2), InvalidArgument);
  const auto small = random_config(5, 2, 5, 4);
  for (const auto &p : small.points())
    for (const auto &c : p) EXPECT_LE(abs(c), 4);
}

TEST(Coloring, TextFormat) {
  const auto c = parse_coloring("RBBR");
  EXPECT_EQ(c.mask(), 0b1001u);
  EXPECT_EQ(to_string(c.swapped()), "BRRB");
  EXPECT_EQ(c.red_count(), 2u);
  EXPECT_THROW((void)parse_coloring("RXB"), ParseError);
  EXPECT_THROW((void)parse_coloring(""), ParseError);
}

TEST(Gale, UnitSquare) {
  const auto g = gale_transform(unit_square());
  ASSERT_EQ(g.basis.size(), 1u);
  const Rational s = g.vectors[0][0];
  ASSERT_NE(s, 0);
  const std::vector<Rational> expected{1, -1, -1, 1};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(g.vectors[i][0], s * expected[i]);
}

TEST(Gale, CircuitSizeHasNoZeroEntries) {
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto g = gale_transform(random_config(d + 2, d, seed));
      ASSERT_EQ(g.basis.size(), 1u);
      for (const auto &v : g.vectors) EXPECT_NE(v[0], 0);
    }
}

TEST(Gale, RelationsAndLinearGeneralPosition) {
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t n = d + 2; n <= 8; ++n) {
      const auto x = random_config(n, d, 100 * d + n);
      const auto g = gale_transform(x);
      ASSERT_EQ(g.basis.size(), n - d - 1);
      for (const auto &a : g.basis) EXPECT_TRUE(is_affine_dependence(x, a));
      EXPECT_EQ(rank(g.basis), n - d - 1);
      const std::size_t m = n - d - 1;
      detail::for_each_subset(n, m, [&](const std::vector<std::size_t> &s) {
        Matrix sub;
        for (auto i : s) sub.push_back(g.vectors[i]);
        EXPECT_NE(determinant(sub), 0);
      });
    }
  EXPECT_THROW((void)gale_transform(random_config(3, 2, 1)), InvalidArgument);
}

// Faces of conv(X) correspond to complements whose transform vectors
// have the origin in the relative interior of their hull.
TEST(Gale, FacesMatchOriginEmbracingComplements) {
  std::size_t faces = 0;
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t n = d + 2; n <= 8; ++n)
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto x = random_config(n, d, seed * 1000 + 10 * d + n, 6);
        const auto g = gale_transform(x);
        for (std::size_t k = 1; k <= d; ++k)
          detail::for_each_subset(n, k, [&](const std::vector<std::size_t> &f) {
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < n; ++i)
              if (!std::binary_search(f.begin(), f.end(), i)) rest.push_back(i);
            const bool face = oracle::is_face(x, f);
            faces += face;
            EXPECT_EQ(face, oracle::embraces_origin(g.vectors, rest)) << "n=" << n << " d=" << d;
          });
      }
  EXPECT_GT(faces, 0u);
}

TEST(AffineProjection, SignsAndRays) {
  const auto x = parse_points("1 1\n0\n");
  const auto rays = affine_projection(x, Coloring::all_red(1));
  EXPECT_EQ(rays[0].exact, (Vector{0, 1}));
  EXPECT_DOUBLE_EQ(rays[0].unit[1], 1.0);
  const auto y = random_config(5, 2, 8);
  const auto c = parse_coloring("RBBRB");
  const auto a = affine_projection(y, c), b = affine_projection(y, c.swapped());
  for (std::size_t i = 0; i < 5; ++i) {
    Vector neg = b[i].exact;
    for (auto &e : neg) e = -e;
    EXPECT_EQ(a[i].exact, neg);
  }
}

TEST(Radon, UnitSquare) {
  const auto x = unit_square();
  const std::vector<std::size_t> all{0, 1, 2, 3};
  EXPECT_TRUE(is_radon_pair(x, all, parse_coloring("RBBR")));
  EXPECT_TRUE(is_radon_pair(x, all, parse_coloring("BRRB")));
  EXPECT_FALSE(is_radon_pair(x, all, parse_coloring("RRBB")));
  EXPECT_THROW((void)is_radon_pair(x, {0, 1, 2}, parse_coloring("RBBR")), InvalidArgument);
}

TEST(Radon, AgreesWithHullIntersection) {
  std::mt19937_64 rng(2024);
  std::size_t positives = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t d = 1 + trial % 3, n = d + 2 + rng() % 4;
    const auto x = random_config(n, d, 5000 + trial, 8);
    const auto s = random_subset(n, d + 2, rng);
    const auto c = random_coloring(n, rng);
    const bool r = is_radon_pair(x, s, c);
    positives += r;
    ASSERT_EQ(r, oracle::hulls_intersect(x, s, c)) << "trial " << trial;
  }
  EXPECT_GT(positives, 20u);
}

TEST(Radon, ExactlyOnePartitionPerSubset) {
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto x = random_config(d + 2, d, 77 + d);
    std::vector<std::size_t> s(d + 2);
    for (std::size_t i = 0; i < d + 2; ++i) s[i] = i;
    std::size_t hits = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (d + 1)); ++m)
      hits += is_radon_pair(x, s, Coloring::from_mask(d + 2, 1u | (m << 1)));
    EXPECT_EQ(hits, 1u) << d;
  }
}

TEST(CountInduced, Examples) {
  const auto line = parse_points("5 1\n0\n1\n2\n3\n4\n");
  EXPECT_EQ(count_induced(line, parse_coloring("RBRBR")), 5u);
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto x = random_config(d + 2, d, d);
    EXPECT_EQ(count_induced(x, Coloring::all_red(d + 2)), 0u);
    std::vector<std::size_t> s(d + 2);
    for (std::size_t i = 0; i < d + 2; ++i) s[i] = i;
    const auto signs = radon_signs(x, s);
    std::vector<bool> red;
    for (int v : signs) red.push_back(v > 0);
    EXPECT_EQ(count_induced(x, Coloring(red)), 1u);
  }
}

TEST(CountInduced, MatchesPerSubsetSumAndSwap) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 1 + trial % 3, n = d + 3 + trial % 4;
    const auto x = random_config(n, d, 300 + trial);
    const auto c = random_coloring(n, rng);
    std::size_t direct = 0;
    detail::for_each_subset(n, d + 2, [&](const std::vector<std::size_t> &s) { direct += is_radon_pair(x, s, c); });
    EXPECT_EQ(count_induced(x, c), direct);
    EXPECT_EQ(count_induced(x, c.swapped()), direct);
  }
}

// Projective images of X, in the sign-flip representation, keep every
// induced Radon partition.
TEST(CountInduced, ProjectiveInvariance) {
  std::mt19937_64 rng(31);
  std::size_t checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + trial % 3, n = d + 3 + trial % 3;
    const auto x = random_config(n, d, 900 + trial);
    const auto c = random_coloring(n, rng);
    Vector w(d + 1);
    for (auto &e : w) e = static_cast<int>(rng() % 11) - 5;
    try {
      const auto img = projective_image(x, c, w);
      EXPECT_EQ(count_induced(img.points, img.coloring), count_induced(x, c));
      EXPECT_EQ(max_r(img.points).value, max_r(x).value);
      ++checked;
    } catch (const InvalidArgument &) {
      // hyperplane through a point or zero normal
    }
  }
  EXPECT_GT(checked, 25u);
}

TEST(MaxR, FivePointsOnALine) {
  const auto line = parse_points("5 1\n0\n1\n2\n3\n4\n");
  const auto m = max_r(line);
  EXPECT_EQ(m.value, 5u);
  EXPECT_EQ(to_string(m.witness), "RBRBR");
  EXPECT_TRUE(m.exhaustive);
  EXPECT_EQ(m.colorings_examined, 16u);
}

TEST(MaxR, CircuitSizeIsOne) {
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::uint64_t seed = 1; seed <= 5; ++seed) EXPECT_EQ(max_r(random_config(d + 2, d, seed)).value, 1u);
}

TEST(MaxR, OneMoreThanCircuitIsTwo) {
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::uint64_t seed = 1; seed <= 20; ++seed) EXPECT_EQ(max_r(random_config(d + 3, d, seed)).value, 2u);
}

TEST(MaxR, WitnessIsCanonicalAndWorkerIndependent) {
  const auto x = random_config(11, 2, 4);
  const auto a = max_r(x, 1), b = max_r(x, 3);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_TRUE(a.witness.red(0));
  EXPECT_EQ(count_induced(x, a.witness), a.value);
  EXPECT_THROW((void)max_r(random_config(23, 1, 1)), InvalidArgument);
}

TEST(MaxR, SampledIsALowerBound) {
  const auto x = random_config(10, 2, 6);
  const auto s = max_r_sampled(x, 200, 1);
  EXPECT_FALSE(s.exhaustive);
  EXPECT_LE(s.value, max_r(x).value);
  EXPECT_EQ(count_induced(x, s.witness), s.value);
}

// r(X) equals the largest facet count of a projective image of the dual
// configuration in dimension n-d-2.
TEST(Duality, LineConfigurationsMatchDualFacets) {
  for (std::size_t n = 4; n <= 6; ++n)
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const auto x = random_config(n, 1, 40 * n + seed);
      const auto r = max_r(x).value;
      EXPECT_EQ(r, oracle::dual_facet_maximum(x)) << "n=" << n;
      const auto h = hd1_bound(n, n - 3);
      ASSERT_EQ(h.lower, h.upper);
      EXPECT_EQ(r, *h.upper);
    }
}

TEST(Duality, PlaneAndSpaceConfigurations) {
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{6, 2}, {7, 2}, {7, 3}})
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      const auto x = random_config(n, d, seed * 17 + n);
      EXPECT_EQ(max_r(x).value, oracle::dual_facet_maximum(x)) << "n=" << n << " d=" << d;
    }
}

TEST(Lift, SingleRedPointAndEqualCounts) {
  std::size_t lifted = 0;
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{6, 2}, {7, 3}, {8, 3}})
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto x = random_config(n, d, seed, 10);
      const auto m = max_r(x);
      try {
        const auto l = lift_unbalanced(x, m.witness);
        ++lifted;
        EXPECT_EQ(l.coloring.red_count(), 1u);
        EXPECT_TRUE(l.coloring.red(l.separated));
        EXPECT_EQ(l.count_before, m.value);
        EXPECT_EQ(l.count_after, m.value);
        EXPECT_EQ(count_induced(l.points, l.coloring), m.value);
        EXPECT_EQ(max_r(l.points).value, m.value);
      } catch (const NoSeparablePoint &) {
      }
    }
  EXPECT_GT(lifted, 5u);
}

TEST(Lift, FailsWhenDualIsConvex) {
  // six points on a line: the best dual is a simplicial 3-polytope with all
  // six points as vertices, so nothing can be separated
  const auto x = parse_points("6 1\n0\n1\n3\n4\n7\n9\n");
  EXPECT_THROW((void)lift_unbalanced(x, max_r(x).witness), NoSeparablePoint);
}
