#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "proxima/errors.hpp"
#include "proxima/space.hpp"

using namespace proxima;
using fixtures::plane;
using fixtures::pt;

TEST(Space, RejectsBadParameters) {
  EXPECT_THROW(Space(0, 2.0), UsageError);
  EXPECT_THROW(Space(2, 1.5), UsageError);
  EXPECT_THROW(Space(2, INFINITY), UsageError);
  EXPECT_NO_THROW(Space(3, 4.0));
}

TEST(Point, ValidatesCoordinates) {
  EXPECT_THROW(Point(plane(), {1.0}), UsageError);
  EXPECT_THROW(Point(plane(), {1.0, NAN}), UsageError);
}

TEST(Distance, ExampleValues) {
  EXPECT_DOUBLE_EQ(distance(pt(-1, -0.5), pt(1, -0.5)), 2.0);
  EXPECT_EQ(distance(pt(0.3, -7), pt(0.3, -7)), 0.0);
  EXPECT_NEAR(distance(pt(-1, -0.5), pt(1, 0.25)), std::sqrt(4.5625), 1e-15);
  EXPECT_NEAR(distance(pt(-1, -0.5), pt(1, 0.25)), 2.136001, 1e-6);
}

TEST(Distance, GeneralExponent) {
  const Space l4(2, 4.0);
  // ‖(3, 4)‖₄ = (81 + 256)^{1/4}
  EXPECT_NEAR(distance(Point(l4, {0, 0}), Point(l4, {3, 4})), std::pow(337.0, 0.25), 1e-12);
}

TEST(Distance, MismatchedSpacesAreUsageErrors) {
  const Space l4(2, 4.0);
  EXPECT_THROW(distance(pt(0, 0), Point(l4, {0, 0})), UsageError);
  EXPECT_THROW(distance(pt(0, 0), Point(Space(3, 2.0), {0, 0, 0})), UsageError);
}

TEST(Distance, MetricPropertiesOnRandomPoints) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10, 10);
  for (double p : {2.0, 3.0, 6.5}) {
    const Space s(3, p);
    auto rnd = [&] { return Point(s, {u(rng), u(rng), u(rng)}); };
    for (int i = 0; i < 2000; ++i) {
      const Point a = rnd(), b = rnd(), c = rnd();
      EXPECT_EQ(distance(a, b), distance(b, a));
      EXPECT_LE(distance(a, c), distance(a, b) + distance(b, c) + 1e-12);
      const Eigen::VectorXd shift = rnd().coords();
      const double moved = distance(Point(s, a.coords() + shift), Point(s, b.coords() + shift));
      EXPECT_NEAR(moved, distance(a, b), 1e-12 * std::max(1.0, distance(a, b)));
    }
  }
}

TEST(Geodesic, Examples) {
  EXPECT_EQ(geodesic_point(pt(-1, -0.5), pt(1, -0.5), 0.5), pt(0, -0.5));
  EXPECT_EQ(geodesic_point(pt(3, 4), pt(-2, 9), 0.0), pt(3, 4));
  EXPECT_EQ(geodesic_point(pt(3, 4), pt(-2, 9), 1.0), pt(-2, 9));
  const Point q = geodesic_point(pt(0, 0), pt(4, 0), 0.25);
  EXPECT_EQ(q, pt(1, 0));
  EXPECT_DOUBLE_EQ(distance(pt(0, 0), q), 0.25 * 4.0);
}

TEST(Geodesic, LambdaOutOfRange) {
  EXPECT_THROW(geodesic_point(pt(0, 0), pt(1, 1), -0.1), UsageError);
  EXPECT_THROW(geodesic_point(pt(0, 0), pt(1, 1), 1.5), UsageError);
}

TEST(Geodesic, SplitsDistanceForAnyExponent) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5, 5), lam(0, 1);
  for (double p : {2.0, 2.5, 5.0}) {
    const Space s(2, p);
    for (int i = 0; i < 2000; ++i) {
      const Point a(s, {u(rng), u(rng)}), b(s, {u(rng), u(rng)});
      const double l = lam(rng);
      const Point m = geodesic_point(a, b, l);
      const double d = distance(a, b);
      EXPECT_NEAR(distance(a, m) + distance(m, b), d, 1e-10);
      EXPECT_NEAR(distance(a, m), l * d, 1e-12 * std::max(1.0, d));
    }
  }
}

TEST(UniformConvexity, AntipodalMidpointIsTight) {
  EXPECT_TRUE(uniform_convexity_check(pt(1, 0), pt(-1, 0), pt(0, 0), 1.0, 2.0, hilbert_modulus));
}

TEST(UniformConvexity, DegenerateSpreadUsesZeroModulus) {
  EXPECT_TRUE(uniform_convexity_check(pt(1, 0), pt(1, 0), pt(0, 0), 1.0, 0.0, hilbert_modulus));
}

TEST(UniformConvexity, PreconditionsAreNotVerdicts) {
  // σ1 farther than M from σ3.
  EXPECT_THROW(
      uniform_convexity_check(pt(2, 0), pt(-1, 0), pt(0, 0), 1.0, 1.0, hilbert_modulus),
      PreconditionError);
  // σ1, σ2 closer than m.
  EXPECT_THROW(
      uniform_convexity_check(pt(1, 0), pt(0.9, 0), pt(0, 0), 1.0, 1.0, hilbert_modulus),
      PreconditionError);
  EXPECT_THROW(
      uniform_convexity_check(pt(1, 0), pt(-1, 0), pt(0, 0), 1.0, 2.5, hilbert_modulus),
      PreconditionError);
}

TEST(UniformConvexity, TooStrongModulusIsReportedFalse) {
  // Υ ≡ 1 claims every midpoint sits at σ3, false for (1,0),(0,1) around 0.
  auto greedy = [](double) { return 1.0; };
  EXPECT_FALSE(uniform_convexity_check(pt(1, 0), pt(0, 1), pt(0, 0), 1.0, 1.0, greedy));
}

namespace {

// Direct evaluation of both sides, independent of the checker.
bool hilbert_inequality_holds(const Eigen::Vector2d& s1, const Eigen::Vector2d& s2,
                              const Eigen::Vector2d& s3, double M, double m) {
  const double lhs = (0.5 * (s1 + s2) - s3).norm();
  const double e = m / M;
  const double rhs = std::sqrt(1.0 - e * e / 4.0) * M;
  return lhs <= rhs + 1e-12 * M;
}

}  // namespace

TEST(UniformConvexity, HilbertModulusNeverFailsOnAdmissibleTriples) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-3, 3), f(0, 1);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const Point s1 = pt(u(rng), u(rng)), s2 = pt(u(rng), u(rng)), s3 = pt(u(rng), u(rng));
    const double M = std::max(distance(s1, s3), distance(s2, s3)) * (1.0 + f(rng));
    if (M == 0.0) continue;
    const double m = distance(s1, s2) * f(rng);
    ASSERT_TRUE(hilbert_inequality_holds(s1.coords(), s2.coords(), s3.coords(), M, m));
    ASSERT_TRUE(uniform_convexity_check(s1, s2, s3, M, m, hilbert_modulus)) << i;
    ++checked;
  }
  EXPECT_EQ(checked, 10000);
}
