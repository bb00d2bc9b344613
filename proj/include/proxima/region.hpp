#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "proxima/space.hpp"

namespace proxima {

inline constexpr double kMembershipTol = 1e-9;

struct FinitePointSet {
  std::vector<Point> points;
};

struct Segment {
  Point a;
  Point b;
};

/// Axis-aligned box. Bounds may be infinite, which turns the box into a
/// strip or slab; such a region can be tested for membership but not sampled.
struct Box {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
};

/// One of the two sets Ω, Δ.
class Region {
 public:
  using Shape = std::variant<FinitePointSet, Segment, Box>;

  static Region segment(Point a, Point b, double membership_tol = kMembershipTol);
  static Region box(const Space& space, Eigen::VectorXd lower,
                    Eigen::VectorXd upper, double membership_tol = kMembershipTol);
  /// Convexity of a point set is never inferred; pass `declared_convex` only
  /// when it has been established elsewhere (a singleton, say).
  static Region points(std::vector<Point> pts, bool declared_convex = false,
                       double membership_tol = kMembershipTol);

  const Space& space() const { return space_; }
  const Shape& shape() const { return shape_; }
  double membership_tol() const { return membership_tol_; }
  bool convex() const { return convex_; }
  bool bounded() const;
  std::string kind() const;

  /// Distance from x to the region (p-norm).
  double distance_to(const Point& x) const;
  bool contains(const Point& x) const;

  /// Deterministic sample. Segment: `density` equispaced points including
  /// both endpoints. Box: tensor grid with `density` values per non-degenerate
  /// axis. Point set: all members in stored order.
  std::vector<Point> sample(int density, std::uint64_t seed = 0) const;

  /// Points whose convex hull is the region (endpoints, corners, members).
  std::vector<Point> extreme_points() const;

  /// Total order used to make pairwise evaluations order-independent.
  bool canonically_before(const Region& other) const;

 private:
  Region(Space space, Shape shape, double tol, bool convex);

  Space space_;
  Shape shape_;
  double membership_tol_;
  bool convex_;
};

/// A pair (a, b) ∈ Ω × Δ and its separation.
struct ProximalPair {
  Point a;
  Point b;
  double separation;
};

struct SetDistance {
  double dist;
  ProximalPair witness;
};

/// dist(Ω, Δ) estimated as the minimum over sample(Ω) × sample(Δ), refined by
/// coordinate descent with golden-section line searches for Segment/Segment
/// and Box/Box. Symmetric in its arguments (the witness is swapped to match).
SetDistance set_distance(const Region& omega, const Region& delta, int density);

struct ProximalSets {
  std::vector<Point> omega0;
  std::vector<Point> delta0;
};

/// Sampled points of each region that lie within dist + tol of a sampled
/// point of the other region.
ProximalSets proximal_sets(const Region& omega, const Region& delta, int density,
                           double tol);

}  // namespace proxima
