#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "proxima/region.hpp"

namespace proxima {

enum class Side { Omega, Delta };

inline Side other(Side s) { return s == Side::Omega ? Side::Delta : Side::Omega; }
std::string to_string(Side s);

/// x ↦ A·x + b.
struct AffineRule {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;

  Eigen::VectorXd operator()(const Eigen::VectorXd& x) const { return A * x + b; }
};

/// Explicit (input → output) graph for maps between finite point sets.
struct TableRule {
  std::vector<std::pair<Point, Point>> entries;
};

/// A map Ξ on Ω ∪ Δ, piecewise affine or tabulated. Immutable.
///
/// A point inside both regions is accepted only when both sides produce the
/// same image; otherwise apply() throws AmbiguityError.
class CyclicMap {
 public:
  CyclicMap(Region omega, Region delta, AffineRule omega_rule, AffineRule delta_rule);
  CyclicMap(Region omega, Region delta, TableRule table);

  const Region& omega() const { return omega_; }
  const Region& delta() const { return delta_; }
  const Region& region(Side s) const { return s == Side::Omega ? omega_ : delta_; }
  const Space& space() const { return omega_.space(); }
  bool is_table() const { return std::holds_alternative<TableRule>(rules_); }
  const AffineRule& rule(Side s) const;
  const TableRule& table() const { return std::get<TableRule>(rules_); }

  /// Side x belongs to. Throws DomainError when in neither region. A point in
  /// both regions resolves to Omega.
  Side side_of(const Point& x) const;

  Point apply(const Point& x) const;

 private:
  Point image(Side s, const Point& x) const;

  Region omega_;
  Region delta_;
  std::variant<std::pair<AffineRule, AffineRule>, TableRule> rules_;
};

/// Ξ⁰seed … Ξᴺseed with the side of each entry.
struct OrbitTable {
  Point seed;
  std::vector<Point> entries;
  std::vector<Side> sides;

  std::size_t depth() const { return entries.size() - 1; }
  const Point& operator[](std::size_t k) const { return entries[k]; }
};

/// Throws CyclicityError naming the first iterate that leaves Ω ∪ Δ or lands
/// on the wrong side.
OrbitTable orbit(const CyclicMap& m, const Point& seed, std::size_t depth);

struct CyclicityVerdict {
  bool pass;
  std::optional<Point> witness;  ///< first offending sample point
  std::optional<Side> witness_side;
  std::string reason;
};

/// Ξ(Ω) ⊂ Δ and Ξ(Δ) ⊂ Ω on sample(·, density).
CyclicityVerdict cyclicity_check(const CyclicMap& m, int density);

struct BoundednessVerdict {
  bool pass;
  std::size_t depth;         ///< "bounded up to depth N"
  std::size_t seeds_checked;
  double reference_diameter;
  double max_orbit_diameter;
  std::optional<Point> worst_seed;
};

/// Finite-depth proxy for "Ξ induces bounded orbits": every orbit's diameter
/// up to `depth` is at most bound_factor × reference diameter. The reference
/// is the diameter of the extreme points of the bounded regions together with
/// the seeds and their first images.
BoundednessVerdict boundedness_check(const CyclicMap& m, const std::vector<Point>& seeds,
                                     std::size_t depth, double bound_factor);

double diameter(const std::vector<Point>& pts);

}  // namespace proxima
