#pragma once

#include <functional>
#include <string>

#include <Eigen/Dense>

namespace proxima {

/// ℝ^dim equipped with the p-norm, p ≥ 2 (finite).
class Space {
 public:
  Space(int dim, double p);

  int dim() const { return dim_; }
  double p() const { return p_; }

  bool operator==(const Space&) const = default;

 private:
  int dim_;
  double p_;
};

/// Shortest decimal form that reads back to the same double.
std::string format_number(double v);

/// A coordinate vector tagged with the space it lives in. Immutable.
class Point {
 public:
  Point(const Space& space, Eigen::VectorXd coords);
  Point(const Space& space, std::initializer_list<double> coords);

  const Space& space() const { return space_; }
  const Eigen::VectorXd& coords() const { return coords_; }
  double operator[](int i) const { return coords_[i]; }
  int dim() const { return space_.dim(); }

  bool operator==(const Point& other) const {
    return space_ == other.space_ && coords_ == other.coords_;
  }

  std::string to_string() const;

 private:
  Space space_;
  Eigen::VectorXd coords_;
};

void require_same_space(const Point& a, const Point& b);

/// ‖v‖_p for the space's exponent.
double norm(const Space& space, const Eigen::VectorXd& v);

/// ‖a − b‖_p.
double distance(const Point& a, const Point& b);

/// (1−λ)a ⊕ λb, which in a normed space is the convex combination.
Point geodesic_point(const Point& a, const Point& b, double lambda);

/// Modulus of convexity Υ: (0,2] → (0,1], caller supplied.
using Modulus = std::function<double(double)>;

/// Υ(ε) = 1 − √(1 − (ε/2)²), the closed form for the Euclidean norm.
double hilbert_modulus(double eps);

/// Checks ‖(σ1+σ2)/2 − σ3‖ ≤ (1 − Υ(m/M))·M.
///
/// Throws PreconditionError unless ‖σ1−σ3‖ ≤ M, ‖σ2−σ3‖ ≤ M, ‖σ1−σ2‖ ≥ m
/// and 0 ≤ m ≤ 2M hold (each up to `tol`). Returns false only when the
/// inequality itself fails by more than `tol`. Υ(0) is taken as 0.
bool uniform_convexity_check(const Point& s1, const Point& s2, const Point& s3,
                             double big_m, double small_m,
                             const Modulus& modulus, double tol = 1e-12);

}  // namespace proxima
