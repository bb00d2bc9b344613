#include "proxima/space.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "proxima/errors.hpp"

namespace proxima {

Space::Space(int dim, double p) : dim_(dim), p_(p) {
  if (dim < 1) throw UsageError("space dimension must be >= 1");
  if (!(p >= 2.0) || std::isinf(p)) {
    throw UsageError("space exponent p must be finite and >= 2");
  }
}

Point::Point(const Space& space, Eigen::VectorXd coords)
    : space_(space), coords_(std::move(coords)) {
  if (coords_.size() != space_.dim()) {
    std::ostringstream os;
    os << "point has " << coords_.size() << " coordinates, space has dimension "
       << space_.dim();
    throw UsageError(os.str());
  }
  if (!coords_.allFinite()) throw UsageError("point coordinates must be finite");
}

Point::Point(const Space& space, std::initializer_list<double> coords)
    : Point(space, Eigen::Map<const Eigen::VectorXd>(
                       coords.begin(), static_cast<Eigen::Index>(coords.size()))) {}

std::string format_number(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ", ";
    os << format_number(coords_[i]);
  }
  os << ')';
  return os.str();
}

void require_same_space(const Point& a, const Point& b) {
  if (!(a.space() == b.space())) {
    throw UsageError("points belong to different spaces");
  }
}

double norm(const Space& space, const Eigen::VectorXd& v) {
  if (space.p() == 2.0) return std::sqrt(v.squaredNorm());
  // Scale by the largest magnitude so |v_i|^p cannot overflow.
  const double scale = v.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    sum += std::pow(std::abs(v[i]) / scale, space.p());
  }
  return scale * std::pow(sum, 1.0 / space.p());
}

double distance(const Point& a, const Point& b) {
  require_same_space(a, b);
  return norm(a.space(), a.coords() - b.coords());
}

Point geodesic_point(const Point& a, const Point& b, double lambda) {
  require_same_space(a, b);
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw UsageError("geodesic parameter must lie in [0, 1]");
  }
  if (lambda == 0.0) return a;
  if (lambda == 1.0) return b;
  return Point(a.space(), (1.0 - lambda) * a.coords() + lambda * b.coords());
}

double hilbert_modulus(double eps) {
  const double half = eps / 2.0;
  return 1.0 - std::sqrt(std::max(0.0, 1.0 - half * half));
}

bool uniform_convexity_check(const Point& s1, const Point& s2, const Point& s3,
                             double big_m, double small_m,
                             const Modulus& modulus, double tol) {
  require_same_space(s1, s2);
  require_same_space(s1, s3);
  if (!(big_m > 0.0)) throw PreconditionError("M must be positive");
  const double slack = tol * std::max(1.0, big_m);
  if (!(small_m >= 0.0 && small_m <= 2.0 * big_m + slack)) {
    throw PreconditionError("m must lie in [0, 2M]");
  }
  if (distance(s1, s3) > big_m + slack || distance(s2, s3) > big_m + slack) {
    throw PreconditionError("sigma1 and sigma2 must lie within M of sigma3");
  }
  if (distance(s1, s2) < small_m - slack) {
    throw PreconditionError("sigma1 and sigma2 must be at least m apart");
  }

  const Point mid(s1.space(), 0.5 * (s1.coords() + s2.coords()));
  const double lhs = distance(mid, s3);
  const double ratio = std::min(small_m / big_m, 2.0);
  const double upsilon = ratio == 0.0 ? 0.0 : modulus(ratio);
  const double rhs = (1.0 - upsilon) * big_m;
  return lhs <= rhs + slack;
}

}  // namespace proxima
