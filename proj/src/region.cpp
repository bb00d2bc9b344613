#include "proxima/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "proxima/errors.hpp"

namespace proxima {
namespace {

constexpr int kRefineRounds = 20;
constexpr double kRefineStep = 1e-12;

/// Minimizes a convex function of one variable on [lo, hi]. Stops once the
/// bracket, measured in ambient units via `scale`, is narrower than `step`.
template <typename F>
double golden_section(F&& f, double lo, double hi, double scale, double step) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) * scale > step; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  // The minimum may sit on the boundary, which the interior probes never hit.
  double best = fc <= fd ? c : d;
  double fbest = std::min(fc, fd);
  for (double edge : {lo, hi}) {
    const double fe = f(edge);
    if (fe < fbest) {
      fbest = fe;
      best = edge;
    }
  }
  return best;
}

void require_space(const Region& r, const Point& x) {
  if (!(r.space() == x.space())) {
    throw UsageError("point and region belong to different spaces");
  }
}

void require_same_space(const Region& a, const Region& b) {
  if (!(a.space() == b.space())) {
    throw UsageError("regions belong to different spaces");
  }
}

double segment_distance(const Segment& s, const Point& x) {
  const Eigen::VectorXd dir = s.b.coords() - s.a.coords();
  if (x.space().p() == 2.0) {
    const double t = std::clamp(dir.dot(x.coords() - s.a.coords()) / dir.squaredNorm(),
                                0.0, 1.0);
    return distance(geodesic_point(s.a, s.b, t), x);
  }
  const double len = distance(s.a, s.b);
  auto f = [&](double t) { return distance(geodesic_point(s.a, s.b, t), x); };
  return f(golden_section(f, 0.0, 1.0, len, kRefineStep));
}

double grid_value(double lo, double hi, int k, int n) {
  const double t = static_cast<double>(k) / static_cast<double>(n - 1);
  if (k == 0) return lo;
  if (k == n - 1) return hi;
  return (1.0 - t) * lo + t * hi;
}

std::vector<double> flat_key(const Region& r) {
  std::vector<double> key{static_cast<double>(r.shape().index()), r.membership_tol()};
  auto push = [&](const Eigen::VectorXd& v) { key.insert(key.end(), v.begin(), v.end()); };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FinitePointSet>) {
          for (const auto& p : s.points) push(p.coords());
        } else if constexpr (std::is_same_v<T, Segment>) {
          push(s.a.coords());
          push(s.b.coords());
        } else {
          push(s.lower);
          push(s.upper);
        }
      },
      r.shape());
  return key;
}

// Coordinate descent on (s, t) ∈ [0,1]² for d(a(s), b(t)).
ProximalPair refine_segments(const Segment& u, const Segment& v, ProximalPair start) {
  const double len_u = distance(u.a, u.b);
  const double len_v = distance(v.a, v.b);
  auto at = [](const Segment& s, double t) { return geodesic_point(s.a, s.b, t); };
  auto param = [](const Segment& s, const Point& x) {
    const Eigen::VectorXd dir = s.b.coords() - s.a.coords();
    return std::clamp(dir.dot(x.coords() - s.a.coords()) / dir.squaredNorm(), 0.0, 1.0);
  };
  double s = param(u, start.a);
  double t = param(v, start.b);
  double best = start.separation;
  for (int round = 0; round < kRefineRounds; ++round) {
    const double s_old = s, t_old = t;
    const Point bt = at(v, t);
    const double s_new = golden_section(
        [&](double x) { return distance(at(u, x), bt); }, 0.0, 1.0, len_u, kRefineStep);
    const double f_s = distance(at(u, s_new), bt);
    if (f_s < best) {
      best = f_s;
      s = s_new;
    }
    const Point as = at(u, s);
    const double t_new = golden_section(
        [&](double x) { return distance(as, at(v, x)); }, 0.0, 1.0, len_v, kRefineStep);
    const double f_t = distance(as, at(v, t_new));
    if (f_t < best) {
      best = f_t;
      t = t_new;
    }
    if (std::abs(s - s_old) * len_u < kRefineStep && std::abs(t - t_old) * len_v < kRefineStep) {
      break;
    }
  }
  if (best < start.separation) return {at(u, s), at(v, t), best};
  return start;
}

ProximalPair refine_boxes(const Box& bx, const Box& by, ProximalPair start) {
  const Space& space = start.a.space();
  const int dim = space.dim();
  Eigen::VectorXd x = start.a.coords();
  Eigen::VectorXd y = start.b.coords();
  double best = start.separation;
  auto eval = [&](const Eigen::VectorXd& px, const Eigen::VectorXd& py) {
    return norm(space, px - py);
  };
  for (int round = 0; round < kRefineRounds; ++round) {
    double moved = 0.0;
    for (int side = 0; side < 2; ++side) {
      Eigen::VectorXd& v = side == 0 ? x : y;
      const Box& box = side == 0 ? bx : by;
      for (int i = 0; i < dim; ++i) {
        if (box.lower[i] == box.upper[i]) continue;
        Eigen::VectorXd trial = v;
        auto f = [&](double c) {
          trial[i] = c;
          return side == 0 ? eval(trial, y) : eval(x, trial);
        };
        const double c = golden_section(f, box.lower[i], box.upper[i], 1.0, kRefineStep);
        const double fc = f(c);
        if (fc < best) {
          moved = std::max(moved, std::abs(c - v[i]));
          best = fc;
          v[i] = c;
        }
      }
    }
    if (moved < kRefineStep) break;
  }
  if (best < start.separation) return {Point(space, x), Point(space, y), best};
  return start;
}

SetDistance set_distance_ordered(const Region& omega, const Region& delta, int density) {
  const auto xs = omega.sample(density);
  const auto ys = delta.sample(density);
  std::size_t bi = 0, bj = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const double d = distance(xs[i], ys[j]);
      if (d < best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  }
  ProximalPair pair{xs[bi], ys[bj], best};
  const auto* su = std::get_if<Segment>(&omega.shape());
  const auto* sv = std::get_if<Segment>(&delta.shape());
  if (su && sv) pair = refine_segments(*su, *sv, pair);
  const auto* bu = std::get_if<Box>(&omega.shape());
  const auto* bv = std::get_if<Box>(&delta.shape());
  if (bu && bv) pair = refine_boxes(*bu, *bv, pair);
  return {pair.separation, pair};
}

}  // namespace

Region::Region(Space space, Shape shape, double tol, bool convex)
    : space_(space), shape_(std::move(shape)), membership_tol_(tol), convex_(convex) {
  if (!(tol >= 0.0)) throw UsageError("membership tolerance must be nonnegative");
}

Region Region::segment(Point a, Point b, double membership_tol) {
  proxima::require_same_space(a, b);
  if (a == b) throw UsageError("segment endpoints must be distinct");
  const Space space = a.space();
  return Region(space, Segment{std::move(a), std::move(b)}, membership_tol, true);
}

Region Region::box(const Space& space, Eigen::VectorXd lower, Eigen::VectorXd upper,
                   double membership_tol) {
  if (lower.size() != space.dim() || upper.size() != space.dim()) {
    throw UsageError("box corners must match the space dimension");
  }
  for (int i = 0; i < space.dim(); ++i) {
    if (std::isnan(lower[i]) || std::isnan(upper[i])) throw UsageError("box bound is NaN");
    if (lower[i] > upper[i]) throw UsageError("box lower corner must be <= upper corner");
  }
  return Region(space, Box{std::move(lower), std::move(upper)}, membership_tol, true);
}

Region Region::points(std::vector<Point> pts, bool declared_convex, double membership_tol) {
  if (pts.empty()) throw UsageError("finite point set must be nonempty");
  const Space space = pts.front().space();
  for (const auto& p : pts) proxima::require_same_space(pts.front(), p);
  return Region(space, FinitePointSet{std::move(pts)}, membership_tol, declared_convex);
}

bool Region::bounded() const {
  if (const auto* b = std::get_if<Box>(&shape_)) {
    return b->lower.allFinite() && b->upper.allFinite();
  }
  return true;
}

std::string Region::kind() const {
  switch (shape_.index()) {
    case 0: return "points";
    case 1: return "segment";
    default: return "box";
  }
}

double Region::distance_to(const Point& x) const {
  require_space(*this, x);
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FinitePointSet>) {
          double best = std::numeric_limits<double>::infinity();
          for (const auto& p : s.points) best = std::min(best, distance(p, x));
          return best;
        } else if constexpr (std::is_same_v<T, Segment>) {
          return segment_distance(s, x);
        } else {
          const Eigen::VectorXd clamped = x.coords().cwiseMax(s.lower).cwiseMin(s.upper);
          return norm(space_, x.coords() - clamped);
        }
      },
      shape_);
}

bool Region::contains(const Point& x) const {
  require_space(*this, x);
  if (const auto* b = std::get_if<Box>(&shape_)) {
    for (int i = 0; i < space_.dim(); ++i) {
      if (x[i] < b->lower[i] - membership_tol_ || x[i] > b->upper[i] + membership_tol_) {
        return false;
      }
    }
    return true;
  }
  return distance_to(x) <= membership_tol_;
}

std::vector<Point> Region::sample(int density, std::uint64_t /*seed*/) const {
  if (density < 2) throw UsageError("sample density must be >= 2");
  return std::visit(
      [&](const auto& s) -> std::vector<Point> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FinitePointSet>) {
          return s.points;
        } else if constexpr (std::is_same_v<T, Segment>) {
          std::vector<Point> out;
          out.reserve(static_cast<std::size_t>(density));
          for (int k = 0; k < density; ++k) {
            const double t = static_cast<double>(k) / static_cast<double>(density - 1);
            out.push_back(geodesic_point(s.a, s.b, t));
          }
          return out;
        } else {
          if (!bounded()) throw UsageError("cannot sample an unbounded box");
          const int dim = space_.dim();
          std::vector<int> counts(static_cast<std::size_t>(dim));
          for (int i = 0; i < dim; ++i) counts[i] = s.lower[i] == s.upper[i] ? 1 : density;
          std::vector<Point> out;
          std::vector<int> idx(static_cast<std::size_t>(dim), 0);
          while (true) {
            Eigen::VectorXd c(dim);
            for (int i = 0; i < dim; ++i) {
              c[i] = counts[i] == 1 ? s.lower[i] : grid_value(s.lower[i], s.upper[i], idx[i], density);
            }
            out.emplace_back(space_, std::move(c));
            int axis = dim - 1;
            while (axis >= 0 && ++idx[axis] == counts[axis]) idx[axis--] = 0;
            if (axis < 0) break;
          }
          return out;
        }
      },
      shape_);
}

std::vector<Point> Region::extreme_points() const {
  if (const auto* s = std::get_if<Segment>(&shape_)) return {s->a, s->b};
  return sample(2);
}

bool Region::canonically_before(const Region& other) const {
  return flat_key(*this) < flat_key(other);
}

SetDistance set_distance(const Region& omega, const Region& delta, int density) {
  require_same_space(omega, delta);
  if (delta.canonically_before(omega)) {
    SetDistance r = set_distance_ordered(delta, omega, density);
    return {r.dist, {r.witness.b, r.witness.a, r.witness.separation}};
  }
  return set_distance_ordered(omega, delta, density);
}

ProximalSets proximal_sets(const Region& omega, const Region& delta, int density,
                           double tol) {
  const double dist = set_distance(omega, delta, density).dist;
  const auto xs = omega.sample(density);
  const auto ys = delta.sample(density);
  ProximalSets out;
  std::vector<bool> hit_y(ys.size(), false);
  for (const auto& x : xs) {
    bool hit = false;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (distance(x, ys[j]) <= dist + tol) {
        hit = true;
        hit_y[j] = true;
      }
    }
    if (hit) out.omega0.push_back(x);
  }
  for (std::size_t j = 0; j < ys.size(); ++j) {
    if (hit_y[j]) out.delta0.push_back(ys[j]);
  }
  return out;
}

}  // namespace proxima
