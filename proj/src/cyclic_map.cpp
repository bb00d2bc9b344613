#include "proxima/cyclic_map.hpp"

#include <sstream>

#include "proxima/errors.hpp"

namespace proxima {
namespace {

void check_rule(const Space& space, const AffineRule& r, const char* name) {
  if (r.A.rows() != space.dim() || r.A.cols() != space.dim() || r.b.size() != space.dim()) {
    throw UsageError(std::string(name) + " has the wrong shape for the space");
  }
  if (!r.A.allFinite() || !r.b.allFinite()) {
    throw UsageError(std::string(name) + " has non-finite entries");
  }
}

}  // namespace

std::string to_string(Side s) { return s == Side::Omega ? "omega" : "delta"; }

CyclicMap::CyclicMap(Region omega, Region delta, AffineRule omega_rule, AffineRule delta_rule)
    : omega_(std::move(omega)), delta_(std::move(delta)) {
  if (!(omega_.space() == delta_.space())) throw UsageError("regions belong to different spaces");
  check_rule(space(), omega_rule, "omega rule");
  check_rule(space(), delta_rule, "delta rule");
  rules_ = std::make_pair(std::move(omega_rule), std::move(delta_rule));
}

CyclicMap::CyclicMap(Region omega, Region delta, TableRule table)
    : omega_(std::move(omega)), delta_(std::move(delta)) {
  if (!(omega_.space() == delta_.space())) throw UsageError("regions belong to different spaces");
  if (table.entries.empty()) throw UsageError("table map must have at least one entry");
  for (const auto& [in, out] : table.entries) {
    require_same_space(in, out);
    if (!(in.space() == space())) throw UsageError("table entry outside the map's space");
  }
  rules_ = std::move(table);
}

const AffineRule& CyclicMap::rule(Side s) const {
  const auto& rules = std::get<std::pair<AffineRule, AffineRule>>(rules_);
  return s == Side::Omega ? rules.first : rules.second;
}

Side CyclicMap::side_of(const Point& x) const {
  if (omega_.contains(x)) return Side::Omega;
  if (delta_.contains(x)) return Side::Delta;
  throw DomainError("point " + x.to_string() + " lies in neither region");
}

Point CyclicMap::image(Side s, const Point& x) const {
  if (const auto* t = std::get_if<TableRule>(&rules_)) {
    const double tol = region(s).membership_tol();
    for (const auto& [in, out] : t->entries) {
      if (distance(in, x) <= tol) return out;
    }
    throw DomainError("point " + x.to_string() + " is not in the map's table");
  }
  return Point(space(), rule(s)(x.coords()));
}

Point CyclicMap::apply(const Point& x) const {
  const bool in_omega = omega_.contains(x);
  const bool in_delta = delta_.contains(x);
  if (!in_omega && !in_delta) {
    throw DomainError("point " + x.to_string() + " lies in neither region");
  }
  if (in_omega && in_delta) {
    Point from_omega = image(Side::Omega, x);
    const Point from_delta = image(Side::Delta, x);
    if (distance(from_omega, from_delta) > omega_.membership_tol()) {
      throw AmbiguityError("point " + x.to_string() +
                           " lies in both regions and the rules disagree");
    }
    return from_omega;
  }
  return image(in_omega ? Side::Omega : Side::Delta, x);
}

OrbitTable orbit(const CyclicMap& m, const Point& seed, std::size_t depth) {
  OrbitTable t{seed, {seed}, {m.side_of(seed)}};
  t.entries.reserve(depth + 1);
  t.sides.reserve(depth + 1);
  for (std::size_t k = 1; k <= depth; ++k) {
    Point next = m.apply(t.entries.back());
    const Side expected = other(t.sides.back());
    if (!m.region(expected).contains(next)) {
      std::ostringstream os;
      os << "iterate " << k << " = " << next.to_string() << " is not in "
         << to_string(expected);
      throw CyclicityError(k, os.str());
    }
    t.entries.push_back(std::move(next));
    t.sides.push_back(expected);
  }
  return t;
}

CyclicityVerdict cyclicity_check(const CyclicMap& m, int density) {
  for (Side side : {Side::Omega, Side::Delta}) {
    const Region& target = m.region(other(side));
    for (const Point& x : m.region(side).sample(density)) {
      try {
        const Point y = m.apply(x);
        if (!target.contains(y)) {
          return {false, x, side,
                  "image " + y.to_string() + " of " + x.to_string() + " is not in " +
                      to_string(other(side))};
        }
      } catch (const Error& e) {
        return {false, x, side, e.what()};
      }
    }
  }
  return {true, std::nullopt, std::nullopt, {}};
}

double diameter(const std::vector<Point>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, distance(pts[i], pts[j]));
  }
  return d;
}

BoundednessVerdict boundedness_check(const CyclicMap& m, const std::vector<Point>& seeds,
                                     std::size_t depth, double bound_factor) {
  if (seeds.empty()) throw UsageError("boundedness check needs at least one seed");
  if (!(bound_factor > 0.0)) throw UsageError("bound factor must be positive");
  std::vector<Point> reference;
  for (const Region* r : {&m.omega(), &m.delta()}) {
    if (!r->bounded()) continue;
    for (auto& p : r->extreme_points()) reference.push_back(std::move(p));
  }
  for (const Point& s : seeds) {
    reference.push_back(s);
    reference.push_back(m.apply(s));
  }
  BoundednessVerdict v{true, depth, seeds.size(), diameter(reference), 0.0, std::nullopt};
  const double limit = bound_factor * v.reference_diameter * (1.0 + 1e-12);
  for (const Point& s : seeds) {
    const double d = diameter(orbit(m, s, depth).entries);
    if (!v.worst_seed || d > v.max_orbit_diameter) {
      v.max_orbit_diameter = d;
      v.worst_seed = s;
    }
    if (d > limit) v.pass = false;
  }
  return v;
}

}  // namespace proxima
