#include "proxima/contraction.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "proxima/errors.hpp"

namespace proxima {
namespace {

struct SupEntry {
  double value = -1.0;
  std::size_t first = 0;
  std::size_t second = 0;
  PairClass cls = PairClass::EvenCross;
};

// prefix[n] = supremum over pairs whose indices are all ≤ n.
std::vector<SupEntry> prefix_sups(const OrbitTable& a, const OrbitTable& b, std::size_t n_max) {
  std::vector<SupEntry> prefix;
  prefix.reserve(n_max + 1);
  SupEntry best;
  auto offer = [&](double v, std::size_t i, std::size_t j, PairClass c) {
    if (v > best.value) best = {v, i, j, c};
  };
  for (std::size_t k = 0; k <= n_max; ++k) {
    for (std::size_t j = k % 2 == 0 ? 1 : 0; j < k; j += 2) {
      offer(distance(a[k], a[j]), k, j, PairClass::OddSigma);
    }
    for (std::size_t l = k % 2 == 0 ? 1 : 0; l < k; l += 2) {
      offer(distance(b[k], b[l]), k, l, PairClass::OddTheta);
    }
    for (std::size_t q = k % 2; q <= k; q += 2) {
      offer(distance(a[k], b[q]), k, q, PairClass::EvenCross);
    }
    for (std::size_t p = k % 2; p < k; p += 2) {
      offer(distance(a[p], b[k]), p, k, PairClass::EvenCross);
    }
    prefix.push_back(best);
  }
  return prefix;
}

// Requirement a pair places on η: 0 when unconstrained, +inf when no η < 1
// can work, otherwise (LHS − dist)/(B − dist).
double required_eta(double lhs, double bound, double dist, double tol) {
  const double excess = lhs - dist;
  const double slack = bound - dist;
  if (excess <= tol) return 0.0;
  if (slack <= tol) return std::numeric_limits<double>::infinity();
  return excess / slack;
}

struct PairEval {
  Point sigma;
  Point theta;
  double lhs;
  double bound;
};

struct Evaluation {
  std::vector<PairEval> pairs;
  double dist;
  bool sup_converged = true;
  std::size_t max_depth_used = 0;
};

Evaluation evaluate(const CyclicMap& m, ContractionClass cls, const ContractionOptions& opts) {
  if (opts.density < 2) throw UsageError("density must be >= 2");
  Evaluation ev;
  ev.dist = opts.dist ? *opts.dist : set_distance(m.omega(), m.delta(), kDistDensity).dist;
  const auto sigmas = m.omega().sample(opts.density);
  const auto thetas = m.delta().sample(opts.density);

  if (cls == ContractionClass::Orbital) {
    if (opts.depth < 2) throw UsageError("orbital depth must be >= 2");
    const std::size_t full = 4 * opts.depth;
    std::vector<OrbitTable> a, b;
    a.reserve(sigmas.size());
    b.reserve(thetas.size());
    for (const auto& s : sigmas) a.push_back(orbit(m, s, full));
    for (const auto& t : thetas) b.push_back(orbit(m, t, full));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        const OrbitalSup sup = orbital_sup(a[i], b[j], opts.depth, opts.sup_tol);
        ev.sup_converged = ev.sup_converged && sup.converged;
        ev.max_depth_used = std::max(ev.max_depth_used, sup.depth_used);
        ev.pairs.push_back({sigmas[i], thetas[j], distance(a[i][1], b[j][1]), sup.value});
      }
    }
    return ev;
  }

  std::vector<Point> sigma_images, theta_images;
  for (const auto& s : sigmas) sigma_images.push_back(m.apply(s));
  for (const auto& t : thetas) theta_images.push_back(m.apply(t));
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    for (std::size_t j = 0; j < thetas.size(); ++j) {
      double bound = distance(sigmas[i], thetas[j]);
      if (cls == ContractionClass::Suzuki) {
        bound = std::max({bound, distance(sigmas[i], sigma_images[i]),
                          distance(thetas[j], theta_images[j])});
      }
      ev.pairs.push_back(
          {sigmas[i], thetas[j], distance(sigma_images[i], theta_images[j]), bound});
    }
  }
  return ev;
}

struct Binding {
  std::size_t index = 0;
  double requirement = -1.0;
  double excess = -std::numeric_limits<double>::infinity();
};

Binding binding_pair(const Evaluation& ev, double tol) {
  Binding best;
  for (std::size_t k = 0; k < ev.pairs.size(); ++k) {
    const auto& p = ev.pairs[k];
    const double r = required_eta(p.lhs, p.bound, ev.dist, tol);
    const double excess = p.lhs - ev.dist;
    if (r > best.requirement || (r == best.requirement && excess > best.excess)) {
      best = {k, r, excess};
    }
  }
  return best;
}

std::optional<double> min_eta_from(const Binding& b, double tol) {
  if (!(b.requirement < 1.0)) return std::nullopt;
  return std::max(b.requirement, tol);
}

void require_eta(double eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw UsageError("eta must lie in (0, 1)");
}

}  // namespace

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::OddSigma: return "odd-sigma";
    case PairClass::OddTheta: return "odd-theta";
    default: return "even-cross";
  }
}

std::string to_string(ContractionClass c) {
  switch (c) {
    case ContractionClass::Cyclic: return "cyclic";
    case ContractionClass::Suzuki: return "suzuki";
    default: return "orbital";
  }
}

std::optional<ContractionClass> parse_contraction_class(const std::string& s) {
  if (s == "cyclic") return ContractionClass::Cyclic;
  if (s == "suzuki") return ContractionClass::Suzuki;
  if (s == "orbital") return ContractionClass::Orbital;
  return std::nullopt;
}

OrbitalSup orbital_sup(const OrbitTable& sigma_orbit, const OrbitTable& theta_orbit,
                       std::size_t depth, double sup_tol) {
  if (depth < 2) throw UsageError("orbital sup depth must be >= 2");
  const std::size_t cap = 4 * depth;
  if (sigma_orbit.depth() < cap || theta_orbit.depth() < cap) {
    throw UsageError("orbit tables are shorter than 4 x depth");
  }
  const auto prefix = prefix_sups(sigma_orbit, theta_orbit, cap);
  std::size_t d = depth;
  double value = prefix[d].value;
  bool converged = false;
  while (d < cap) {
    const std::size_t next = 2 * d;
    const double next_value = prefix[next].value;
    const bool stable = next_value - value < sup_tol;
    d = next;
    value = next_value;
    if (stable) {
      converged = true;
      break;
    }
  }
  const SupEntry& e = prefix[d];
  return {e.value, e.first, e.second, e.cls, d, converged};
}

OrbitalSup orbital_sup(const CyclicMap& m, const Point& sigma, const Point& theta,
                       std::size_t depth, double sup_tol) {
  if (depth < 2) throw UsageError("orbital sup depth must be >= 2");
  if (!m.omega().contains(sigma)) throw UsageError("sigma must lie in omega");
  if (!m.delta().contains(theta)) throw UsageError("theta must lie in delta");
  const OrbitTable a = orbit(m, sigma, 4 * depth);
  const OrbitTable b = orbit(m, theta, 4 * depth);
  return orbital_sup(a, b, depth, sup_tol);
}

ContractionVerdict verify(const CyclicMap& m, ContractionClass cls, double eta,
                          const ContractionOptions& opts) {
  require_eta(eta);
  const Evaluation ev = evaluate(m, cls, opts);
  std::size_t worst = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < ev.pairs.size(); ++k) {
    const auto& p = ev.pairs[k];
    const double margin = eta * p.bound + (1.0 - eta) * ev.dist - p.lhs;
    if (margin < worst_margin) {
      worst_margin = margin;
      worst = k;
    }
  }
  const Binding b = binding_pair(ev, opts.tol);
  auto check = [&](std::size_t k) {
    const auto& p = ev.pairs[k];
    return PairCheck{p.sigma, p.theta, p.lhs, p.bound,
                     eta * p.bound + (1.0 - eta) * ev.dist - p.lhs};
  };
  return ContractionVerdict{cls,
                            eta,
                            worst_margin >= -opts.tol,
                            check(worst),
                            check(b.index),
                            min_eta_from(b, opts.tol),
                            ev.dist,
                            ev.pairs.size(),
                            opts.density,
                            cls == ContractionClass::Orbital ? opts.depth : 0,
                            ev.sup_converged,
                            ev.max_depth_used};
}

ContractionVerdict verify_cyclic(const CyclicMap& m, double eta, int density,
                                 ContractionOptions opts) {
  opts.density = density;
  return verify(m, ContractionClass::Cyclic, eta, opts);
}

ContractionVerdict verify_suzuki(const CyclicMap& m, double eta, int density,
                                 ContractionOptions opts) {
  opts.density = density;
  return verify(m, ContractionClass::Suzuki, eta, opts);
}

ContractionVerdict verify_orbital(const CyclicMap& m, double eta, int density,
                                  std::size_t depth, ContractionOptions opts) {
  opts.density = density;
  opts.depth = depth;
  return verify(m, ContractionClass::Orbital, eta, opts);
}

std::optional<double> estimate_min_eta(const CyclicMap& m, ContractionClass cls, int density,
                                       std::size_t depth, ContractionOptions opts) {
  opts.density = density;
  opts.depth = depth;
  const Evaluation ev = evaluate(m, cls, opts);
  return min_eta_from(binding_pair(ev, opts.tol), opts.tol);
}

}  // namespace proxima
