#include "proxima/lemma_harness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "proxima/contraction.hpp"
#include "proxima/errors.hpp"

namespace proxima {
namespace {

constexpr int kTargetDensity = 11;

std::vector<double> deviations(const std::vector<Point>& xs, const std::vector<Point>& ys,
                               double dist) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (std::size_t r = 0; r < xs.size(); ++r) out.push_back(std::abs(distance(xs[r], ys[r]) - dist));
  return out;
}

// Least M such that pred(s, r) holds for all s > r ≥ M; the sequence length
// when even the last admissible r fails.
template <typename Pred>
std::size_t least_uniform_index(std::size_t n, Pred&& pred) {
  std::size_t m = 0;
  for (std::size_t r = 0; r + 1 < n; ++r) {
    for (std::size_t s = r + 1; s < n; ++s) {
      if (!pred(s, r)) {
        m = r + 1;
        break;
      }
    }
  }
  return m;
}

void require_lengths(std::size_t a, std::size_t b, std::size_t c) {
  if (a != b || a != c) throw UsageError("sequences must have equal lengths");
  if (a < 2) throw UsageError("sequences must have at least two terms");
}

}  // namespace

std::string to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::Pass: return "pass";
    case LemmaStatus::Precondition: return "precondition";
    default: return "not-within-horizon";
  }
}

SequenceTriple generate_converging_triple(const Region& omega, const Region& delta,
                                          const ProximalPair& proximal, std::size_t length,
                                          double decay, std::uint64_t seed, double amplitude) {
  if (!omega.convex() || !delta.convex()) {
    throw UsageError("lemma sequences need convex regions");
  }
  if (length < 10) throw UsageError("sequence length must be >= 10");
  if (!(decay > 0.0 && decay < 1.0)) throw UsageError("decay must lie in (0, 1)");
  if (!(amplitude >= 0.0 && amplitude <= 1.0)) throw UsageError("amplitude must lie in [0, 1]");
  if (!omega.contains(proximal.a) || !delta.contains(proximal.b)) {
    throw UsageError("proximal pair must lie in (omega, delta)");
  }
  const double dist = set_distance(omega, delta, kDistDensity).dist;
  if (std::abs(proximal.separation - dist) > 1e-6 ||
      std::abs(distance(proximal.a, proximal.b) - proximal.separation) > 1e-9) {
    throw UsageError("proximal pair does not realize dist(omega, delta)");
  }

  const auto omega_targets = omega.sample(kTargetDensity);
  const auto delta_targets = delta.sample(kTargetDensity);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> fraction(0.5, 1.0);
  auto term = [&](const Point& anchor, const std::vector<Point>& targets, double scale) {
    std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
    const Point& target = targets[pick(rng)];
    return geodesic_point(anchor, target, std::min(1.0, scale * fraction(rng)));
  };

  SequenceTriple t;
  double scale = amplitude;
  for (std::size_t r = 0; r < length; ++r) {
    t.sigma.push_back(term(proximal.a, omega_targets, scale));
    t.rho.push_back(term(proximal.a, omega_targets, scale));
    t.theta.push_back(term(proximal.b, delta_targets, scale));
    scale *= decay;
  }
  return t;
}

EnvelopeFit fit_convergence_envelope(const std::vector<double>& dev, const LemmaOptions& opts) {
  if (dev.empty()) throw UsageError("empty deviation sequence");
  const double floor = 10.0 * opts.tol;
  const double final_term = dev.back();
  std::vector<double> env(dev.size());
  double running = 0.0;
  for (std::size_t r = dev.size(); r-- > 0;) {
    running = std::max(running, dev[r]);
    env[r] = running;
  }
  if (env.front() <= floor) return {true, 0.0, 1.0, final_term};

  std::size_t n = 0;
  while (n < env.size() && env[n] > 0.0) ++n;
  if (n < 3) return {final_term <= floor, 0.0, 0.0, final_term};

  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t r = 0; r < n; ++r) {
    const double x = static_cast<double>(r);
    const double y = std::log(env[r]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double nn = static_cast<double>(n);
  const double vx = sxx - sx * sx / nn;
  const double vy = syy - sy * sy / nn;
  const double cxy = sxy - sx * sy / nn;
  const double slope = cxy / vx;
  const double r2 = vy > 0.0 ? (cxy * cxy) / (vx * vy) : 0.0;
  const bool holds = slope < 0.0 && r2 >= opts.min_r_squared && final_term <= floor;
  return {holds, slope, r2, final_term};
}

CloseVerdict check_lemma_close(const SequenceTriple& t, double dist,
                               const std::vector<double>& eps_schedule,
                               const LemmaOptions& opts) {
  require_lengths(t.sigma.size(), t.rho.size(), t.theta.size());
  for (double eps : eps_schedule) {
    if (!(eps > 0.0)) throw UsageError("epsilon must be positive");
  }
  CloseVerdict v{LemmaStatus::Pass, {},
                 fit_convergence_envelope(deviations(t.sigma, t.theta, dist), opts),
                 fit_convergence_envelope(deviations(t.rho, t.theta, dist), opts), {}};
  if (!v.sigma_theta.holds || !v.rho_theta.holds) {
    v.status = LemmaStatus::Precondition;
    v.detail = !v.sigma_theta.holds ? "d(sigma_r, theta_r) does not approach dist"
                                    : "d(rho_r, theta_r) does not approach dist";
    return v;
  }
  const std::size_t n = t.length();
  for (double eps : eps_schedule) {
    std::optional<std::size_t> index;
    for (std::size_t r = n; r-- > 0;) {
      if (distance(t.sigma[r], t.rho[r]) > eps) break;
      index = r;
    }
    if (!index) {
      v.status = LemmaStatus::NotWithinHorizon;
      std::ostringstream os;
      os << "d(sigma_r, rho_r) > " << eps << " at the end of the horizon";
      v.detail = os.str();
    }
    v.thresholds.emplace_back(eps, index);
  }
  return v;
}

CauchyVerdict check_lemma_cauchy(const std::vector<Point>& sigma, const std::vector<Point>& rho,
                                 const std::vector<Point>& theta, double dist, double eps,
                                 const LemmaOptions& opts) {
  require_lengths(sigma.size(), rho.size(), theta.size());
  if (!(eps > 0.0)) throw UsageError("epsilon must be positive");
  const std::size_t n = sigma.size();
  CauchyVerdict v{LemmaStatus::Pass, std::nullopt, std::nullopt,
                  fit_convergence_envelope(deviations(rho, theta, dist), opts), {}};

  const std::size_t m0 = least_uniform_index(
      n, [&](std::size_t s, std::size_t r) { return distance(sigma[s], theta[r]) <= dist + eps; });
  if (m0 + 2 <= n) v.m0 = m0;
  if (!v.m0 || !v.rho_theta.holds) {
    v.status = LemmaStatus::Precondition;
    v.detail = !v.m0 ? "d(sigma_s, theta_r) <= dist + eps never holds uniformly"
                     : "d(rho_r, theta_r) does not approach dist";
    return v;
  }
  const std::size_t m1 = least_uniform_index(
      n, [&](std::size_t s, std::size_t r) { return distance(sigma[s], rho[r]) <= eps; });
  if (m1 + 2 <= n) {
    v.m1 = m1;
  } else {
    v.status = LemmaStatus::NotWithinHorizon;
    v.detail = "no M1 within the sequence length";
  }
  return v;
}

}  // namespace proxima
