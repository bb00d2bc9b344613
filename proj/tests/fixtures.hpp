#pragma once

#include <cmath>
#include <random>

#include "proxima/cyclic_map.hpp"

namespace fixtures {

inline const proxima::Space& plane() {
  static const proxima::Space s(2, 2.0);
  return s;
}

inline proxima::Point pt(double x, double y) { return proxima::Point(plane(), {x, y}); }

inline proxima::Region omega22() { return proxima::Region::segment(pt(-1, -0.5), pt(-1, 0.5)); }
inline proxima::Region delta22() { return proxima::Region::segment(pt(1, -0.5), pt(1, 0.5)); }

inline proxima::AffineRule rule(double a00, double a01, double a10, double a11, double b0,
                                double b1) {
  Eigen::MatrixXd A(2, 2);
  A << a00, a01, a10, a11;
  Eigen::VectorXd b(2);
  b << b0, b1;
  return {A, b};
}

/// Ξ(x, y) = (x + 2, −y/2) on Ω and (x − 2, −y/3) on Δ.
inline proxima::CyclicMap paper_example(double omega_offset_x = 2.0) {
  return proxima::CyclicMap(omega22(), delta22(), rule(1, 0, 0, -0.5, omega_offset_x, 0),
                            rule(1, 0, 0, -1.0 / 3.0, -2, 0));
}

/// Each side collapses onto its proximal point: (−1, y) ↦ (1, 0), (1, y) ↦ (−1, 0).
inline proxima::CyclicMap proximal_projection() {
  return proxima::CyclicMap(omega22(), delta22(), rule(0, 0, 0, 0, 1, 0),
                            rule(0, 0, 0, 0, -1, 0));
}

inline proxima::CyclicMap fixed_point_singleton() {
  const proxima::Point x = pt(0.5, 0.5);
  auto r = proxima::Region::points({x}, true);
  return proxima::CyclicMap(r, r, proxima::TableRule{{{x, x}}});
}

/// Random parallel segments Ω, Δ in ℝ² and affine rules A = α uuᵀ + γ nnᵀ
/// (spectral norm max(|α|, |γ|) < 0.9) whose offsets are chosen so that each
/// segment maps into the other. About half the seeds give an aligned map:
/// Δ = Ω + gap·n and both rules contract by the same α about the midpoints.
inline proxima::CyclicMap random_parallel_map(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) < 0.5) {
    const double angle = 2.0 * M_PI * unit(rng);
    const Eigen::Vector2d u(std::cos(angle), std::sin(angle));
    const Eigen::Vector2d n(-u[1], u[0]);
    const Eigen::Vector2d po(4.0 * unit(rng) - 2.0, 4.0 * unit(rng) - 2.0);
    const double len = 0.5 + 1.5 * unit(rng);
    const double gap = 0.5 + 2.0 * unit(rng);
    const double alpha = 0.89 * (2.0 * unit(rng) - 1.0);
    const double gamma = 0.89 * (2.0 * unit(rng) - 1.0);
    const Eigen::Vector2d pd = po + gap * n;
    const Eigen::Vector2d mo = po + 0.5 * len * u, md = pd + 0.5 * len * u;
    const Eigen::Matrix2d A = alpha * u * u.transpose() + gamma * n * n.transpose();
    auto P = [](const Eigen::Vector2d& v) { return pt(v[0], v[1]); };
    return proxima::CyclicMap(proxima::Region::segment(P(po), P(po + len * u)),
                              proxima::Region::segment(P(pd), P(pd + len * u)),
                              proxima::AffineRule{A, md - A * mo},
                              proxima::AffineRule{A, mo - A * md});
  }
  const double angle = 2.0 * M_PI * unit(rng);
  const Eigen::Vector2d u(std::cos(angle), std::sin(angle));
  const Eigen::Vector2d n(-u[1], u[0]);
  const Eigen::Vector2d origin(4.0 * unit(rng) - 2.0, 4.0 * unit(rng) - 2.0);
  const double len_o = 0.5 + 1.5 * unit(rng);
  const double len_d = 0.5 + 1.5 * unit(rng);
  const double shift = 2.0 * unit(rng) - 1.0;
  const double gap = 0.5 + 2.0 * unit(rng);

  const Eigen::Vector2d po = origin;
  const Eigen::Vector2d pd = origin + gap * n + shift * u;
  auto P = [](const Eigen::Vector2d& v) { return pt(v[0], v[1]); };
  auto omega = proxima::Region::segment(P(po), P(po + len_o * u));
  auto delta = proxima::Region::segment(P(pd), P(pd + len_d * u));

  // Segment (p, len) → segment (q, len'): s ↦ α s + β along u, with the
  // normal coordinate sent to the target line.
  auto make = [&](const Eigen::Vector2d& p, double len_from, const Eigen::Vector2d& q,
                  double len_to) {
    const double max_alpha = std::min(0.89, len_to / len_from);
    const double alpha = max_alpha * (2.0 * unit(rng) - 1.0);
    const double gamma = 0.89 * (2.0 * unit(rng) - 1.0);
    const double lo = std::max(0.0, -alpha * len_from);
    const double hi = std::min(len_to, len_to - alpha * len_from);
    const double beta = lo + (hi - lo) * unit(rng);
    // x = p + s u + c n, with c = 0 on the segment, maps to q + (α s + β) u.
    const Eigen::Matrix2d A = alpha * u * u.transpose() + gamma * n * n.transpose();
    const Eigen::Vector2d b = q + beta * u - A * p;
    return proxima::AffineRule{A, b};
  };
  auto ro = make(po, len_o, pd, len_d);
  auto rd = make(pd, len_d, po, len_o);
  return proxima::CyclicMap(std::move(omega), std::move(delta), std::move(ro), std::move(rd));
}

}  // namespace fixtures
