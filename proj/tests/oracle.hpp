#pragma once

// Closed-form oracle for the built-in two-segment problem: plain arithmetic
// on coordinate pairs, no library code. Ω = {(−1, y)}, Δ = {(1, y)}, |y| ≤ 1/2,
// Ξ(−1, y) = (1, −y/2), Ξ(1, y) = (−1, −y/3).

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

using P2 = std::array<double, 2>;

inline P2 xi(const P2& x) {
  if (x[0] < 0.0) return {x[0] + 2.0, -x[1] / 2.0};
  return {x[0] - 2.0, -x[1] / 3.0};
}

inline double dist(const P2& a, const P2& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1];
  return std::sqrt(dx * dx + dy * dy);
}

inline std::vector<P2> orbit(P2 x, std::size_t depth) {
  std::vector<P2> out{x};
  for (std::size_t k = 0; k < depth; ++k) out.push_back(x = xi(x));
  return out;
}

/// Brute-force supremum over i−j odd, k−l odd, p−q even, all indices ≤ depth.
inline double orbital_sup(const P2& s, const P2& t, std::size_t depth) {
  const auto a = orbit(s, depth), b = orbit(t, depth);
  double best = 0.0;
  for (std::size_t i = 0; i <= depth; ++i) {
    for (std::size_t j = 0; j <= depth; ++j) {
      if ((i + j) % 2 == 1) {
        best = std::max({best, dist(a[i], a[j]), dist(b[i], b[j])});
      } else {
        best = std::max(best, dist(a[i], b[j]));
      }
    }
  }
  return best;
}

/// Grid y-values −1/2 … 1/2 with `n` points, same parametrization as the
/// library samples segments with.
inline std::vector<double> grid(int n) {
  std::vector<double> ys;
  for (int k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / (n - 1);
    ys.push_back(k == 0 ? -0.5 : k == n - 1 ? 0.5 : (1 - t) * -0.5 + t * 0.5);
  }
  return ys;
}

/// max over grid pairs of (LHS − 2)/(S − 2) for the orbital class.
inline double orbital_min_eta(int n, std::size_t depth) {
  double worst = 0.0;
  for (double ya : grid(n)) {
    for (double yb : grid(n)) {
      const P2 s{-1, ya}, t{1, yb};
      const double lhs = dist(xi(s), xi(t));
      const double sup = orbital_sup(s, t, depth);
      if (sup > 2.0 + 1e-9 && lhs > 2.0 + 1e-9) worst = std::max(worst, (lhs - 2) / (sup - 2));
    }
  }
  return worst;
}

}  // namespace oracle
