#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "proxima/contraction.hpp"

namespace proxima {

struct SolveOptions {
  std::size_t max_iter = 10000;
  double gap_tol = 1e-9;
  double pair_tol = 1e-9;
  std::optional<double> eta_for_bound;  ///< run the gap-envelope check with this η
  std::size_t bound_depth = 64;         ///< orbit depth for S₀ in the envelope check
  bool record_trace = true;
  std::optional<double> dist;           ///< overrides set_distance at kDistDensity
};

/// Outcome of one Picard iteration ς_{n+1} = Ξς_n.
///
/// bpp_omega is always the Ω-side limit candidate and bpp_delta its image,
/// whichever side the seed started on.
struct SolveReport {
  Point seed;
  Side seed_side;
  Point bpp_omega;
  Point bpp_delta;
  double dist_used;
  std::vector<double> gap_sequence;  ///< d(ς_n, ς_{n+1}); empty without trace
  std::vector<Point> trace;          ///< ς_0 … ς_N; empty without trace
  double residual_bpp;               ///< |d(ς*, Ξς*) − dist|
  double residual_fp2;               ///< d(ς*, Ξ²ς*)
  std::size_t iterations;
  bool converged;
  std::optional<bool> prop24_bound_ok;  ///< nullopt: not checked
};

/// Runs the iteration. Converged once, at two consecutive Ω-side indices n,
/// both d(ς_n, ς_{n+2}) < pair_tol and |d(ς_n, ς_{n+1}) − dist| < gap_tol.
/// Running out of iterations is reported, not thrown.
SolveReport iterate(const CyclicMap& m, const Point& seed, const SolveOptions& opts = {});

struct EnvelopeCheck {
  bool ok;
  std::optional<std::size_t> first_violation;  ///< smallest violating n
  double s0;                                    ///< orbital sup of (ς₀, ς₁)
};

/// First n with gap_n − dist > ηⁿ (S₀ − dist) + tol, if any.
std::optional<std::size_t> gap_envelope_violation(const std::vector<double>& gaps, double dist,
                                                  double s0, double eta, double tol);

/// Checks every recorded gap against the geometric envelope
/// gap_n − dist ≤ ηⁿ (S₀ − dist) + gap_tol, S₀ = orbital_sup(ς₀, ς₁, depth).
/// Throws UsageError when the report carries no gap trace.
EnvelopeCheck prop24_bound_check(const SolveReport& report, const CyclicMap& m, double eta,
                                 std::size_t depth, double gap_tol = 1e-9);

enum class MultiStartStatus { Pass, Fail, Indeterminate };

struct MultiStartVerdict {
  MultiStartStatus status;
  std::optional<Point> limit;                          ///< common limit on pass
  std::optional<std::pair<Point, Point>> disagreeing;  ///< limits that differ
  std::vector<SolveReport> reports;
};

/// Solves from every seed (all in Ω) and checks that the limits agree within
/// 10 × pair_tol. Any non-converged solve makes the verdict indeterminate.
MultiStartVerdict multi_start_check(const CyclicMap& m, const std::vector<Point>& seeds,
                                    const SolveOptions& opts = {});

/// CSV with header `n,side,x_1..x_dim,gap`, numbers at 17 significant digits.
/// The final iterate has no successor, so its gap field is empty.
void write_trace_csv(std::ostream& os, const SolveReport& report);

}  // namespace proxima
