#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "proxima/region.hpp"

namespace proxima {

/// Sequences ς_r, ρ_r in Ω and θ_r in Δ, all of one length.
struct SequenceTriple {
  std::vector<Point> sigma;
  std::vector<Point> rho;
  std::vector<Point> theta;

  std::size_t length() const { return sigma.size(); }
};

/// Builds ς_r, ρ_r → proximal.a and θ_r → proximal.b. Each term moves from the
/// proximal point toward a random sampled point of its region by a fraction
/// amplitude·u·decayʳ with u ∈ [1/2, 1], which stays inside a convex region.
/// Throws UsageError for non-convex regions.
SequenceTriple generate_converging_triple(const Region& omega, const Region& delta,
                                          const ProximalPair& proximal, std::size_t length,
                                          double decay, std::uint64_t seed,
                                          double amplitude = 1.0);

struct LemmaOptions {
  double tol = 1e-9;
  double min_r_squared = 0.9;
};

/// Geometric-decay fit used to decide that a deviation sequence |d_r − dist|
/// tends to 0 on a finite horizon.
struct EnvelopeFit {
  bool holds;
  double slope;      ///< of log envelope per index
  double r_squared;
  double final_term;
};

/// Fits log of the suffix-maximum envelope of `deviations` against the index.
/// Holds when slope < 0, R² ≥ min_r_squared and the last term is ≤ 10·tol, or
/// when every term is already ≤ 10·tol.
EnvelopeFit fit_convergence_envelope(const std::vector<double>& deviations,
                                     const LemmaOptions& opts = {});

enum class LemmaStatus {
  Pass,
  Precondition,      ///< the input does not satisfy the lemma's hypotheses
  NotWithinHorizon,  ///< hypotheses hold, conclusion not reached in the data
};
std::string to_string(LemmaStatus s);

struct CloseVerdict {
  LemmaStatus status;
  std::vector<std::pair<double, std::optional<std::size_t>>> thresholds;  ///< ε → R
  EnvelopeFit sigma_theta;
  EnvelopeFit rho_theta;
  std::string detail;
};

/// If d(ς_r,θ_r) → dist and d(ρ_r,θ_r) → dist then d(ς_r,ρ_r) → 0, checked as:
/// for each ε there is R with d(ς_r,ρ_r) ≤ ε for all r ≥ R within the horizon.
CloseVerdict check_lemma_close(const SequenceTriple& t, double dist,
                               const std::vector<double>& eps_schedule,
                               const LemmaOptions& opts = {});

struct CauchyVerdict {
  LemmaStatus status;
  std::optional<std::size_t> m0;  ///< hypothesis (i) index
  std::optional<std::size_t> m1;  ///< least M₁ with d(ς_s,ρ_r) ≤ ε for s > r ≥ M₁
  EnvelopeFit rho_theta;
  std::string detail;
};

/// Finite-horizon form of the Cauchy-type lemma for a single ε.
CauchyVerdict check_lemma_cauchy(const std::vector<Point>& sigma, const std::vector<Point>& rho,
                                 const std::vector<Point>& theta, double dist, double eps,
                                 const LemmaOptions& opts = {});

}  // namespace proxima
