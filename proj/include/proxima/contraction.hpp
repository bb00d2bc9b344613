#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "proxima/cyclic_map.hpp"

namespace proxima {

/// Density at which dist(Ω,Δ) is estimated when no override is given.
inline constexpr int kDistDensity = 101;

/// Which family of orbit pairs attains the orbital supremum.
enum class PairClass {
  OddSigma,   ///< d(Ξⁱς, Ξʲς), i − j odd
  OddTheta,   ///< d(Ξᵏθ, Ξˡθ), k − l odd
  EvenCross,  ///< d(Ξ^p ς, Ξ^q θ), p − q even
};
std::string to_string(PairClass c);

struct OrbitalSup {
  double value;
  std::size_t first_index;   ///< i, k or p
  std::size_t second_index;  ///< j, l or q
  PairClass attained_in;
  std::size_t depth_used;
  bool converged;  ///< last doubling moved the value by less than sup_tol
};

/// Supremum over the parity-constrained orbit pairs of ς ∈ Ω and θ ∈ Δ, with
/// indices starting at 0. Enumerates exhaustively at `depth`, then doubles the
/// depth (at most to 4×depth) until the value moves by less than `sup_tol`.
OrbitalSup orbital_sup(const CyclicMap& m, const Point& sigma, const Point& theta,
                       std::size_t depth, double sup_tol = 1e-12);

/// Same, from precomputed orbit tables of length ≥ 4×depth + 1.
OrbitalSup orbital_sup(const OrbitTable& sigma_orbit, const OrbitTable& theta_orbit,
                       std::size_t depth, double sup_tol = 1e-12);

enum class ContractionClass {
  Cyclic,   ///< d(Ξς,Ξθ) ≤ η d(ς,θ) + (1−η) dist
  Suzuki,   ///< … ≤ η max{d(ς,θ), d(ς,Ξς), d(θ,Ξθ)} + (1−η) dist
  Orbital,  ///< … ≤ η sup{orbit pairs} + (1−η) dist
};
std::string to_string(ContractionClass c);
std::optional<ContractionClass> parse_contraction_class(const std::string& s);

/// One sampled pair (ς, θ) evaluated against a class's bound.
struct PairCheck {
  Point sigma;
  Point theta;
  double lhs;    ///< d(Ξς, Ξθ)
  double bound;  ///< the class's bound term B
  double margin; ///< η B + (1−η) dist − lhs
};

struct ContractionOptions {
  int density = 11;
  std::size_t depth = 32;
  double tol = 1e-9;
  double sup_tol = 1e-12;
  std::optional<double> dist;  ///< overrides the set_distance estimate
};

/// Result of checking a contraction inequality on a sample grid. `holds`
/// means "holds on the checked grid", nothing more.
struct ContractionVerdict {
  ContractionClass contraction_class;
  double eta;
  bool holds;            ///< worst.margin ≥ −tol
  PairCheck worst;       ///< pair with the smallest margin
  PairCheck witness;     ///< pair demanding the largest η, independent of η
  std::optional<double> min_eta_estimate;  ///< nullopt: no η < 1 suffices
  double dist;
  std::size_t pairs_checked;
  int density;
  std::size_t depth;         ///< orbital class only
  bool sup_converged;        ///< every orbital sup converged (orbital class)
  std::size_t max_depth_used;
};

ContractionVerdict verify(const CyclicMap& m, ContractionClass cls, double eta,
                          const ContractionOptions& opts = {});

ContractionVerdict verify_cyclic(const CyclicMap& m, double eta, int density,
                                 ContractionOptions opts = {});
ContractionVerdict verify_suzuki(const CyclicMap& m, double eta, int density,
                                 ContractionOptions opts = {});
ContractionVerdict verify_orbital(const CyclicMap& m, double eta, int density,
                                  std::size_t depth, ContractionOptions opts = {});

/// Smallest η the sampled pairs allow, or nullopt when some pair forces η ≥ 1.
/// Pairs with B ≤ dist + tol constrain nothing if LHS ≤ dist + tol and force
/// nullopt otherwise. Returns tol when no pair constrains η at all.
std::optional<double> estimate_min_eta(const CyclicMap& m, ContractionClass cls, int density,
                                       std::size_t depth, ContractionOptions opts = {});

}  // namespace proxima
