#include "proxima/solver.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "proxima/errors.hpp"

namespace proxima {
namespace {

std::string format17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SolveReport iterate(const CyclicMap& m, const Point& seed, const SolveOptions& opts) {
  if (opts.max_iter < 4) throw UsageError("max_iter must be >= 4");
  if (!(opts.gap_tol > 0.0) || !(opts.pair_tol > 0.0)) {
    throw UsageError("solver tolerances must be positive");
  }
  const Side seed_side = m.side_of(seed);
  const std::size_t parity = seed_side == Side::Omega ? 0 : 1;
  const double dist =
      opts.dist ? *opts.dist : set_distance(m.omega(), m.delta(), kDistDensity).dist;

  std::vector<Point> xs{seed};
  std::vector<double> gaps;
  Side side = seed_side;
  bool previous_ok = false;
  bool converged = false;
  std::size_t anchor = parity;

  while (gaps.size() < opts.max_iter) {
    const std::size_t k = xs.size();
    Point next = m.apply(xs.back());
    side = other(side);
    if (!m.region(side).contains(next)) {
      std::ostringstream os;
      os << "iterate " << k << " = " << next.to_string() << " is not in " << to_string(side);
      throw CyclicityError(k, os.str());
    }
    gaps.push_back(distance(xs.back(), next));
    xs.push_back(std::move(next));

    if (k < 2) continue;
    const std::size_t n = k - 2;
    if (n % 2 != parity) continue;
    const bool ok = distance(xs[n], xs[n + 2]) < opts.pair_tol &&
                    std::abs(gaps[n] - dist) < opts.gap_tol;
    if (ok && previous_ok) {
      converged = true;
      anchor = n;
      break;
    }
    previous_ok = ok;
    anchor = n;
  }
  // Without convergence, report the latest Ω-side iterate that has an image.
  if (!converged) {
    std::size_t last = xs.size() - 2;
    if (last % 2 != parity) --last;
    anchor = last;
  }

  const Point& star = xs[anchor];
  const Point image = m.apply(star);
  const Point image2 = m.apply(image);
  SolveReport r{seed,
                seed_side,
                star,
                image,
                dist,
                {},
                {},
                std::abs(distance(star, image) - dist),
                distance(star, image2),
                gaps.size(),
                converged,
                std::nullopt};
  if (opts.record_trace) {
    r.gap_sequence = std::move(gaps);
    r.trace = std::move(xs);
  }
  if (opts.eta_for_bound) {
    r.prop24_bound_ok = prop24_bound_check(r, m, *opts.eta_for_bound, opts.bound_depth,
                                           opts.gap_tol)
                            .ok;
  }
  return r;
}

std::optional<std::size_t> gap_envelope_violation(const std::vector<double>& gaps, double dist,
                                                  double s0, double eta, double tol) {
  for (std::size_t n = 0; n < gaps.size(); ++n) {
    const double envelope = std::pow(eta, static_cast<double>(n)) * (s0 - dist) + tol;
    if (gaps[n] - dist > envelope) return n;
  }
  return std::nullopt;
}

EnvelopeCheck prop24_bound_check(const SolveReport& report, const CyclicMap& m, double eta,
                                 std::size_t depth, double gap_tol) {
  if (report.gap_sequence.empty()) {
    throw UsageError("envelope check needs a report with a recorded gap trace");
  }
  if (!(eta > 0.0 && eta < 1.0)) throw UsageError("eta must lie in (0, 1)");
  const Point first = m.apply(report.seed);
  const OrbitalSup s0 = report.seed_side == Side::Omega
                            ? orbital_sup(m, report.seed, first, depth)
                            : orbital_sup(m, first, report.seed, depth);
  const auto bad =
      gap_envelope_violation(report.gap_sequence, report.dist_used, s0.value, eta, gap_tol);
  return {!bad.has_value(), bad, s0.value};
}

MultiStartVerdict multi_start_check(const CyclicMap& m, const std::vector<Point>& seeds,
                                    const SolveOptions& opts) {
  if (seeds.size() < 2) throw UsageError("multi-start check needs at least two seeds");
  for (const auto& s : seeds) {
    if (!m.omega().contains(s)) {
      throw UsageError("multi-start seed " + s.to_string() + " is not in omega");
    }
  }
  MultiStartVerdict v{MultiStartStatus::Pass, std::nullopt, std::nullopt, {}};
  SolveOptions local = opts;
  if (!local.dist) local.dist = set_distance(m.omega(), m.delta(), kDistDensity).dist;
  for (const auto& s : seeds) v.reports.push_back(iterate(m, s, local));

  for (const auto& r : v.reports) {
    if (!r.converged) {
      v.status = MultiStartStatus::Indeterminate;
      return v;
    }
  }
  const double agree = 10.0 * opts.pair_tol;
  for (std::size_t i = 0; i < v.reports.size(); ++i) {
    for (std::size_t j = i + 1; j < v.reports.size(); ++j) {
      if (distance(v.reports[i].bpp_omega, v.reports[j].bpp_omega) > agree) {
        v.status = MultiStartStatus::Fail;
        v.disagreeing = std::make_pair(v.reports[i].bpp_omega, v.reports[j].bpp_omega);
        return v;
      }
    }
  }
  v.limit = v.reports.front().bpp_omega;
  return v;
}

void write_trace_csv(std::ostream& os, const SolveReport& report) {
  if (report.trace.empty()) throw UsageError("report has no recorded trace");
  const int dim = report.seed.dim();
  os << "n,side";
  for (int i = 1; i <= dim; ++i) os << ",x_" << i;
  os << ",gap\n";
  Side side = report.seed_side;
  for (std::size_t n = 0; n < report.trace.size(); ++n) {
    os << n << ',' << to_string(side);
    for (int i = 0; i < dim; ++i) os << ',' << format17(report.trace[n][i]);
    os << ',';
    if (n < report.gap_sequence.size()) os << format17(report.gap_sequence[n]);
    os << '\n';
    side = other(side);
  }
}

}  // namespace proxima
