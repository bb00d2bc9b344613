#include "proxima/report.hpp"

#include <cstdio>
#include <ostream>

namespace proxima {
namespace {

using nlohmann::json;

std::string num(double v) { return format_number(v); }

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json("none");
}

json pair_check(const PairCheck& c) {
  return {{"sigma", to_json(c.sigma)},
          {"theta", to_json(c.theta)},
          {"lhs", c.lhs},
          {"bound", c.bound},
          {"margin", c.margin}};
}

}  // namespace

json to_json(const Point& p) {
  return json(std::vector<double>(p.coords().begin(), p.coords().end()));
}

json to_json(const ProximalPair& p) {
  return {{"a", to_json(p.a)}, {"b", to_json(p.b)}, {"separation", p.separation}};
}

json to_json(const CyclicityVerdict& v) {
  json out{{"pass", v.pass}};
  if (v.witness) {
    out["witness"] = to_json(*v.witness);
    out["witness_side"] = to_string(*v.witness_side);
    out["reason"] = v.reason;
  }
  return out;
}

json to_json(const BoundednessVerdict& v) {
  json out{{"pass", v.pass},
           {"scope", "bounded up to depth " + std::to_string(v.depth)},
           {"depth", v.depth},
           {"seeds_checked", v.seeds_checked},
           {"reference_diameter", v.reference_diameter},
           {"max_orbit_diameter", v.max_orbit_diameter}};
  if (v.worst_seed) out["worst_seed"] = to_json(*v.worst_seed);
  return out;
}

json to_json(const OrbitalSup& s) {
  return {{"value", s.value},
          {"attained_at", {s.first_index, s.second_index}},
          {"class", to_string(s.attained_in)},
          {"depth_used", s.depth_used},
          {"converged", s.converged}};
}

json to_json(const ContractionVerdict& v) {
  json out{{"class", to_string(v.contraction_class)},
           {"eta", v.eta},
           {"holds", v.holds},
           {"scope", "holds on the checked grid"},
           {"worst_pair", pair_check(v.worst)},
           {"worst_margin", v.worst.margin},
           {"witness", pair_check(v.witness)},
           {"min_eta_estimate", optional_number(v.min_eta_estimate)},
           {"dist", v.dist},
           {"pairs_checked", v.pairs_checked},
           {"density", v.density}};
  if (v.contraction_class == ContractionClass::Orbital) {
    out["depth"] = v.depth;
    out["index_origin"] = 0;
    out["sup_converged"] = v.sup_converged;
    out["max_depth_used"] = v.max_depth_used;
  }
  return out;
}

json to_json(const SolveReport& r) {
  json out{{"seed", to_json(r.seed)},
           {"seed_side", to_string(r.seed_side)},
           {"bpp_omega", to_json(r.bpp_omega)},
           {"bpp_delta", to_json(r.bpp_delta)},
           {"dist_used", r.dist_used},
           {"residual_bpp", r.residual_bpp},
           {"residual_fp2", r.residual_fp2},
           {"iterations", r.iterations},
           {"converged", r.converged},
           {"gap_sequence", r.gap_sequence}};
  out["prop24_bound_ok"] = r.prop24_bound_ok ? json(*r.prop24_bound_ok) : json("not checked");
  return out;
}

json to_json(const OrbitTable& t) {
  json entries = json::array();
  for (std::size_t k = 0; k < t.entries.size(); ++k) {
    entries.push_back({{"n", k}, {"side", to_string(t.sides[k])}, {"point", to_json(t.entries[k])}});
  }
  return {{"seed", to_json(t.seed)}, {"depth", t.depth()}, {"entries", entries}};
}

void print(std::ostream& os, const CyclicityVerdict& v) {
  os << "cyclicity: " << (v.pass ? "pass" : "FAIL") << '\n';
  if (v.witness) {
    os << "  witness (" << to_string(*v.witness_side) << "): " << v.witness->to_string() << '\n'
       << "  " << v.reason << '\n';
  }
}

void print(std::ostream& os, const BoundednessVerdict& v) {
  os << "boundedness: " << (v.pass ? "pass" : "FAIL") << " (bounded up to depth " << v.depth
     << ", " << v.seeds_checked << " seeds)\n"
     << "  max orbit diameter " << num(v.max_orbit_diameter) << ", reference diameter "
     << num(v.reference_diameter) << '\n';
}

void print(std::ostream& os, const ContractionVerdict& v) {
  os << to_string(v.contraction_class) << " contraction at eta = " << num(v.eta) << ": "
     << (v.holds ? "holds on the checked grid" : "FAILS") << '\n'
     << "  dist = " << num(v.dist) << ", " << v.pairs_checked << " pairs at density "
     << v.density;
  if (v.contraction_class == ContractionClass::Orbital) {
    os << ", depth " << v.depth << " (max used " << v.max_depth_used
       << (v.sup_converged ? ", all sups converged" : ", some sups not converged") << ')';
  }
  os << '\n'
     << "  worst margin " << num(v.worst.margin) << " at sigma = " << v.worst.sigma.to_string()
     << ", theta = " << v.worst.theta.to_string() << '\n'
     << "  witness sigma = " << v.witness.sigma.to_string()
     << ", theta = " << v.witness.theta.to_string() << ": lhs " << num(v.witness.lhs)
     << ", bound " << num(v.witness.bound) << '\n'
     << "  min eta estimate: "
     << (v.min_eta_estimate ? num(*v.min_eta_estimate) : std::string("none")) << '\n';
}

void print(std::ostream& os, const SolveReport& r) {
  os << "solve from " << r.seed.to_string() << " (" << to_string(r.seed_side) << "): "
     << (r.converged ? "converged" : "NOT converged") << " after " << r.iterations
     << " iterations\n"
     << "  best proximity point in omega: " << r.bpp_omega.to_string() << '\n'
     << "  its image in delta:            " << r.bpp_delta.to_string() << '\n'
     << "  dist used " << num(r.dist_used) << ", residual_bpp " << num(r.residual_bpp)
     << ", residual_fp2 " << num(r.residual_fp2) << '\n';
  if (r.prop24_bound_ok) {
    os << "  gap envelope: " << (*r.prop24_bound_ok ? "ok" : "VIOLATED") << '\n';
  }
}

void print(std::ostream& os, const OrbitTable& t) {
  os << "orbit of " << t.seed.to_string() << " to depth " << t.depth() << '\n';
  for (std::size_t k = 0; k < t.entries.size(); ++k) {
    os << "  " << k << ' ' << to_string(t.sides[k]) << ' ' << t.entries[k].to_string() << '\n';
  }
}

void emit_json_block(std::ostream& os, const json& report) {
  os << "---\n" << report.dump(2) << '\n';
}

}  // namespace proxima
