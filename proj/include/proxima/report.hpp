#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "proxima/contraction.hpp"
#include "proxima/lemma_harness.hpp"
#include "proxima/solver.hpp"

namespace proxima {

inline constexpr int kReportVersion = 1;
inline constexpr const char* kToolVersion = "proxima 0.1.0";

nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const ProximalPair& p);
nlohmann::json to_json(const CyclicityVerdict& v);
nlohmann::json to_json(const BoundednessVerdict& v);
nlohmann::json to_json(const OrbitalSup& s);
nlohmann::json to_json(const ContractionVerdict& v);
nlohmann::json to_json(const SolveReport& r);
nlohmann::json to_json(const OrbitTable& t);

/// Human-readable block.
void print(std::ostream& os, const CyclicityVerdict& v);
void print(std::ostream& os, const BoundednessVerdict& v);
void print(std::ostream& os, const ContractionVerdict& v);
void print(std::ostream& os, const SolveReport& r);
void print(std::ostream& os, const OrbitTable& t);

/// Writes the machine-readable block after a `---` separator line.
void emit_json_block(std::ostream& os, const nlohmann::json& report);

}  // namespace proxima
