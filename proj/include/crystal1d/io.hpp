#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "crystal1d/intervals.hpp"
#include "crystal1d/minimize.hpp"
#include "crystal1d/oracle.hpp"
#include "crystal1d/potential.hpp"
#include "crystal1d/transport.hpp"

namespace crystal1d {

/// Result documents preserve insertion order so identical runs serialize
/// byte-identically.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "v1";

/// Builds a Potential from a structured document. Two forms are accepted:
///   {"family": "abs" | "power", "params": {...}}
/// and the general piecewise form
///   {"pieces": [{"domain": [lo, hi], "kind": ..., ...}, ...]}
/// with null domain endpoints meaning -inf / +inf. Kinds: "polynomial"
/// (coefficients, ascending), "power" (scale, exponent), "exponential"
/// (amplitude, rate, offset), "affine" (slope, intercept), "constant"
/// (value), "tabulated" (xs, ys). Optional top-level "antiderivative":
/// "exact" | "numeric". Throws SpecParseError on malformed input.
Potential potential_from_json(const Json& doc);

/// Reads and parses a potential spec file. Throws SpecParseError on missing
/// file or malformed content.
Potential load_potential(const std::string& path);

const char* case_tag_name(ZeroStructureTag tag);
const char* violation_kind_name(ViolationKind kind);

Json to_json(const IntervalUnion& u);
Json to_json(const EnergyBreakdown& e);
Json to_json(const MinimizerResult& r);
Json to_json(const AdmissibilityReport& report);
Json to_json(const TransportPlan& plan);
Json to_json(const OracleReport& report, const OracleConfig& cfg);

/// Fresh result document carrying the schema version and command name.
Json make_document(const std::string& command);

}  // namespace crystal1d
