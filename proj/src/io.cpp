#include "crystal1d/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <vector>

#include "crystal1d/errors.hpp"

namespace crystal1d {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double require_number(const Json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number()) {
    throw SpecParseError(std::string("expected numeric field \"") + key + "\"");
  }
  return obj[key].get<double>();
}

double number_or(const Json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) {
    throw SpecParseError(std::string("field \"") + key + "\" must be a number");
  }
  return obj[key].get<double>();
}

std::vector<double> require_number_array(const Json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_array()) {
    throw SpecParseError(std::string("expected array field \"") + key + "\"");
  }
  std::vector<double> out;
  out.reserve(obj[key].size());
  for (const Json& v : obj[key]) {
    if (!v.is_number()) {
      throw SpecParseError(std::string("array \"") + key + "\" must hold numbers only");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

double domain_endpoint(const Json& v, bool is_lower) {
  if (v.is_null()) return is_lower ? -kInf : kInf;
  if (!v.is_number()) throw SpecParseError("domain endpoints must be numbers or null");
  return v.get<double>();
}

Formula formula_from_json(const Json& piece) {
  if (!piece.contains("kind") || !piece["kind"].is_string()) {
    throw SpecParseError("piece needs a string \"kind\"");
  }
  const std::string kind = piece["kind"].get<std::string>();
  if (kind == "polynomial") {
    return Polynomial{require_number_array(piece, "coefficients")};
  }
  if (kind == "power") {
    return PowerAbs{number_or(piece, "scale", 1.0), require_number(piece, "exponent")};
  }
  if (kind == "exponential") {
    return Exponential{number_or(piece, "amplitude", 1.0), require_number(piece, "rate"),
                       number_or(piece, "offset", 0.0)};
  }
  if (kind == "affine") {
    return Polynomial{{number_or(piece, "intercept", 0.0), require_number(piece, "slope")}};
  }
  if (kind == "constant") {
    return Polynomial{{require_number(piece, "value")}};
  }
  if (kind == "tabulated") {
    return Tabulated(require_number_array(piece, "xs"), require_number_array(piece, "ys"));
  }
  throw SpecParseError("unknown formula kind \"" + kind + "\"");
}

AntiderivativeMode mode_from_json(const Json& doc) {
  if (!doc.contains("antiderivative")) return AntiderivativeMode::Exact;
  const Json& v = doc["antiderivative"];
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "exact") return AntiderivativeMode::Exact;
    if (s == "numeric") return AntiderivativeMode::Numeric;
  }
  throw SpecParseError("\"antiderivative\" must be \"exact\" or \"numeric\"");
}

Potential family_from_json(const Json& doc) {
  const std::string family = doc["family"].get<std::string>();
  const Json params = doc.contains("params") ? doc["params"] : Json::object();
  if (!params.is_object()) throw SpecParseError("\"params\" must be an object");
  if (family == "abs") {
    return make_abs(number_or(params, "scale", 1.0));
  }
  if (family == "power") {
    return make_power(require_number(params, "exponent"), number_or(params, "scale", 1.0));
  }
  throw SpecParseError("unknown potential family \"" + family + "\"");
}

}  // namespace

Potential potential_from_json(const Json& doc) {
  try {
    if (!doc.is_object()) throw SpecParseError("potential document must be an object");
    const AntiderivativeMode mode = mode_from_json(doc);
    if (doc.contains("family")) {
      if (!doc["family"].is_string()) throw SpecParseError("\"family\" must be a string");
      Potential p = family_from_json(doc);
      return mode == AntiderivativeMode::Exact ? p : p.with_mode(mode);
    }
    if (!doc.contains("pieces") || !doc["pieces"].is_array() || doc["pieces"].empty()) {
      throw SpecParseError("potential document needs \"family\" or a nonempty \"pieces\" array");
    }
    std::vector<Piece> pieces;
    pieces.reserve(doc["pieces"].size());
    for (const Json& item : doc["pieces"]) {
      if (!item.is_object()) throw SpecParseError("each piece must be an object");
      if (!item.contains("domain") || !item["domain"].is_array() || item["domain"].size() != 2) {
        throw SpecParseError("each piece needs a two-element \"domain\"");
      }
      pieces.push_back({domain_endpoint(item["domain"][0], true),
                        domain_endpoint(item["domain"][1], false), formula_from_json(item)});
    }
    return Potential(std::move(pieces), mode);
  } catch (const std::invalid_argument& e) {
    // Formula construction rejects malformed parameters (e.g. unsorted
    // tabulated nodes); surface that as a parse failure.
    throw SpecParseError(e.what());
  }
}

Potential load_potential(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot open potential file: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecParseError("potential file " + path + " is not valid JSON: " + e.what());
  }
  return potential_from_json(doc);
}

const char* case_tag_name(ZeroStructureTag tag) {
  switch (tag) {
    case ZeroStructureTag::ZeroOnRightHalfLine:
      return "zero-on-right-half-line";
    case ZeroStructureTag::ZeroOnLeftPositiveOnRight:
      return "zero-on-left-positive-on-right";
    case ZeroStructureTag::PositiveOnBothSides:
      return "positive-on-both-sides";
  }
  return "unknown";
}

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NegativeValue:
      return "negative-value";
    case ViolationKind::NonzeroAtOrigin:
      return "nonzero-at-origin";
    case ViolationKind::MonotonicityBreakRight:
      return "monotonicity-break-right";
    case ViolationKind::MonotonicityBreakLeft:
      return "monotonicity-break-left";
  }
  return "unknown";
}

Json to_json(const IntervalUnion& u) {
  Json out = Json::array();
  for (const Interval& part : u.intervals()) out.push_back(Json::array({part.lo, part.hi}));
  return out;
}

Json to_json(const EnergyBreakdown& e) {
  Json out;
  out["surface"] = e.surface;
  out["potential"] = e.potential;
  out["total"] = e.total;
  return out;
}

Json to_json(const MinimizerResult& r) {
  Json out;
  out["case"] = case_tag_name(r.case_tag);
  out["alpha_lo"] = r.alpha_lo;
  out["alpha_hi"] = r.alpha_hi;
  out["alpha"] = r.representative_alpha;
  const Interval& part = r.minimizer.intervals().front();
  out["interval"] = Json::array({part.lo, part.hi});
  out["energy"] = to_json(r.energy);
  out["residual"] = r.stationarity_residual;
  out["origin_in_closure"] = r.origin_in_closure;
  return out;
}

Json to_json(const AdmissibilityReport& report) {
  Json out;
  out["is_admissible"] = report.is_admissible;
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    Json item;
    item["location"] = v.location;
    item["kind"] = violation_kind_name(v.kind);
    violations.push_back(std::move(item));
  }
  out["violations"] = std::move(violations);
  out["samples_used"] = report.samples_used;
  return out;
}

Json to_json(const TransportPlan& plan) {
  Json out;
  out["source"] = to_json(plan.source);
  out["target"] = to_json(plan.target);
  Json segments = Json::array();
  for (const TransportSegment& seg : plan.segments) {
    Json item;
    item["source"] = Json::array({seg.source.lo, seg.source.hi});
    item["shift"] = seg.shift;
    segments.push_back(std::move(item));
  }
  out["segments"] = std::move(segments);
  return out;
}

Json to_json(const OracleReport& report, const OracleConfig& cfg) {
  Json out;
  Json config;
  config["window"] = cfg.window;
  config["grid_step"] = cfg.grid_step;
  config["k_max"] = cfg.k_max;
  config["mass"] = cfg.mass;
  config["mass_slack"] = cfg.effective_mass_slack();
  out["config"] = std::move(config);
  out["candidates_evaluated"] = report.candidates_evaluated;
  Json best;
  best["union"] = to_json(report.best_union);
  best["energy"] = to_json(report.best_energy);
  best["single_interval"] = report.best_is_single_interval;
  best["touches_window"] = report.best_touches_window;
  out["best"] = std::move(best);
  out["analytic_energy"] = report.analytic_energy;
  out["gap"] = report.gap;
  out["discretization_bound"] = report.discretization_bound;
  Json conv;
  conv["checked"] = report.convexification_checked;
  conv["failures"] = report.convexification_failures;
  out["convexification"] = std::move(conv);
  return out;
}

Json make_document(const std::string& command) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = command;
  return doc;
}

}  // namespace crystal1d
