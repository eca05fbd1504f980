// Command-line front end: validates potentials, runs the interval optimizer,
// the brute-force oracle, the transport property campaign, and mass sweeps.
// Exit codes: 0 success, 1 verification failure (inadmissible potential or a
// failed check), 2 input error. Identical inputs produce byte-identical
// output documents.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crystal1d/energy.hpp"
#include "crystal1d/errors.hpp"
#include "crystal1d/io.hpp"
#include "crystal1d/minimize.hpp"
#include "crystal1d/oracle.hpp"
#include "crystal1d/parallel.hpp"
#include "crystal1d/transport.hpp"

namespace {

using crystal1d::Json;

constexpr int kExitSuccess = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

constexpr int kValidateSamples = 4001;
constexpr int kTransportTrials = 200;
constexpr int kPushforwardBins = 64;
constexpr int kContractionSamples = 128;
constexpr std::uint64_t kCampaignSeed = 20260819;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

void emit_document(const Json& doc, const std::string& out_path) {
  write_output(doc.dump(2) + "\n", out_path);
}

int emit_error(const std::string& command, const std::string& type, const std::string& message,
               const std::string& out_path, int code) {
  Json doc = crystal1d::make_document(command);
  Json err;
  err["type"] = type;
  err["message"] = message;
  doc["error"] = std::move(err);
  try {
    emit_document(doc, out_path);
  } catch (const std::exception&) {
    std::cerr << message << "\n";
  }
  return code;
}

// Platform-independent uniform double in [0, 1): the standard distribution
// objects are implementation-defined, which would break byte-identical
// documents across toolchains.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> parse_mass_list(const std::string& text) {
  std::vector<double> masses;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("mass list entry is not a number: \"" + item + "\"");
    }
    if (used != item.size()) {
      throw std::invalid_argument("mass list entry is not a number: \"" + item + "\"");
    }
    masses.push_back(value);
  }
  if (masses.empty()) throw std::invalid_argument("mass list is empty");
  return masses;
}

std::string format_row(const std::vector<double>& values) {
  std::string row;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) row += '\t';
    row += Json(values[i]).dump();  // shortest round-trip representation
  }
  return row + "\n";
}

int run_validate(const std::string& potential_path, double window, const std::string& out_path) {
  const crystal1d::Potential p = crystal1d::load_potential(potential_path);
  const crystal1d::AdmissibilityReport report =
      crystal1d::check_admissible(p, window, kValidateSamples);

  Json doc = crystal1d::make_document("validate");
  doc["potential_file"] = potential_path;
  doc["window"] = window;
  doc["admissibility"] = crystal1d::to_json(report);
  if (report.is_admissible) {
    const crystal1d::ZeroStructure zs = crystal1d::classify_zero_structure(p, window);
    Json structure;
    structure["tag"] = crystal1d::case_tag_name(zs.tag);
    structure["witness_right"] = zs.witness_right ? Json(*zs.witness_right) : Json(nullptr);
    structure["witness_left"] = zs.witness_left ? Json(*zs.witness_left) : Json(nullptr);
    structure["scanned_to"] = zs.scanned_to;
    doc["zero_structure"] = std::move(structure);
  }
  emit_document(doc, out_path);
  return report.is_admissible ? kExitSuccess : kExitVerificationFailure;
}

int run_minimize(const std::string& potential_path, double mass, double tol,
                 const std::string& format, const std::string& out_path) {
  const crystal1d::Potential p = crystal1d::load_potential(potential_path);
  const crystal1d::MinimizerResult result = crystal1d::minimize_translation(p, mass, tol);

  if (format == "tabular") {
    // Plot data: the translated-interval energy profile h(a) = G(a+m) - G(a)
    // over a stretch covering the bracket [-m, 0] with margin.
    std::string text = "# a\th\ttotal\n";
    const double lo = -2.0 * mass;
    const double hi = mass;
    const int rows = 601;
    for (int i = 0; i < rows; ++i) {
      const double a = lo + (hi - lo) * static_cast<double>(i) / (rows - 1);
      const double h = crystal1d::interval_energy_profile(p, mass, a);
      text += format_row({a, h, 2.0 + h});
    }
    write_output(text, out_path);
    return kExitSuccess;
  }

  Json doc = crystal1d::make_document("minimize");
  doc["potential_file"] = potential_path;
  doc["mass"] = mass;
  doc["tol"] = tol;
  doc["result"] = crystal1d::to_json(result);
  doc["origin_membership"] = crystal1d::verify_origin_membership(result, p);
  emit_document(doc, out_path);
  return kExitSuccess;
}

int run_oracle(const std::string& potential_path, double mass, double tol_energy,
               std::optional<double> window, double grid_step, int k_max,
               const std::string& out_path) {
  const crystal1d::Potential p = crystal1d::load_potential(potential_path);
  crystal1d::OracleConfig cfg;
  cfg.mass = mass;
  cfg.window = window ? *window : 4.0 * std::max(1.0, mass);
  cfg.grid_step = grid_step;
  cfg.k_max = k_max;
  const crystal1d::OracleReport report = crystal1d::oracle_minimize(p, cfg);
  const double tol = std::max(tol_energy, report.discretization_bound);
  const bool verified = report.best_is_single_interval && report.gap <= tol;

  Json doc = crystal1d::make_document("oracle");
  doc["potential_file"] = potential_path;
  doc["report"] = crystal1d::to_json(report, cfg);
  doc["tolerance_used"] = tol;
  doc["verified"] = verified;
  emit_document(doc, out_path);
  return verified ? kExitSuccess : kExitVerificationFailure;
}

// Random unions in [0, window] for the transport campaign: up to four
// intervals from sorted uniform endpoints, re-drawn if everything collapses.
crystal1d::IntervalUnion random_positive_union(std::mt19937_64& rng, double window) {
  while (true) {
    const int k = 1 + static_cast<int>(rng() % 4);
    std::vector<double> cuts(static_cast<std::size_t>(2 * k));
    for (double& c : cuts) c = window * uniform01(rng);
    std::sort(cuts.begin(), cuts.end());
    std::vector<crystal1d::Interval> parts;
    for (int j = 0; j < k; ++j) {
      parts.push_back({cuts[static_cast<std::size_t>(2 * j)],
                       cuts[static_cast<std::size_t>(2 * j + 1)]});
    }
    crystal1d::IntervalUnion u = crystal1d::canonicalize(std::move(parts));
    if (!u.empty() && u.measure() > 1e-6) return u;
  }
}

int run_transport(const std::string& potential_path, double window, const std::string& out_path) {
  const crystal1d::Potential p = crystal1d::load_potential(potential_path);

  std::mt19937_64 rng(kCampaignSeed);
  double max_pushforward = 0.0;
  double max_mass_imbalance = 0.0;
  double max_identity_gap = 0.0;
  double max_consistency_gap = 0.0;
  bool contraction_ok = true;
  bool rearrangement_ok = true;
  Json example = Json(nullptr);

  for (int trial = 0; trial < kTransportTrials; ++trial) {
    const crystal1d::IntervalUnion e_plus = random_positive_union(rng, window);
    const crystal1d::TransportPlan plan = crystal1d::build_monotone_map(e_plus);
    if (trial == 0) example = crystal1d::to_json(plan);

    max_pushforward = std::max(max_pushforward,
                               crystal1d::verify_pushforward(plan, kPushforwardBins));
    contraction_ok = contraction_ok && crystal1d::verify_contraction(plan, kContractionSamples);
    max_mass_imbalance =
        std::max(max_mass_imbalance, std::fabs(plan.source.measure() - plan.target.measure()));

    // Change of variables across the plan: moving the mass does not change
    // the potential energy it carries.
    double moved = 0.0;
    for (const crystal1d::TransportSegment& seg : plan.segments) {
      moved += p.integrate(seg.source.lo + seg.shift, seg.source.hi + seg.shift);
    }
    const double target_side = crystal1d::potential_energy(p, plan.target);
    max_identity_gap = std::max(max_identity_gap, std::fabs(moved - target_side));

    // The rearrangement gap equals the transport-side savings integral.
    const crystal1d::RearrangementReport rearr = crystal1d::rearrangement_check(p, e_plus);
    rearrangement_ok = rearrangement_ok && rearr.holds;
    double savings = 0.0;
    for (const crystal1d::TransportSegment& seg : plan.segments) {
      savings += p.integrate(seg.source.lo, seg.source.hi) -
                 p.integrate(seg.source.lo + seg.shift, seg.source.hi + seg.shift);
    }
    max_consistency_gap = std::max(
        max_consistency_gap, std::fabs((rearr.positive.lhs - rearr.positive.rhs) - savings));
  }

  const bool all_passed = max_pushforward <= 1e-10 && contraction_ok &&
                          max_mass_imbalance <= 1e-12 && max_identity_gap <= 1e-8 &&
                          max_consistency_gap <= 1e-8 && rearrangement_ok;

  Json doc = crystal1d::make_document("transport");
  doc["potential_file"] = potential_path;
  doc["window"] = window;
  doc["trials"] = kTransportTrials;
  Json checks;
  checks["max_pushforward_discrepancy"] = max_pushforward;
  checks["contraction_all"] = contraction_ok;
  checks["max_mass_imbalance"] = max_mass_imbalance;
  checks["max_transport_identity_gap"] = max_identity_gap;
  checks["max_rearrangement_consistency_gap"] = max_consistency_gap;
  checks["rearrangement_all"] = rearrangement_ok;
  doc["checks"] = std::move(checks);
  doc["example_plan"] = std::move(example);
  doc["all_passed"] = all_passed;
  emit_document(doc, out_path);
  return all_passed ? kExitSuccess : kExitVerificationFailure;
}

int run_sweep(const std::string& potential_path, const std::vector<double>& masses, double tol,
              const std::string& format, const std::string& out_path) {
  const crystal1d::Potential p = crystal1d::load_potential(potential_path);
  for (double m : masses) {
    if (!(m > 0.0)) throw crystal1d::MassNonpositiveError("sweep masses must be positive");
  }

  // Masses are independent; rows are assembled in input order regardless of
  // which worker finished first.
  std::vector<crystal1d::MinimizerResult> results(masses.size());
  std::vector<std::exception_ptr> failures(masses.size());
  crystal1d::parallel_chunks(static_cast<std::int64_t>(masses.size()),
                             [&](std::int64_t begin, std::int64_t end, int) {
                               for (std::int64_t i = begin; i < end; ++i) {
                                 try {
                                   results[static_cast<std::size_t>(i)] =
                                       crystal1d::minimize_translation(
                                           p, masses[static_cast<std::size_t>(i)], tol);
                                 } catch (...) {
                                   failures[static_cast<std::size_t>(i)] =
                                       std::current_exception();
                                 }
                               }
                             });
  for (const std::exception_ptr& e : failures) {
    if (e) std::rethrow_exception(e);
  }

  if (format == "tabular") {
    std::string text = "# mass\talpha\talpha_lo\talpha_hi\ttotal\tresidual\n";
    for (std::size_t i = 0; i < masses.size(); ++i) {
      const crystal1d::MinimizerResult& r = results[i];
      text += format_row({masses[i], r.representative_alpha, r.alpha_lo, r.alpha_hi,
                          r.energy.total, r.stationarity_residual});
    }
    write_output(text, out_path);
    return kExitSuccess;
  }

  Json doc = crystal1d::make_document("sweep");
  doc["potential_file"] = potential_path;
  doc["tol"] = tol;
  Json rows = Json::array();
  for (std::size_t i = 0; i < masses.size(); ++i) {
    Json row;
    row["mass"] = masses[i];
    row["result"] = crystal1d::to_json(results[i]);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  emit_document(doc, out_path);
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free-energy minimization for one-dimensional crystal shapes"};
  app.require_subcommand(1);

  std::string potential_path;
  std::string mass_text = "1";
  std::string out_path;
  std::string format = "structured";
  double tol = 1e-9;
  double validate_window = 8.0;
  std::optional<double> oracle_window;
  double grid_step = 0.02;
  int k_max = 3;
  double transport_window = 4.0;

  CLI::App* validate = app.add_subcommand(
      "validate", "Check the potential hypotheses (origin value, sign, monotonicity)");
  validate->add_option("--potential", potential_path, "Potential spec file")->required();
  validate->add_option("--window", validate_window, "Sampling window [-w, w]");
  validate->add_option("--out", out_path, "Output file (default: stdout)");

  CLI::App* minimize =
      app.add_subcommand("minimize", "Find the optimal translation of the interval (0, m)");
  minimize->add_option("--potential", potential_path, "Potential spec file")->required();
  minimize->add_option("--mass", mass_text, "Interval mass m > 0")->required();
  minimize->add_option("--tol", tol, "Plateau resolution in translation units");
  minimize->add_option("--format", format, "structured | tabular (h(a) profile)")
      ->check(CLI::IsMember({"structured", "tabular"}));
  minimize->add_option("--out", out_path, "Output file (default: stdout)");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Exhaustive grid search over multi-interval competitors");
  oracle->add_option("--potential", potential_path, "Potential spec file")->required();
  oracle->add_option("--mass", mass_text, "Interval mass m > 0")->required();
  oracle->add_option("--tol", tol, "Energy tolerance (floored at the discretization bound)");
  oracle->add_option("--window", oracle_window, "Search domain [-w, w] (default 4*max(1,m))");
  oracle->add_option("--grid-step", grid_step, "Grid cell width");
  oracle->add_option("--k-max", k_max, "Maximum interval count per candidate");
  oracle->add_option("--out", out_path, "Output file (default: stdout)");

  CLI::App* transport = app.add_subcommand(
      "transport", "Fixed-seed campaign over random sets: monotone map contracts and "
                   "preserves measure");
  transport->add_option("--potential", potential_path, "Potential spec file")->required();
  transport->add_option("--window", transport_window, "Random sets are drawn inside [0, w]");
  transport->add_option("--out", out_path, "Output file (default: stdout)");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Minimize for several masses (comma-separated) and tabulate the results");
  sweep->add_option("--potential", potential_path, "Potential spec file")->required();
  sweep->add_option("--mass", mass_text, "Comma-separated masses")->required();
  sweep->add_option("--tol", tol, "Plateau resolution in translation units");
  sweep->add_option("--format", format, "structured | tabular")
      ->check(CLI::IsMember({"structured", "tabular"}));
  sweep->add_option("--out", out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitSuccess : kExitInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (validate->parsed()) {
      return run_validate(potential_path, validate_window, out_path);
    }
    if (minimize->parsed()) {
      const std::vector<double> masses = parse_mass_list(mass_text);
      if (masses.size() != 1) {
        throw std::invalid_argument("minimize takes a single mass; use sweep for lists");
      }
      return run_minimize(potential_path, masses[0], tol, format, out_path);
    }
    if (oracle->parsed()) {
      const std::vector<double> masses = parse_mass_list(mass_text);
      if (masses.size() != 1) {
        throw std::invalid_argument("oracle takes a single mass");
      }
      return run_oracle(potential_path, masses[0], tol, oracle_window, grid_step, k_max,
                        out_path);
    }
    if (transport->parsed()) {
      return run_transport(potential_path, transport_window, out_path);
    }
    return run_sweep(potential_path, parse_mass_list(mass_text), tol, format, out_path);
  } catch (const crystal1d::NotAdmissibleError& e) {
    return emit_error(command, "not-admissible", e.what(), out_path, kExitVerificationFailure);
  } catch (const crystal1d::SpecParseError& e) {
    return emit_error(command, "parse", e.what(), out_path, kExitInputError);
  } catch (const crystal1d::NoCandidatesError& e) {
    return emit_error(command, "no-candidates", e.what(), out_path, kExitInputError);
  } catch (const crystal1d::QuadratureNonconvergence& e) {
    return emit_error(command, "quadrature", e.what(), out_path, kExitInputError);
  } catch (const std::invalid_argument& e) {
    return emit_error(command, "invalid-argument", e.what(), out_path, kExitInputError);
  } catch (const std::exception& e) {
    return emit_error(command, "internal", e.what(), out_path, kExitInputError);
  }
}
