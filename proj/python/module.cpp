// Python bindings for the core operations: potentials, interval unions, free
// energy, the translation optimizer, the monotone-transport verifier, and the
// brute-force oracle.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "crystal1d/energy.hpp"
#include "crystal1d/errors.hpp"
#include "crystal1d/io.hpp"
#include "crystal1d/minimize.hpp"
#include "crystal1d/oracle.hpp"
#include "crystal1d/parallel.hpp"
#include "crystal1d/potential.hpp"
#include "crystal1d/transport.hpp"

namespace py = pybind11;
using namespace crystal1d;

namespace {

std::vector<std::pair<double, double>> union_pairs(const IntervalUnion& u) {
  std::vector<std::pair<double, double>> out;
  out.reserve(u.size());
  for (const Interval& part : u.intervals()) out.emplace_back(part.lo, part.hi);
  return out;
}

IntervalUnion union_from_pairs(const std::vector<std::pair<double, double>>& raw) {
  std::vector<Interval> parts;
  parts.reserve(raw.size());
  for (const auto& [lo, hi] : raw) parts.push_back({lo, hi});
  return canonicalize(std::move(parts));
}

}  // namespace

PYBIND11_MODULE(_crystal1d, m) {
  m.doc() = "Free-energy minimization for one-dimensional crystal shapes";

  py::register_exception<SpecParseError>(m, "SpecParseError");
  py::register_exception<QuadratureNonconvergence>(m, "QuadratureNonconvergence");
  py::register_exception<NotAdmissibleError>(m, "NotAdmissibleError");
  py::register_exception<NoCandidatesError>(m, "NoCandidatesError");
  py::register_exception<WrongCaseError>(m, "WrongCaseError");

  py::enum_<ZeroStructureTag>(m, "ZeroStructureTag")
      .value("ZERO_ON_RIGHT_HALF_LINE", ZeroStructureTag::ZeroOnRightHalfLine)
      .value("ZERO_ON_LEFT_POSITIVE_ON_RIGHT", ZeroStructureTag::ZeroOnLeftPositiveOnRight)
      .value("POSITIVE_ON_BOTH_SIDES", ZeroStructureTag::PositiveOnBothSides);

  py::enum_<ViolationKind>(m, "ViolationKind")
      .value("NEGATIVE_VALUE", ViolationKind::NegativeValue)
      .value("NONZERO_AT_ORIGIN", ViolationKind::NonzeroAtOrigin)
      .value("MONOTONICITY_BREAK_RIGHT", ViolationKind::MonotonicityBreakRight)
      .value("MONOTONICITY_BREAK_LEFT", ViolationKind::MonotonicityBreakLeft);

  py::enum_<AntiderivativeMode>(m, "AntiderivativeMode")
      .value("EXACT", AntiderivativeMode::Exact)
      .value("NUMERIC", AntiderivativeMode::Numeric);

  py::class_<IntervalUnion>(m, "IntervalUnion")
      .def(py::init(&union_from_pairs), py::arg("intervals"),
           "Canonicalize a list of (lo, hi) pairs into a disjoint union")
      .def("intervals", &union_pairs)
      .def("measure", &IntervalUnion::measure)
      .def("boundary_count", &IntervalUnion::boundary_count)
      .def("split_signed", &IntervalUnion::split_signed)
      .def("translated", &IntervalUnion::translated, py::arg("shift"))
      .def("reflected", &IntervalUnion::reflected)
      .def("__len__", &IntervalUnion::size)
      .def("__eq__", [](const IntervalUnion& a, const IntervalUnion& b) { return a == b; })
      .def("__repr__", [](const IntervalUnion& u) {
        std::string s = "IntervalUnion([";
        for (std::size_t i = 0; i < u.size(); ++i) {
          if (i) s += ", ";
          s += "(" + std::to_string(u.intervals()[i].lo) + ", " +
               std::to_string(u.intervals()[i].hi) + ")";
        }
        return s + "])";
      });

  py::class_<Potential>(m, "Potential")
      .def("__call__", &Potential::eval, py::arg("x"))
      .def("eval", &Potential::eval, py::arg("x"))
      .def("antiderivative", &Potential::antiderivative, py::arg("x"))
      .def("integrate", &Potential::integrate, py::arg("lo"), py::arg("hi"),
           py::arg("abs_tol") = 1e-9)
      .def("breakpoints", &Potential::breakpoints)
      .def("nonsmooth_points", &Potential::nonsmooth_points)
      .def("origin_value", &Potential::origin_value)
      .def("antiderivative_mode", &Potential::antiderivative_mode)
      .def("reflected", &Potential::reflected)
      .def("with_mode", &Potential::with_mode, py::arg("mode"));

  m.def("make_abs", &make_abs, py::arg("scale") = 1.0);
  m.def("make_power", &make_power, py::arg("exponent"), py::arg("scale") = 1.0);
  m.def(
      "load_potential", [](const std::string& path) { return load_potential(path); },
      py::arg("path"));
  m.def(
      "potential_from_json",
      [](const std::string& text) {
        Json doc;
        try {
          doc = Json::parse(text);
        } catch (const Json::parse_error& e) {
          throw SpecParseError(e.what());
        }
        return potential_from_json(doc);
      },
      py::arg("text"), "Build a potential from a JSON document given as a string");

  py::class_<Violation>(m, "Violation")
      .def_readonly("location", &Violation::location)
      .def_readonly("kind", &Violation::kind);

  py::class_<AdmissibilityReport>(m, "AdmissibilityReport")
      .def_readonly("is_admissible", &AdmissibilityReport::is_admissible)
      .def_readonly("violations", &AdmissibilityReport::violations)
      .def_readonly("samples_used", &AdmissibilityReport::samples_used);

  py::class_<ZeroStructure>(m, "ZeroStructure")
      .def_readonly("tag", &ZeroStructure::tag)
      .def_readonly("witness_right", &ZeroStructure::witness_right)
      .def_readonly("witness_left", &ZeroStructure::witness_left)
      .def_readonly("scanned_to", &ZeroStructure::scanned_to);

  m.def("check_admissible", &check_admissible, py::arg("potential"), py::arg("window"),
        py::arg("n_samples"));
  m.def("classify_zero_structure", &classify_zero_structure, py::arg("potential"),
        py::arg("window"), py::arg("cap") = 0.0);

  py::class_<EnergyBreakdown>(m, "EnergyBreakdown")
      .def_readonly("surface", &EnergyBreakdown::surface)
      .def_readonly("potential", &EnergyBreakdown::potential)
      .def_readonly("total", &EnergyBreakdown::total);

  m.def("potential_energy", &potential_energy, py::arg("potential"), py::arg("u"),
        py::arg("abs_tol") = 1e-9);
  m.def("free_energy", &free_energy, py::arg("potential"), py::arg("u"));
  m.def("interval_energy_profile", &interval_energy_profile, py::arg("potential"),
        py::arg("mass"), py::arg("a"));

  py::class_<MinimizerResult>(m, "MinimizerResult")
      .def_readonly("case_tag", &MinimizerResult::case_tag)
      .def_readonly("alpha_lo", &MinimizerResult::alpha_lo)
      .def_readonly("alpha_hi", &MinimizerResult::alpha_hi)
      .def_readonly("representative_alpha", &MinimizerResult::representative_alpha)
      .def_readonly("minimizer", &MinimizerResult::minimizer)
      .def_readonly("energy", &MinimizerResult::energy)
      .def_readonly("stationarity_residual", &MinimizerResult::stationarity_residual)
      .def_readonly("origin_in_closure", &MinimizerResult::origin_in_closure);

  m.def("bracket_alpha", &bracket_alpha, py::arg("potential"), py::arg("mass"));
  m.def("minimize_translation", &minimize_translation, py::arg("potential"), py::arg("mass"),
        py::arg("tol") = 1e-9);
  m.def("stationarity_residual", &stationarity_residual, py::arg("potential"), py::arg("mass"),
        py::arg("a"));
  m.def("verify_origin_membership", &verify_origin_membership, py::arg("result"),
        py::arg("potential"));

  py::class_<TransportSegment>(m, "TransportSegment")
      .def_property_readonly("source",
                             [](const TransportSegment& s) {
                               return std::make_pair(s.source.lo, s.source.hi);
                             })
      .def_readonly("shift", &TransportSegment::shift)
      .def("apply", &TransportSegment::apply, py::arg("x"));

  py::class_<TransportPlan>(m, "TransportPlan")
      .def_readonly("source", &TransportPlan::source)
      .def_readonly("target", &TransportPlan::target)
      .def_readonly("segments", &TransportPlan::segments)
      .def("apply", &TransportPlan::apply, py::arg("x"));

  m.def("build_monotone_map", &build_monotone_map, py::arg("e_plus"));
  m.def("verify_pushforward", &verify_pushforward, py::arg("plan"), py::arg("n_bins"));
  m.def("verify_contraction", &verify_contraction, py::arg("plan"), py::arg("n_samples"));

  py::class_<RearrangementSide>(m, "RearrangementSide")
      .def_readonly("lhs", &RearrangementSide::lhs)
      .def_readonly("rhs", &RearrangementSide::rhs)
      .def_readonly("holds", &RearrangementSide::holds);

  py::class_<RearrangementReport>(m, "RearrangementReport")
      .def_readonly("positive", &RearrangementReport::positive)
      .def_readonly("negative", &RearrangementReport::negative)
      .def_readonly("holds", &RearrangementReport::holds);

  m.def("rearrangement_check", &rearrangement_check, py::arg("potential"), py::arg("u"));

  py::class_<OracleConfig>(m, "OracleConfig")
      .def(py::init([](double window, double grid_step, int k_max, double mass,
                       double mass_slack) {
             OracleConfig cfg;
             cfg.window = window;
             cfg.grid_step = grid_step;
             cfg.k_max = k_max;
             cfg.mass = mass;
             cfg.mass_slack = mass_slack;
             cfg.validate();
             return cfg;
           }),
           py::arg("window") = 4.0, py::arg("grid_step") = 0.02, py::arg("k_max") = 3,
           py::arg("mass") = 1.0, py::arg("mass_slack") = 0.0)
      .def_readonly("window", &OracleConfig::window)
      .def_readonly("grid_step", &OracleConfig::grid_step)
      .def_readonly("k_max", &OracleConfig::k_max)
      .def_readonly("mass", &OracleConfig::mass)
      .def("effective_mass_slack", &OracleConfig::effective_mass_slack);

  py::class_<OracleReport>(m, "OracleReport")
      .def_readonly("best_union", &OracleReport::best_union)
      .def_readonly("best_energy", &OracleReport::best_energy)
      .def_readonly("best_is_single_interval", &OracleReport::best_is_single_interval)
      .def_readonly("analytic_energy", &OracleReport::analytic_energy)
      .def_readonly("gap", &OracleReport::gap)
      .def_readonly("candidates_evaluated", &OracleReport::candidates_evaluated)
      .def_readonly("convexification_checked", &OracleReport::convexification_checked)
      .def_readonly("convexification_failures", &OracleReport::convexification_failures)
      .def_readonly("best_touches_window", &OracleReport::best_touches_window)
      .def_readonly("discretization_bound", &OracleReport::discretization_bound);

  m.def(
      "enumerate_candidates",
      [](const OracleConfig& cfg) {
        std::vector<IntervalUnion> out;
        enumerate_candidates(cfg, [&out](const IntervalUnion& u) { out.push_back(u); });
        return out;
      },
      py::arg("config"), "Collect every grid candidate (intended for small configurations)");
  m.def("oracle_minimize", &oracle_minimize, py::arg("potential"), py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("verify_theorem", &verify_theorem, py::arg("potential"), py::arg("config"),
        py::arg("tol_energy") = 0.0, py::call_guard<py::gil_scoped_release>());

  m.def("worker_count", &worker_count);
}
