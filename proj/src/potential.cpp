#include "crystal1d/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "crystal1d/errors.hpp"
#include "crystal1d/quadrature.hpp"

namespace crystal1d {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMonotonicitySlack = 1e-12;
constexpr double kWitnessThreshold = 1e-12;

void validate_formula(const Formula& f) {
  if (const auto* pw = std::get_if<PowerAbs>(&f)) {
    if (!(pw->exponent > 0.0) || !std::isfinite(pw->exponent) || !std::isfinite(pw->scale)) {
      throw SpecParseError("power formula needs a finite positive exponent and finite scale");
    }
  } else if (const auto* poly = std::get_if<Polynomial>(&f)) {
    for (double c : poly->coefficients) {
      if (!std::isfinite(c)) throw SpecParseError("polynomial coefficient must be finite");
    }
  } else if (const auto* e = std::get_if<Exponential>(&f)) {
    if (!std::isfinite(e->amplitude) || !std::isfinite(e->rate) || !std::isfinite(e->offset)) {
      throw SpecParseError("exponential parameters must be finite");
    }
  }
  // Tabulated validates its node lists in its own constructor.
}

}  // namespace

Potential::Potential(std::vector<Piece> pieces, AntiderivativeMode mode)
    : pieces_(std::move(pieces)), mode_(mode) {
  if (pieces_.empty()) throw SpecParseError("potential needs at least one piece");
  if (pieces_.front().lo != -kInf || pieces_.back().hi != kInf) {
    throw SpecParseError("pieces must cover the real line (unbounded first and last piece)");
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& piece = pieces_[i];
    if (!(piece.lo < piece.hi)) throw SpecParseError("piece domain must satisfy lo < hi");
    if (i + 1 < pieces_.size()) {
      if (piece.hi != pieces_[i + 1].lo || !std::isfinite(piece.hi)) {
        throw SpecParseError("pieces must meet at finite breakpoints with no gap or overlap");
      }
      breakpoints_.push_back(piece.hi);
    }
    validate_formula(piece.formula);
  }

  nonsmooth_ = breakpoints_;
  for (const Piece& piece : pieces_) {
    std::vector<double> kinks;
    formula_kinks(piece.formula, kinks);
    for (double k : kinks) {
      if (k >= piece.lo && k <= piece.hi) nonsmooth_.push_back(k);
    }
  }
  std::sort(nonsmooth_.begin(), nonsmooth_.end());
  nonsmooth_.erase(std::unique(nonsmooth_.begin(), nonsmooth_.end()), nonsmooth_.end());

  origin_value_ = formula_eval(pieces_[piece_index(0.0)].formula, 0.0);

  // Anchor the exact antiderivative: continuity at each breakpoint plus
  // G(0) = 0 on the piece owning the origin.
  const std::size_t z = piece_index(0.0);
  offsets_.assign(pieces_.size(), 0.0);
  offsets_[z] = -formula_antiderivative(pieces_[z].formula, 0.0);
  for (std::size_t i = z + 1; i < pieces_.size(); ++i) {
    const double b = pieces_[i].lo;
    offsets_[i] = offsets_[i - 1] + formula_antiderivative(pieces_[i - 1].formula, b) -
                  formula_antiderivative(pieces_[i].formula, b);
  }
  for (std::size_t i = z; i-- > 0;) {
    const double b = pieces_[i].hi;
    offsets_[i] = offsets_[i + 1] + formula_antiderivative(pieces_[i + 1].formula, b) -
                  formula_antiderivative(pieces_[i].formula, b);
  }
}

std::size_t Potential::piece_index(double x) const {
  // Left-closed convention: the piece starting at a breakpoint owns it.
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return static_cast<std::size_t>(it - breakpoints_.begin());
}

double Potential::eval(double x) const {
  return formula_eval(pieces_[piece_index(x)].formula, x);
}

double Potential::exact_antiderivative(double x) const {
  const std::size_t i = piece_index(x);
  return formula_antiderivative(pieces_[i].formula, x) + offsets_[i];
}

double Potential::numeric_integral(double lo, double hi, double abs_tol) const {
  if (lo == hi) return 0.0;
  if (lo > hi) return -numeric_integral(hi, lo, abs_tol);
  // Subdivide at non-smooth points so each panel integrates a smooth formula.
  std::vector<double> cuts{lo};
  for (double s : nonsmooth_) {
    if (s > lo && s < hi) cuts.push_back(s);
  }
  cuts.push_back(hi);
  const double panel_tol = abs_tol / static_cast<double>(cuts.size() - 1);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += adaptive_simpson([this](double x) { return eval(x); }, cuts[i], cuts[i + 1],
                              panel_tol);
  }
  return total;
}

double Potential::antiderivative(double x) const {
  if (mode_ == AntiderivativeMode::Exact) return exact_antiderivative(x);
  return numeric_integral(0.0, x, 1e-10);
}

double Potential::integrate(double lo, double hi, double abs_tol) const {
  if (mode_ == AntiderivativeMode::Exact) {
    return exact_antiderivative(hi) - exact_antiderivative(lo);
  }
  return numeric_integral(lo, hi, abs_tol);
}

Potential Potential::reflected() const {
  std::vector<Piece> out;
  out.reserve(pieces_.size());
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
    out.push_back({-it->hi, -it->lo, formula_reflected(it->formula)});
  }
  return Potential(std::move(out), mode_);
}

Potential Potential::with_mode(AntiderivativeMode mode) const {
  return Potential(pieces_, mode);
}

AdmissibilityReport check_admissible(const Potential& p, double window, int n_samples) {
  if (!(window > 0.0)) throw std::invalid_argument("admissibility window must be positive");
  if (n_samples < 3) throw std::invalid_argument("admissibility check needs at least 3 samples");

  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n_samples) + p.nonsmooth_points().size() + 3);
  for (int i = 0; i < n_samples; ++i) {
    xs.push_back(-window + 2.0 * window * static_cast<double>(i) /
                               static_cast<double>(n_samples - 1));
  }
  xs.push_back(0.0);
  for (double s : p.nonsmooth_points()) {
    if (s >= -window && s <= window) xs.push_back(s);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  AdmissibilityReport report;
  report.samples_used = static_cast<int>(xs.size());

  // Pointwise hypothesis, checked exactly against the owning piece.
  if (p.origin_value() != 0.0) {
    report.violations.push_back({0.0, ViolationKind::NonzeroAtOrigin});
  }

  std::vector<double> gs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    gs[i] = p.eval(xs[i]);
    if (gs[i] < 0.0) {
      report.violations.push_back({xs[i], ViolationKind::NegativeValue});
    }
  }
  // 0 is always a sample point, so consecutive pairs never straddle the origin.
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i] >= 0.0 && gs[i + 1] < gs[i] - kMonotonicitySlack) {
      report.violations.push_back({xs[i + 1], ViolationKind::MonotonicityBreakRight});
    }
    if (xs[i + 1] <= 0.0 && gs[i + 1] > gs[i] + kMonotonicitySlack) {
      report.violations.push_back({xs[i + 1], ViolationKind::MonotonicityBreakLeft});
    }
  }

  report.is_admissible = report.violations.empty();
  return report;
}

namespace {

// Scans (0, window] for a point with g > threshold, doubling the window up to
// cap. Monotonicity on the right half line means a fruitless scan up to w
// certifies g <= threshold on all of (0, w]: the rightmost sample is w itself
// and dominates the rest.
std::optional<double> scan_right_witness(const Potential& p, double window, double cap,
                                         double& scanned_to) {
  constexpr int kSamplesPerPass = 64;
  double w = window;
  while (true) {
    for (int i = 1; i <= kSamplesPerPass; ++i) {
      const double x = w * static_cast<double>(i) / kSamplesPerPass;
      if (p.eval(x) > kWitnessThreshold) {
        scanned_to = w;
        return x;
      }
    }
    scanned_to = w;
    if (w >= cap) return std::nullopt;
    w = std::min(2.0 * w, cap);
  }
}

}  // namespace

ZeroStructure classify_zero_structure(const Potential& p, double window, double cap) {
  if (!(window > 0.0)) throw std::invalid_argument("scan window must be positive");
  if (cap <= 0.0) cap = 65536.0 * std::max(1.0, window);

  ZeroStructure out;
  double scanned_right = 0.0;
  double scanned_left = 0.0;
  out.witness_right = scan_right_witness(p, window, cap, scanned_right);
  const Potential mirrored = p.reflected();
  if (auto w = scan_right_witness(mirrored, window, cap, scanned_left)) {
    out.witness_left = -*w;
  }
  out.scanned_to = std::max(scanned_right, scanned_left);

  if (!out.witness_right.has_value()) {
    // Case (1): g vanishes on the right half line (up to the reported cap);
    // covers the identically-zero potential as well.
    out.tag = ZeroStructureTag::ZeroOnRightHalfLine;
  } else if (!out.witness_left.has_value()) {
    out.tag = ZeroStructureTag::ZeroOnLeftPositiveOnRight;
  } else {
    out.tag = ZeroStructureTag::PositiveOnBothSides;
  }
  return out;
}

Potential make_abs(double scale) {
  return Potential({{-kInf, kInf, PowerAbs{scale, 1.0}}});
}

Potential make_power(double exponent, double scale) {
  return Potential({{-kInf, kInf, PowerAbs{scale, exponent}}});
}

}  // namespace crystal1d
