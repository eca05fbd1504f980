#pragma once

#include <variant>
#include <vector>

namespace crystal1d {

/// Dense polynomial, coefficients in ascending degree order.
struct Polynomial {
  std::vector<double> coefficients;
};

/// scale * |x|^exponent, exponent > 0 so the value at the origin is zero.
struct PowerAbs {
  double scale = 1.0;
  double exponent = 1.0;
};

/// amplitude * exp(rate * x) + offset.
struct Exponential {
  double amplitude = 1.0;
  double rate = 1.0;
  double offset = 0.0;
};

/// Piecewise-linear interpolation through (xs[i], ys[i]); xs strictly increasing.
struct Tabulated {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> cumulative;  // trapezoid antiderivative at the nodes, 0 at xs[0]

  Tabulated() = default;
  Tabulated(std::vector<double> xs_in, std::vector<double> ys_in);
};

using Formula = std::variant<Polynomial, PowerAbs, Exponential, Tabulated>;

double formula_eval(const Formula& f, double x);

/// An antiderivative of the formula (additive constant unspecified); exact per kind.
double formula_antiderivative(const Formula& f, double x);

/// Points where the formula is not differentiable (kinks); appended to out.
void formula_kinks(const Formula& f, std::vector<double>& out);

/// The formula of x |-> f(-x).
Formula formula_reflected(const Formula& f);

}  // namespace crystal1d
