#include "crystal1d/formula.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace crystal1d {

Tabulated::Tabulated(std::vector<double> xs_in, std::vector<double> ys_in)
    : xs(std::move(xs_in)), ys(std::move(ys_in)) {
  if (xs.size() < 2 || xs.size() != ys.size()) {
    throw std::invalid_argument("tabulated formula needs matching xs/ys with at least two nodes");
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < xs[i + 1])) {
      throw std::invalid_argument("tabulated formula needs strictly increasing xs");
    }
  }
  cumulative.resize(xs.size());
  cumulative[0] = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    cumulative[i] = cumulative[i - 1] + 0.5 * (ys[i - 1] + ys[i]) * (xs[i] - xs[i - 1]);
  }
}

namespace {

double poly_eval(const Polynomial& p, double x) {
  double acc = 0.0;
  for (std::size_t i = p.coefficients.size(); i-- > 0;) {
    acc = acc * x + p.coefficients[i];
  }
  return acc;
}

double poly_antiderivative(const Polynomial& p, double x) {
  // sum c_i x^(i+1) / (i+1), evaluated as x * Horner over c_i/(i+1).
  double acc = 0.0;
  for (std::size_t i = p.coefficients.size(); i-- > 0;) {
    acc = acc * x + p.coefficients[i] / static_cast<double>(i + 1);
  }
  return acc * x;
}

// Index of the node segment containing x, clamped to the table range.
std::size_t segment_index(const std::vector<double>& xs, double x) {
  if (x <= xs.front()) return 0;
  if (x >= xs.back()) return xs.size() - 2;
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  return static_cast<std::size_t>(it - xs.begin()) - 1;
}

double tab_eval(const Tabulated& t, double x) {
  // Constant extrapolation outside the node range keeps the formula total.
  if (x <= t.xs.front()) return t.ys.front();
  if (x >= t.xs.back()) return t.ys.back();
  const std::size_t i = segment_index(t.xs, x);
  const double w = (x - t.xs[i]) / (t.xs[i + 1] - t.xs[i]);
  return t.ys[i] + w * (t.ys[i + 1] - t.ys[i]);
}

double tab_antiderivative(const Tabulated& t, double x) {
  if (x <= t.xs.front()) return t.cumulative.front() + t.ys.front() * (x - t.xs.front());
  if (x >= t.xs.back()) return t.cumulative.back() + t.ys.back() * (x - t.xs.back());
  const std::size_t i = segment_index(t.xs, x);
  const double dx = x - t.xs[i];
  const double y_at_x = tab_eval(t, x);
  return t.cumulative[i] + 0.5 * (t.ys[i] + y_at_x) * dx;
}

}  // namespace

double formula_eval(const Formula& f, double x) {
  return std::visit(
      [x](const auto& g) -> double {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          return poly_eval(g, x);
        } else if constexpr (std::is_same_v<T, PowerAbs>) {
          return g.scale * std::pow(std::fabs(x), g.exponent);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return g.amplitude * std::exp(g.rate * x) + g.offset;
        } else {
          return tab_eval(g, x);
        }
      },
      f);
}

double formula_antiderivative(const Formula& f, double x) {
  return std::visit(
      [x](const auto& g) -> double {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          return poly_antiderivative(g, x);
        } else if constexpr (std::is_same_v<T, PowerAbs>) {
          // d/dx [ sign(x) |x|^(p+1) / (p+1) ] = |x|^p for p > 0.
          const double mag = std::pow(std::fabs(x), g.exponent + 1.0) / (g.exponent + 1.0);
          return g.scale * std::copysign(mag, x);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          if (g.rate == 0.0) return (g.amplitude + g.offset) * x;
          return g.amplitude / g.rate * std::exp(g.rate * x) + g.offset * x;
        } else {
          return tab_antiderivative(g, x);
        }
      },
      f);
}

void formula_kinks(const Formula& f, std::vector<double>& out) {
  std::visit(
      [&out](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, PowerAbs>) {
          // |x|^p is non-smooth at 0 unless p is an even integer.
          const double p = g.exponent;
          const bool even_integer = p == std::floor(p) && std::fmod(p, 2.0) == 0.0;
          if (!even_integer) out.push_back(0.0);
        } else if constexpr (std::is_same_v<T, Tabulated>) {
          out.insert(out.end(), g.xs.begin(), g.xs.end());
        }
      },
      f);
}

Formula formula_reflected(const Formula& f) {
  return std::visit(
      [](const auto& g) -> Formula {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          Polynomial r = g;
          for (std::size_t i = 1; i < r.coefficients.size(); i += 2) {
            r.coefficients[i] = -r.coefficients[i];
          }
          return r;
        } else if constexpr (std::is_same_v<T, PowerAbs>) {
          return g;  // |-x| = |x|
        } else if constexpr (std::is_same_v<T, Exponential>) {
          Exponential r = g;
          r.rate = -r.rate;
          return r;
        } else {
          std::vector<double> xs(g.xs.rbegin(), g.xs.rend());
          for (double& v : xs) v = -v;
          std::vector<double> ys(g.ys.rbegin(), g.ys.rend());
          return Tabulated(std::move(xs), std::move(ys));
        }
      },
      f);
}

}  // namespace crystal1d
