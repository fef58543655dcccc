#pragma once

#include <functional>
#include <span>
#include <vector>

namespace strongsum {

/// Composite Gauss-Legendre resolution. `cells` is the budget across the
/// whole integration range; `points_per_cell` must be 4, 8 or 16.
struct QuadratureSpec {
  int cells = 512;
  int points_per_cell = 8;

  QuadratureSpec refined(int factor = 2) const {
    return QuadratureSpec{cells * factor, points_per_cell};
  }
};

/// A location where the integrand is non-smooth. Integration cells are
/// always split there; `grade` additionally requests a geometric cell
/// cascade toward the point (algebraic singularities such as |t|^alpha).
struct Breakpoint {
  double t = 0.0;
  bool grade = false;
};

using RealFn = std::function<double(double)>;

std::span<const double> gl_nodes(int order);
std::span<const double> gl_weights(int order);

/// Integral of g over [a, b], cells split (and graded) at breakpoints.
double integrate(const RealFn& g, double a, double b,
                 std::span<const Breakpoint> breaks, const QuadratureSpec& spec);

/// Integral of |g|^p over [a, b]. Sign changes of g between scan nodes are
/// located by bisection and become additional cell boundaries, so each cell
/// sees a smooth integrand. p = 1 reduces to sums of |segment integrals|,
/// which keeps |integrate(g)| <= integrate_abs_pow(g, 1) down to rounding.
double integrate_abs_pow(const RealFn& g, double p, double a, double b,
                         std::span<const Breakpoint> breaks,
                         const QuadratureSpec& spec);

/// Integrals of |g|^p over each [bounds[i], bounds[i+1]]. One shared cell
/// budget; every segment receives at least one cell.
std::vector<double> integrate_abs_pow_segments(const RealFn& g, double p,
                                               std::span<const double> bounds,
                                               std::span<const Breakpoint> breaks,
                                               const QuadratureSpec& spec);

/// Cell partition of [a, b]: breakpoints inserted, budget distributed
/// proportionally to length, geometric cascades expanded at graded points.
/// Exposed for node-sharing evaluators (Fourier coefficients, kernels).
std::vector<double> build_cells(double a, double b,
                                std::span<const Breakpoint> breaks,
                                const QuadratureSpec& spec);

}  // namespace strongsum
