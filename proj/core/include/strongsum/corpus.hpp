#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strongsum/quadrature.hpp"

namespace strongsum {

enum class PointKind {
  TrigPolynomialEverywhere,
  SmoothPoint,
  HolderCusp,
  JumpPoint,
  Unclassified,
};

std::string_view to_string(PointKind k);

/// A classified evaluation point. HolderCusp carries the exponent, JumpPoint
/// the one-sided limits.
struct LabeledPoint {
  double x = 0.0;
  PointKind kind = PointKind::Unclassified;
  double holder_alpha = 1.0;
  double left_limit = 0.0;
  double right_limit = 0.0;
};

enum class SingularKind { Jump, Cusp };

struct SingularPoint {
  double location = 0.0;  // in [-pi, pi)
  SingularKind kind = SingularKind::Jump;
};

/// Pointwise majorant of modulus-of-continuity type, w_x(delta) =
/// constant * delta^exponent, claimed to dominate G_x f(delta)_{1,s} on the
/// standard dyadic grid. The constant is calibrated empirically at corpus
/// construction (1.05 x the observed sup of G/delta^exponent).
struct MajorantSpec {
  double x = 0.0;
  double exponent = 0.5;
  double s = 2.0;
  double constant = 0.0;
};

struct TestFunction {
  std::string name;
  std::function<double(double)> raw;  // formula on [-pi, pi)
  // k -> (a_k, b_k); k = 0 yields (a_0, 0). Null when no closed form.
  std::function<std::pair<double, double>(int)> analytic_coeffs;
  std::vector<SingularPoint> singular_points;
  std::vector<LabeledPoint> labeled_points;
  std::vector<MajorantSpec> majorants;
  std::optional<double> smoothness_alpha;

  bool has_analytic_coeffs() const { return static_cast<bool>(analytic_coeffs); }
};

/// Reduce to [-pi, pi); x = pi maps to -pi.
double wrap_angle(double x);

/// f evaluated at x reduced mod 2*pi into [-pi, pi).
double eval_wrapped(const TestFunction& f, double x);

/// Symmetric second difference f(x+t) + f(x-t) - 2 f(x).
double phi_x(const TestFunction& f, double x, double t);

/// Built-in test functions with calibrated majorants. Immutable after the
/// first call; safe for concurrent reads.
const std::vector<TestFunction>& builtin_corpus();

const TestFunction& find_function(std::string_view name);
std::vector<std::string> corpus_names();

const MajorantSpec* find_majorant(const TestFunction& f, double x);
double majorant_value(const MajorantSpec& m, double delta);

/// Standard dyadic grid pi * 2^-j, j = 0..levels-1 (or top * 2^-j).
std::vector<double> dyadic_grid(double top, int levels);

/// Breakpoints of t -> phi_x(f, x, t) on [0, pi]: one entry per singularity
/// of f, graded where the singularity is a cusp (including t = 0 when x is
/// itself a cusp location).
std::vector<Breakpoint> phi_breakpoints(const TestFunction& f, double x);

/// Breakpoints for x-integrals over Q = [-pi, pi] whose integrand involves
/// f(x +- t) for t in the given edge set (pass {0.0} for plain f).
std::vector<Breakpoint> x_breakpoints(const TestFunction& f,
                                      std::span<const double> t_edges);

}  // namespace strongsum
