#include "strongsum/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "strongsum/characteristics.hpp"

namespace strongsum {

namespace {

constexpr double kPi = std::numbers::pi;

double sgn(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

TestFunction make_const1() {
  TestFunction f;
  f.name = "const1";
  f.raw = [](double) { return 1.0; };
  f.analytic_coeffs = [](int k) {
    return k == 0 ? std::pair{2.0, 0.0} : std::pair{0.0, 0.0};
  };
  f.labeled_points = {{0.0, PointKind::TrigPolynomialEverywhere},
                      {1.0, PointKind::TrigPolynomialEverywhere}};
  f.majorants = {{0.0, 1.0, 2.0, 0.0}};
  f.smoothness_alpha = 1.0;
  return f;
}

TestFunction make_cos() {
  TestFunction f;
  f.name = "cos";
  f.raw = [](double x) { return std::cos(x); };
  f.analytic_coeffs = [](int k) {
    return k == 1 ? std::pair{1.0, 0.0} : std::pair{0.0, 0.0};
  };
  f.labeled_points = {{0.0, PointKind::TrigPolynomialEverywhere},
                      {1.0, PointKind::TrigPolynomialEverywhere}};
  f.majorants = {{0.0, 0.5, 2.0, 0.0}};
  f.smoothness_alpha = 1.0;
  return f;
}

TestFunction make_cos3() {
  TestFunction f;
  f.name = "cos3";
  f.raw = [](double x) { return std::cos(3.0 * x); };
  f.analytic_coeffs = [](int k) {
    return k == 3 ? std::pair{1.0, 0.0} : std::pair{0.0, 0.0};
  };
  f.labeled_points = {{0.0, PointKind::TrigPolynomialEverywhere},
                      {0.7, PointKind::TrigPolynomialEverywhere}};
  f.majorants = {{0.0, 0.5, 2.0, 0.0}};
  f.smoothness_alpha = 1.0;
  return f;
}

TestFunction make_squarewave() {
  TestFunction f;
  f.name = "squarewave";
  // sgn(sin x): 0 at the jumps, which is the midpoint of the one-sided
  // limits.
  f.raw = [](double x) { return sgn(std::sin(x)); };
  f.analytic_coeffs = [](int k) {
    if (k >= 1 && k % 2 == 1) return std::pair{0.0, 4.0 / (kPi * k)};
    return std::pair{0.0, 0.0};
  };
  f.singular_points = {{-kPi, SingularKind::Jump}, {0.0, SingularKind::Jump}};
  f.labeled_points = {
      {kPi / 2, PointKind::SmoothPoint},
      {1.0, PointKind::SmoothPoint},
      {0.0, PointKind::JumpPoint, 1.0, -1.0, 1.0},
  };
  f.majorants = {{kPi / 2, 0.5, 2.0, 0.0}};
  f.smoothness_alpha = 1.0;
  return f;
}

TestFunction make_sawtooth() {
  TestFunction f;
  f.name = "sawtooth";
  // f(x) = x on (-pi, pi); the reduced-interval endpoint -pi keeps the raw
  // formula value -pi (documented convention; the periodic extension jumps
  // there).
  f.raw = [](double x) { return x; };
  f.analytic_coeffs = [](int k) {
    if (k >= 1) return std::pair{0.0, 2.0 * ((k % 2 == 1) ? 1.0 : -1.0) / k};
    return std::pair{0.0, 0.0};
  };
  f.singular_points = {{-kPi, SingularKind::Jump}};
  f.labeled_points = {
      {0.0, PointKind::SmoothPoint},
      {1.0, PointKind::SmoothPoint},
      {-kPi, PointKind::JumpPoint, 1.0, kPi, -kPi},
  };
  f.majorants = {{1.0, 0.5, 2.0, 0.0}, {0.0, 1.0, 2.0, 0.0}};
  f.smoothness_alpha = 1.0;
  return f;
}

TestFunction make_cusp(double alpha, std::string name) {
  TestFunction f;
  f.name = std::move(name);
  f.raw = [alpha](double x) {
    return std::pow(std::abs(std::sin(0.5 * x)), alpha);
  };
  f.singular_points = {{0.0, SingularKind::Cusp}};
  f.labeled_points = {{0.0, PointKind::HolderCusp, alpha},
                      {1.5, PointKind::SmoothPoint}};
  // G_x(delta)_{1,s} decays no faster than delta^(1-1/s) at any bounded
  // point, so the majorant exponent is min(alpha, 1 - 1/s).
  f.majorants = {{0.0, std::min(alpha, 0.5), 2.0, 0.0},
                 {1.5, 0.5, 2.0, 0.0}};
  f.smoothness_alpha = alpha;
  return f;
}

std::vector<TestFunction> build_and_calibrate() {
  std::vector<TestFunction> fs;
  fs.push_back(make_const1());
  fs.push_back(make_cos3());
  fs.push_back(make_cos());
  fs.push_back(make_squarewave());
  fs.push_back(make_sawtooth());
  fs.push_back(make_cusp(0.25, "cusp_quarter"));
  fs.push_back(make_cusp(0.5, "cusp_half"));
  fs.push_back(make_cusp(0.75, "cusp_threequarter"));

  const auto grid = dyadic_grid(kPi, 15);
  const QuadratureSpec spec{};
  for (auto& f : fs) {
    for (auto& m : f.majorants) {
      double sup = 0.0;
      for (double d : grid) {
        const double g = gabisonia(f, m.x, d, 1.0, m.s, spec);
        sup = std::max(sup, g / std::pow(d, m.exponent));
      }
      m.constant = 1.05 * sup;
    }
  }
  return fs;
}

}  // namespace

std::string_view to_string(PointKind k) {
  switch (k) {
    case PointKind::TrigPolynomialEverywhere:
      return "TrigPolynomialEverywhere";
    case PointKind::SmoothPoint:
      return "SmoothPoint";
    case PointKind::HolderCusp:
      return "HolderCusp";
    case PointKind::JumpPoint:
      return "JumpPoint";
    case PointKind::Unclassified:
      return "Unclassified";
  }
  return "Unclassified";
}

double wrap_angle(double x) {
  double y = std::fmod(x + kPi, 2.0 * kPi);
  if (y < 0.0) y += 2.0 * kPi;
  return y - kPi;
}

double eval_wrapped(const TestFunction& f, double x) {
  if (!std::isfinite(x))
    throw std::invalid_argument("eval_wrapped: x must be finite");
  return f.raw(wrap_angle(x));
}

double phi_x(const TestFunction& f, double x, double t) {
  return eval_wrapped(f, x + t) + eval_wrapped(f, x - t) -
         2.0 * eval_wrapped(f, x);
}

const std::vector<TestFunction>& builtin_corpus() {
  static const std::vector<TestFunction> corpus = build_and_calibrate();
  return corpus;
}

const TestFunction& find_function(std::string_view name) {
  for (const auto& f : builtin_corpus())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown corpus function: " + std::string(name));
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& f : builtin_corpus()) names.push_back(f.name);
  return names;
}

const MajorantSpec* find_majorant(const TestFunction& f, double x) {
  for (const auto& m : f.majorants)
    if (std::abs(m.x - x) <= 1e-12) return &m;
  return nullptr;
}

double majorant_value(const MajorantSpec& m, double delta) {
  if (delta <= 0.0) return 0.0;
  return m.constant * std::pow(delta, m.exponent);
}

std::vector<double> dyadic_grid(double top, int levels) {
  if (!(top > 0.0) || levels < 1)
    throw std::invalid_argument("dyadic_grid: requires top > 0, levels >= 1");
  std::vector<double> g(levels);
  for (int j = 0; j < levels; ++j) g[j] = top * std::ldexp(1.0, -j);
  return g;
}

std::vector<Breakpoint> phi_breakpoints(const TestFunction& f, double x) {
  std::vector<Breakpoint> out;
  for (const auto& s : f.singular_points) {
    // phi_x(t) inherits the singularity at the unique t in [0, pi] with
    // x + t == s or x - t == s (mod 2 pi)
    double u = std::fmod(s.location - x, 2.0 * kPi);
    if (u < 0.0) u += 2.0 * kPi;
    const double t = std::min(u, 2.0 * kPi - u);
    out.push_back({t, s.kind == SingularKind::Cusp});
  }
  return out;
}

std::vector<Breakpoint> x_breakpoints(const TestFunction& f,
                                      std::span<const double> t_edges) {
  std::vector<Breakpoint> out;
  for (const auto& s : f.singular_points) {
    const bool grade = s.kind == SingularKind::Cusp;
    for (double t : t_edges) {
      for (double loc : {s.location - t, s.location + t}) {
        const double w = wrap_angle(loc);
        out.push_back({w, grade});
        if (std::abs(w + kPi) < 1e-12) out.push_back({kPi, grade});
      }
    }
  }
  return out;
}

}  // namespace strongsum
