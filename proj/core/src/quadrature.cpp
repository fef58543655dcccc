#include "strongsum/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace strongsum {

namespace {

struct NodeWeight {
  double x, w;
};

constexpr NodeWeight kGL4[] = {
    {-0.861136311594052575224, 0.347854845137453857373},
    {-0.339981043584856264803, 0.652145154862546142627},
    {0.339981043584856264803, 0.652145154862546142627},
    {0.861136311594052575224, 0.347854845137453857373},
};

constexpr NodeWeight kGL8[] = {
    {-0.960289856497536231684, 0.101228536290376259153},
    {-0.796666477413626739592, 0.222381034453374470544},
    {-0.525532409916328985818, 0.313706645877887287338},
    {-0.183434642495649804939, 0.362683783378361982965},
    {0.183434642495649804939, 0.362683783378361982965},
    {0.525532409916328985818, 0.313706645877887287338},
    {0.796666477413626739592, 0.222381034453374470544},
    {0.960289856497536231684, 0.101228536290376259153},
};

constexpr NodeWeight kGL16[] = {
    {-0.989400934991649932596, 0.0271524594117540948518},
    {-0.944575023073232576078, 0.0622535239386478928628},
    {-0.865631202387831743880, 0.0951585116824927848099},
    {-0.755404408355003033895, 0.124628971255533872052},
    {-0.617876244402643748447, 0.149595988816576732082},
    {-0.458016777657227386342, 0.169156519395002538189},
    {-0.281603550779258913230, 0.182603415044923588867},
    {-0.0950125098376374401853, 0.189450610455068496285},
    {0.0950125098376374401853, 0.189450610455068496285},
    {0.281603550779258913230, 0.182603415044923588867},
    {0.458016777657227386342, 0.169156519395002538189},
    {0.617876244402643748447, 0.149595988816576732082},
    {0.755404408355003033895, 0.124628971255533872052},
    {0.865631202387831743880, 0.0951585116824927848099},
    {0.944575023073232576078, 0.0622535239386478928628},
    {0.989400934991649932596, 0.0271524594117540948518},
};

std::span<const NodeWeight> gl_rule(int order) {
  switch (order) {
    case 4:
      return kGL4;
    case 8:
      return kGL8;
    case 16:
      return kGL16;
    default:
      throw std::invalid_argument(
          "QuadratureSpec.points_per_cell must be 4, 8 or 16");
  }
}

// Smallest cell a geometric cascade descends to, relative to segment size.
constexpr double kCascadeFloor = 1e-13;
// Duplicate breakpoints closer than this are merged.
constexpr double kMergeTol = 1e-13;

double gl_cell(const RealFn& g, double lo, double hi,
               std::span<const NodeWeight> rule) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double acc = 0.0;
  for (const auto& nw : rule) acc += nw.w * g(mid + half * nw.x);
  return acc * half;
}

struct Piece {
  double lo, hi;
  bool grade_lo, grade_hi;
};

std::vector<Piece> split_at_breaks(double a, double b,
                                   std::span<const Breakpoint> breaks) {
  struct Mark {
    double t;
    bool grade;
  };
  std::vector<Mark> marks;
  marks.push_back({a, false});
  marks.push_back({b, false});
  for (const auto& bp : breaks) {
    if (bp.t > a + kMergeTol && bp.t < b - kMergeTol)
      marks.push_back({bp.t, bp.grade});
    // grading requested at an endpoint still matters
    if (bp.grade && std::abs(bp.t - a) <= kMergeTol) marks[0].grade = true;
    if (bp.grade && std::abs(bp.t - b) <= kMergeTol) marks[1].grade = true;
  }
  std::sort(marks.begin(), marks.end(),
            [](const Mark& l, const Mark& r) { return l.t < r.t; });
  // merge near-duplicates, keeping any grade flag
  std::vector<Mark> merged;
  for (const auto& m : marks) {
    if (!merged.empty() && m.t - merged.back().t <= kMergeTol)
      merged.back().grade = merged.back().grade || m.grade;
    else
      merged.push_back(m);
  }
  std::vector<Piece> pieces;
  for (size_t i = 0; i + 1 < merged.size(); ++i)
    pieces.push_back({merged[i].t, merged[i + 1].t, merged[i].grade,
                      merged[i + 1].grade});
  return pieces;
}

// Budget distribution proportional to length, at least one cell per piece.
std::vector<int> distribute_cells(const std::vector<Piece>& pieces,
                                  int budget) {
  const size_t n = pieces.size();
  std::vector<int> out(n, 1);
  double total = 0.0;
  for (const auto& p : pieces) total += p.hi - p.lo;
  if (total <= 0.0) return out;
  int remaining = budget - static_cast<int>(n);
  if (remaining <= 0) return out;
  std::vector<double> want(n);
  int given = 0;
  for (size_t i = 0; i < n; ++i) {
    want[i] = remaining * (pieces[i].hi - pieces[i].lo) / total;
    out[i] += static_cast<int>(want[i]);
    given += static_cast<int>(want[i]);
  }
  // largest remainder, ties by index for determinism
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t l, size_t r) {
    double fl = want[l] - std::floor(want[l]);
    double fr = want[r] - std::floor(want[r]);
    if (fl != fr) return fl > fr;
    return l < r;
  });
  for (int i = 0; i < remaining - given; ++i) out[order[i % n]] += 1;
  return out;
}

}  // namespace

std::span<const double> gl_nodes(int order) {
  static const std::vector<double> n4 = [] {
    std::vector<double> v;
    for (auto& nw : kGL4) v.push_back(nw.x);
    return v;
  }();
  static const std::vector<double> n8 = [] {
    std::vector<double> v;
    for (auto& nw : kGL8) v.push_back(nw.x);
    return v;
  }();
  static const std::vector<double> n16 = [] {
    std::vector<double> v;
    for (auto& nw : kGL16) v.push_back(nw.x);
    return v;
  }();
  switch (order) {
    case 4:
      return n4;
    case 8:
      return n8;
    case 16:
      return n16;
    default:
      throw std::invalid_argument("gl_nodes: order must be 4, 8 or 16");
  }
}

std::span<const double> gl_weights(int order) {
  static const std::vector<double> w4 = [] {
    std::vector<double> v;
    for (auto& nw : kGL4) v.push_back(nw.w);
    return v;
  }();
  static const std::vector<double> w8 = [] {
    std::vector<double> v;
    for (auto& nw : kGL8) v.push_back(nw.w);
    return v;
  }();
  static const std::vector<double> w16 = [] {
    std::vector<double> v;
    for (auto& nw : kGL16) v.push_back(nw.w);
    return v;
  }();
  switch (order) {
    case 4:
      return w4;
    case 8:
      return w8;
    case 16:
      return w16;
    default:
      throw std::invalid_argument("gl_weights: order must be 4, 8 or 16");
  }
}

std::vector<double> build_cells(double a, double b,
                                std::span<const Breakpoint> breaks,
                                const QuadratureSpec& spec) {
  if (!(b > a)) throw std::invalid_argument("build_cells: requires b > a");
  if (spec.cells < 1)
    throw std::invalid_argument("QuadratureSpec.cells must be >= 1");
  gl_rule(spec.points_per_cell);  // validates the order

  auto pieces = split_at_breaks(a, b, breaks);
  auto counts = distribute_cells(pieces, spec.cells);

  std::vector<double> edges;
  edges.push_back(a);
  for (size_t i = 0; i < pieces.size(); ++i) {
    const Piece& p = pieces[i];
    const int n = counts[i];
    const double h = (p.hi - p.lo) / n;
    // uniform interior edges
    std::vector<double> local;
    for (int c = 1; c < n; ++c) local.push_back(p.lo + c * h);
    // cascade into the first / last uniform cell where grading is requested
    if (p.grade_lo) {
      double first_hi = (n > 1) ? local.front() : p.hi;
      std::vector<double> casc;
      double w = first_hi - p.lo;
      while (w > kCascadeFloor) {
        w *= 0.5;
        casc.push_back(p.lo + w);
      }
      std::sort(casc.begin(), casc.end());
      local.insert(local.begin(), casc.begin(), casc.end());
    }
    if (p.grade_hi) {
      double last_lo = (n > 1) ? p.lo + (n - 1) * h : p.lo;
      std::vector<double> casc;
      double w = p.hi - last_lo;
      while (w > kCascadeFloor) {
        w *= 0.5;
        casc.push_back(p.hi - w);
      }
      std::sort(casc.begin(), casc.end());
      local.insert(local.end(), casc.begin(), casc.end());
    }
    std::sort(local.begin(), local.end());
    for (double e : local)
      if (e > edges.back() + kMergeTol) edges.push_back(e);
    if (p.hi > edges.back() + kMergeTol)
      edges.push_back(p.hi);
    else
      edges.back() = p.hi;
  }
  return edges;
}

double integrate(const RealFn& g, double a, double b,
                 std::span<const Breakpoint> breaks,
                 const QuadratureSpec& spec) {
  if (b == a) return 0.0;
  if (b < a) return -integrate(g, b, a, breaks, spec);
  auto edges = build_cells(a, b, breaks, spec);
  auto rule = gl_rule(spec.points_per_cell);
  double acc = 0.0;
  for (size_t i = 0; i + 1 < edges.size(); ++i)
    acc += gl_cell(g, edges[i], edges[i + 1], rule);
  return acc;
}

namespace {

// Bisection for a sign change of g bracketed by [lo, hi].
double locate_root(const RealFn& g, double lo, double hi, double flo) {
  for (int it = 0; it < 80 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = g(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0) != (fm < 0)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

// Signed integrals per cell partition; sign changes already split out.
double abs_pow_over_edges(const RealFn& g, double p,
                          const std::vector<double>& edges,
                          std::span<const NodeWeight> rule) {
  double acc = 0.0;
  if (p == 1.0) {
    // |segment integral| per sign-pure cell: keeps the triangle inequality
    // against the signed integral exact under rounding
    for (size_t i = 0; i + 1 < edges.size(); ++i)
      acc += std::abs(gl_cell(g, edges[i], edges[i + 1], rule));
    return acc;
  }
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    const double mid = 0.5 * (edges[i] + edges[i + 1]);
    const double half = 0.5 * (edges[i + 1] - edges[i]);
    double cell = 0.0;
    for (const auto& nw : rule)
      cell += nw.w * std::pow(std::abs(g(mid + half * nw.x)), p);
    acc += cell * half;
  }
  return acc;
}

std::vector<double> edges_with_roots(const RealFn& g, double a, double b,
                                     std::span<const Breakpoint> breaks,
                                     const QuadratureSpec& spec) {
  auto edges = build_cells(a, b, breaks, spec);
  auto nodes = gl_nodes(spec.points_per_cell);
  // scan pass: nodes of every cell, in order
  std::vector<double> ts, vs;
  ts.reserve(edges.size() * nodes.size());
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    const double mid = 0.5 * (edges[i] + edges[i + 1]);
    const double half = 0.5 * (edges[i + 1] - edges[i]);
    for (double xn : nodes) {
      ts.push_back(mid + half * xn);
      vs.push_back(g(ts.back()));
    }
  }
  std::vector<double> roots;
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    if (vs[i] == 0.0 || vs[i + 1] == 0.0) continue;
    if ((vs[i] < 0) != (vs[i + 1] < 0))
      roots.push_back(locate_root(g, ts[i], ts[i + 1], vs[i]));
  }
  if (!roots.empty()) {
    edges.insert(edges.end(), roots.begin(), roots.end());
    std::sort(edges.begin(), edges.end());
    std::vector<double> dedup;
    for (double e : edges)
      if (dedup.empty() || e > dedup.back() + kMergeTol) dedup.push_back(e);
    dedup.back() = b;
    edges = std::move(dedup);
  }
  return edges;
}

}  // namespace

double integrate_abs_pow(const RealFn& g, double p, double a, double b,
                         std::span<const Breakpoint> breaks,
                         const QuadratureSpec& spec) {
  if (!(p >= 1.0))
    throw std::invalid_argument("integrate_abs_pow: requires p >= 1");
  if (b == a) return 0.0;
  if (b < a) throw std::invalid_argument("integrate_abs_pow: requires b >= a");
  auto edges = edges_with_roots(g, a, b, breaks, spec);
  return abs_pow_over_edges(g, p, edges, gl_rule(spec.points_per_cell));
}

std::vector<double> integrate_abs_pow_segments(const RealFn& g, double p,
                                               std::span<const double> bounds,
                                               std::span<const Breakpoint> breaks,
                                               const QuadratureSpec& spec) {
  if (!(p >= 1.0))
    throw std::invalid_argument("integrate_abs_pow_segments: requires p >= 1");
  if (bounds.size() < 2)
    throw std::invalid_argument(
        "integrate_abs_pow_segments: needs >= 2 bounds");
  std::vector<Breakpoint> all(breaks.begin(), breaks.end());
  for (size_t i = 1; i + 1 < bounds.size(); ++i) all.push_back({bounds[i]});
  auto edges =
      edges_with_roots(g, bounds.front(), bounds.back(), all, spec);
  auto rule = gl_rule(spec.points_per_cell);

  std::vector<double> out(bounds.size() - 1, 0.0);
  size_t seg = 0;
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    const double mid = 0.5 * (edges[i] + edges[i + 1]);
    while (seg + 2 < bounds.size() && mid > bounds[seg + 1]) ++seg;
    if (p == 1.0) {
      out[seg] += std::abs(gl_cell(g, edges[i], edges[i + 1], rule));
    } else {
      const double half = 0.5 * (edges[i + 1] - edges[i]);
      double cell = 0.0;
      for (const auto& nw : rule)
        cell += nw.w * std::pow(std::abs(g(mid + half * nw.x)), p);
      out[seg] += cell * half;
    }
  }
  return out;
}

}  // namespace strongsum
