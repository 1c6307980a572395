#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "absnorm/norm.hpp"

namespace absnorm {

struct ApproxResult {
  AbsNorm2 polygon;
  double hausdorff; // reported distance between the polygon and the sampled sphere
};

namespace detail {

inline Vec2 snap_boundary_point(double bx, double by) {
  Vec2 v{rat_from_double(bx), rat_from_double(by)};
  if (v.a1 > Rat(1)) v.a1 = Rat(1);
  if (v.a2 > Rat(1)) v.a2 = Rat(1);
  if (v.a1 < Rat(0)) v.a1 = Rat(0);
  if (v.a2 < Rat(0)) v.a2 = Rat(0);
  Rat sum = v.a1 + v.a2;
  if (sum < Rat(1)) v = v.scaled(Rat(1) / sum); // push tiny round-off back out
  return v;
}

}  // namespace detail

// Inscribed rational polygon through n+1 boundary points of the black-box
// sphere at directions theta_k = k*pi/(2n), with the chain convexified and
// canonicalized. Points are snapped to denominator 2^48, so all downstream
// computation on the result is exact.
inline ApproxResult approximate_polygon(const AbsNorm2& F, int n) {
  if (F.is_polygonal()) throw contract_error("approximate_polygon expects a black-box norm");
  if (n < 2) throw contract_error("approximate_polygon: n must be >= 2");
  const auto& bb = F.black_box_data();

  if (std::abs(bb.eval(1.0, 0.0) - 1.0) > 1e-9 || std::abs(bb.eval(0.0, 1.0) - 1.0) > 1e-9)
    throw validation_error("black-box eval is not normalized at the unit vectors");

  std::vector<Vec2> pts;
  pts.push_back({rat(1), rat(0)});
  for (int k = 1; k < n; ++k) {
    double th = k * std::numbers::pi / (2.0 * n);
    double c = std::cos(th), s = std::sin(th);
    double r = bb.eval(c, s);
    if (!(r > 0.0) || !std::isfinite(r))
      throw validation_error("black-box eval violates norm axioms on a probe point");
    pts.push_back(detail::snap_boundary_point(c / r, s / r));
  }
  pts.push_back({rat(0), rat(1)});

  // Outward convex chain; drops right turns caused by flat stretches plus
  // snap noise, and merges exact collinearity.
  std::vector<Vec2> chain;
  for (const auto& p : pts) {
    if (!chain.empty() && chain.back() == p) continue;
    while (chain.size() >= 2 &&
           cross(chain.back() - chain[chain.size() - 2], p - chain.back()) <= Rat(0))
      chain.pop_back();
    chain.push_back(p);
  }

  ApproxResult res{AbsNorm2::polygon(chain), 0.0};

  int probes = 4 * n;
  for (int j = 0; j <= probes; ++j) {
    double th = j * std::numbers::pi / (2.0 * probes);
    double c = std::cos(th), s = std::sin(th);
    double r_true = 1.0 / bb.eval(c, s);
    double r_poly = 1.0 / norm_eval_d(res.polygon, c, s);
    res.hausdorff = std::max(res.hausdorff, std::abs(r_true - r_poly));
  }
  return res;
}

// Lower bound on the number of edges of the positive sphere of a black-box
// norm: the count of genuinely distinct chord directions among boundary
// probes, with near-collinear chords merged conservatively.
inline int edge_lower_bound(const AbsNorm2& F, int probes = 64) {
  if (F.is_polygonal()) return static_cast<int>(F.edge_count());
  const auto& bb = F.black_box_data();
  std::vector<std::pair<double, double>> pts;
  for (int k = 0; k <= probes; ++k) {
    double th = k * std::numbers::pi / (2.0 * probes);
    double c = std::cos(th), s = std::sin(th);
    double r = bb.eval(c, s);
    pts.push_back({c / r, s / r});
  }
  int runs = 1;
  double pdx = pts[1].first - pts[0].first, pdy = pts[1].second - pts[0].second;
  for (std::size_t k = 2; k < pts.size(); ++k) {
    double dx = pts[k].first - pts[k - 1].first, dy = pts[k].second - pts[k - 1].second;
    double cr = pdx * dy - pdy * dx;
    double scale = std::hypot(pdx, pdy) * std::hypot(dx, dy);
    if (cr > 1e-7 * scale) ++runs;
    pdx = dx;
    pdy = dy;
  }
  return runs;
}

}  // namespace absnorm
