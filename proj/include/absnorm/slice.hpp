#pragma once

#include <utility>
#include <vector>

#include "absnorm/norm.hpp"

namespace absnorm {

// Slice of the positive ball: {b in B_F+ : <f,b> > 1-eps}. Stored as the
// closed clipped polygon; open_side marks that the chord on <f,b> = 1-eps is
// excluded from the slice itself.
struct SliceRegion {
  Functional2 functional;
  Rat epsilon;
  Rat threshold;            // 1 - epsilon
  std::vector<Vec2> region; // closed polygon, CCW, empty if no intersection
  std::vector<Vec2> arc;    // part of the positive sphere inside the halfplane
  bool open_side = true;
};

inline SliceRegion slice_positive(const AbsNorm2& F, const Functional2& f, const Rat& eps) {
  if (!F.is_polygonal()) throw unsupported_error("slice_positive requires a polygonal norm");
  if (dual_norm_eval(F, f) != Rat(1))
    throw contract_error("slice_positive: functional must have dual norm 1");
  if (!(eps > Rat(0) && eps < Rat(1)))
    throw contract_error("slice_positive: eps must lie in (0,1)");

  SliceRegion s;
  s.functional = f;
  s.epsilon = eps;
  s.threshold = Rat(1) - eps;

  // Positive ball as a CCW polygon starting at the origin.
  std::vector<Vec2> ball;
  ball.push_back({rat(0), rat(0)});
  for (const auto& v : F.vertices()) ball.push_back(v);

  auto value = [&](const Vec2& p) { return dot(f, p); };
  auto crossing = [&](const Vec2& p, const Vec2& q) {
    // point on [p,q] with <f,.> = threshold; caller guarantees a sign change
    Rat vp = value(p), vq = value(q);
    Rat t = (s.threshold - vp) / (vq - vp);
    return p + (q - p).scaled(t);
  };

  // Clip by the closed halfplane <f,.> >= threshold.
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Vec2& p = ball[i];
    const Vec2& q = ball[(i + 1) % ball.size()];
    bool pin = value(p) >= s.threshold, qin = value(q) >= s.threshold;
    if (pin) out.push_back(p);
    if (pin != qin) out.push_back(crossing(p, q));
  }
  // Dedup consecutive (crossing can coincide with a vertex).
  std::vector<Vec2> region;
  for (const auto& p : out)
    if (region.empty() || !(region.back() == p)) region.push_back(p);
  while (region.size() > 1 && region.front() == region.back()) region.pop_back();
  s.region = std::move(region);

  // Sphere sub-arc inside the halfplane.
  const auto& vs = F.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool in = value(vs[i]) >= s.threshold;
    if (in) s.arc.push_back(vs[i]);
    if (i + 1 < vs.size()) {
      bool nin = value(vs[i + 1]) >= s.threshold;
      if (in != nin) s.arc.push_back(crossing(vs[i], vs[i + 1]));
    }
  }

  return s;
}

// Containment check against the closed region (the open side only matters at
// exact boundary ties).
inline bool slice_contains(const SliceRegion& s, const Vec2& p, bool open) {
  Rat v = dot(s.functional, p);
  return open ? v > s.threshold : v >= s.threshold;
}

}  // namespace absnorm
