#pragma once

#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "absnorm/norm.hpp"
#include "absnorm/parallel.hpp"
#include "absnorm/slice.hpp"

namespace absnorm {

namespace detail {

inline void require_unit_functional(const AbsNorm2& F, const Functional2& f) {
  if (dual_norm_eval(F, f) != Rat(1)) throw contract_error("functional must have dual norm 1");
}

inline void require_positive_sphere_point(const AbsNorm2& F, const Vec2& a) {
  if (a.a1 < Rat(0) || a.a2 < Rat(0) || norm_eval(F, a) != Rat(1))
    throw contract_error("point must lie on the positive unit sphere");
}

}  // namespace detail

// Exact evaluation of ||Id + f (x) a|| on a polygonal F. The maximum of the
// convex map x -> ||x + f(x) a|| over the ball is attained at extreme points;
// the image direction rotates monotonically with x (det(Id + a f^T) =
// 1 + <f,a> > 0 for positive data), so the maximizing dual extreme point is
// tracked with a rotating pointer instead of a fresh search per point.
class Rank1Context {
public:
  explicit Rank1Context(const AbsNorm2& F) : F_(F) {
    auto ext = extreme_points(F);
    for (const auto& x : ext)
      if (x.a2 > Rat(0) || (x.a2 == Rat(0) && x.a1 > Rat(0))) ext_half_.push_back(x);
    dual_cycle_ = dual_extreme_points(F);
  }

  const AbsNorm2& norm() const { return F_; }

  Rat rank1(const Functional2& f, const Vec2& a) const {
    const std::size_t m = dual_cycle_.size();
    std::size_t j = 0;
    Rat best(0);
    bool first = true;
    for (const auto& x : ext_half_) {
      Vec2 z = x + a.scaled(dot(f, x));
      if (first) {
        Rat cur = full_scan(z, j);
        best = cur;
        first = false;
        continue;
      }
      Rat cur = dot(dual_cycle_[j], z);
      std::size_t steps = 0;
      while (steps <= m) {
        Rat nxt = dot(dual_cycle_[(j + 1) % m], z);
        if (nxt < cur) break;
        j = (j + 1) % m;
        cur = nxt;
        ++steps;
      }
      if (steps > m) cur = full_scan(z, j);  // tie cycle; cannot happen for z != 0
      if (cur > best) best = cur;
    }
    return best;
  }

private:
  Rat full_scan(const Vec2& z, std::size_t& argmax) const {
    Rat cur = dot(dual_cycle_[0], z);
    argmax = 0;
    for (std::size_t k = 1; k < dual_cycle_.size(); ++k) {
      Rat v = dot(dual_cycle_[k], z);
      if (v > cur) {
        cur = v;
        argmax = k;
      }
    }
    return cur;
  }

  AbsNorm2 F_;
  std::vector<Vec2> ext_half_;
  std::vector<Functional2> dual_cycle_;
};

// Operator norm of x -> x + <f,x> a on F -> F. Exact for polygonal norms.
inline Rat rank1_norm(const AbsNorm2& F, const Functional2& f, const Vec2& a) {
  if (!F.is_polygonal()) throw unsupported_error("rank1_norm needs a polygonal norm (use rank1_norm_d)");
  detail::require_unit_functional(F, f);
  detail::require_positive_sphere_point(F, a);
  return Rank1Context(F).rank1(f, a);
}

// Floating variant for black-box norms: sphere sweep plus golden-section
// refinement around the best bracket. Accuracy is grid-limited (~1e-6 for
// smooth norms at the default resolution).
inline double rank1_norm_d(const AbsNorm2& F, double f1, double f2, double a1, double a2) {
  auto eval = [&](double x, double y) { return norm_eval_d(F, x, y); };
  auto objective = [&](double th) {
    double c = std::cos(th), s = std::sin(th);
    double r = eval(c, s);
    double x1 = c / r, x2 = s / r;
    double t = f1 * x1 + f2 * x2;
    return eval(x1 + t * a1, x2 + t * a2);
  };
  int res = F.is_polygonal() ? 512 : std::max(512, 4 * F.black_box_data().resolution);
  double best = 0.0, best_th = 0.0;
  for (int k = 0; k < res; ++k) {
    double th = 2.0 * std::numbers::pi * k / res;
    double v = objective(th);
    if (v > best) {
      best = v;
      best_th = th;
    }
  }
  double lo = best_th - 2.0 * std::numbers::pi / res, hi = best_th + 2.0 * std::numbers::pi / res;
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double v1 = objective(x1), v2 = objective(x2);
  for (int it = 0; it < 60; ++it) {
    if (v1 < v2) {
      lo = x1;
      x1 = x2;
      v1 = v2;
      x2 = lo + phi * (hi - lo);
      v2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      v2 = v1;
      x1 = hi - phi * (hi - lo);
      v1 = objective(x1);
    }
  }
  return std::max(best, std::max(v1, v2));
}

// ||Id + f (x) a|| on F equals ||Id + a (x) f|| on F*: the two operators are
// adjoint to each other.
inline bool adjoint_symmetry_check(const AbsNorm2& F, const Functional2& f, const Vec2& a) {
  Rat lhs = rank1_norm(F, f, a);
  Rat rhs = rank1_norm(dual_norm(F), as_functional(a), as_vec(f));
  return lhs == rhs;
}

namespace detail {

// Chain sample: all chain vertices plus `per_edge` interior points per edge,
// in chain order. Works for both primal (Vec2) chains and dual chains.
inline std::vector<Vec2> sample_chain(const std::vector<Vec2>& chain, int per_edge) {
  std::vector<Vec2> out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    out.push_back(chain[i]);
    for (int k = 1; k <= per_edge; ++k) {
      Rat t(k, per_edge + 1);
      out.push_back(chain[i] + (chain[i + 1] - chain[i]).scaled(t));
    }
  }
  out.push_back(chain.back());
  return out;
}

}  // namespace detail

struct DenyMarginResult {
  Rat margin;              // 2 - min sampled rank-one norm; lower bound of the true margin
  Rat covering_radius;     // true margin <= margin + covering_radius (Lipschitz bound)
  Functional2 witness;     // minimizing functional among the samples
  Rat witness_value;       // rank-one norm at the witness
  bool witness_at_vertex;  // margin attained at a vertex/vertex pair (exact provenance)
};

struct StarDenyMarginResult {
  Rat margin;
  Rat covering_radius;
  Vec2 witness;
  Rat witness_value;
  bool witness_at_vertex;
};

// Best denial margin at a: 2 - min_{f* in S_{F*}+} ||Id + f* (x) a||,
// minimized over the dual vertices plus `grid` points per dual edge. The
// rank-one norm is 1-Lipschitz in f* (||a||_F = 1), which certifies the gap
// between samples.
inline DenyMarginResult deny_margin(const AbsNorm2& F, const Vec2& a, int grid) {
  if (!F.is_polygonal()) throw unsupported_error("deny_margin requires a polygonal norm");
  detail::require_positive_sphere_point(F, a);
  Rank1Context ctx(F);
  std::vector<Vec2> dual_chain;
  for (const auto& w : F.dual_vertices()) dual_chain.push_back(as_vec(w));
  auto samples = detail::sample_chain(dual_chain, grid);

  DenyMarginResult res;
  bool first = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Functional2 fs = as_functional(samples[i]);
    Rat v = ctx.rank1(fs, a);
    if (first || v < res.witness_value) {
      first = false;
      res.witness_value = v;
      res.witness = fs;
      res.witness_at_vertex = (i % (grid + 1) == 0);
    }
  }
  res.margin = Rat(2) - res.witness_value;
  Rat max_gap(0);
  for (std::size_t i = 0; i + 1 < dual_chain.size(); ++i) {
    Rat len = dual_norm_eval(F, as_functional(dual_chain[i + 1] - dual_chain[i]));
    Rat gap = len / Rat(grid + 1);
    if (gap > max_gap) max_gap = gap;
  }
  res.covering_radius = max_gap / Rat(2);
  return res;
}

// Star variant: 2 - min_{a in S_F+} ||Id + f (x) a||. Equals
// deny_margin(dual_norm(F), f-as-vector, grid) by adjoint symmetry.
inline StarDenyMarginResult star_deny_margin(const AbsNorm2& F, const Functional2& f, int grid) {
  if (!F.is_polygonal()) throw unsupported_error("star_deny_margin requires a polygonal norm");
  detail::require_unit_functional(F, f);
  Rank1Context ctx(F);
  auto samples = detail::sample_chain(F.vertices(), grid);

  StarDenyMarginResult res;
  bool first = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Rat v = ctx.rank1(f, samples[i]);
    if (first || v < res.witness_value) {
      first = false;
      res.witness_value = v;
      res.witness = samples[i];
      res.witness_at_vertex = (i % (grid + 1) == 0);
    }
  }
  res.margin = Rat(2) - res.witness_value;
  Rat max_gap(0);
  const auto& vs = F.vertices();
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    Rat len = norm_eval(F, vs[i + 1] - vs[i]);
    Rat gap = len / Rat(grid + 1);
    if (gap > max_gap) max_gap = gap;
  }
  res.covering_radius = max_gap / Rat(2);
  return res;
}

// u(f*) = sup{eps > 0 : some a in S_F+ defeats every b in the eps-slice,
// i.e. max_b ||a+b|| < 2-eps}. The inner maximum over the slice is attained
// at the corners of the clipped region (convexity), so each P(eps) check is
// finite and exact; the supremum is located by bisection to within tol.
inline double u_function(const AbsNorm2& F, const Functional2& f, double tol = 1e-4) {
  if (!F.is_polygonal()) throw unsupported_error("u_function requires a polygonal norm");
  detail::require_unit_functional(F, f);
  auto a_samples = detail::sample_chain(F.vertices(), 32);

  auto P = [&](const Rat& eps) {
    auto region = slice_positive(F, f, eps).region;
    Rat bound = Rat(2) - eps;
    for (const auto& a : a_samples) {
      bool defeated = false;
      for (const auto& b : region) {
        if (norm_eval(F, a + b) >= bound) {
          defeated = true;
          break;
        }
      }
      if (!defeated) return true;
    }
    return false;
  };

  Rat eps0 = rat_from_double(std::max(tol * 0.5, 1e-9), 40);
  if (!P(eps0)) return 0.0;
  double lo = to_double(eps0), hi = 1.0 - 1e-9;
  if (P(rat_from_double(hi, 40))) return hi;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (P(rat_from_double(mid, 40)))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

// Some b0 on the maximizing face of f with the whole segment [a, b0] on the
// positive sphere: a itself when f attains 1 at a, otherwise the farthest
// face endpoint sharing a maximal edge with a. Absent when no such endpoint
// exists.
inline std::optional<Vec2> segment_witness(const AbsNorm2& F, const Vec2& a, const Functional2& f) {
  if (!F.is_polygonal()) throw unsupported_error("segment_witness requires a polygonal norm");
  detail::require_positive_sphere_point(F, a);
  detail::require_unit_functional(F, f);
  const auto& vs = F.vertices();

  std::vector<Vec2> face;  // endpoints of {b in S_F+ : <f,b> = 1}
  for (const auto& v : vs)
    if (dot(f, v) == Rat(1)) face.push_back(v);
  if (face.empty()) {
    // maximum attained strictly inside an edge cannot happen for a unit
    // functional on a polygon, but a can still be the attaining point
    if (dot(f, a) == Rat(1)) return a;
    return std::nullopt;
  }

  auto on_edge = [&](const Vec2& p, std::size_t i) {
    const Vec2 &u = vs[i], &v = vs[i + 1];
    if (cross(v - u, p - u) != Rat(0)) return false;
    return std::min(u.a1, v.a1) <= p.a1 && p.a1 <= std::max(u.a1, v.a1) &&
           std::min(u.a2, v.a2) <= p.a2 && p.a2 <= std::max(u.a2, v.a2);
  };

  std::optional<Vec2> best;
  Rat best_dist(-1);
  auto consider = [&](const Vec2& b0) {
    Vec2 d = b0 - a;
    Rat dist = d.a1 * d.a1 + d.a2 * d.a2;
    if (dist > best_dist) {
      best_dist = dist;
      best = b0;
    }
  };

  if (dot(f, a) == Rat(1)) {
    consider(a);
    for (const auto& b0 : face) consider(b0);
    return best;
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!on_edge(a, i)) continue;
    for (const auto& b0 : face)
      if (on_edge(b0, i)) consider(b0);
  }
  return best;
}

// For a three-edge positive sphere [e1, h1, h2, e2]: the interior vertices
// and the unique functional supporting the middle edge.
struct ThreeEdgeData {
  Functional2 w;
  Vec2 h1, h2;
};

inline ThreeEdgeData three_edge_exceptional(const AbsNorm2& F) {
  if (!F.is_polygonal() || F.edge_count() != 3)
    throw contract_error("three_edge_exceptional requires exactly three edges");
  ThreeEdgeData d;
  d.h1 = F.vertices()[1];
  d.h2 = F.vertices()[2];
  d.w = F.edge_supports()[1];
  if (!(d.w.f1 < Rat(1) && d.w.f2 < Rat(1)))
    throw contract_error("middle-edge functional should have both coordinates < 1");
  return d;
}

enum class DenialMode { deny, star_deny };

struct RegionSpec {
  enum class Kind { whole, slice } kind = Kind::whole;
  // Slice regions: in star mode the region is S(B_{F*}, dir, delta) on the
  // dual positive sphere; in deny mode it is S(B_F, dirf, delta) on the
  // primal one.
  Vec2 dir{rat(1), rat(0)};
  Functional2 dirf{rat(1), rat(0)};
  Rat delta{0};

  static RegionSpec whole() { return {}; }
  static RegionSpec slice_about(Vec2 z, Rat delta) {
    RegionSpec r;
    r.kind = Kind::slice;
    r.dir = std::move(z);
    r.delta = std::move(delta);
    return r;
  }
  static RegionSpec slice_about(Functional2 z, Rat delta) {
    RegionSpec r;
    r.kind = Kind::slice;
    r.dirf = std::move(z);
    r.delta = std::move(delta);
    return r;
  }
};

struct CertificateRow {
  std::pair<Rat, Rat> point;    // sampled region point
  std::pair<Rat, Rat> witness;  // inner minimizer on the opposite sphere
  Rat value;                    // ||Id + f* (x) a|| at that pair
};

struct DenialCertificate {
  DenialMode mode;
  std::string region_desc;
  Rat delta{0};
  Rat epsilon{0};          // certified uniform margin over the region
  Rat epsilon_sampled{0};  // min sampled pointwise margin
  Rat covering_radius{0};
  bool certified = false;
  std::vector<CertificateRow> witnesses;
};

namespace detail {

// Portion of a sphere chain inside the halfplane value(.) >= 1 - delta,
// as a polyline (the slice arc).
inline std::vector<Vec2> clip_chain(const std::vector<Vec2>& chain,
                                    const std::function<Rat(const Vec2&)>& value,
                                    const Rat& threshold) {
  std::vector<Vec2> arc;
  auto push = [&](const Vec2& p) {
    if (arc.empty() || !(arc.back() == p)) arc.push_back(p);
  };
  for (std::size_t i = 0; i < chain.size(); ++i) {
    Rat vi = value(chain[i]);
    if (vi >= threshold) push(chain[i]);
    if (i + 1 < chain.size()) {
      Rat vn = value(chain[i + 1]);
      if ((vi >= threshold) != (vn >= threshold)) {
        Rat t = (threshold - vi) / (vn - vi);
        push(chain[i] + (chain[i + 1] - chain[i]).scaled(t));
      }
    }
  }
  return arc;
}

// Samples a polyline with every breakpoint plus an interior budget of about
// `budget` points distributed by arc length; returns samples and the maximal
// gap between consecutive ones (in the supplied length functional).
inline std::pair<std::vector<Vec2>, Rat> sample_polyline(
    const std::vector<Vec2>& polyline, int budget,
    const std::function<Rat(const Vec2&)>& length_of) {
  std::vector<Rat> lens;
  Rat total(0);
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    lens.push_back(length_of(polyline[i + 1] - polyline[i]));
    total += lens.back();
  }
  std::vector<Vec2> samples;
  Rat max_gap(0);
  if (polyline.size() == 1 || total == Rat(0)) {
    samples.push_back(polyline.front());
    return {samples, max_gap};
  }
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    samples.push_back(polyline[i]);
    long cnt = 0;
    if (total > Rat(0)) {
      Rat share = Rat(budget) * lens[i] / total;
      cnt = boost::rational_cast<long>(share); // floor for positive values
    }
    for (long k = 1; k <= cnt; ++k) {
      Rat t(k, cnt + 1);
      samples.push_back(polyline[i] + (polyline[i + 1] - polyline[i]).scaled(t));
    }
    Rat gap = lens[i] / Rat(cnt + 1);
    if (gap > max_gap) max_gap = gap;
  }
  samples.push_back(polyline.back());
  return {samples, max_gap};
}

}  // namespace detail

// Certified denial certificate over a region of the (primal or dual)
// positive sphere. epsilon = (min sampled pointwise margin) - (covering
// radius); the 1-Lipschitz dependence of the margin on the region point makes
// the subtraction a valid lower bound for the whole region.
inline DenialCertificate set_denial_certificate(const AbsNorm2& F, DenialMode mode,
                                                const RegionSpec& region, int grid) {
  if (!F.is_polygonal()) throw unsupported_error("set_denial_certificate requires a polygonal norm");
  Rank1Context ctx(F);
  AbsNorm2 D = dual_norm(F);

  const bool star = mode == DenialMode::star_deny;
  std::vector<Vec2> region_chain;  // chain the region lives on
  if (star)
    for (const auto& w : F.dual_vertices()) region_chain.push_back(as_vec(w));
  else
    region_chain = F.vertices();
  std::vector<Vec2> inner_chain = star ? F.vertices() : [&] {
    std::vector<Vec2> c;
    for (const auto& w : F.dual_vertices()) c.push_back(as_vec(w));
    return c;
  }();

  auto region_len = [&](const Vec2& d) {
    return star ? dual_norm_eval(F, as_functional(d)) : norm_eval(F, d);
  };
  auto inner_len = [&](const Vec2& d) {
    return star ? norm_eval(F, d) : dual_norm_eval(F, as_functional(d));
  };

  DenialCertificate cert;
  cert.mode = mode;

  std::vector<Vec2> polyline = region_chain;
  if (region.kind == RegionSpec::Kind::slice) {
    cert.delta = region.delta;
    if (!(region.delta > Rat(0) && region.delta < Rat(1)))
      throw contract_error("slice region needs delta in (0,1)");
    Rat threshold = Rat(1) - region.delta;
    std::function<Rat(const Vec2&)> value;
    if (star) {
      if (norm_eval(F, region.dir) != Rat(1))
        throw contract_error("slice direction must lie on the positive sphere");
      value = [&](const Vec2& p) { return dot(as_functional(p), region.dir); };
      cert.region_desc = "S(B_{F*}, " + detail::point_str(region.dir) + ", " +
                         format_rational(region.delta) + ") on the dual positive sphere";
    } else {
      detail::require_unit_functional(F, region.dirf);
      value = [&](const Vec2& p) { return dot(region.dirf, p); };
      cert.region_desc = "S(B_F, " + detail::point_str(as_vec(region.dirf)) + ", " +
                         format_rational(region.delta) + ") on the positive sphere";
    }
    polyline = detail::clip_chain(region_chain, value, threshold);
    if (polyline.empty()) throw contract_error("slice region does not meet the sphere");
  } else {
    cert.region_desc = star ? "whole dual positive sphere" : "whole positive sphere";
  }

  auto [region_samples, region_gap] =
      detail::sample_polyline(polyline, grid, std::function<Rat(const Vec2&)>(region_len));
  auto [inner_samples, inner_gap] =
      detail::sample_polyline(inner_chain, grid, std::function<Rat(const Vec2&)>(inner_len));

  cert.witnesses.resize(region_samples.size());
  detail::parallel_for(region_samples.size(), [&](std::size_t i) {
    const Vec2& p = region_samples[i];
    Rat best;
    Vec2 best_witness{rat(0), rat(0)};
    bool first = true;
    for (const auto& q : inner_samples) {
      Rat v = star ? ctx.rank1(as_functional(p), q) : ctx.rank1(as_functional(q), p);
      if (first || v < best) {
        first = false;
        best = v;
        best_witness = q;
      }
    }
    cert.witnesses[i] = CertificateRow{{p.a1, p.a2}, {best_witness.a1, best_witness.a2}, best};
  });

  bool first = true;
  Rat min_margin(0);
  for (const auto& row : cert.witnesses) {
    Rat margin = Rat(2) - row.value;
    if (first || margin < min_margin) {
      first = false;
      min_margin = margin;
    }
  }
  cert.epsilon_sampled = min_margin;
  cert.covering_radius = region_gap / Rat(2);
  cert.epsilon = min_margin - cert.covering_radius;
  if (cert.epsilon < Rat(0)) cert.epsilon = Rat(0);
  cert.certified = cert.epsilon > Rat(0);
  return cert;
}

// Default e1-slice region used by the star-denial pipeline: delta =
// (1 - w1)/4 when the sphere has exactly three edges (keeping the slice clear
// of the exceptional functional), delta = 1/10 otherwise.
inline RegionSpec default_e1_slice_region(const AbsNorm2& F) {
  Rat delta(1, 10);
  if (F.is_polygonal() && F.edge_count() == 3) {
    auto t = three_edge_exceptional(F);
    delta = (Rat(1) - t.w.f1) / Rat(4);
  }
  return RegionSpec::slice_about(Vec2{rat(1), rat(0)}, delta);
}

// Cross-validation of the three equivalent denial formulations at one point,
// with the proof's eps -> eps/2 constant degradation.
struct CharEquivReport {
  Rat eps;
  bool op_form = false, slice_form = false, dual_slice_form = false;
  bool op_form_half = false, slice_form_half = false, dual_slice_form_half = false;
  bool implications_hold = false;
};

inline CharEquivReport char_equiv_check(const AbsNorm2& F, DenialMode mode, const Vec2& point_vec,
                                        const Functional2& point_fun, const Rat& eps) {
  if (!F.is_polygonal()) throw unsupported_error("char_equiv_check requires a polygonal norm");
  AbsNorm2 D = dual_norm(F);
  Rank1Context ctx(F);
  const bool star = mode == DenialMode::star_deny;
  if (star)
    detail::require_unit_functional(F, point_fun);
  else
    detail::require_positive_sphere_point(F, point_vec);

  std::vector<Vec2> partner_chain;
  if (star)
    partner_chain = F.vertices();
  else
    for (const auto& w : F.dual_vertices()) partner_chain.push_back(as_vec(w));
  auto partners = detail::sample_chain(partner_chain, 32);

  auto op_holds = [&](const Rat& e) {
    Rat bound = Rat(2) - e;
    for (const auto& q : partners) {
      Rat v = star ? ctx.rank1(point_fun, q) : ctx.rank1(as_functional(q), point_vec);
      if (v < bound) return true;
    }
    return false;
  };
  auto slice_holds = [&](const Rat& e) {
    Rat bound = Rat(2) - e;
    if (star) {
      auto corners = slice_positive(F, point_fun, e).region;
      for (const auto& q : partners) {
        bool all = true;
        for (const auto& b : corners)
          if (norm_eval(F, q + b) >= bound) {
            all = false;
            break;
          }
        if (all) return true;
      }
      return false;
    }
    for (const auto& q : partners) {
      auto corners = slice_positive(F, as_functional(q), e).region;
      bool all = true;
      for (const auto& b : corners)
        if (norm_eval(F, point_vec + b) >= bound) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  };
  auto dual_slice_holds = [&](const Rat& e) {
    Rat bound = Rat(2) - e;
    if (star) {
      // choose a; every g* in the dual slice about a must stay close
      for (const auto& q : partners) {
        auto corners = slice_positive(D, as_functional(q), e).region;
        bool all = true;
        for (const auto& g : corners)
          if (norm_eval(D, as_vec(point_fun) + g) >= bound) {
            all = false;
            break;
          }
        if (all) return true;
      }
      return false;
    }
    auto corners = slice_positive(D, as_functional(point_vec), e).region;
    for (const auto& q : partners) {
      bool all = true;
      for (const auto& g : corners)
        if (norm_eval(D, q + g) >= bound) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  };

  CharEquivReport rep;
  rep.eps = eps;
  Rat half = eps / Rat(2);
  rep.op_form = op_holds(eps);
  rep.slice_form = slice_holds(eps);
  rep.dual_slice_form = dual_slice_holds(eps);
  rep.op_form_half = op_holds(half);
  rep.slice_form_half = slice_holds(half);
  rep.dual_slice_form_half = dual_slice_holds(half);
  rep.implications_hold = (!rep.op_form || rep.slice_form_half) &&
                          (!rep.slice_form || rep.op_form_half) &&
                          (!rep.op_form || rep.dual_slice_form_half) &&
                          (!rep.dual_slice_form || rep.op_form_half);
  return rep;
}

}  // namespace absnorm
