#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "absnorm/errors.hpp"
#include "absnorm/vec.hpp"

namespace absnorm {

struct ValidationIssue {
  std::string invariant;
  std::string witness;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> violations;

  void add(std::string invariant, std::string witness) {
    ok = false;
    violations.push_back({std::move(invariant), std::move(witness)});
  }
};

namespace detail {

inline std::string point_str(const Vec2& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Merges consecutive collinear vertices and drops duplicates. The input must
// already run from (1,0) to (0,1) monotonically.
inline std::vector<Vec2> canonicalize_chain(std::vector<Vec2> vs) {
  std::vector<Vec2> out;
  for (const auto& v : vs) {
    if (!out.empty() && out.back() == v) continue;
    while (out.size() >= 2 && cross(out.back() - out[out.size() - 2], v - out.back()) == Rat(0))
      out.pop_back();
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

// Structural invariants of a positive-sphere vertex chain. Collinear interior
// vertices are allowed here; canonical form removes them.
inline ValidationReport validate_vertices(const std::vector<Vec2>& vs) {
  ValidationReport rep;
  if (vs.empty()) {
    rep.add("nonempty vertex list", "(empty)");
    return rep;
  }
  if (vs.front() != Vec2{rat(1), rat(0)})
    rep.add("first vertex = (1,0)", detail::point_str(vs.front()));
  if (vs.back() != Vec2{rat(0), rat(1)})
    rep.add("last vertex = (0,1)", detail::point_str(vs.back()));
  if (vs.size() < 2) {
    rep.add("at least two vertices", detail::point_str(vs.front()));
    return rep;
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (vs[i + 1].a1 > vs[i].a1)
      rep.add("first coordinates non-increasing", detail::point_str(vs[i + 1]));
    if (vs[i + 1].a2 < vs[i].a2)
      rep.add("second coordinates non-decreasing", detail::point_str(vs[i + 1]));
    if (vs[i + 1] == vs[i]) rep.add("no repeated vertices", detail::point_str(vs[i]));
  }
  for (const auto& v : vs) {
    if (v.a1 > Rat(1) || v.a2 > Rat(1) || v.a1 < Rat(0) || v.a2 < Rat(0))
      rep.add("max(v1,v2) <= 1 within the positive quadrant", detail::point_str(v));
    if (v.a1 + v.a2 < Rat(1)) rep.add("v1+v2 >= 1", detail::point_str(v));
  }
  for (std::size_t i = 0; i + 2 < vs.size(); ++i) {
    if (cross(vs[i + 1] - vs[i], vs[i + 2] - vs[i + 1]) < Rat(0))
      rep.add("concave toward the origin (convex ball)", detail::point_str(vs[i + 1]));
  }
  return rep;
}

// An absolute normalized norm on R^2: exact polygonal (canonical vertex chain
// of the positive sphere) or numeric black box.
class AbsNorm2 {
public:
  struct Polygon {
    std::vector<Vec2> vertices;        // canonical, from (1,0) to (0,1)
    std::vector<Functional2> supports; // supporting functional of each edge
    std::vector<Functional2> dual_vertices;
  };

  struct BlackBox {
    std::function<double(double, double)> eval;
    int resolution = 256;
    std::string label = "blackbox";
  };

  static AbsNorm2 polygon(std::vector<Vec2> vertices) {
    auto rep = validate_vertices(vertices);
    if (!rep.ok) {
      std::string msg = "invalid polygonal norm:";
      for (const auto& iss : rep.violations) msg += " [" + iss.invariant + " at " + iss.witness + "]";
      throw validation_error(msg);
    }
    Polygon p;
    p.vertices = detail::canonicalize_chain(std::move(vertices));
    compute_duality(p);
    return AbsNorm2(std::move(p));
  }

  static AbsNorm2 l1() { return polygon({{rat(1), rat(0)}, {rat(0), rat(1)}}); }
  static AbsNorm2 linf() {
    return polygon({{rat(1), rat(0)}, {rat(1), rat(1)}, {rat(0), rat(1)}});
  }

  static AbsNorm2 black_box(std::function<double(double, double)> eval, int resolution = 256,
                            std::string label = "blackbox") {
    BlackBox b;
    b.eval = std::move(eval);
    b.resolution = resolution;
    b.label = std::move(label);
    return AbsNorm2(std::move(b));
  }

  // lp norms; p=1 and p=inf come back exact.
  static AbsNorm2 lp(double p) {
    if (p < 1.0) throw contract_error("lp: p must be >= 1");
    if (p == 1.0) return l1();
    if (std::isinf(p)) return linf();
    return black_box(
        [p](double x, double y) {
          return std::pow(std::pow(std::abs(x), p) + std::pow(std::abs(y), p), 1.0 / p);
        },
        256, "lp(" + std::to_string(p) + ")");
  }

  bool is_polygonal() const { return std::holds_alternative<Polygon>(rep_); }

  const std::vector<Vec2>& vertices() const { return poly().vertices; }
  const std::vector<Functional2>& edge_supports() const { return poly().supports; }
  const std::vector<Functional2>& dual_vertices() const { return poly().dual_vertices; }
  std::size_t edge_count() const { return vertices().size() - 1; }

  const BlackBox& black_box_data() const {
    if (is_polygonal()) throw unsupported_error("polygonal norm has no black-box data");
    return std::get<BlackBox>(rep_);
  }

  friend bool operator==(const AbsNorm2& a, const AbsNorm2& b) {
    if (a.is_polygonal() != b.is_polygonal()) return false;
    if (!a.is_polygonal()) return false;  // black boxes compare by identity only
    return a.vertices() == b.vertices();
  }

private:
  explicit AbsNorm2(Polygon p) : rep_(std::move(p)) {}
  explicit AbsNorm2(BlackBox b) : rep_(std::move(b)) {}

  const Polygon& poly() const {
    if (!is_polygonal()) throw unsupported_error("operation requires a polygonal norm");
    return std::get<Polygon>(rep_);
  }

  // Supporting functional of edge [u,v]: the unique f with <f,u> = <f,v> = 1.
  static Functional2 edge_support(const Vec2& u, const Vec2& v) {
    Rat det = cross(u, v);
    return {(v.a2 - u.a2) / det, (u.a1 - v.a1) / det};
  }

  static void compute_duality(Polygon& p) {
    p.supports.clear();
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
      p.supports.push_back(edge_support(p.vertices[i], p.vertices[i + 1]));
    const Functional2 e1{rat(1), rat(0)}, e2{rat(0), rat(1)};
    std::vector<Vec2> dual;
    if (!(p.supports.front() == e1)) dual.push_back(as_vec(e1));
    for (const auto& f : p.supports) dual.push_back(as_vec(f));
    if (!(p.supports.back() == e2)) dual.push_back(as_vec(e2));
    dual = detail::canonicalize_chain(std::move(dual));
    p.dual_vertices.clear();
    for (const auto& d : dual) p.dual_vertices.push_back(as_functional(d));
  }

  std::variant<Polygon, BlackBox> rep_;
};

// Exact norm value of a polygonal norm: support-function maximum over the
// dual vertices of the componentwise absolute value.
inline Rat norm_eval(const AbsNorm2& F, const Vec2& a) {
  Vec2 z = abs2(a);
  if (z.a1 == Rat(0) && z.a2 == Rat(0)) return Rat(0);
  Rat best(0);
  for (const auto& w : F.dual_vertices()) {
    Rat v = dot(w, z);
    if (v > best) best = v;
  }
  return best;
}

// Exact dual norm ||f||_{F*} = max_{a in B_F} <f,a>.
inline Rat dual_norm_eval(const AbsNorm2& F, const Functional2& f) {
  Functional2 g{rat_abs(f.f1), rat_abs(f.f2)};
  if (g.f1 == Rat(0) && g.f2 == Rat(0)) return Rat(0);
  Rat best(0);
  for (const auto& v : F.vertices()) {
    Rat val = dot(g, v);
    if (val > best) best = val;
  }
  return best;
}

// Norm value usable for both representations (floating).
inline double norm_eval_d(const AbsNorm2& F, double x, double y) {
  if (F.is_polygonal()) return to_double(norm_eval(F, {rat_from_double(x), rat_from_double(y)}));
  return F.black_box_data().eval(x, y);
}

// Hat values: extent of the vertical edge at a1=1 and of the horizontal edge
// at a2=1 of the positive sphere.
inline std::pair<Rat, Rat> hat_values(const AbsNorm2& F) {
  const auto& vs = F.vertices();
  Rat h1 = vs[1].a1 == Rat(1) ? vs[1].a2 : Rat(0);
  Rat h2 = vs[vs.size() - 2].a2 == Rat(1) ? vs[vs.size() - 2].a1 : Rat(0);
  return {h1, h2};
}

// Exact polar dual: the dual positive sphere is the chain of edge-supporting
// functionals, with (1,0)/(0,1) prepended/appended when they are corners.
inline AbsNorm2 dual_norm(const AbsNorm2& F) {
  if (!F.is_polygonal())
    throw unsupported_error("dual_norm requires a polygonal norm; approximate first");
  std::vector<Vec2> dual;
  for (const auto& w : F.dual_vertices()) dual.push_back(as_vec(w));
  return AbsNorm2::polygon(std::move(dual));
}

namespace detail {

// Strict CCW angular order on nonzero vectors (quadrant index, then cross).
inline bool angle_less(const Vec2& a, const Vec2& b) {
  auto half = [](const Vec2& v) {
    // 0 for angle in [0,pi), 1 for [pi,2pi)
    return (v.a2 < Rat(0) || (v.a2 == Rat(0) && v.a1 < Rat(0))) ? 1 : 0;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > Rat(0);
}

}  // namespace detail

// All extreme points of the full ball B_F, in CCW angular order starting in
// the closed positive quadrant. Axis points are dropped exactly when the
// incident edge continues straight across the axis.
inline std::vector<Vec2> extreme_points(const AbsNorm2& F) {
  if (!F.is_polygonal()) throw unsupported_error("extreme_points requires a polygonal norm");
  const auto& vs = F.vertices();
  auto [h1, h2] = hat_values(F);
  std::vector<Vec2> pts;
  for (const auto& v : vs) {
    if (v == Vec2{rat(1), rat(0)}) {
      if (h1 == Rat(0)) {
        pts.push_back(v);
        pts.push_back(-v);
      }
    } else if (v == Vec2{rat(0), rat(1)}) {
      if (h2 == Rat(0)) {
        pts.push_back(v);
        pts.push_back(-v);
      }
    } else {
      pts.push_back(v);
      pts.push_back({-v.a1, v.a2});
      pts.push_back({-v.a1, -v.a2});
      pts.push_back({v.a1, -v.a2});
    }
  }
  std::sort(pts.begin(), pts.end(), detail::angle_less);
  return pts;
}

// Extreme points of the full dual ball, CCW.
inline std::vector<Functional2> dual_extreme_points(const AbsNorm2& F) {
  auto pts = extreme_points(dual_norm(F));
  std::vector<Functional2> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(as_functional(p));
  return out;
}

}  // namespace absnorm
