#pragma once

#include <string>
#include <utility>

#include "absnorm/approx.hpp"
#include "absnorm/norm.hpp"

namespace absnorm {

enum class NormKind { L1, LInf, Fclass, NonPolygonalOrLarge };

struct ClassTag {
  NormKind kind = NormKind::NonPolygonalOrLarge;
  int m = 0, n = 0;  // Fclass indices, m in {n-1, n, n+1}
  int edges = 0;     // exact count, or certified lower bound when approximate
  Rat hat1{0}, hat2{0};
  bool approximate = false; // true for black-box inputs: edges is a lower bound

  std::string name() const {
    switch (kind) {
      case NormKind::L1: return "l1";
      case NormKind::LInf: return "linf";
      case NormKind::Fclass:
        return "F_{" + std::to_string(m) + "," + std::to_string(n) + "}";
      default: return "NonPolygonalOrLarge";
    }
  }
};

struct Membership {
  bool in_N2 = false; // positive sphere has at most 2 edges
  bool in_N3 = false; // at most 3 edges
  bool in_M2 = false; // {l1, linf} + F_{2,2} + F_{2,3}
};

struct Admissibility {
  bool domain_possible = false;
  bool range_possible = false;
  std::string reason;
};

inline int edge_count(const AbsNorm2& F) {
  if (!F.is_polygonal()) throw unsupported_error("edge_count requires a polygonal norm");
  return static_cast<int>(F.edge_count());
}

inline ClassTag classify_norm(const AbsNorm2& F) {
  ClassTag tag;
  if (!F.is_polygonal()) {
    tag.kind = NormKind::NonPolygonalOrLarge;
    tag.approximate = true;
    tag.edges = edge_lower_bound(F, std::max(16, F.black_box_data().resolution));
    return tag;
  }
  tag.edges = edge_count(F);
  auto [h1, h2] = hat_values(F);
  tag.hat1 = h1;
  tag.hat2 = h2;
  if (tag.edges == 1) {
    tag.kind = NormKind::L1;
    return tag;
  }
  if (F == AbsNorm2::linf()) {
    tag.kind = NormKind::LInf;
    return tag;
  }
  tag.kind = NormKind::Fclass;
  tag.n = tag.edges;
  int zeros = (h1 == Rat(0) ? 1 : 0) + (h2 == Rat(0) ? 1 : 0);
  tag.m = tag.n - 1 + zeros;
  return tag;
}

inline Membership membership(const AbsNorm2& F) {
  ClassTag tag = classify_norm(F);
  Membership mm;
  if (tag.approximate) {
    // edges is only a lower bound: assert membership only when refutable
    mm.in_N3 = false;
    mm.in_N2 = false;
    mm.in_M2 = false;
    return mm;
  }
  mm.in_N3 = tag.edges <= 3;
  mm.in_N2 = tag.edges <= 2;
  mm.in_M2 = tag.kind == NormKind::L1 || tag.kind == NormKind::LInf ||
             (tag.kind == NormKind::Fclass && ((tag.m == 2 && tag.n == 2) || (tag.m == 2 && tag.n == 3)));
  return mm;
}

inline Admissibility admissibility(const AbsNorm2& F) {
  ClassTag tag = classify_norm(F);
  Membership mm = membership(F);
  Admissibility ad;
  ad.domain_possible = mm.in_M2;
  ad.range_possible = mm.in_N2;
  if (tag.approximate) {
    ad.reason = "black-box norm with certified edge lower bound " + std::to_string(tag.edges) +
                (tag.edges > 3 ? " > 3: outside both M2 and N2"
                               : "; no exact class verdict from approximate data");
    return ad;
  }
  ad.reason = "class " + tag.name() + ": " + (mm.in_M2 ? "in" : "not in") + " M2 (sum can be a Daugavet domain iff in M2), " +
              (mm.in_N2 ? "in" : "not in") + " N2 (sum can be a Daugavet range iff in N2)";
  return ad;
}

// F* in F_{n,m} iff F in F_{m,n}; the classical classes swap with each other.
inline bool duality_swap_check(const AbsNorm2& F) {
  ClassTag tag = classify_norm(F);
  ClassTag dual_tag = classify_norm(dual_norm(F));
  switch (tag.kind) {
    case NormKind::L1: return dual_tag.kind == NormKind::LInf;
    case NormKind::LInf: return dual_tag.kind == NormKind::L1;
    case NormKind::Fclass:
      return dual_tag.kind == NormKind::Fclass && dual_tag.m == tag.n && dual_tag.n == tag.m;
    default: return false;
  }
}

}  // namespace absnorm
