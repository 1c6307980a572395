#pragma once

#include <ostream>

#include "absnorm/rational.hpp"

namespace absnorm {

// Point of the norm space F = (R^2, ||.||).
struct Vec2 {
  Rat a1, a2;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  Vec2 operator+(const Vec2& o) const { return {a1 + o.a1, a2 + o.a2}; }
  Vec2 operator-(const Vec2& o) const { return {a1 - o.a1, a2 - o.a2}; }
  Vec2 operator-() const { return {-a1, -a2}; }
  Vec2 scaled(const Rat& t) const { return {a1 * t, a2 * t}; }
};

// Element of the dual space F*.
struct Functional2 {
  Rat f1, f2;

  friend bool operator==(const Functional2&, const Functional2&) = default;
  Functional2 operator+(const Functional2& o) const { return {f1 + o.f1, f2 + o.f2}; }
  Functional2 operator-(const Functional2& o) const { return {f1 - o.f1, f2 - o.f2}; }
  Functional2 scaled(const Rat& t) const { return {f1 * t, f2 * t}; }
};

inline Rat dot(const Functional2& f, const Vec2& a) { return f.f1 * a.a1 + f.f2 * a.a2; }
inline Rat cross(const Vec2& a, const Vec2& b) { return a.a1 * b.a2 - a.a2 * b.a1; }

inline Vec2 abs2(const Vec2& a) { return {rat_abs(a.a1), rat_abs(a.a2)}; }

// Componentwise lattice order.
inline bool leq2(const Vec2& a, const Vec2& b) { return a.a1 <= b.a1 && a.a2 <= b.a2; }

// Role flips under duality: points of F* are functionals on F and vice versa.
inline Vec2 as_vec(const Functional2& f) { return {f.f1, f.f2}; }
inline Functional2 as_functional(const Vec2& a) { return {a.a1, a.a2}; }

inline std::ostream& operator<<(std::ostream& os, const Vec2& a) {
  return os << "(" << format_rational(a.a1) << "," << format_rational(a.a2) << ")";
}
inline std::ostream& operator<<(std::ostream& os, const Functional2& f) {
  return os << "(" << format_rational(f.f1) << "," << format_rational(f.f2) << ")";
}

}  // namespace absnorm
