#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <string>

#include "absnorm/errors.hpp"

namespace absnorm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Rat rat(long long num, long long den = 1) { return Rat(Int(num), Int(den)); }

inline Rat rat_abs(const Rat& x) { return x < Rat(0) ? -x : x; }

inline double to_double(const Rat& x) {
  return x.numerator().convert_to<double>() / x.denominator().convert_to<double>();
}

// Nearest rational with denominator 2^bits. Values indistinguishable from an
// integer at double precision snap to that integer so that axis-touching
// boundary points stay exact.
inline Rat rat_from_double(double x, unsigned bits = 48) {
  if (!std::isfinite(x)) throw malformed_error("rat_from_double: non-finite input");
  double r = std::round(x);
  if (std::abs(x - r) < 1e-12) return Rat(Int(static_cast<long long>(r)));
  double scaled = std::ldexp(x, static_cast<int>(bits));
  Int num(static_cast<long long>(std::llround(scaled)));
  Int den = Int(1) << bits;
  return Rat(num, den);
}

// Parses "p", "-p", or "p/q" with integer p, q.
inline Rat parse_rational(const std::string& s) {
  auto parse_int = [](const std::string& t) -> Int {
    if (t.empty()) throw malformed_error("empty integer literal");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw malformed_error("bare sign in rational literal: '" + t + "'");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        throw malformed_error("bad rational literal: '" + t + "'");
    return Int(t);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw malformed_error("zero denominator in rational literal: '" + s + "'");
  return Rat(num, den);
}

// Canonical text form: lowest terms, "p" for integers, "p/q" otherwise.
inline std::string format_rational(const Rat& x) {
  std::string s = x.numerator().str();
  if (x.denominator() != 1) s += "/" + x.denominator().str();
  return s;
}

}  // namespace absnorm
