#pragma once

#include <cmath>
#include <cstdlib>
#include <string>

#include <gmpxx.h>

namespace gsnn {

// Exact rational scalar. mpq_class arithmetic always keeps values canonical.
using Rat = mpq_class;

inline Rat ratio(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Central tolerance set for float-mode arithmetic.
struct Tolerances {
  double eq = 1e-9;     // entrywise equality
  double pivot = 1e-9;  // rank-revealing pivot threshold
  double orth = 1e-12;  // orthogonality residual
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rat> {
  static constexpr bool exact = true;
  static bool eq(const Rat& a, const Rat& b, double) { return a == b; }
  static bool is_zero(const Rat& a, double) { return sgn(a) == 0; }
  static double to_double(const Rat& a) { return a.get_d(); }
  static Rat from_int(long v) { return Rat(v); }
  static Rat from_double(double v) { return Rat(v); }  // exact: doubles are dyadic
  static std::string to_string(const Rat& a) { return a.get_str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static bool eq(double a, double b, double eps) { return std::fabs(a - b) <= eps; }
  static bool is_zero(double a, double eps) { return std::fabs(a) <= eps; }
  static double to_double(double a) { return a; }
  static double from_int(long v) { return static_cast<double>(v); }
  static double from_double(double v) { return v; }
  static std::string to_string(double a) { return std::to_string(a); }
};

}  // namespace gsnn
