#pragma once

#include <algorithm>
#include <limits>
#include <random>

#include "rangeforms/interval.hpp"

namespace testing_support {

using rangeforms::Box2;
using rangeforms::Interval;

// Hull of fn over an n x n lattice including the box edges.
template <class Fn>
Interval sample_hull(const Box2& box, unsigned n, Fn&& fn) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (unsigned a = 0; a < n; ++a) {
    const double x = n == 1 ? box.mid_x() : box.x().lo() + (box.x().hi() - box.x().lo()) * a / (n - 1);
    for (unsigned b = 0; b < n; ++b) {
      const double y = n == 1 ? box.mid_y() : box.y().lo() + (box.y().hi() - box.y().lo()) * b / (n - 1);
      const double v = fn(x, y);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return Interval(lo, hi);
}

template <class Fn>
Interval sample_hull_1d(double a, double b, unsigned n, Fn&& fn) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (unsigned k = 0; k < n; ++k) {
    const double v = fn(a + (b - a) * k / (n - 1));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return Interval(lo, hi);
}

// a ⊇ b up to an absolute slack.
inline bool encloses(const Interval& a, const Interval& b, double slack = 0.0) {
  return a.lo() <= b.lo() + slack && b.hi() <= a.hi() + slack;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng()); }

}  // namespace testing_support
