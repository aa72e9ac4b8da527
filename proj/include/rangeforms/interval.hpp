#pragma once

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <stdexcept>

namespace rangeforms {

// Closed real interval [lo, hi].
//
// Plain double arithmetic with round-to-nearest; endpoints are not
// outward rounded. Every operation returns the exact set image of its
// arguments up to the rounding of the endpoint formulas.
class Interval {
 public:
  constexpr Interval() = default;
  constexpr explicit Interval(double point) : lo_(point), hi_(point) {}
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) {
      throw std::invalid_argument("Interval: lower endpoint exceeds upper endpoint");
    }
  }

  constexpr double lo() const { return lo_; }
  constexpr double hi() const { return hi_; }

  constexpr double width() const { return hi_ - lo_; }
  constexpr double magnitude() const { return std::max(std::abs(lo_), std::abs(hi_)); }
  constexpr double midpoint() const { return 0.5 * (lo_ + hi_); }
  constexpr double radius() const { return 0.5 * (hi_ - lo_); }

  constexpr bool contains(double x) const { return lo_ <= x && x <= hi_; }
  constexpr bool is_point() const { return lo_ == hi_; }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

inline Interval symmetric(double half_width) {
  return Interval(-std::abs(half_width), std::abs(half_width));
}

inline Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

inline Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo() - b.hi(), a.hi() - b.lo());
}

inline Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

inline Interval operator+(const Interval& a, double c) { return Interval(a.lo() + c, a.hi() + c); }
inline Interval operator+(double c, const Interval& a) { return a + c; }

Interval operator*(const Interval& a, const Interval& b);

// Multiplication by a real scalar.
Interval scale(const Interval& a, double c);
inline Interval operator*(const Interval& a, double c) { return scale(a, c); }
inline Interval operator*(double c, const Interval& a) { return scale(a, c); }

// Tight integer power: even powers of intervals straddling zero start at 0.
Interval pow(const Interval& a, unsigned k);

// max(|a.lo - b.lo|, |a.hi - b.hi|)
double hausdorff(const Interval& a, const Interval& b);

Interval hull(const Interval& a, const Interval& b);
Interval hull(const Interval& a, double x);

inline double width(const Interval& a) { return a.width(); }
inline double magnitude(const Interval& a) { return a.magnitude(); }
inline bool contains(const Interval& a, double x) { return a.contains(x); }
inline bool subset(const Interval& a, const Interval& b) {
  return b.lo() <= a.lo() && a.hi() <= b.hi();
}

std::ostream& operator<<(std::ostream& os, const Interval& a);

// Axis-aligned box x × y.
class Box2 {
 public:
  Box2() = default;
  Box2(Interval x, Interval y) : x_(x), y_(y) {}

  // [mx - r, mx + r] × [my - r, my + r]
  static Box2 square(double mx, double my, double r);

  const Interval& x() const { return x_; }
  const Interval& y() const { return y_; }

  double mid_x() const { return x_.midpoint(); }
  double mid_y() const { return y_.midpoint(); }
  double rad_x() const { return x_.radius(); }
  double rad_y() const { return y_.radius(); }

  // 2 max(r_x, r_y)
  double width() const { return 2.0 * std::max(rad_x(), rad_y()); }

  // r_x == r_y in the working precision.
  bool is_square() const { return rad_x() == rad_y(); }

  // Radii agree up to the rounding of the endpoint coordinates, i.e. the box
  // was meant to be a square but its corners are not exactly representable.
  bool is_nearly_square() const;

  bool is_degenerate() const { return rad_x() == 0.0 || rad_y() == 0.0; }

  bool contains(double px, double py) const { return x_.contains(px) && y_.contains(py); }

  friend bool operator==(const Box2&, const Box2&) = default;

 private:
  Interval x_;
  Interval y_;
};

std::ostream& operator<<(std::ostream& os, const Box2& b);

}  // namespace rangeforms
