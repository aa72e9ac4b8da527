#include "rangeforms/interval.hpp"

#include <limits>
#include <ostream>

namespace rangeforms {

Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = a.lo() * b.lo();
  const double p2 = a.lo() * b.hi();
  const double p3 = a.hi() * b.lo();
  const double p4 = a.hi() * b.hi();
  return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval scale(const Interval& a, double c) {
  return c >= 0.0 ? Interval(c * a.lo(), c * a.hi()) : Interval(c * a.hi(), c * a.lo());
}

namespace {

double ipow(double x, unsigned k) {
  double result = 1.0;
  for (unsigned i = 0; i < k; ++i) result *= x;
  return result;
}

}  // namespace

Interval pow(const Interval& a, unsigned k) {
  if (k == 0) return Interval(1.0);
  const double lo_k = ipow(a.lo(), k);
  const double hi_k = ipow(a.hi(), k);
  if (k % 2 == 1) return Interval(lo_k, hi_k);
  if (a.lo() >= 0.0) return Interval(lo_k, hi_k);
  if (a.hi() <= 0.0) return Interval(hi_k, lo_k);
  return Interval(0.0, std::max(lo_k, hi_k));
}

double hausdorff(const Interval& a, const Interval& b) {
  return std::max(std::abs(a.lo() - b.lo()), std::abs(a.hi() - b.hi()));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval hull(const Interval& a, double x) {
  return Interval(std::min(a.lo(), x), std::max(a.hi(), x));
}

std::ostream& operator<<(std::ostream& os, const Interval& a) {
  return os << '[' << a.lo() << ", " << a.hi() << ']';
}

Box2 Box2::square(double mx, double my, double r) {
  return Box2(Interval(mx - r, mx + r), Interval(my - r, my + r));
}

bool Box2::is_nearly_square() const {
  const double rx = rad_x();
  const double ry = rad_y();
  if (rx == ry) return true;
  const double coord = std::max({x_.magnitude(), y_.magnitude(), rx, ry});
  return std::abs(rx - ry) <= 8.0 * std::numeric_limits<double>::epsilon() * coord;
}

std::ostream& operator<<(std::ostream& os, const Box2& b) {
  return os << b.x() << " x " << b.y();
}

}  // namespace rangeforms
