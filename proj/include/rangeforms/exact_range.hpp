#pragma once

#include <array>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "rangeforms/interval.hpp"
#include "rangeforms/poly.hpp"

namespace rangeforms {

// p(x) = sum c_k (x - m)^k on [m - r, m + r], degree <= 3.
class CenteredPoly1 {
 public:
  CenteredPoly1(std::vector<double> c, double m, double r);

  double coeff(unsigned k) const { return k < 4 ? c_[k] : 0.0; }
  double m() const { return m_; }
  double r() const { return r_; }
  // Highest k with c_k != 0 (0 for the zero polynomial).
  unsigned degree() const;

  // Value at the offset t = x - m.
  double at_offset(double t) const { return c_[0] + t * (c_[1] + t * (c_[2] + t * c_[3])); }
  double operator()(double x) const { return at_offset(x - m_); }

 private:
  std::array<double, 4> c_{};
  double m_;
  double r_;
};

// Monomial supports accepted by the bivariate kernels.
enum class Support { Linear, Quadratic, Cubic, Biquadratic, Bicubic };

// p(x, y) = sum c_{i,j} (x - m_x)^i (y - m_y)^j over a box, i, j <= 3.
class CenteredPoly2 {
 public:
  explicit CenteredPoly2(const Box2& box);
  CenteredPoly2(const Box2& box, std::initializer_list<Monomial> terms);

  const Box2& box() const { return box_; }
  double coeff(unsigned i, unsigned j) const { return (i < 4 && j < 4) ? c_[i][j] : 0.0; }
  void set(unsigned i, unsigned j, double v);

  // True when every nonzero coefficient lies in the given support.
  bool fits(Support s) const;
  double max_abs_coeff() const;

  // Value at the offsets (u, v) = (x - m_x, y - m_y).
  double at_offset(double u, double v) const;
  double operator()(double x, double y) const { return at_offset(x - box_.mid_x(), y - box_.mid_y()); }

  // Same box, coefficients outside the support dropped.
  CenteredPoly2 restricted(Support s) const;

  // Power-basis polynomial in the absolute coordinates x, y.
  Poly2 to_poly() const;

 private:
  Box2 box_;
  std::array<std::array<double, 4>, 4> c_{};
};

// Exact ranges of univariate polynomials of degree <= 1, 2, 3.
Interval range_uni_linear(const CenteredPoly1& p);
Interval range_uni_quadratic(const CenteredPoly1& p);
Interval range_uni_cubic(const CenteredPoly1& p);

// Exact ranges of bivariate linear, quadratic and cubic polynomials.
Interval range_biv_linear(const CenteredPoly2& p);
Interval range_biv_quadratic(const CenteredPoly2& p);
Interval range_biv_cubic(const CenteredPoly2& p);

// Enclosure q(B) + r(B) where q is the lower-degree Taylor part and r the
// remaining mixed terms.
struct SplitRange {
  Interval q;
  Interval r;
  Interval sum() const { return q + r; }
};

// q: terms of total degree <= 2, exact range. r: c21 x^2y + c12 xy^2 + c22 x^2y^2,
// range from the four edges.
SplitRange range_biquadratic_split(const CenteredPoly2& p);
// q: terms of total degree <= 3, exact range. r: the six terms of degree 4..6.
SplitRange range_bicubic_split(const CenteredPoly2& p);

}  // namespace rangeforms
