#pragma once

#include <vector>

namespace rangeforms {

// Real roots of a low-degree polynomial, sorted ascending, each root listed
// once regardless of multiplicity.
struct RealRoots {
  std::vector<double> roots;
  // Set when every coefficient is zero, i.e. every x is a root.
  bool identically_zero = false;
};

// Coefficients are given in ascending order: a[0] + a[1] x + ... .
//
// A leading coefficient with |a_k| <= 1e-14 * max|a| is treated as zero and
// the lower-degree solver is used. Every returned root is polished with one
// Newton step and satisfies |p(x)| <= 1e-10 * max(1, sum |a_k| |x|^k) after
// normalizing the coefficients by max|a|.
RealRoots solve_linear(double a0, double a1);
RealRoots solve_quadratic(double a0, double a1, double a2);
RealRoots solve_cubic(double a0, double a1, double a2, double a3);
// Ferrari: depressed quartic, resolvent cubic, split into two quadratics.
RealRoots solve_quartic(double a0, double a1, double a2, double a3, double a4);
// Dispatches on a.size() (at most 5 coefficients).
RealRoots solve_polynomial(const std::vector<double>& a);

// Real roots of an arbitrary-degree polynomial inside [lo, hi], found by
// bracketing between the roots of the derivative. Used where a resultant
// degenerates to a degree above four.
std::vector<double> real_roots_in(const std::vector<double>& a, double lo, double hi);

// Horner evaluation, ascending coefficients.
double horner(const std::vector<double>& a, double x);

}  // namespace rangeforms
