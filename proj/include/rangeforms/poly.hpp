#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "rangeforms/interval.hpp"

namespace rangeforms {

// Order of a partial derivative: i times in x, j times in y.
struct PartialIndex {
  unsigned i = 0;
  unsigned j = 0;

  unsigned order() const { return i + j; }
  friend constexpr auto operator<=>(const PartialIndex&, const PartialIndex&) = default;
};

struct Monomial {
  unsigned i;  // x exponent
  unsigned j;  // y exponent
  double coeff;
};

// Bivariate polynomial sum c[i][j] x^i y^j in the power basis.
//
// The coefficient grid is kept canonical: trailing all-zero rows and columns
// are trimmed, and the zero polynomial is the 1x1 grid {0}.
class Poly2 {
 public:
  Poly2();
  explicit Poly2(double constant);
  // grid[i][j] is the coefficient of x^i y^j; rows may have different lengths.
  explicit Poly2(const std::vector<std::vector<double>>& grid);

  static Poly2 from_monomials(std::initializer_list<Monomial> terms);
  static Poly2 from_monomials(const std::vector<Monomial>& terms);
  static Poly2 x();
  static Poly2 y();

  // Highest x / y exponent present.
  unsigned deg_x() const { return nx_ - 1; }
  unsigned deg_y() const { return ny_ - 1; }
  // Total degree max{i + j : c[i][j] != 0}; 0 for the zero polynomial.
  unsigned degree() const;
  bool is_zero() const;

  double coeff(unsigned i, unsigned j) const {
    return (i < nx_ && j < ny_) ? c_[j * nx_ + i] : 0.0;
  }
  std::vector<Monomial> monomials() const;

  double operator()(double x, double y) const;

  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  Poly2(unsigned nx, unsigned ny, std::vector<double> c);
  void trim();

  unsigned nx_ = 1;
  unsigned ny_ = 1;
  // Column-major in j: row polynomial R_j(x) = sum_i c[i][j] x^i is contiguous.
  std::vector<double> c_;
};

Poly2 operator+(const Poly2& a, const Poly2& b);
Poly2 operator-(const Poly2& a, const Poly2& b);
Poly2 operator-(const Poly2& a);
Poly2 operator*(const Poly2& a, const Poly2& b);
Poly2 operator*(double s, const Poly2& a);
inline Poly2 operator*(const Poly2& a, double s) { return s * a; }
inline Poly2 operator+(const Poly2& a, double s) { return a + Poly2(s); }
inline Poly2 operator+(double s, const Poly2& a) { return Poly2(s) + a; }
inline Poly2 operator-(const Poly2& a, double s) { return a - Poly2(s); }
inline Poly2 operator-(double s, const Poly2& a) { return Poly2(s) - a; }
Poly2 pow(const Poly2& a, unsigned k);

// Horner in y over Horner-in-x row polynomials.
double eval(const Poly2& p, double x, double y);

// Symbolic partial derivative: d.i x-derivatives followed by d.j y-derivatives.
Poly2 partial(const Poly2& p, PartialIndex d);

// Interval Horner evaluation of p over box.x × box.y (same scheme as eval).
Interval natural_extension(const Poly2& p, const Box2& box);

// Re-expansion about (x0, y0): returns q with q(u, v) = p(x0 + u, y0 + v).
Poly2 shift(const Poly2& p, double x0, double y0);

// A polynomial together with all of its partial derivatives, computed once.
//
// Built eagerly, so a const Derivatives is safe to share between threads.
class Derivatives {
 public:
  explicit Derivatives(Poly2 p);

  const Poly2& poly() const { return table_.front(); }
  unsigned degree() const { return degree_; }

  // f^{(i,j)}; the zero polynomial when i > deg_x or j > deg_y.
  const Poly2& operator()(PartialIndex d) const;
  const Poly2& operator()(unsigned i, unsigned j) const { return (*this)({i, j}); }

  double eval(PartialIndex d, double x, double y) const { return rangeforms::eval((*this)(d), x, y); }

 private:
  unsigned nx_;
  unsigned ny_;
  unsigned degree_;
  std::vector<Poly2> table_;  // table_[j * nx_ + i]
  Poly2 zero_;
};

// Monomial-list text format: one "i j coefficient" triple per line, '#' starts
// a comment. Repeated monomials are summed.
Poly2 parse_monomials(std::istream& in);
Poly2 read_monomial_file(const std::string& path);
void write_monomials(std::ostream& out, const Poly2& p);

std::ostream& operator<<(std::ostream& os, const Poly2& p);

}  // namespace rangeforms
