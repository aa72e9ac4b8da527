#include "rangeforms/exact_range.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "rangeforms/roots.hpp"

namespace rangeforms {

namespace {

// Top coefficients at or below this fraction of max|c| are treated as zero.
constexpr double kTopZero = 1e-14;
// Stationary-point residual tolerance, relative to 1 + max|c|.
constexpr double kStationaryTol = 1e-9;

bool in_support(unsigned i, unsigned j, Support s) {
  switch (s) {
    case Support::Linear: return i + j <= 1;
    case Support::Quadratic: return i + j <= 2;
    case Support::Cubic: return i + j <= 3;
    case Support::Biquadratic: return i <= 2 && j <= 2;
    case Support::Bicubic: return i <= 3 && j <= 3;
  }
  return false;
}

const char* support_name(Support s) {
  switch (s) {
    case Support::Linear: return "linear";
    case Support::Quadratic: return "quadratic";
    case Support::Cubic: return "cubic";
    case Support::Biquadratic: return "biquadratic";
    case Support::Bicubic: return "bicubic";
  }
  return "?";
}

void require(const CenteredPoly2& p, Support s) {
  if (!p.fits(s)) {
    throw std::invalid_argument(std::string("coefficients outside the ") + support_name(s) + " index set");
  }
}

// Univariate polynomials in ascending order.
using UPoly = std::vector<double>;

UPoly padd(const UPoly& a, const UPoly& b) {
  UPoly c(std::max(a.size(), b.size()), 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) c[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) c[k] += b[k];
  return c;
}

UPoly psub(const UPoly& a, const UPoly& b) {
  UPoly c(std::max(a.size(), b.size()), 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) c[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) c[k] -= b[k];
  return c;
}

UPoly pmul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

UPoly pabs(UPoly a) {
  for (double& v : a) v = std::abs(v);
  return a;
}

bool is_zero(const UPoly& a) {
  return std::all_of(a.begin(), a.end(), [](double v) { return v == 0.0; });
}

// g[k][l]: coefficient of x^k y^l in a polynomial of degree <= 2 in each variable.
using Grid3 = std::array<std::array<double, 3>, 3>;

Grid3 transpose(const Grid3& g) {
  Grid3 t{};
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) t[l][k] = g[k][l];
  }
  return t;
}

double grid_eval(const Grid3& g, double x, double y) {
  double acc = 0.0;
  for (int k = 2; k >= 0; --k) acc = acc * x + (g[k][0] + y * (g[k][1] + y * g[k][2]));
  return acc;
}

double grid_dx(const Grid3& g, double x, double y) {
  return (g[1][0] + y * (g[1][1] + y * g[1][2])) + 2.0 * x * (g[2][0] + y * (g[2][1] + y * g[2][2]));
}

double grid_dy(const Grid3& g, double x, double y) {
  double acc = 0.0;
  for (int k = 2; k >= 0; --k) acc = acc * x + (g[k][1] + 2.0 * y * g[k][2]);
  return acc;
}

// Coefficient of x^k as a polynomial in y.
UPoly x_coeff(const Grid3& g, int k) { return {g[k][0], g[k][1], g[k][2]}; }

int x_degree(const Grid3& g) {
  for (int k = 2; k >= 0; --k) {
    if (!is_zero(x_coeff(g, k))) return k;
  }
  return -1;
}

// Resultant of A and B with respect to x, as a polynomial in y. Coefficients
// that are zero up to the round-off of their own computation are set to 0.
UPoly resultant_x(const Grid3& A, const Grid3& B, int da, int db) {
  const UPoly a0 = x_coeff(A, 0), a1 = x_coeff(A, 1), a2 = x_coeff(A, 2);
  const UPoly b0 = x_coeff(B, 0), b1 = x_coeff(B, 1), b2 = x_coeff(B, 2);
  UPoly R, Rabs;
  if (da == 2 && db == 2) {
    auto s = psub(pmul(a2, b0), pmul(a0, b2));
    auto t = psub(pmul(a2, b1), pmul(a1, b2));
    auto u = psub(pmul(a1, b0), pmul(a0, b1));
    R = psub(pmul(s, s), pmul(t, u));
    auto sa = padd(pmul(pabs(a2), pabs(b0)), pmul(pabs(a0), pabs(b2)));
    auto ta = padd(pmul(pabs(a2), pabs(b1)), pmul(pabs(a1), pabs(b2)));
    auto ua = padd(pmul(pabs(a1), pabs(b0)), pmul(pabs(a0), pabs(b1)));
    Rabs = padd(pmul(sa, sa), pmul(ta, ua));
  } else if (da == 2 && db == 1) {
    R = padd(psub(pmul(a2, pmul(b0, b0)), pmul(a1, pmul(b0, b1))), pmul(a0, pmul(b1, b1)));
    Rabs = padd(padd(pmul(pabs(a2), pmul(pabs(b0), pabs(b0))), pmul(pabs(a1), pmul(pabs(b0), pabs(b1)))),
                pmul(pabs(a0), pmul(pabs(b1), pabs(b1))));
  } else if (da == 1 && db == 2) {
    R = padd(psub(pmul(b2, pmul(a0, a0)), pmul(b1, pmul(a0, a1))), pmul(b0, pmul(a1, a1)));
    Rabs = padd(padd(pmul(pabs(b2), pmul(pabs(a0), pabs(a0))), pmul(pabs(b1), pmul(pabs(a0), pabs(a1)))),
                pmul(pabs(b0), pmul(pabs(a1), pabs(a1))));
  } else {
    R = psub(pmul(a1, b0), pmul(a0, b1));
    Rabs = padd(pmul(pabs(a1), pabs(b0)), pmul(pabs(a0), pabs(b1)));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t k = 0; k < R.size(); ++k) {
    if (std::abs(R[k]) <= 1e3 * eps * Rabs[k]) R[k] = 0.0;
  }
  while (!R.empty() && R.back() == 0.0) R.pop_back();
  return R;
}

std::vector<double> roots_near(UPoly R, double ry) {
  std::vector<double> ys;
  std::size_t shift = 0;
  while (shift < R.size() && R[shift] == 0.0) ++shift;
  if (shift > 0) {
    ys.push_back(0.0);
    R.erase(R.begin(), R.begin() + static_cast<long>(shift));
  }
  const double reach = ry * (1.0 + 1e-6);
  if (R.size() <= 5) {
    for (double y : solve_polynomial(R).roots) {
      if (std::abs(y) <= reach) ys.push_back(y);
    }
  } else {
    for (double y : real_roots_in(R, -reach, reach)) ys.push_back(y);
  }
  return ys;
}

// Candidate common zeros (x, y) of A and B. Returns false when the zero set
// is not finite in both eliminations.
bool common_zeros(const Grid3& A, const Grid3& B, double rx, double ry, bool allow_transpose,
                  std::vector<std::pair<double, double>>& out) {
  const int da = x_degree(A), db = x_degree(B);
  if (da < 0 || db < 0) return false;
  if (da == 0 && db == 0) return false;

  auto add_from = [&](const Grid3& G, double y) {
    const double c0 = G[0][0] + y * (G[0][1] + y * G[0][2]);
    const double c1 = G[1][0] + y * (G[1][1] + y * G[1][2]);
    const double c2 = G[2][0] + y * (G[2][1] + y * G[2][2]);
    if (c0 == 0.0 && c1 == 0.0 && c2 == 0.0) return false;
    for (double x : solve_quadratic(c0, c1, c2).roots) {
      if (std::abs(x) <= rx * (1.0 + 1e-6)) out.emplace_back(x, y);
    }
    return true;
  };

  if (da == 0 || db == 0) {
    const Grid3& fixed = da == 0 ? A : B;
    const Grid3& other = da == 0 ? B : A;
    for (double y : roots_near(x_coeff(fixed, 0), ry)) add_from(other, y);
    return true;
  }

  const UPoly R = resultant_x(A, B, da, db);
  if (R.empty()) {
    if (!allow_transpose) return false;
    std::vector<std::pair<double, double>> swapped;
    if (!common_zeros(transpose(A), transpose(B), ry, rx, false, swapped)) return false;
    for (auto [y, x] : swapped) out.emplace_back(x, y);
    return true;
  }
  for (double y : roots_near(R, ry)) {
    if (!add_from(A, y)) add_from(B, y);
  }
  return true;
}

// Drops common factors x^k and y^l shared by A and B. The lines x = 0 and
// y = 0 pass through the box, so stationary values on them are also reached
// on the boundary.
void strip_common_monomials(Grid3& A, Grid3& B) {
  auto column_zero = [](const Grid3& g) { return g[0][0] == 0.0 && g[0][1] == 0.0 && g[0][2] == 0.0; };
  auto row_zero = [](const Grid3& g) { return g[0][0] == 0.0 && g[1][0] == 0.0 && g[2][0] == 0.0; };
  auto all_zero = [](const Grid3& g) {
    for (const auto& row : g) {
      for (double v : row) {
        if (v != 0.0) return false;
      }
    }
    return true;
  };
  if (all_zero(A) || all_zero(B)) return;
  for (int pass = 0; pass < 2 && column_zero(A) && column_zero(B); ++pass) {
    for (auto* g : {&A, &B}) {
      for (int l = 0; l < 3; ++l) {
        (*g)[0][l] = (*g)[1][l];
        (*g)[1][l] = (*g)[2][l];
        (*g)[2][l] = 0.0;
      }
    }
  }
  for (int pass = 0; pass < 2 && row_zero(A) && row_zero(B); ++pass) {
    for (auto* g : {&A, &B}) {
      for (int k = 0; k < 3; ++k) {
        (*g)[k][0] = (*g)[k][1];
        (*g)[k][1] = (*g)[k][2];
        (*g)[k][2] = 0.0;
      }
    }
  }
}

// d^(di,dj) of sum c[i][j] u^i v^j at (u, v).
double centered_partial(const CenteredPoly2& p, unsigned di, unsigned dj, double u, double v) {
  auto falling = [](unsigned n, unsigned k) {
    double f = 1.0;
    for (unsigned t = 0; t < k; ++t) f *= static_cast<double>(n - t);
    return f;
  };
  double acc = 0.0;
  for (unsigned j = 3 + 1; j-- > dj;) {
    double row = 0.0;
    for (unsigned i = 3 + 1; i-- > di;) row = row * u + falling(i, di) * p.coeff(i, j);
    acc = acc * v + falling(j, dj) * row;
  }
  return acc;
}

// Updates `range` with the values of p at its isolated interior stationary
// points, where the stationary system is A = 0, B = 0 in offsets (u, v).
Interval with_interior_extrema(const CenteredPoly2& p, Grid3 A, Grid3 B, Interval range) {
  const double rx = p.box().rad_x(), ry = p.box().rad_y();
  const double tol = kStationaryTol * (1.0 + p.max_abs_coeff());
  strip_common_monomials(A, B);
  std::vector<std::pair<double, double>> candidates;
  if (!common_zeros(A, B, rx, ry, true, candidates)) return range;

  double lo = range.lo(), hi = range.hi();
  for (auto [x, y] : candidates) {
    double fa = grid_eval(A, x, y), fb = grid_eval(B, x, y);
    for (int it = 0; it < 4; ++it) {
      const double j11 = grid_dx(A, x, y), j12 = grid_dy(A, x, y);
      const double j21 = grid_dx(B, x, y), j22 = grid_dy(B, x, y);
      const double det = j11 * j22 - j12 * j21;
      if (det == 0.0 || !std::isfinite(det)) break;
      const double nx = x - (fa * j22 - fb * j12) / det;
      const double ny = y - (fb * j11 - fa * j21) / det;
      const double na = grid_eval(A, nx, ny), nb = grid_eval(B, nx, ny);
      if (!(std::max(std::abs(na), std::abs(nb)) < std::max(std::abs(fa), std::abs(fb)))) break;
      x = nx;
      y = ny;
      fa = na;
      fb = nb;
    }
    if (!(std::abs(x) < rx && std::abs(y) < ry)) continue;
    if (std::abs(fa) > tol || std::abs(fb) > tol) continue;
    const double value = p.at_offset(x, y);
    const double pxx = centered_partial(p, 2, 0, x, y);
    const double pyy = centered_partial(p, 0, 2, x, y);
    const double pxy = centered_partial(p, 1, 1, x, y);
    const double det = pxx * pyy - pxy * pxy;
    const double det_scale = pxx * pxx + pyy * pyy + 2.0 * pxy * pxy;
    if (std::abs(det) <= 1e-12 * det_scale) {
      lo = std::min(lo, value);
      hi = std::max(hi, value);
    } else if (det > 0.0) {
      if (pxx > 0.0) lo = std::min(lo, value);
      else hi = std::max(hi, value);
    }
  }
  return Interval(lo, hi);
}

CenteredPoly1 edge_poly(std::vector<double> c, double r) { return CenteredPoly1(std::move(c), 0.0, r); }

// Hull of p over the four edges u = +-rx and v = +-ry, each a univariate cubic.
Interval boundary_range(const CenteredPoly2& p) {
  const double rx = p.box().rad_x(), ry = p.box().rad_y();
  Interval out;
  bool first = true;
  auto take = [&](const Interval& e) {
    out = first ? e : hull(out, e);
    first = false;
  };
  for (double u : {-rx, rx}) {
    std::vector<double> c(4);
    for (unsigned j = 0; j < 4; ++j) {
      double acc = 0.0;
      for (unsigned i = 4; i-- > 0;) acc = acc * u + p.coeff(i, j);
      c[j] = acc;
    }
    take(range_uni_cubic(edge_poly(c, ry)));
  }
  for (double v : {-ry, ry}) {
    std::vector<double> c(4);
    for (unsigned i = 0; i < 4; ++i) {
      double acc = 0.0;
      for (unsigned j = 4; j-- > 0;) acc = acc * v + p.coeff(i, j);
      c[i] = acc;
    }
    take(range_uni_cubic(edge_poly(c, rx)));
  }
  return out;
}

}  // namespace

CenteredPoly1::CenteredPoly1(std::vector<double> c, double m, double r) : m_(m), r_(r) {
  if (c.size() > 4) throw std::invalid_argument("CenteredPoly1: degree above three");
  if (!(r >= 0.0)) throw std::invalid_argument("CenteredPoly1: negative radius");
  std::copy(c.begin(), c.end(), c_.begin());
}

unsigned CenteredPoly1::degree() const {
  for (unsigned k = 3; k > 0; --k) {
    if (c_[k] != 0.0) return k;
  }
  return 0;
}

CenteredPoly2::CenteredPoly2(const Box2& box) : box_(box) {}

CenteredPoly2::CenteredPoly2(const Box2& box, std::initializer_list<Monomial> terms) : box_(box) {
  for (const auto& t : terms) set(t.i, t.j, coeff(t.i, t.j) + t.coeff);
}

void CenteredPoly2::set(unsigned i, unsigned j, double v) {
  if (i > 3 || j > 3) throw std::invalid_argument("CenteredPoly2: exponent above three");
  c_[i][j] = v;
}

bool CenteredPoly2::fits(Support s) const {
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      if (c_[i][j] != 0.0 && !in_support(i, j, s)) return false;
    }
  }
  return true;
}

double CenteredPoly2::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& row : c_) {
    for (double v : row) m = std::max(m, std::abs(v));
  }
  return m;
}

double CenteredPoly2::at_offset(double u, double v) const {
  double acc = 0.0;
  for (unsigned j = 4; j-- > 0;) {
    double row = 0.0;
    for (unsigned i = 4; i-- > 0;) row = row * u + c_[i][j];
    acc = acc * v + row;
  }
  return acc;
}

CenteredPoly2 CenteredPoly2::restricted(Support s) const {
  CenteredPoly2 out(box_);
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      if (in_support(i, j, s)) out.c_[i][j] = c_[i][j];
    }
  }
  return out;
}

Poly2 CenteredPoly2::to_poly() const {
  const Poly2 u = Poly2::x() - box_.mid_x();
  const Poly2 v = Poly2::y() - box_.mid_y();
  Poly2 out;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      if (c_[i][j] != 0.0) out = out + c_[i][j] * pow(u, i) * pow(v, j);
    }
  }
  return out;
}

Interval range_uni_linear(const CenteredPoly1& p) {
  if (p.degree() > 1) throw std::invalid_argument("range_uni_linear: degree above one");
  const double spread = p.r() * std::abs(p.coeff(1));
  return Interval(p.coeff(0) - spread, p.coeff(0) + spread);
}

Interval range_uni_quadratic(const CenteredPoly1& p) {
  if (p.degree() > 2) throw std::invalid_argument("range_uni_quadratic: degree above two");
  const double c0 = p.coeff(0), c1 = p.coeff(1), c2 = p.coeff(2), r = p.r();
  const double scale = std::max({std::abs(c0), std::abs(c1), std::abs(c2)});
  if (std::abs(c2) <= kTopZero * scale) return range_uni_linear(CenteredPoly1({c0, c1}, p.m(), r));
  const double alpha0 = p.at_offset(-r);
  const double beta0 = p.at_offset(r);
  Interval out(std::min(alpha0, beta0), std::max(alpha0, beta0));
  if (std::abs(c1) < 2.0 * std::abs(c2) * r) out = hull(out, c0 - c1 * c1 / (4.0 * c2));
  return out;
}

Interval range_uni_cubic(const CenteredPoly1& p) {
  const double c0 = p.coeff(0), c1 = p.coeff(1), c2 = p.coeff(2), c3 = p.coeff(3), r = p.r();
  const double scale = std::max({std::abs(c0), std::abs(c1), std::abs(c2), std::abs(c3)});
  if (std::abs(c3) <= kTopZero * scale) return range_uni_quadratic(CenteredPoly1({c0, c1, c2}, p.m(), r));
  const double alpha0 = p.at_offset(-r);
  const double beta0 = p.at_offset(r);
  Interval out(std::min(alpha0, beta0), std::max(alpha0, beta0));
  // Discriminant of p'(t) = c1 + 2 c2 t + 3 c3 t^2, divided by 4.
  const double delta = c2 * c2 - 3.0 * c1 * c3;
  if (delta <= 0.0) return out;  // monotonic
  // Stationary offsets -(c2 +- sqrt(delta)) / (3 c3), the second via Vieta.
  const double s = c2 + std::copysign(std::sqrt(delta), c2);
  const double t1 = -s / (3.0 * c3);
  if (std::abs(t1) < r) out = hull(out, p.at_offset(t1));
  if (s != 0.0) {
    const double t2 = -c1 / s;
    if (std::abs(t2) < r) out = hull(out, p.at_offset(t2));
  }
  return out;
}

Interval range_biv_linear(const CenteredPoly2& p) {
  require(p, Support::Linear);
  const double spread = p.box().rad_x() * std::abs(p.coeff(1, 0)) + p.box().rad_y() * std::abs(p.coeff(0, 1));
  return Interval(p.coeff(0, 0) - spread, p.coeff(0, 0) + spread);
}

Interval range_biv_quadratic(const CenteredPoly2& p) {
  require(p, Support::Quadratic);
  const double c00 = p.coeff(0, 0), c10 = p.coeff(1, 0), c01 = p.coeff(0, 1);
  const double c20 = p.coeff(2, 0), c11 = p.coeff(1, 1), c02 = p.coeff(0, 2);
  const double top = std::max({std::abs(c20), std::abs(c11), std::abs(c02)});
  if (top <= kTopZero * p.max_abs_coeff()) return range_biv_linear(p.restricted(Support::Linear));

  const double rx = p.box().rad_x(), ry = p.box().rad_y();
  Interval out;
  bool first = true;
  auto take = [&](const Interval& e) {
    out = first ? e : hull(out, e);
    first = false;
  };
  for (double u : {-rx, rx}) {
    take(range_uni_quadratic(CenteredPoly1({c00 + u * (c10 + u * c20), c01 + c11 * u, c02}, 0.0, ry)));
  }
  for (double v : {-ry, ry}) {
    take(range_uni_quadratic(CenteredPoly1({c00 + v * (c01 + v * c02), c10 + c11 * v, c20}, 0.0, rx)));
  }

  const double D = 4.0 * c20 * c02 - c11 * c11;
  if (D > 0.0 && std::abs(2.0 * c10 * c02 - c01 * c11) < D * rx && std::abs(2.0 * c01 * c20 - c10 * c11) < D * ry) {
    const double value = c00 - (c10 * c10 * c02 - c10 * c01 * c11 + c01 * c01 * c20) / D;
    if (c20 > 0.0) out = Interval(std::min(out.lo(), value), out.hi());
    else out = Interval(out.lo(), std::max(out.hi(), value));
  }
  return out;
}

Interval range_biv_cubic(const CenteredPoly2& p) {
  require(p, Support::Cubic);
  const double c30 = p.coeff(3, 0), c21 = p.coeff(2, 1), c12 = p.coeff(1, 2), c03 = p.coeff(0, 3);
  const double top = std::max({std::abs(c30), std::abs(c21), std::abs(c12), std::abs(c03)});
  if (top <= kTopZero * p.max_abs_coeff()) return range_biv_quadratic(p.restricted(Support::Quadratic));

  const Interval edges = boundary_range(p);
  const double c10 = p.coeff(1, 0), c01 = p.coeff(0, 1);
  const double c20 = p.coeff(2, 0), c11 = p.coeff(1, 1), c02 = p.coeff(0, 2);
  // p_x = A(x) and p_y = B(x) as quadratics in x with y-dependent coefficients.
  Grid3 A{}, B{};
  A[2] = {3.0 * c30, 0.0, 0.0};
  A[1] = {2.0 * c20, 2.0 * c21, 0.0};
  A[0] = {c10, c11, c12};
  B[2] = {c21, 0.0, 0.0};
  B[1] = {c11, 2.0 * c12, 0.0};
  B[0] = {c01, 2.0 * c02, 3.0 * c03};
  return with_interior_extrema(p, A, B, edges);
}

SplitRange range_biquadratic_split(const CenteredPoly2& p) {
  require(p, Support::Biquadratic);
  const Interval q = range_biv_quadratic(p.restricted(Support::Quadratic));
  const double c21 = p.coeff(2, 1), c12 = p.coeff(1, 2), c22 = p.coeff(2, 2);
  const double rx = p.box().rad_x(), ry = p.box().rad_y();
  Interval r;
  bool first = true;
  auto take = [&](const Interval& e) {
    r = first ? e : hull(r, e);
    first = false;
  };
  for (double u : {-rx, rx}) {
    take(range_uni_quadratic(CenteredPoly1({0.0, c21 * u * u, c12 * u + c22 * u * u}, 0.0, ry)));
  }
  for (double v : {-ry, ry}) {
    take(range_uni_quadratic(CenteredPoly1({0.0, c12 * v * v, c21 * v + c22 * v * v}, 0.0, rx)));
  }
  return {q, r};
}

SplitRange range_bicubic_split(const CenteredPoly2& p) {
  require(p, Support::Bicubic);
  const Interval q = range_biv_cubic(p.restricted(Support::Cubic));
  CenteredPoly2 rest(p.box());
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      if (i + j > 3) rest.set(i, j, p.coeff(i, j));
    }
  }
  const Interval edges = boundary_range(rest);
  const double c31 = p.coeff(3, 1), c22 = p.coeff(2, 2), c13 = p.coeff(1, 3);
  const double c32 = p.coeff(3, 2), c23 = p.coeff(2, 3), c33 = p.coeff(3, 3);
  if (c31 == 0.0 && c22 == 0.0 && c13 == 0.0 && c32 == 0.0 && c23 == 0.0 && c33 == 0.0) return {q, edges};
  // r_x = y A(x), r_y = x B(x); the factors y and x only contribute the lines
  // through the midpoint, where r vanishes.
  Grid3 A{}, B{};
  A[2] = {3.0 * c31, 3.0 * c32, 3.0 * c33};
  A[1] = {0.0, 2.0 * c22, 2.0 * c23};
  A[0] = {0.0, 0.0, c13};
  B[2] = {c31, 2.0 * c32, 3.0 * c33};
  B[1] = {0.0, 2.0 * c22, 3.0 * c23};
  B[0] = {0.0, 0.0, 3.0 * c13};
  return {q, with_interior_extrema(rest, A, B, edges)};
}

}  // namespace rangeforms
