#include "rangeforms/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rangeforms {

namespace {

constexpr double kLeadZero = 1e-14;
constexpr double kResidual = 1e-10;

double max_abs(const std::vector<double>& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

double abs_horner(const std::vector<double>& a, double x) {
  double acc = 0.0;
  const double ax = std::abs(x);
  for (std::size_t k = a.size(); k-- > 0;) acc = acc * ax + std::abs(a[k]);
  return acc;
}

double derivative_at(const std::vector<double>& a, double x) {
  double acc = 0.0;
  for (std::size_t k = a.size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * a[k];
  return acc;
}

// One Newton step on every candidate, then keep those with a small residual.
// `a` must already be normalized so that max|a_k| = 1.
RealRoots finish(const std::vector<double>& a, const std::vector<double>& candidates) {
  RealRoots out;
  for (double x : candidates) {
    if (!std::isfinite(x)) continue;
    double fx = horner(a, x);
    const double dfx = derivative_at(a, x);
    if (dfx != 0.0) {
      const double polished = x - fx / dfx;
      const double fp = horner(a, polished);
      if (std::isfinite(fp) && std::abs(fp) <= std::abs(fx)) {
        x = polished;
        fx = fp;
      }
    }
    if (std::abs(fx) <= kResidual * std::max(1.0, abs_horner(a, x))) out.roots.push_back(x);
  }
  std::sort(out.roots.begin(), out.roots.end());
  std::vector<double> unique;
  for (double x : out.roots) {
    if (!unique.empty() && std::abs(x - unique.back()) <= 1e-7 * std::max(1.0, std::abs(x))) continue;
    unique.push_back(x);
  }
  out.roots = std::move(unique);
  return out;
}

std::vector<double> normalized(std::vector<double> a) {
  const double m = max_abs(a);
  for (double& v : a) v /= m;
  return a;
}

// Candidates of x^2 + b x + c = 0; a complex pair contributes its real part.
void monic_quadratic_candidates(double b, double c, std::vector<double>& out) {
  const double disc = b * b - 4.0 * c;
  if (disc < 0.0) {
    out.push_back(-0.5 * b);
    return;
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  if (q == 0.0) {
    out.push_back(0.0);
    return;
  }
  out.push_back(q);
  out.push_back(c / q);
}

// Candidates of t^3 + p t + q = 0.
void depressed_cubic_candidates(double p, double q, std::vector<double>& out) {
  const double half_q = 0.5 * q;
  const double third_p = p / 3.0;
  const double delta = half_q * half_q + third_p * third_p * third_p;
  if (delta > 0.0) {
    const double A = -std::copysign(std::cbrt(std::abs(half_q) + std::sqrt(delta)), q);
    const double B = A == 0.0 ? 0.0 : -third_p / A;
    const double t = A + B;
    out.push_back(t);
    out.push_back(-0.5 * t);
    return;
  }
  if (p == 0.0) {
    out.push_back(0.0);
    return;
  }
  const double rho = 2.0 * std::sqrt(-third_p);
  const double arg = std::clamp(3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p), -1.0, 1.0);
  const double phi = std::acos(arg) / 3.0;
  for (int k = 0; k < 3; ++k) out.push_back(rho * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0));
}

}  // namespace

double horner(const std::vector<double>& a, double x) {
  double acc = 0.0;
  for (std::size_t k = a.size(); k-- > 0;) acc = acc * x + a[k];
  return acc;
}

RealRoots solve_linear(double a0, double a1) {
  const double m = std::max(std::abs(a0), std::abs(a1));
  if (m == 0.0) return {{}, true};
  if (std::abs(a1) <= kLeadZero * m) return {};
  return finish(normalized({a0, a1}), {-a0 / a1});
}

RealRoots solve_quadratic(double a0, double a1, double a2) {
  const std::vector<double> a{a0, a1, a2};
  const double m = max_abs(a);
  if (m == 0.0) return {{}, true};
  if (std::abs(a2) <= kLeadZero * m) return solve_linear(a0, a1);
  std::vector<double> candidates;
  monic_quadratic_candidates(a1 / a2, a0 / a2, candidates);
  return finish(normalized(a), candidates);
}

RealRoots solve_cubic(double a0, double a1, double a2, double a3) {
  const std::vector<double> a{a0, a1, a2, a3};
  const double m = max_abs(a);
  if (m == 0.0) return {{}, true};
  if (std::abs(a3) <= kLeadZero * m) return solve_quadratic(a0, a1, a2);
  const double b = a2 / a3, c = a1 / a3, d = a0 / a3;
  const double p = c - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  std::vector<double> t;
  depressed_cubic_candidates(p, q, t);
  for (double& v : t) v -= b / 3.0;
  return finish(normalized(a), t);
}

RealRoots solve_quartic(double a0, double a1, double a2, double a3, double a4) {
  const std::vector<double> a{a0, a1, a2, a3, a4};
  for (double v : a) {
    if (!std::isfinite(v)) throw std::domain_error("solve_quartic: non-finite coefficient");
  }
  const double m = max_abs(a);
  if (m == 0.0) return {{}, true};
  if (std::abs(a4) <= kLeadZero * m) return solve_cubic(a0, a1, a2, a3);

  const double b = a3 / a4, c = a2 / a4, d = a1 / a4, e = a0 / a4;
  const double b2 = b * b;
  const double p = c - 3.0 * b2 / 8.0;
  const double q = d - b * c / 2.0 + b2 * b / 8.0;
  const double r = e - b * d / 4.0 + b2 * c / 16.0 - 3.0 * b2 * b2 / 256.0;

  const double scale = std::max({std::sqrt(std::abs(p)), std::sqrt(std::sqrt(std::abs(r))), std::cbrt(std::abs(q))});
  std::vector<double> t;
  bool biquadratic = std::abs(q) <= 1e-10 * scale * scale * scale;
  if (!biquadratic) {
    // Largest root of the resolvent 8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2; positive when q != 0.
    const RealRoots res = solve_cubic(-q * q, 2.0 * p * p - 8.0 * r, 8.0 * p, 8.0);
    const double mm = res.roots.empty() ? 0.0 : res.roots.back();
    if (mm > 0.0) {
      const double s = std::sqrt(2.0 * mm);
      const double k = q / (2.0 * s);
      monic_quadratic_candidates(-s, 0.5 * p + mm + k, t);
      monic_quadratic_candidates(s, 0.5 * p + mm - k, t);
    } else {
      biquadratic = true;
    }
  }
  if (biquadratic) {
    std::vector<double> z;
    monic_quadratic_candidates(p, r, z);
    for (double zk : z) {
      if (zk >= 0.0) {
        t.push_back(std::sqrt(zk));
        t.push_back(-std::sqrt(zk));
      } else {
        t.push_back(0.0);
      }
    }
  }
  for (double& v : t) v -= b / 4.0;
  return finish(normalized(a), t);
}

RealRoots solve_polynomial(const std::vector<double>& a) {
  switch (a.size()) {
    case 0: return {{}, true};
    case 1: return a[0] == 0.0 ? RealRoots{{}, true} : RealRoots{};
    case 2: return solve_linear(a[0], a[1]);
    case 3: return solve_quadratic(a[0], a[1], a[2]);
    case 4: return solve_cubic(a[0], a[1], a[2], a[3]);
    case 5: return solve_quartic(a[0], a[1], a[2], a[3], a[4]);
    default: throw std::invalid_argument("solve_polynomial: degree above four");
  }
}

std::vector<double> real_roots_in(const std::vector<double>& coeffs, double lo, double hi) {
  std::vector<double> a = coeffs;
  while (!a.empty() && a.back() == 0.0) a.pop_back();
  if (a.size() <= 1) return {};
  if (a.size() == 2) {
    const double x = -a[0] / a[1];
    return (lo <= x && x <= hi) ? std::vector<double>{x} : std::vector<double>{};
  }
  std::vector<double> da(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) da[k - 1] = static_cast<double>(k) * a[k];

  std::vector<double> cuts{lo};
  for (double c : real_roots_in(da, lo, hi)) cuts.push_back(c);
  cuts.push_back(hi);

  auto tiny = [&](double x) { return std::abs(horner(a, x)) <= 1e-12 * std::max(1e-300, abs_horner(a, x)); };
  std::vector<double> roots;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    double u = cuts[k], v = cuts[k + 1];
    double fu = horner(a, u), fv = horner(a, v);
    if (fu == 0.0 || tiny(u)) {
      roots.push_back(u);
      continue;
    }
    if ((fu < 0.0) == (fv < 0.0)) continue;
    for (int it = 0; it < 200; ++it) {
      const double w = 0.5 * (u + v);
      if (w <= u || w >= v) break;
      const double fw = horner(a, w);
      if (fw == 0.0) {
        u = v = w;
        break;
      }
      if ((fw < 0.0) == (fu < 0.0)) {
        u = w;
        fu = fw;
      } else {
        v = w;
      }
    }
    roots.push_back(0.5 * (u + v));
  }
  if (tiny(hi)) roots.push_back(hi);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace rangeforms
