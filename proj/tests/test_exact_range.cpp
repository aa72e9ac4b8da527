#include <doctest.h>

#include <cmath>

#include "rangeforms/corpus.hpp"
#include "rangeforms/exact_range.hpp"
#include "rangeforms/forms.hpp"
#include "rangeforms/roots.hpp"
#include "support.hpp"

using namespace rangeforms;
using testing_support::encloses;
using testing_support::sample_hull;
using testing_support::sample_hull_1d;
using testing_support::uniform;

namespace {

Box2 random_box(bool square) {
  const double mx = uniform(-1, 1), my = uniform(-1, 1);
  const double rx = uniform(0.01, 1);
  const double ry = square ? rx : uniform(0.01, 1);
  return Box2(Interval(mx - rx, mx + rx), Interval(my - ry, my + ry));
}

// Coefficients scaled so every term contributes O(1) over the box.
CenteredPoly2 random_centered(const Box2& box, Support s) {
  CenteredPoly2 p(box);
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      bool in = false;
      switch (s) {
        case Support::Linear: in = i + j <= 1; break;
        case Support::Quadratic: in = i + j <= 2; break;
        case Support::Cubic: in = i + j <= 3; break;
        case Support::Biquadratic: in = i <= 2 && j <= 2; break;
        case Support::Bicubic: in = true; break;
      }
      if (in) p.set(i, j, uniform(-1, 1) / (std::pow(box.rad_x(), i) * std::pow(box.rad_y(), j)));
    }
  }
  return p;
}

double term_scale(const CenteredPoly2& p) {
  double s = 0.0;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) s += std::abs(p.coeff(i, j)) * std::pow(p.box().rad_x(), i) * std::pow(p.box().rad_y(), j);
  }
  return s;
}

CenteredPoly1 random_centered1(unsigned degree) {
  const double r = uniform(0.01, 2);
  std::vector<double> c(degree + 1);
  for (unsigned k = 0; k <= degree; ++k) c[k] = uniform(-1, 1) / std::pow(r, k);
  return CenteredPoly1(c, uniform(-1, 1), r);
}

Interval brute1(const CenteredPoly1& p, unsigned n = 200) {
  return sample_hull_1d(-p.r(), p.r(), n, [&](double t) { return p.at_offset(t); });
}

Interval brute2(const CenteredPoly2& p, unsigned n = 100) {
  return sample_hull(p.box(), n, [&](double x, double y) { return p(x, y); });
}

// Centered Taylor polynomial of f about the box midpoint, total degree <= k.
CenteredPoly2 taylor_part(const Poly2& f, const Box2& box, unsigned k) {
  const Derivatives d(f);
  CenteredPoly2 t(box);
  const double fact[4] = {1, 1, 2, 6};
  for (unsigned i = 0; i <= k; ++i) {
    for (unsigned j = 0; i + j <= k; ++j) t.set(i, j, d.eval({i, j}, box.mid_x(), box.mid_y()) / (fact[i] * fact[j]));
  }
  return t;
}

}  // namespace

TEST_SUITE("roots") {
  TEST_CASE("quartic examples") {
    auto r = solve_quartic(-1, 0, 0, 0, 1);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == doctest::Approx(-1.0));
    CHECK(r.roots[1] == doctest::Approx(1.0));

    r = solve_quartic(24, -50, 35, -10, 1);
    REQUIRE(r.roots.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(r.roots[k] == doctest::Approx(k + 1.0).epsilon(1e-12));

    CHECK(solve_quartic(1, 0, 0, 0, 1).roots.empty());
    const auto zero = solve_quartic(0, 0, 0, 0, 0);
    CHECK(zero.roots.empty());
    CHECK(zero.identically_zero);
  }

  TEST_CASE("lower degrees dispatch") {
    CHECK(solve_quartic(-6, 11, -6, 1, 0).roots.size() == 3);  // (x-1)(x-2)(x-3)
    CHECK(solve_quartic(-4, 0, 1, 0, 0).roots == std::vector<double>{-2.0, 2.0});
    CHECK(solve_quartic(3, 1.5, 0, 0, 0).roots == std::vector<double>{-2.0});
    CHECK(solve_quartic(5, 0, 0, 0, 0).roots.empty());
    CHECK_FALSE(solve_quartic(5, 0, 0, 0, 0).identically_zero);
    CHECK(solve_quadratic(1, -2, 1).roots.size() == 1);
    CHECK_THROWS_AS(solve_quartic(NAN, 0, 0, 0, 1), std::domain_error);
    CHECK_THROWS(solve_polynomial({1, 2, 3, 4, 5, 6}));
  }

  TEST_CASE("root count matches sign changes on separated quartics") {
    int checked = 0;
    while (checked < 300) {
      // Roots drawn in [-2, 2]; keep only well-separated sets.
      std::vector<double> roots;
      const int real_count = static_cast<int>(uniform(0, 4.999));
      for (int k = 0; k < real_count; ++k) roots.push_back(uniform(-2, 2));
      std::sort(roots.begin(), roots.end());
      bool separated = true;
      for (std::size_t k = 1; k < roots.size(); ++k) separated = separated && roots[k] - roots[k - 1] > 1e-3;
      if (!separated) continue;
      // Product of (x - r_k) and an irreducible quadratic factor as needed.
      std::vector<double> p{1.0};
      auto mul = [&](std::vector<double> q) {
        std::vector<double> out(p.size() + q.size() - 1, 0.0);
        for (std::size_t a = 0; a < p.size(); ++a)
          for (std::size_t b = 0; b < q.size(); ++b) out[a + b] += p[a] * q[b];
        p = out;
      };
      for (double r : roots) mul({-r, 1.0});
      while (p.size() < 5) mul({uniform(0.5, 2), uniform(-0.5, 0.5), 1.0});
      p.resize(5);
      if (real_count % 2 == 1 && real_count < 4) continue;  // odd count cannot be padded to degree 4
      int changes = 0;
      double prev = horner(p, -3.0);
      for (int k = 1; k <= 10000; ++k) {
        const double v = horner(p, -3.0 + 6.0 * k / 10000);
        if ((v > 0) != (prev > 0)) ++changes;
        prev = v;
      }
      const auto got = solve_quartic(p[0], p[1], p[2], p[3], p[4]);
      CHECK(static_cast<int>(got.roots.size()) == changes);
      ++checked;
    }
  }

  TEST_CASE("roots satisfy the residual bound") {
    for (int t = 0; t < 500; ++t) {
      const double a[5] = {uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      const auto got = solve_quartic(a[0], a[1], a[2], a[3], a[4]);
      double amax = 0;
      for (double v : a) amax = std::max(amax, std::abs(v));
      for (double x : got.roots) {
        double res = 0, mag = 0;
        for (int k = 4; k >= 0; --k) res = res * x + a[k] / amax;
        for (int k = 0; k <= 4; ++k) mag += std::abs(a[k] / amax) * std::pow(std::abs(x), k);
        CHECK(std::abs(res) <= 1e-10 * std::max(1.0, mag));
      }
      CHECK(std::is_sorted(got.roots.begin(), got.roots.end()));
    }
  }
}

TEST_SUITE("exact_range") {
  TEST_CASE("univariate linear") {
    CHECK(range_uni_linear(CenteredPoly1({2, 3}, 0, 1)) == Interval(-1, 5));
    CHECK(range_uni_linear(CenteredPoly1({0, 0}, 0, 5)) == Interval(0, 0));
    CHECK(range_uni_linear(CenteredPoly1({1, -2}, 0, 0.5)) == Interval(0, 2));
    CHECK_THROWS_AS(range_uni_linear(CenteredPoly1({1, 0, 1}, 0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(CenteredPoly1({1, 2, 3, 4, 5}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(CenteredPoly1({1}, 0, -1), std::invalid_argument);
  }

  TEST_CASE("univariate quadratic") {
    CHECK(range_uni_quadratic(CenteredPoly1({0, 0, 1}, 0, 1)) == Interval(0, 1));
    // x^2 + 2x on [0, 1], centered at 0.5.
    const CenteredPoly1 p({1.25, 3, 1}, 0.5, 0.5);
    const Interval brute = sample_hull_1d(0, 1, 100000, [](double x) { return x * x + 2 * x; });
    CHECK(range_uni_quadratic(p).lo() == doctest::Approx(brute.lo()));
    CHECK(range_uni_quadratic(p).hi() == doctest::Approx(brute.hi()));
    CHECK(range_uni_quadratic(p) == Interval(0, 3));
    const Interval top = range_uni_quadratic(CenteredPoly1({1, 0, -1}, 0.5, 0.5));
    CHECK(top.lo() == doctest::Approx(0.75));
    CHECK(top.hi() == 1.0);
    CHECK_THROWS_AS(range_uni_quadratic(CenteredPoly1({1, 0, 0, 1}, 0, 1)), std::invalid_argument);
  }

  TEST_CASE("univariate cubic") {
    CHECK(range_uni_cubic(CenteredPoly1({0, 0, 0, 1}, 0, 1)) == Interval(-1, 1));
    const Interval wide = range_uni_cubic(CenteredPoly1({0, -3, 0, 1}, 0, 2));
    CHECK(wide.lo() == doctest::Approx(-2.0));
    CHECK(wide.hi() == doctest::Approx(2.0));
    const Interval narrow = range_uni_cubic(CenteredPoly1({0, -3, 0, 1}, 0, 0.5));
    const Interval brute = sample_hull_1d(-0.5, 0.5, 100000, [](double x) { return x * x * x - 3 * x; });
    CHECK(narrow.lo() == doctest::Approx(brute.lo()));
    CHECK(narrow.hi() == doctest::Approx(brute.hi()));
    // Interior minimum that a c2^2 - c1 c3 discriminant would miss.
    const CenteredPoly1 q({0, 1, 1, 0.3}, 0, 3);
    const Interval bq = sample_hull_1d(-3, 3, 100000, [&](double t) { return q.at_offset(t); });
    CHECK(range_uni_cubic(q).lo() == doctest::Approx(bq.lo()).epsilon(1e-9));
    CHECK(range_uni_cubic(q).hi() == doctest::Approx(bq.hi()).epsilon(1e-9));
  }

  TEST_CASE("univariate kernels enclose samples and dispatch on zero tops") {
    for (int t = 0; t < 1000; ++t) {
      for (unsigned deg = 1; deg <= 3; ++deg) {
        const CenteredPoly1 p = random_centered1(deg);
        const Interval k = deg == 1 ? range_uni_linear(p) : deg == 2 ? range_uni_quadratic(p) : range_uni_cubic(p);
        const Interval s = brute1(p);
        CHECK(encloses(k, s, 1e-12));
        // Exact: samples can only fall short by the lattice spacing.
        CHECK(hausdorff(k, s) <= 1e-3 * (1 + k.width()));
      }
      const CenteredPoly1 q = random_centered1(2);
      const CenteredPoly1 q3({q.coeff(0), q.coeff(1), q.coeff(2), 0.0}, q.m(), q.r());
      CHECK(range_uni_cubic(q3) == range_uni_quadratic(q));
      const CenteredPoly1 l({q.coeff(0), q.coeff(1), 0.0}, q.m(), q.r());
      CHECK(range_uni_quadratic(l) == range_uni_linear(CenteredPoly1({q.coeff(0), q.coeff(1)}, q.m(), q.r())));
    }
  }

  TEST_CASE("bivariate linear") {
    const Box2 sq(Interval(-1, 1), Interval(-1, 1));
    CHECK(range_biv_linear(CenteredPoly2(sq, {{1, 0, 1.0}, {0, 1, 1.0}})) == Interval(-2, 2));
    CHECK(range_biv_linear(CenteredPoly2(random_box(false), {{0, 0, 4.0}})) == Interval(4, 4));
    CHECK(range_biv_linear(CenteredPoly2(Box2(Interval(0, 2), Interval(1, 3)), {{0, 0, 1.0}, {1, 0, 2.0}, {0, 1, 3.0}})) ==
          Interval(-4, 6));
    CHECK_THROWS_AS(range_biv_linear(CenteredPoly2(sq, {{1, 1, 1.0}})), std::invalid_argument);
  }

  TEST_CASE("bivariate quadratic") {
    const Box2 sq(Interval(-1, 1), Interval(-1, 1));
    CHECK(range_biv_quadratic(CenteredPoly2(sq, {{2, 0, 1.0}, {0, 2, 1.0}})) == Interval(0, 2));
    const CenteredPoly2 xy(sq, {{1, 1, 1.0}});
    const Interval b = brute2(xy, 201);
    CHECK(range_biv_quadratic(xy) == b);
    CHECK(b == Interval(-1, 1));

    const Box2 box = Box2::square(0.1, 0.2, 0.1);
    const CenteredPoly2 t2 = taylor_part(corpus("clover-4"), box, 2);
    const Interval k = range_biv_quadratic(t2);
    const Interval s = brute2(t2, 401);
    CHECK(encloses(k, s, 1e-12));
    CHECK(hausdorff(k, s) <= 1e-5);
    CHECK_THROWS_AS(range_biv_quadratic(CenteredPoly2(sq, {{2, 1, 1.0}})), std::invalid_argument);
  }

  TEST_CASE("bivariate cubic") {
    const Box2 sq(Interval(-1, 1), Interval(-1, 1));
    CHECK(range_biv_cubic(CenteredPoly2(sq, {{3, 0, 1.0}, {0, 3, 1.0}})) == Interval(-2, 2));
    const Box2 sq2(Interval(-2, 2), Interval(-2, 2));
    const CenteredPoly2 p(sq2, {{3, 0, 1.0}, {1, 0, -3.0}, {0, 3, 1.0}, {0, 1, -3.0}});
    const Interval k = range_biv_cubic(p);
    const Interval b = brute2(p, 401);
    CHECK(k.lo() == doctest::Approx(b.lo()));
    CHECK(k.hi() == doctest::Approx(b.hi()));
    CHECK(k.lo() == doctest::Approx(-4.0));
    CHECK(k.hi() == doctest::Approx(4.0));
    // Interior stationary points only: a bowl with a cubic tilt.
    const CenteredPoly2 bowl(sq, {{2, 0, 1.0}, {0, 2, 1.0}, {3, 0, 0.1}, {1, 2, 0.05}});
    const Interval kb = range_biv_cubic(bowl);
    CHECK(kb.lo() == doctest::Approx(0.0).scale(1.0));
    CHECK_THROWS_AS(range_biv_cubic(CenteredPoly2(sq, {{2, 2, 1.0}})), std::invalid_argument);
  }

  TEST_CASE("cubic Taylor part of grass at the small Fig. 6 radius") {
    const Box2 box = Box2::square(0.1, 0.1, 0.0005);
    const CenteredPoly2 t3 = taylor_part(corpus("grass"), box, 3);
    const Interval k = range_biv_cubic(t3);
    CHECK(encloses(k, brute2(t3, 301), 1e-9));
    // T4 adds the remainder r^4 S_4 to this range; its published value is
    // [-60.5351702, -59.2710910].
    const Interval t4 = maximal_taylor_form(corpus("grass"), box, 4);
    CHECK(k.lo() >= t4.lo());
    CHECK(k.hi() <= t4.hi());
    CHECK(std::abs(t4.lo() - -60.5351702) <= 2e-7);
    CHECK(std::abs(t4.hi() - -59.2710910) <= 2e-7);
  }

  TEST_CASE("biquadratic split") {
    const Box2 sq(Interval(-1, 1), Interval(-1, 1));
    const SplitRange s = range_biquadratic_split(CenteredPoly2(sq, {{2, 2, 1.0}}));
    CHECK(s.q == Interval(0, 0));
    CHECK(s.r == Interval(0, 1));
    CHECK(s.sum() == Interval(0, 1));

    const Box2 box = random_box(false);
    const CenteredPoly2 quad = random_centered(box, Support::Quadratic);
    const SplitRange s2 = range_biquadratic_split(quad);
    CHECK(s2.r == Interval(0, 0));
    CHECK(s2.sum() == range_biv_quadratic(quad));

    // Lagrange interpolant of clover-4 on [0, 0.2] x [0.1, 0.3].
    const Poly2 f = corpus("clover-4");
    const Box2 b(Interval(0, 0.2), Interval(0.1, 0.3));
    LagrangeGrid g{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g[i][j] = eval(f, b.mid_x() + (i - 1) * b.rad_x(), b.mid_y() + (j - 1) * b.rad_y());
    const CenteredPoly2 L = lagrange_interpolate(g, b);
    CHECK(encloses(range_biquadratic_split(L).sum(), brute2(L, 50), 1e-12));
    CHECK_THROWS_AS(range_biquadratic_split(CenteredPoly2(sq, {{3, 0, 1.0}})), std::invalid_argument);
  }

  TEST_CASE("bicubic split") {
    const Box2 sq(Interval(-1, 1), Interval(-1, 1));
    const Box2 box = random_box(true);
    const CenteredPoly2 cubic = random_centered(box, Support::Cubic);
    const SplitRange s = range_bicubic_split(cubic);
    CHECK(s.r == Interval(0, 0));
    CHECK(s.q == range_biv_cubic(cubic));

    const CenteredPoly2 x3y3(sq, {{3, 3, 1.0}});
    const SplitRange s2 = range_bicubic_split(x3y3);
    CHECK(s2.r == brute2(x3y3, 200));
    CHECK(s2.r == Interval(-1, 1));

    // Hermite interpolant of clover-4 on [0, 0.2] x [0.1, 0.3].
    const Derivatives d(corpus("clover-4"));
    const Box2 b(Interval(0, 0.2), Interval(0.1, 0.3));
    HermiteData h;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const double x = b.mid_x() + (2 * i - 1) * b.rad_x(), y = b.mid_y() + (2 * j - 1) * b.rad_y();
        h.f[i][j] = d.eval({0, 0}, x, y);
        h.fx[i][j] = d.eval({1, 0}, x, y);
        h.fy[i][j] = d.eval({0, 1}, x, y);
        h.fxy[i][j] = d.eval({1, 1}, x, y);
      }
    const CenteredPoly2 H = hermite_interpolate(h, b);
    CHECK(encloses(range_bicubic_split(H).sum(), brute2(H, 50), 1e-12));
  }

  TEST_CASE("bivariate kernels enclose samples") {
    for (int t = 0; t < 1000; ++t) {
      const bool square = t % 2 == 0;
      const Box2 box = random_box(square);
      const CenteredPoly2 lin = random_centered(box, Support::Linear);
      const CenteredPoly2 quad = random_centered(box, Support::Quadratic);
      const CenteredPoly2 cub = random_centered(box, Support::Cubic);
      const CenteredPoly2 biq = random_centered(box, Support::Biquadratic);
      const CenteredPoly2 bic = random_centered(box, Support::Bicubic);
      CHECK(encloses(range_biv_linear(lin), brute2(lin), 1e-12 * term_scale(lin)));
      CHECK(encloses(range_biv_quadratic(quad), brute2(quad), 1e-12 * term_scale(quad)));
      CHECK(encloses(range_biv_cubic(cub), brute2(cub), 1e-12 * term_scale(cub)));
      CHECK(encloses(range_biquadratic_split(biq).sum(), brute2(biq), 1e-12 * term_scale(biq)));
      CHECK(encloses(range_bicubic_split(bic).sum(), brute2(bic), 1e-12 * term_scale(bic)));
    }
  }

  TEST_CASE("bivariate dispatch on zero tops is bit-identical") {
    for (int t = 0; t < 200; ++t) {
      const Box2 box = random_box(t % 2 == 0);
      const CenteredPoly2 quad = random_centered(box, Support::Quadratic);
      CHECK(range_biv_cubic(quad) == range_biv_quadratic(quad));
      const CenteredPoly2 lin = random_centered(box, Support::Linear);
      CHECK(range_biv_quadratic(lin) == range_biv_linear(lin));
    }
  }

  TEST_CASE("x-only cubic matches the univariate kernel") {
    for (int t = 0; t < 200; ++t) {
      const Box2 box = random_box(false);
      const CenteredPoly1 u = random_centered1(3);
      const CenteredPoly1 ub({u.coeff(0), u.coeff(1), u.coeff(2), u.coeff(3)}, box.mid_x(), box.rad_x());
      CenteredPoly2 p(box);
      for (unsigned k = 0; k < 4; ++k) p.set(k, 0, u.coeff(k));
      const Interval a = range_biv_cubic(p), b = range_uni_cubic(ub);
      CHECK(a.lo() == doctest::Approx(b.lo()).epsilon(1e-12).scale(1.0));
      CHECK(a.hi() == doctest::Approx(b.hi()).epsilon(1e-12).scale(1.0));
    }
  }

  TEST_CASE("centered polynomial plumbing") {
    const Box2 box(Interval(1, 3), Interval(-1, 0));
    CenteredPoly2 p(box, {{1, 2, 2.0}, {0, 0, 1.0}});
    CHECK(p.fits(Support::Cubic));
    CHECK_FALSE(p.fits(Support::Quadratic));
    CHECK(p.restricted(Support::Quadratic).coeff(1, 2) == 0.0);
    CHECK(p.max_abs_coeff() == 2.0);
    const Poly2 q = p.to_poly();
    CHECK(eval(q, 2.5, -0.25) == doctest::Approx(p(2.5, -0.25)));
    CHECK_THROWS_AS(p.set(4, 0, 1.0), std::invalid_argument);
  }
}
