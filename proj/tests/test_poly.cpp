#include <doctest.h>

#include <cmath>
#include <sstream>

#include "rangeforms/corpus.hpp"
#include "rangeforms/poly.hpp"
#include "support.hpp"

using namespace rangeforms;
using testing_support::uniform;

namespace {

Poly2 random_poly(unsigned degree) {
  std::vector<Monomial> terms;
  for (unsigned i = 0; i <= degree; ++i) {
    for (unsigned j = 0; i + j <= degree; ++j) terms.push_back({i, j, uniform(-2, 2)});
  }
  return Poly2::from_monomials(terms);
}

Box2 random_box() {
  const double x0 = uniform(-1, 1), y0 = uniform(-1, 1);
  return Box2(Interval(x0, x0 + uniform(0.01, 1)), Interval(y0, y0 + uniform(0.01, 1)));
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("canonical form") {
    const Poly2 p(std::vector<std::vector<double>>{{1, 0, 0}, {0, 0}, {0}});
    CHECK(p.deg_x() == 0);
    CHECK(p.deg_y() == 0);
    CHECK(p == Poly2(1.0));
    CHECK(Poly2().is_zero());
    CHECK(Poly2().degree() == 0);
    const Poly2 q = Poly2::x() * Poly2::x() * Poly2::y() - Poly2::x() * Poly2::x() * Poly2::y();
    CHECK(q.is_zero());
  }

  TEST_CASE("eval examples") {
    CHECK(eval(corpus("clover-4"), 0, 0) == 1.0);
    CHECK(eval(Poly2(), 3.7, -2) == 0.0);
    const double g = eval(corpus("grass"), 0.1, 0.1);
    CHECK(g >= -61.874);
    CHECK(g <= -46.411);
  }

  TEST_CASE("partial examples") {
    const Poly2 x2y = Poly2::from_monomials({{2, 1, 1.0}});
    CHECK(partial(x2y, {1, 0}) == Poly2::from_monomials({{1, 1, 2.0}}));
    CHECK(partial(corpus("clover-4"), {11, 0}).is_zero());
    const Poly2 sep = Poly2::from_monomials({{3, 0, 1.0}, {0, 3, 1.0}});
    CHECK(partial(sep, {1, 1}).is_zero());
  }

  TEST_CASE("differentiation commutes") {
    for (int t = 0; t < 20; ++t) {
      const Poly2 p = random_poly(7);
      CHECK(partial(partial(p, {1, 0}), {0, 1}) == partial(p, {1, 1}));
      CHECK(partial(partial(p, {0, 2}), {3, 0}) == partial(p, {3, 2}));
    }
  }

  TEST_CASE("central differences approximate partials") {
    const double h = 1e-4;
    for (int t = 0; t < 20; ++t) {
      const Poly2 p = random_poly(6);
      const double x = uniform(-1, 1), y = uniform(-1, 1);
      const double fx = (eval(p, x + h, y) - eval(p, x - h, y)) / (2 * h);
      const double fy = (eval(p, x, y + h) - eval(p, x, y - h)) / (2 * h);
      CHECK(fx == doctest::Approx(eval(partial(p, {1, 0}), x, y)).epsilon(1e-5).scale(1.0));
      CHECK(fy == doctest::Approx(eval(partial(p, {0, 1}), x, y)).epsilon(1e-5).scale(1.0));
    }
  }

  TEST_CASE("natural extension examples") {
    const Box2 unit(Interval(0, 1), Interval(0, 1));
    CHECK(natural_extension(Poly2::x() + Poly2::y(), unit) == Interval(0, 2));
    const Interval e = natural_extension(Poly2::x() * Poly2::x() - Poly2::x(), unit);
    const Interval brute = testing_support::sample_hull(unit, 201, [](double x, double) { return x * x - x; });
    CHECK(brute.lo() == doctest::Approx(-0.25));
    CHECK(subset(brute, e));
    CHECK(natural_extension(Poly2(5.0), random_box()) == Interval(5.0));
  }

  TEST_CASE("natural extension encloses samples") {
    for (int t = 0; t < 50; ++t) {
      const Poly2 p = random_poly(6);
      const Box2 b = random_box();
      const Interval e = natural_extension(p, b);
      const Interval s = testing_support::sample_hull(b, 50, [&](double x, double y) { return eval(p, x, y); });
      CHECK(testing_support::encloses(e, s, 1e-12 * (1 + e.magnitude())));
    }
  }

  TEST_CASE("shift re-expands about a point") {
    for (int t = 0; t < 20; ++t) {
      const Poly2 p = random_poly(5);
      const double x0 = uniform(-1, 1), y0 = uniform(-1, 1);
      const Poly2 q = shift(p, x0, y0);
      const double u = uniform(-1, 1), v = uniform(-1, 1);
      CHECK(eval(q, u, v) == doctest::Approx(eval(p, x0 + u, y0 + v)).epsilon(1e-10));
    }
  }

  TEST_CASE("corpus degrees") {
    CHECK(corpus("clover-4").degree() == 10);
    CHECK(corpus("clover-5").degree() == 12);
    CHECK(corpus("clover-8").degree() == 18);
    CHECK(corpus("grass").degree() == 12);
    CHECK(corpus("octic-flower").degree() == 8);
    CHECK(corpus("cardioid").degree() == 4);
    CHECK(corpus("lemniscate").degree() == 4);
    CHECK(corpus_names().size() == 7);
    CHECK_THROWS_AS(corpus("clover-3"), std::invalid_argument);
  }

  TEST_CASE("grass expansion matches the product formula") {
    const Poly2 g = corpus("grass");
    for (int t = 0; t < 100; ++t) {
      const double x = uniform(-1.2, 1.2), y = uniform(-1.2, 1.2);
      double prod = 1.0;
      for (int k = 1; k <= 6; ++k) prod *= (1.0 - std::pow(4.0, k)) * x * x + y * y - 2 * x + 1;
      const double direct = 1.0 + prod;
      CHECK(eval(g, x, y) == doctest::Approx(direct).epsilon(1e-9).scale(1.0));
    }
  }

  TEST_CASE("derivative table") {
    const Poly2 p = corpus("clover-4");
    const Derivatives d(p);
    CHECK(d.degree() == 10);
    CHECK(d.poly() == p);
    CHECK(d(3, 2) == partial(p, {3, 2}));
    CHECK(d(20, 0).is_zero());
    CHECK(d.eval({1, 1}, 0.3, -0.2) == eval(partial(p, {1, 1}), 0.3, -0.2));
  }

  TEST_CASE("monomial file format") {
    std::istringstream in("# x^2 y - 3\n2 1 1.5\n\n0 0 -3   # constant\n2 1 0.5\n");
    const Poly2 p = parse_monomials(in);
    CHECK(p.coeff(2, 1) == 2.0);
    CHECK(p.coeff(0, 0) == -3.0);
    std::ostringstream out;
    write_monomials(out, p);
    std::istringstream back(out.str());
    CHECK(parse_monomials(back) == p);

    std::istringstream bad1("1 2\n");
    CHECK_THROWS_AS(parse_monomials(bad1), std::runtime_error);
    std::istringstream bad2("1 2 3 4\n");
    CHECK_THROWS_AS(parse_monomials(bad2), std::runtime_error);
    std::istringstream bad3("-1 2 3\n");
    CHECK_THROWS_AS(parse_monomials(bad3), std::runtime_error);
    std::istringstream bad4("x 2 3\n");
    CHECK_THROWS_AS(parse_monomials(bad4), std::runtime_error);
    CHECK_THROWS_AS(read_monomial_file("/nonexistent/poly.txt"), std::runtime_error);
  }
}
