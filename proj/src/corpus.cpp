#include "rangeforms/corpus.hpp"

#include <stdexcept>

namespace rangeforms {

namespace {

Poly2 clover4() {
  const Poly2 x = Poly2::x(), y = Poly2::y();
  auto X = [&](unsigned k) { return pow(x, k); };
  auto Y = [&](unsigned k) { return pow(y, k); };
  return -50.0 * X(10) - (249.0 * Y(2) - 57.0) * X(8) - (498.0 * Y(4) - 227.0 * Y(2) - 1.0) * X(6) -
         (498.0 * Y(6) - 341.0 * Y(4) - 3.0 * Y(2) + 16.0) * X(4) -
         (249.0 * Y(8) - 227.0 * Y(6) - 3.0 * Y(4) - 102.0 * Y(2) - 1.0) * X(2) - 50.0 * Y(10) +
         57.0 * Y(8) + Y(6) - 16.0 * Y(4) + Y(2) + 1.0;
}

Poly2 clover5() {
  const Poly2 x = Poly2::x(), y = Poly2::y();
  auto X = [&](unsigned k) { return pow(x, k); };
  auto Y = [&](unsigned k) { return pow(y, k); };
  return -71.0 * X(12) - (424.0 * Y(2) - 79.0) * X(10) - (1059.0 * Y(4) - 396.0 * Y(2) - 1.0) * X(8) -
         (1412.0 * Y(6) - 793.0 * Y(4) - 4.0 * Y(2) - 1.0) * X(6) - 20.0 * X(5) -
         (1059.0 * Y(8) - 793.0 * Y(6) - 6.0 * Y(4) - 3.0 * Y(2) - 1.0) * X(4) + 202.0 * Y(2) * X(3) -
         (424.0 * Y(10) - 396.0 * Y(8) - 4.0 * Y(6) - 3.0 * Y(4) - 2.0 * Y(2) - 1.0) * X(2) -
         101.0 * Y(4) * x - 71.0 * Y(12) + 79.0 * Y(10) + Y(8) + Y(6) + Y(4) + Y(2) + 1.0;
}

Poly2 clover8() {
  const Poly2 x = Poly2::x(), y = Poly2::y();
  auto X = [&](unsigned k) { return pow(x, k); };
  auto Y = [&](unsigned k) { return pow(y, k); };
  return -156.0 * X(18) - (1406.0 * Y(2) - 170.0) * X(16) -
         (5625.0 * Y(4) - 1363.0 * Y(2) - 1.0) * X(14) -
         (13125.0 * Y(6) - 4769.0 * Y(4) - 7.0 * Y(2) - 1.0) * X(12) -
         (19688.0 * Y(8) - 9538.0 * Y(6) - 21.0 * Y(4) - 6.0 * Y(2) - 1.0) * X(10) -
         (19688.0 * Y(10) - 11922.0 * Y(8) - 35.0 * Y(6) - 15.0 * Y(4) - 5.0 * Y(2) + 30.0) * X(8) -
         (13125.0 * Y(12) - 9538.0 * Y(10) - 35.0 * Y(8) - 21.0 * Y(6) - 11.0 * Y(4) - 879.0 * Y(2) - 1.0) * X(6) -
         (5625.0 * Y(14) - 4769.0 * Y(12) - 21.0 * Y(10) - 15.0 * Y(8) - 11.0 * Y(6) + 2181.0 * Y(4) -
          4.0 * Y(2) - 1.0) * X(4) -
         (1406.0 * Y(16) - 1363.0 * Y(14) - 7.0 * Y(12) - 6.0 * Y(10) - 5.0 * Y(8) - 879.0 * Y(6) -
          4.0 * Y(4) - 3.0 * Y(2) - 1.0) * X(2) -
         156.0 * Y(18) + 170.0 * Y(16) + Y(14) + Y(12) + Y(10) - 30.0 * Y(8) + Y(6) + Y(4) + Y(2) + 1.0;
}

Poly2 grass() {
  const Poly2 x = Poly2::x(), y = Poly2::y();
  Poly2 prod(1.0);
  double four_k = 1.0;
  for (int k = 1; k <= 6; ++k) {
    four_k *= 4.0;
    prod = prod * ((1.0 - four_k) * x * x + y * y - 2.0 * x + 1.0);
  }
  return 1.0 + prod;
}

Poly2 cardioid() {
  const Poly2 x = Poly2::x(), y = Poly2::y();
  const Poly2 s = x * x + y * y;
  return pow(s + x, 2) - s;
}

Poly2 lemniscate() {
  const Poly2 x = Poly2::x(), y = Poly2::y();
  return pow(x * x + y * y, 2) - 2.0 * (x * x - y * y);
}

Poly2 octic_flower() {
  const Poly2 x = Poly2::x(), y = Poly2::y();
  auto X = [&](unsigned k) { return pow(x, k); };
  auto Y = [&](unsigned k) { return pow(y, k); };
  return 2000.0 * Y(8) + 8000.0 * X(2) * Y(6) + 12000.0 * X(4) * Y(4) + 8000.0 * X(6) * Y(2) +
         2000.0 * X(8) - 3000.0 * Y(6) + 9000.0 * X(2) * Y(4) - 21000.0 * X(4) * Y(2) - 1000.0 * X(6) + 1.0;
}

}  // namespace

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {"clover-4", "clover-5", "clover-8", "grass",
                                                 "cardioid", "lemniscate", "octic-flower"};
  return names;
}

Poly2 corpus(const std::string& name) {
  if (name == "clover-4") return clover4();
  if (name == "clover-5") return clover5();
  if (name == "clover-8") return clover8();
  if (name == "grass") return grass();
  if (name == "cardioid") return cardioid();
  if (name == "lemniscate") return lemniscate();
  if (name == "octic-flower") return octic_flower();
  throw std::invalid_argument("unknown corpus function: " + name);
}

Box2 corpus_domain(const std::string& name) {
  if (name == "cardioid") return Box2(Interval(-2.0, 2.0), Interval(-2.0, 2.0));
  if (name == "lemniscate") return Box2(Interval(-1.5, 1.5), Interval(-1.5, 1.5));
  corpus(name);  // validates the name
  return Box2(Interval(-1.2, 1.2), Interval(-1.2, 1.2));
}

}  // namespace rangeforms
