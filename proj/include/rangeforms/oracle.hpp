#pragma once

#include <cstddef>

#include "rangeforms/interval.hpp"
#include "rangeforms/poly.hpp"

namespace rangeforms {

// Reference range of a polynomial over a box.
//
// `range` is the hull of sampled values (an inner approximation); widening it
// by `resolution` on both sides gives a certified outer bound, up to the
// rounding of double arithmetic.
struct OracleRange {
  Interval range;
  double resolution = 0.0;
  bool converged = true;       // false when the budget ran out first
  std::size_t evaluations = 0;  // sub-boxes bounded
};

// Best-first bisection. Each sub-box is bounded by re-expanding p about the
// sub-box midpoint and summing |c_ij| r_x^i r_y^j with the sign structure of
// even and odd powers; its midpoint value is a sample.
OracleRange oracle_range(const Poly2& p, const Box2& box, double target_resolution,
                         std::size_t budget = 2'000'000);

}  // namespace rangeforms
