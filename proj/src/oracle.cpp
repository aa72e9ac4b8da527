#include "rangeforms/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace rangeforms {

namespace {

struct Cell {
  double cx, cy, rx, ry;
  double lower;  // outer bound on the side being searched
  double gx, gy;  // bound spread from terms in u and in v
};

// Dense coefficients c[j * nx + i] of p, re-expanded about a point.
class Expander {
 public:
  explicit Expander(const Poly2& p) : nx_(p.deg_x() + 1), ny_(p.deg_y() + 1), c_(nx_ * ny_), work_(nx_ * ny_) {
    for (unsigned j = 0; j < ny_; ++j) {
      for (unsigned i = 0; i < nx_; ++i) c_[j * nx_ + i] = p.coeff(i, j);
    }
  }

  // Returns p(cx, cy) and stores the bound of p over the cell in [lo, hi].
  // gx and gy collect the magnitudes of the terms involving u and v.
  double bound(double cx, double cy, double rx, double ry, double& lo, double& hi, double& gx, double& gy) {
    work_ = c_;
    for (unsigned j = 0; j < ny_; ++j) {
      double* row = &work_[j * nx_];
      for (unsigned k = 0; k + 1 < nx_; ++k) {
        for (unsigned i = nx_ - 1; i-- > k;) row[i] += cx * row[i + 1];
      }
    }
    for (unsigned i = 0; i < nx_; ++i) {
      for (unsigned k = 0; k + 1 < ny_; ++k) {
        for (unsigned j = ny_ - 1; j-- > k;) work_[j * nx_ + i] += cy * work_[(j + 1) * nx_ + i];
      }
    }
    lo = hi = gx = gy = 0.0;
    double py = 1.0;
    for (unsigned j = 0; j < ny_; ++j) {
      double rlo = 0.0, rhi = 0.0;
      double px = 1.0;
      for (unsigned i = 0; i < nx_; ++i) {
        const double c = work_[j * nx_ + i];
        if (i + j > 0) {
          const double t = c * px * py;
          accumulate(t, i % 2 == 1 || j % 2 == 1, rlo, rhi);
          if (i > 0) gx += std::abs(t);
          if (j > 0) gy += std::abs(t);
        }
        px *= rx;
      }
      lo += rlo;
      hi += rhi;
      py *= ry;
    }
    const double value = work_[0];
    lo += value;
    hi += value;
    return value;
  }

 private:
  // Term t * u^i v^j over the cell: symmetric when some exponent is odd,
  // between 0 and t when both are even.
  static void accumulate(double t, bool symmetric, double& lo, double& hi) {
    if (symmetric) {
      lo -= std::abs(t);
      hi += std::abs(t);
    } else if (t < 0.0) {
      lo += t;
    } else {
      hi += t;
    }
  }

  unsigned nx_, ny_;
  std::vector<double> c_;
  std::vector<double> work_;
};

}  // namespace

OracleRange oracle_range(const Poly2& p, const Box2& box, double target_resolution, std::size_t budget) {
  if (!(target_resolution > 0.0)) throw std::invalid_argument("oracle_range: resolution must be positive");
  OracleRange out;
  Expander ex(p);

  double lo_sample = std::numeric_limits<double>::infinity();
  double hi_sample = -lo_sample;
  auto sample = [&](double v) {
    lo_sample = std::min(lo_sample, v);
    hi_sample = std::max(hi_sample, v);
  };
  const int seeds = 16;
  for (int a = 0; a <= seeds; ++a) {
    for (int b = 0; b <= seeds; ++b) {
      const double x = a == seeds ? box.x().hi() : box.x().lo() + box.x().width() * a / seeds;
      const double y = b == seeds ? box.y().hi() : box.y().lo() + box.y().width() * b / seeds;
      sample(eval(p, x, y));
    }
  }

  std::size_t evaluations = 0;
  bool exhausted = false;
  // One best-first search per side; sign = +1 searches the minimum, -1 the maximum.
  auto search = [&](int sign) {
    auto best = [&]() { return sign > 0 ? lo_sample : -hi_sample; };
    auto cmp = [](const Cell& a, const Cell& b) { return a.lower > b.lower; };
    std::priority_queue<Cell, std::vector<Cell>, decltype(cmp)> queue(cmp);
    double settled = std::numeric_limits<double>::infinity();  // min bound over pruned cells

    auto push = [&](double cx, double cy, double rx, double ry) {
      double lo, hi, gx, gy;
      const double v = ex.bound(cx, cy, rx, ry, lo, hi, gx, gy);
      ++evaluations;
      sample(v);
      const double lower = sign > 0 ? lo : -hi;
      if (lower >= best() - target_resolution) settled = std::min(settled, lower);
      else queue.push({cx, cy, rx, ry, lower, gx, gy});
    };
    push(box.mid_x(), box.mid_y(), box.rad_x(), box.rad_y());
    while (!queue.empty()) {
      const Cell c = queue.top();
      if (c.lower >= best() - target_resolution) break;
      if (evaluations >= budget) {
        exhausted = true;
        break;
      }
      queue.pop();
      // Bisect the direction(s) that dominate the bound spread.
      const bool split_x = c.rx > 0.0 && (c.ry == 0.0 || c.gx >= 0.5 * c.gy);
      const bool split_y = c.ry > 0.0 && (c.rx == 0.0 || c.gy >= 0.5 * c.gx);
      const double hx = split_x ? 0.5 * c.rx : c.rx, hy = split_y ? 0.5 * c.ry : c.ry;
      if ((!split_x && !split_y) || (split_x && !(c.cx - hx < c.cx && c.cx < c.cx + hx)) || (split_y && !(c.cy - hy < c.cy && c.cy < c.cy + hy))) {
        // Cannot split further in double precision.
        settled = std::min(settled, c.lower);
        continue;
      }
      for (int a = split_x ? -1 : 0; a <= (split_x ? 1 : 0); a += 2) {
        for (int b = split_y ? -1 : 0; b <= (split_y ? 1 : 0); b += 2) push(c.cx + a * hx, c.cy + b * hy, hx, hy);
      }
    }
    double certified = settled;
    if (!queue.empty()) certified = std::min(certified, queue.top().lower);
    return std::isfinite(certified) ? std::max(0.0, best() - certified) : 0.0;
  };

  const double res_lo = search(+1);
  const double res_hi = search(-1);
  out.range = Interval(lo_sample, hi_sample);
  out.resolution = std::max(res_lo, res_hi);
  out.converged = !exhausted;
  out.evaluations = evaluations;
  return out;
}

}  // namespace rangeforms
