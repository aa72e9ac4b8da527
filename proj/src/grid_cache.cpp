#include "rangeforms/grid_cache.hpp"

#include <algorithm>
#include <stdexcept>

namespace rangeforms {

namespace {

std::optional<std::size_t> locate(const std::vector<double>& lines, double v) {
  const auto it = std::lower_bound(lines.begin(), lines.end(), v);
  if (it == lines.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - lines.begin());
}

}  // namespace

GridCache::GridCache(std::vector<double> xs, std::vector<double> ys) : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (!std::is_sorted(xs_.begin(), xs_.end()) || !std::is_sorted(ys_.begin(), ys_.end())) {
    throw std::invalid_argument("GridCache: node lines must be sorted");
  }
}

void GridCache::populate(const Derivatives& d, const std::vector<PartialIndex>& partials) {
  for (const PartialIndex p : partials) {
    if (has(p)) continue;
    // Same operation order as eval(): Horner in x per y-power, then in y.
    // Collapsing x once per column keeps the values bit-identical.
    const Poly2& q = d(p);
    const unsigned nx = q.deg_x() + 1, ny = q.deg_y() + 1;
    std::vector<double> table(xs_.size() * ys_.size());
    std::vector<double> col(ny);
    for (std::size_t ix = 0; ix < xs_.size(); ++ix) {
      const double x = xs_[ix];
      for (unsigned j = 0; j < ny; ++j) {
        double row = 0.0;
        for (unsigned i = nx; i-- > 0;) row = row * x + q.coeff(i, j);
        col[j] = row;
      }
      for (std::size_t iy = 0; iy < ys_.size(); ++iy) {
        const double y = ys_[iy];
        double acc = 0.0;
        for (unsigned j = ny; j-- > 0;) acc = acc * y + col[j];
        table[iy * xs_.size() + ix] = acc;
      }
    }
    tables_.emplace(p, std::move(table));
  }
}

std::optional<std::size_t> GridCache::x_index(double x) const { return locate(xs_, x); }
std::optional<std::size_t> GridCache::y_index(double y) const { return locate(ys_, y); }

}  // namespace rangeforms
