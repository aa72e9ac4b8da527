#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "rangeforms/poly.hpp"

namespace rangeforms {

// Values of selected partial derivatives at the nodes of a rectilinear grid.
//
// Two-phase use: populate() from one thread, then concurrent const reads.
// Nodes are matched on their exact coordinates, so a box only hits the cache
// when its endpoints and midpoints were computed the same way as the grid
// lines given here.
class GridCache {
 public:
  GridCache(std::vector<double> xs, std::vector<double> ys);

  // Evaluates each listed partial of d at every node.
  void populate(const Derivatives& d, const std::vector<PartialIndex>& partials);

  bool has(PartialIndex p) const { return tables_.count(p) != 0; }
  std::optional<std::size_t> x_index(double x) const;
  std::optional<std::size_t> y_index(double y) const;

  // Cached value at node (xs[ix], ys[iy]); p must be populated.
  double at(PartialIndex p, std::size_t ix, std::size_t iy) const {
    return tables_.at(p)[iy * xs_.size() + ix];
  }
  // Row-major table (index iy * width() + ix) or nullptr when p is not cached.
  const double* table(PartialIndex p) const {
    const auto it = tables_.find(p);
    return it == tables_.end() ? nullptr : it->second.data();
  }
  std::size_t width() const { return xs_.size(); }

  std::size_t node_count() const { return xs_.size() * ys_.size(); }
  std::size_t table_count() const { return tables_.size(); }

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::map<PartialIndex, std::vector<double>> tables_;
};

}  // namespace rangeforms
