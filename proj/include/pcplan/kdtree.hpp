#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "pcplan/geom.hpp"

namespace pcplan {

/// Static 3-d tree for exact nearest-neighbour queries. Distances are computed
/// with the same expression as the brute-force reference, so the minimum
/// squared distance returned is bit-identical to it.
class KdTree {
 public:
  explicit KdTree(std::span<const Vec3> points);

  /// Squared distance from `q` to its nearest stored point.
  double nearest_squared_distance(const Vec3& q) const;
  std::size_t size() const { return points_.size(); }

 private:
  struct Node {
    std::size_t begin = 0, end = 0;  // range in order_ for leaves
    int axis = -1;                   // -1 for leaves
    double split = 0.0;
    std::size_t left = 0, right = 0;
  };

  std::size_t build(std::size_t begin, std::size_t end);
  void search(std::size_t node, const Vec3& q, double& best) const;

  static constexpr std::size_t kLeafSize = 8;
  std::span<const Vec3> points_;
  std::vector<std::size_t> order_;
  std::vector<Node> nodes_;
};

}  // namespace pcplan
